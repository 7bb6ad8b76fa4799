#include "degloci/connectedness.hpp"

#include <algorithm>
#include <queue>

#include "degloci/error.hpp"

namespace degloci {

namespace {

void covers(const std::vector<std::uint32_t>& supports, std::size_t next, std::uint32_t chosen,
            std::vector<std::uint32_t>& out) {
  while (next < supports.size() && (supports[next] & chosen) != 0) ++next;
  if (next == supports.size()) {
    out.push_back(chosen);
    return;
  }
  std::uint32_t s = supports[next];
  while (s) {
    int v = __builtin_ctz(s);
    s &= s - 1;
    covers(supports, next + 1, chosen | (1u << v), out);
  }
}

}  // namespace

ComponentSet monomial_minimal_primes(const Ideal& I) {
  const RingPtr& ring = I.ring();
  std::vector<std::uint32_t> supports;
  for (const auto& g : I.gens()) {
    if (!g.is_monomial()) throw PreconditionError("monomial_minimal_primes: generator " + g.to_string() + " is not a monomial");
    supports.push_back(g.support());
  }
  ComponentSet c;
  c.ambient = I;
  c.provenance = Provenance::MonomialComputed;
  for (auto s : supports)
    if (s == 0) return c;  // unit ideal: no components
  std::vector<std::uint32_t> all;
  covers(supports, 0, 0, all);
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  std::vector<std::uint32_t> minimal;
  for (auto a : all) {
    bool keep = true;
    for (auto b : all)
      if (b != a && (b & a) == b) {
        keep = false;
        break;
      }
    if (keep) minimal.push_back(a);
  }
  std::sort(minimal.begin(), minimal.end(), [](std::uint32_t a, std::uint32_t b) {
    int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  for (auto mset : minimal) {
    std::vector<int> vars;
    for (int v = 0; v < ring->nvars(); ++v)
      if (mset & (1u << v)) vars.push_back(v);
    c.components.push_back(Ideal::of_variables(ring, vars));
    c.dims.push_back(ring->nvars() - static_cast<int>(vars.size()));
  }
  return c;
}

ComponentSet verify_component_set(const Ideal& I, std::vector<Ideal> candidates) {
  ComponentSet c;
  c.ambient = I;
  c.provenance = Provenance::UserSuppliedVerified;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    require_same_ring(I.ring(), candidates[i].ring(), "component set");
    if (!candidates[i].contains(I))
      throw PreconditionError("component " + std::to_string(i) + " does not contain the ambient ideal");
    if (candidates[i].is_unit()) throw PreconditionError("component " + std::to_string(i) + " is the unit ideal");
  }
  for (std::size_t i = 0; i < candidates.size(); ++i)
    for (std::size_t j = 0; j < candidates.size(); ++j)
      if (i != j && candidates[j].contains(candidates[i]))
        throw PreconditionError("component " + std::to_string(i) + " contains component " + std::to_string(j) +
                                " (not minimal)");
  if (candidates.empty()) {
    if (!I.is_unit()) throw PreconditionError("empty component list for a nonempty zero set");
  } else {
    Ideal meet = candidates[0];
    for (std::size_t i = 1; i < candidates.size(); ++i) meet = intersect(meet, candidates[i]);
    for (const auto& g : meet.gens())
      if (!radical_member(g, I))
        throw PreconditionError("intersection generator " + g.to_string() + " is not in the radical of the ideal");
  }
  for (const auto& p : candidates) c.dims.push_back(krull_dimension(p));
  c.components = std::move(candidates);
  return c;
}

ConnectednessResult connected_in_dimension(const ComponentSet& c, int d, bool strict) {
  ConnectednessResult r;
  r.d = d;
  r.conditional_on_primality = c.provenance == Provenance::UserSuppliedVerified;
  std::size_t s = c.components.size();
  std::vector<int> dims = c.dims;
  if (dims.size() != s) {
    dims.clear();
    for (const auto& p : c.components) dims.push_back(krull_dimension(p));
  }
  r.intersection_dims.assign(s, std::vector<int>(s, 0));
  for (std::size_t i = 0; i < s; ++i) {
    r.intersection_dims[i][i] = dims[i];
    for (std::size_t j = i + 1; j < s; ++j) {
      int dim = krull_dimension(c.components[i] + c.components[j]);
      r.intersection_dims[i][j] = r.intersection_dims[j][i] = dim;
    }
  }
  if (s == 0) {
    r.connected = false;
    return r;
  }
  for (std::size_t i = 0; i < s; ++i) {
    if (dims[i] > d) continue;
    if (strict)
      throw HypothesisError("component " + std::to_string(i) + " has dimension " + std::to_string(dims[i]) +
                            ", the criterion needs dimension >= " + std::to_string(d + 1));
    r.connected = false;
    r.small_component = static_cast<int>(i);
    r.bipartition.assign(s, 0);
    r.bipartition[i] = 1;
    return r;
  }
  std::vector<int> parent(s, -2);
  parent[0] = -1;
  std::queue<std::size_t> q;
  q.push(0);
  while (!q.empty()) {
    std::size_t u = q.front();
    q.pop();
    for (std::size_t v = 0; v < s; ++v)
      if (parent[v] == -2 && r.intersection_dims[u][v] >= d) {
        parent[v] = static_cast<int>(u);
        q.push(v);
      }
  }
  r.connected = std::all_of(parent.begin(), parent.end(), [](int p) { return p != -2; });
  if (r.connected) {
    for (std::size_t i = 0; i < s; ++i) {
      std::vector<int> path;
      for (int v = static_cast<int>(i); v != -1; v = parent[static_cast<std::size_t>(v)]) path.push_back(v);
      std::reverse(path.begin(), path.end());
      r.paths.push_back(std::move(path));
    }
  } else {
    for (std::size_t i = 0; i < s; ++i) r.bipartition.push_back(parent[i] == -2 ? 1 : 0);
  }
  return r;
}

bool certificate_valid(const ConnectednessResult& r) {
  std::size_t s = r.intersection_dims.size();
  if (r.connected) {
    if (r.paths.size() != s) return false;
    for (std::size_t i = 0; i < s; ++i) {
      const auto& p = r.paths[i];
      if (p.empty() || p.front() != 0 || p.back() != static_cast<int>(i)) return false;
      for (std::size_t k = 0; k + 1 < p.size(); ++k)
        if (r.intersection_dims[static_cast<std::size_t>(p[k])][static_cast<std::size_t>(p[k + 1])] < r.d) return false;
    }
    for (std::size_t i = 0; i < s; ++i)
      if (r.intersection_dims[i][i] <= r.d) return false;
    return true;
  }
  if (s == 0) return true;
  if (r.small_component >= 0) return r.intersection_dims[static_cast<std::size_t>(r.small_component)][static_cast<std::size_t>(r.small_component)] <= r.d;
  if (r.bipartition.size() != s) return false;
  bool zero = false, one = false;
  for (std::size_t i = 0; i < s; ++i) {
    (r.bipartition[i] ? one : zero) = true;
    for (std::size_t j = 0; j < s; ++j)
      if (r.bipartition[i] != r.bipartition[j] && r.intersection_dims[i][j] >= r.d) return false;
  }
  return zero && one;
}

ConnectednessReport verify_connectedness_bound(const ModuleMap& f, int t, int d, const std::vector<Ideal>& components,
                                               const BoundOptions& opts) {
  ConnectednessReport rep;
  rep.bound = verify_dimension_bound(f, t, opts);
  rep.d = d;
  rep.target_d = d - rep.bound.tau;
  const RingPtr& ring = f.source().ring();
  int rm = generic_rank(f.source());
  int rn = generic_rank(f.target());
  bool iso_m = isolated_singularity_check(f.source(), rm);
  bool iso_n = isolated_singularity_check(f.target(), rn);
  // A polynomial ring is irreducible, hence connected in every dimension below its own.
  bool ambient = d >= 0 && d < ring->nvars();
  rep.diagnostics.push_back({"isolated_singularity_M", iso_m ? "true" : "false"});
  rep.diagnostics.push_back({"isolated_singularity_N", iso_n ? "true" : "false"});
  rep.diagnostics.push_back({"ambient_connected_in_dimension_d", ambient ? "true" : "false"});
  bool hyp = rep.bound.hypotheses_hold && iso_m && iso_n && ambient;
  if (rep.target_d < 0) {
    rep.diagnostics.push_back({"note", "d - tau is negative; no connectedness condition"});
    rep.verdict = Verdict::Holds;
    return rep;
  }
  ComponentSet cs = components.empty() ? monomial_minimal_primes(rep.bound.locus)
                                       : verify_component_set(rep.bound.locus, components);
  rep.result = connected_in_dimension(cs, rep.target_d, false);
  if (rep.result.conditional_on_primality) rep.diagnostics.push_back({"primality", "assumed for supplied components"});
  if (rep.result.connected)
    rep.verdict = Verdict::Holds;
  else
    rep.verdict = hyp ? Verdict::Violated : Verdict::HypothesisUnmet;
  return rep;
}

}  // namespace degloci
