#include "degloci/sweeps.hpp"

#include <algorithm>
#include <numeric>

#include "degloci/error.hpp"

namespace degloci {

std::uint64_t SeededRng::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

int SeededRng::range(int lo, int hi) {
  auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<int>(next() % span);
}

Polynomial random_linear_form(const RingPtr& ring, SeededRng& rng) {
  Polynomial p(ring);
  if (ring->nvars() == 0) return p;
  int terms = rng.range(1, 2);
  for (int k = 0; k < terms; ++k)
    p += Polynomial::from_int(ring, rng.range(-3, 3)) * Polynomial::variable(ring, rng.range(0, ring->nvars() - 1));
  return p;
}

PolyMatrix random_linear_matrix(const RingPtr& ring, int rows, int cols, SeededRng& rng) {
  PolyMatrix m(ring, rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = random_linear_form(ring, rng);
  return m;
}

std::vector<GenericDimCase> generic_dimension_sweep(Flavor flavor, int limit, const Field& field) {
  RingPtr base = PolyRing::make(field, {});
  std::vector<GenericDimCase> out;
  auto record = [&](int rows, int cols, int t, const GenericDeterminantal& g) {
    out.push_back({flavor, rows, cols, t, krull_dimension(g.ideal)});
  };
  switch (flavor) {
    case Flavor::Generic:
      for (int m = 1; m <= limit; ++m)
        for (int n = 1; n * m <= limit; ++n)
          for (int t = 0; t <= std::min(n, m); ++t)
            record(n, m, t, generic_determinantal_ideal(FPModule::free(base, m), FPModule::free(base, n), t));
      break;
    case Flavor::Symmetric:
    case Flavor::Alternating:
      for (int m = 1; m <= limit; ++m)
        for (int t = 0; t <= m; t += flavor == Flavor::Alternating ? 2 : 1)
          record(m, m, t, generic_pairing_ideal(flavor, FPModule::free(base, m), FPModule::free(base, 1), t));
      break;
    default:
      throw PreconditionError("generic sweep: flavor must be generic, symmetric or alternating");
  }
  return out;
}

bool alternating_radicals_agree(int m, int t, const Field& field) {
  if (t % 2 != 0) throw PreconditionError("alternating radicals: t must be even");
  std::vector<std::string> names;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) names.push_back("z" + std::to_string(i) + "_" + std::to_string(j));
  RingPtr r = PolyRing::make(field, names);
  PolyMatrix a(r, m, m);
  int k = 0;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j, ++k) {
      a.at(i, j) = Polynomial::variable(r, k);
      a.at(j, i) = -Polynomial::variable(r, k);
    }
  Ideal mi = minors_ideal(a, t + 1);
  Ideal pf = pfaffian_ideal(a, t + 2);
  for (const auto& g : pf.gens())
    if (!radical_member(g, mi)) return false;
  for (const auto& g : mi.gens())
    if (!radical_member(g, pf)) return false;
  return true;
}

std::vector<RandomBoundCase> random_bound_sweep(int count, int max_vars, int max_rank, std::uint64_t seed,
                                                const Field& field) {
  if (max_vars < 2 || max_rank < 1) throw PreconditionError("random bound sweep: need max_vars >= 2 and max_rank >= 1");
  SeededRng rng(seed);
  std::vector<RandomBoundCase> out;
  for (int k = 0; k < count; ++k) {
    int nv = rng.range(2, max_vars);
    std::vector<std::string> names;
    for (int v = 0; v < nv; ++v) names.push_back("x" + std::to_string(v));
    RingPtr r = PolyRing::make(field, names);
    int a = rng.range(1, max_rank), b = rng.range(1, max_rank);
    int t = rng.range(0, std::min(a, b) - 1);
    ModuleMap f(FPModule::free(r, a), FPModule::free(r, b), random_linear_matrix(r, b, a, rng));
    BoundReport rep = verify_dimension_bound(f, t, {1, false});
    out.push_back({nv, a, b, t, rep.tau, rep.dim_ambient, rep.dim_locus, rep.verdict});
  }
  return out;
}

namespace {

struct Pair {
  FPModule m;
  std::vector<PolyVector> sub;
};

FPModule random_module(const RingPtr& r, SeededRng& rng) {
  switch (rng.range(0, 3)) {
    case 0:
      return FPModule::free(r, 1);
    case 1:
      return FPModule::free(r, 2);
    case 2: {
      PolyVector rel{random_linear_form(r, rng), random_linear_form(r, rng)};
      if (is_zero_vector(rel)) rel[0] = Polynomial::variable(r, 0);
      return FPModule(r, {0, 0}, {rel});
    }
    default:
      return FPModule(r, {0, 0}, {{Polynomial::variable(r, 1), -Polynomial::variable(r, 0)}});
  }
}

Polynomial random_coefficient(const RingPtr& r, int degree, SeededRng& rng) {
  return degree == 0 ? Polynomial::from_int(r, rng.range(-2, 2)) : random_linear_form(r, rng);
}

PolyVector random_element(const FPModule& m, SeededRng& rng) {
  int degree = rng.range(0, 1);
  PolyVector v;
  for (int i = 0; i < m.num_gens(); ++i) v.push_back(random_coefficient(m.ring(), degree, rng));
  return v;
}

PolyVector combine(const RingPtr& r, const std::vector<PolyVector>& gens, int rank, SeededRng& rng) {
  int degree = rng.range(0, 1);
  PolyVector out = zero_vector(r, rank);
  for (const auto& g : gens) {
    Polynomial c = random_coefficient(r, degree, rng);
    for (int i = 0; i < rank; ++i) out[static_cast<std::size_t>(i)] += c * g[static_cast<std::size_t>(i)];
  }
  return out;
}

Pair random_pair(const RingPtr& r, SeededRng& rng) {
  Pair p{random_module(r, rng), {}};
  if (rng.range(0, 2) == 0) {
    for (int i = 0; i < p.m.num_gens(); ++i) p.sub.push_back(p.m.generator(i));
  } else {
    int k = rng.range(1, 2);
    for (int i = 0; i < k; ++i) p.sub.push_back(random_element(p.m, rng));
  }
  return p;
}

/// A random well-defined map out of m: a quotient map, multiplication by a
/// linear form, or the inclusion into m ⊕ A.
ModuleMap random_map_from(const FPModule& m, SeededRng& rng) {
  const RingPtr& r = m.ring();
  int g = m.num_gens();
  PolyMatrix id(r, g, g);
  for (int i = 0; i < g; ++i) id.at(i, i) = Polynomial::from_int(r, 1);
  switch (rng.range(0, 2)) {
    case 0: {
      std::vector<PolyVector> rels = m.relations();
      PolyVector extra;
      for (int i = 0; i < g; ++i) extra.push_back(random_linear_form(r, rng));
      rels.push_back(extra);
      return ModuleMap(m, FPModule(r, m.gen_degrees(), rels), id);
    }
    case 1: {
      Polynomial l = random_linear_form(r, rng);
      PolyMatrix s(r, g, g);
      for (int i = 0; i < g; ++i) s.at(i, i) = l;
      return ModuleMap(m, m, s);
    }
    default: {
      std::vector<int> degrees = m.gen_degrees();
      degrees.push_back(0);
      std::vector<PolyVector> rels;
      for (auto rel : m.relations()) {
        rel.push_back(Polynomial(r));
        rels.push_back(rel);
      }
      PolyMatrix inc(r, g + 1, g);
      for (int i = 0; i < g; ++i) inc.at(i, i) = Polynomial::from_int(r, 1);
      return ModuleMap(m, FPModule(r, degrees, rels), inc);
    }
  }
}

}  // namespace

std::vector<ClosureCase> closure_sweep(const Field& field, bool p_ample, int count, int max_level, std::uint64_t seed) {
  RingPtr r = PolyRing::make(field, {"x", "y"});
  SeededRng rng(seed);
  auto holds = [&](const std::vector<PolyVector>& sub, const FPModule& m, int level) {
    return p_ample ? p_ample_at(sub, m, level) : ample_at(sub, m, level);
  };
  std::vector<ClosureCase> out;
  for (int k = 0; k < count; ++k) {
    Pair p = random_pair(r, rng);
    int g = p.m.num_gens();
    std::vector<PolyVector> in_m;
    for (const auto& v : p.sub) {
      Polynomial l = Polynomial::variable(r, rng.range(0, 1)) + random_linear_form(r, rng);
      if (l.is_zero()) l = Polynomial::variable(r, 0);
      PolyVector w;
      for (const auto& c : v) w.push_back(l * c);
      in_m.push_back(w);
    }
    std::vector<PolyVector> smaller{combine(r, p.sub, g, rng)};
    ModuleMap f = random_map_from(p.m, rng);
    std::vector<PolyVector> image;
    for (const auto& v : p.sub) image.push_back(f.apply(v));
    FPModule n = random_module(r, rng);
    FPModule nm = p_ample ? tensor(n, p.m) : tensor(p.m, n);
    std::vector<PolyVector> nsub;
    for (int i = 0; i < n.num_gens(); ++i)
      for (const auto& v : p.sub)
        nsub.push_back(p_ample ? tensor_element(n, p.m, n.generator(i), v) : tensor_element(p.m, n, v, n.generator(i)));
    FPModule s2 = symmetric_power(p.m, 2);
    std::vector<PolyVector> prod = product_with_power(p.m, p.sub, 2);

    for (int level = 1; level <= max_level; ++level) {
      bool base = holds(p.sub, p.m, level);
      out.push_back({1, level, true, holds(in_m, p.m, level)});
      out.push_back({2, level, base, holds(smaller, p.m, level)});
      out.push_back({4, level, base, holds(image, f.target(), level)});
      out.push_back({5, level, base, holds(nsub, nm, level)});
      out.push_back({6, level, base, holds(prod, s2, level)});
    }
  }
  return out;
}

bool face_complex_connected(const std::vector<std::uint32_t>& supports, int n, int d) {
  std::uint32_t full = n >= 32 ? ~0u : (1u << n) - 1u;
  std::vector<std::uint32_t> faces;
  for (std::uint32_t s = 0; s <= full; ++s) {
    bool face = std::none_of(supports.begin(), supports.end(), [&](std::uint32_t g) { return (g & s) == g; });
    if (face) faces.push_back(s);
    if (s == full) break;
  }
  if (faces.empty()) return false;
  std::vector<std::uint32_t> facets;
  for (auto s : faces)
    if (std::none_of(faces.begin(), faces.end(), [&](std::uint32_t t) { return t != s && (t & s) == s; }))
      facets.push_back(s);
  int dim = 0;
  for (auto s : facets) dim = std::max(dim, __builtin_popcount(s));
  if (dim <= d) return false;
  // A facet F of dimension < d with other facets present: removing its meet
  // with the other facets (dimension < dim F) splits F off.
  for (auto s : facets)
    if (__builtin_popcount(s) < d) return false;
  // Otherwise remove every coordinate stratum of dimension < d and test the
  // remaining strata for connectedness through closure relations.
  std::vector<std::uint32_t> big;
  for (auto s : faces)
    if (__builtin_popcount(s) >= d) big.push_back(s);
  std::vector<int> parent(big.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  for (std::size_t i = 0; i < big.size(); ++i)
    for (std::size_t j = i + 1; j < big.size(); ++j)
      if ((big[i] & big[j]) == big[i] || (big[i] & big[j]) == big[j])
        parent[static_cast<std::size_t>(find(static_cast<int>(i)))] = find(static_cast<int>(j));
  int root = find(0);
  for (std::size_t i = 1; i < big.size(); ++i)
    if (find(static_cast<int>(i)) != root) return false;
  return true;
}

std::vector<OracleCase> connectedness_oracle_sweep(int samples, int max_vars, std::uint64_t seed) {
  if (max_vars < 1 || max_vars > 16) throw PreconditionError("oracle sweep: max_vars must be in [1, 16]");
  SeededRng rng(seed);
  std::vector<OracleCase> out;
  for (int k = 0; k < samples; ++k) {
    int n = rng.range(1, max_vars);
    std::vector<std::string> names;
    for (int v = 0; v < n; ++v) names.push_back("x" + std::to_string(v));
    RingPtr r = PolyRing::make(Field::rationals(), names);
    int ngens = rng.range(1, 4);
    std::vector<std::uint32_t> supports;
    PolyVector gens;
    for (int i = 0; i < ngens; ++i) {
      std::uint32_t s = 0;
      int size = rng.range(1, std::min(3, n));
      while (__builtin_popcount(s) < size) s |= 1u << rng.range(0, n - 1);
      supports.push_back(s);
      Polynomial m = Polynomial::from_int(r, 1);
      for (int v = 0; v < n; ++v)
        if (s & (1u << v)) m *= Polynomial::variable(r, v);
      gens.push_back(m);
    }
    ComponentSet cs = monomial_minimal_primes(Ideal(r, gens));
    for (int d = 0; d < n; ++d)
      out.push_back({n, supports, d, connected_in_dimension(cs, d, false).connected, face_complex_connected(supports, n, d)});
  }
  return out;
}

}  // namespace degloci
