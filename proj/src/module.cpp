#include "degloci/module.hpp"

#include <algorithm>
#include <map>

#include "degloci/error.hpp"

namespace degloci {

namespace {

ModuleOrder span_order(const PolyRing& ring, int split) { return ModuleOrder{ring.order(), false, split}; }

Vec to_module_vec(const PolyVector& v, const Field& field, const ModuleOrder& order, int offset) {
  Vec out;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (const auto& t : v[i].terms()) out.push_back(VTerm{t.mono, static_cast<int>(i) + offset, t.coeff});
  return vec_sort(field, order, std::move(out));
}

PolyVector from_module_vec(const RingPtr& ring, const Vec& v, int rank, int offset) {
  std::vector<std::vector<Term>> parts(static_cast<std::size_t>(rank));
  for (const auto& t : v) {
    int c = t.comp - offset;
    if (c < 0 || c >= rank) continue;
    parts[static_cast<std::size_t>(c)].push_back(Term{t.mono, t.coeff});
  }
  PolyVector out;
  out.reserve(static_cast<std::size_t>(rank));
  for (auto& p : parts) out.push_back(Polynomial::from_terms(ring, std::move(p)));
  return out;
}

void check_length(const PolyVector& v, int n, const char* where) {
  if (static_cast<int>(v.size()) != n)
    throw PreconditionError(std::string(where) + ": expected a vector of length " + std::to_string(n) + ", got " +
                            std::to_string(v.size()));
}

PolyVector flatten(const PolyMatrix& m) {
  PolyVector v;
  v.reserve(static_cast<std::size_t>(m.rows() * m.cols()));
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) v.push_back(m.at(r, c));
  return v;
}

PolyMatrix unflatten(const RingPtr& ring, const PolyVector& v, int rows, int cols) {
  PolyMatrix m(ring, rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m.at(r, c) = v[static_cast<std::size_t>(r * cols + c)];
  return m;
}

// Plain Gröbner basis of a submodule (no generator tracking).
std::vector<Vec> plain_basis(const RingPtr& ring, const std::vector<PolyVector>& gens) {
  ModuleOrder ord = span_order(*ring, 0);
  std::vector<Vec> in;
  for (const auto& g : gens) in.push_back(to_module_vec(g, ring->field(), ord, 0));
  return groebner_basis(ring->field(), ord, std::move(in));
}

bool plain_contains(const RingPtr& ring, const std::vector<Vec>& basis, const PolyVector& v) {
  ModuleOrder ord = span_order(*ring, 0);
  return reduce_vec(ring->field(), ord, to_module_vec(v, ring->field(), ord, 0), basis).empty();
}

// Greedy minimal subset: candidates in increasing degree, kept when not in
// the span of the previously kept ones together with `extra`.
std::vector<std::size_t> prune_generators(const RingPtr& ring, const std::vector<PolyVector>& cands,
                                          const std::vector<std::optional<int>>& degrees,
                                          const std::vector<PolyVector>& extra) {
  std::vector<std::size_t> order(cands.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    int da = degrees[a].value_or(0);
    int db = degrees[b].value_or(0);
    return da < db;
  });
  std::vector<PolyVector> kept_vectors = extra;
  std::vector<std::size_t> kept;
  std::vector<Vec> basis = plain_basis(ring, kept_vectors);
  for (std::size_t idx : order) {
    if (is_zero_vector(cands[idx])) continue;
    if (!kept_vectors.empty() && plain_contains(ring, basis, cands[idx])) continue;
    kept.push_back(idx);
    kept_vectors.push_back(cands[idx]);
    basis = plain_basis(ring, kept_vectors);
  }
  std::sort(kept.begin(), kept.end(), [&](std::size_t a, std::size_t b) {
    int da = degrees[a].value_or(0);
    int db = degrees[b].value_or(0);
    if (da != db) return da < db;
    return a < b;
  });
  return kept;
}

}  // namespace

bool is_zero_vector(const PolyVector& v) {
  for (const auto& p : v)
    if (!p.is_zero()) return false;
  return true;
}

PolyVector zero_vector(const RingPtr& ring, int n) { return PolyVector(static_cast<std::size_t>(n), Polynomial(ring)); }

Span::Span(RingPtr ring, int rank, std::vector<PolyVector> gens)
    : ring_(std::move(ring)), rank_(rank), gens_(std::move(gens)) {
  const Field& field = ring_->field();
  ModuleOrder ord = span_order(*ring_, rank_);
  int k = static_cast<int>(gens_.size());
  std::vector<Vec> ext;
  ext.reserve(gens_.size());
  for (int j = 0; j < k; ++j) {
    auto& g = gens_[static_cast<std::size_t>(j)];
    check_length(g, rank_, "span generator");
    for (auto& p : g)
      if (!p.ring()) p = Polynomial(ring_);
    Vec v = to_module_vec(g, field, ord, 0);
    v.push_back(VTerm{Monomial{}, rank_ + j, field.one()});
    ext.push_back(vec_sort(field, ord, std::move(v)));
  }
  basis_ = groebner_basis(field, ord, std::move(ext));
  for (const auto& b : basis_) {
    if (b.front().comp < rank_) {
      Vec part;
      for (const auto& t : b)
        if (t.comp < rank_) part.push_back(t);
      span_basis_.push_back(std::move(part));
    } else {
      syz_.push_back(from_module_vec(ring_, b, k, rank_));
    }
  }
}

bool Span::contains(const PolyVector& v) const { return is_zero_vector(reduce(v)); }

PolyVector Span::reduce(const PolyVector& v) const {
  check_length(v, rank_, "span reduce");
  ModuleOrder ord = span_order(*ring_, 0);
  Vec r = reduce_vec(ring_->field(), ord, to_module_vec(v, ring_->field(), ord, 0), span_basis_);
  return from_module_vec(ring_, r, rank_, 0);
}

std::optional<PolyVector> Span::lift(const PolyVector& v) const {
  check_length(v, rank_, "span lift");
  const Field& field = ring_->field();
  ModuleOrder ord = span_order(*ring_, rank_);
  Vec r = top_reduce_vec(field, ord, to_module_vec(v, field, ord, 0), basis_, rank_);
  int k = static_cast<int>(gens_.size());
  if (!r.empty() && r.front().comp < rank_) return std::nullopt;
  PolyVector c = from_module_vec(ring_, r, k, rank_);
  for (auto& p : c) p = -p;
  return c;
}

PolyMatrix syzygies(const PolyMatrix& p) {
  std::vector<PolyVector> cols;
  for (int c = 0; c < p.cols(); ++c) cols.push_back(p.col(c));
  Span s(p.ring(), p.rows(), cols);
  const auto& syz = s.syzygies();
  PolyMatrix out(p.ring(), p.cols(), static_cast<int>(syz.size()));
  for (std::size_t j = 0; j < syz.size(); ++j)
    for (int i = 0; i < p.cols(); ++i) out.at(i, static_cast<int>(j)) = syz[j][static_cast<std::size_t>(i)];
  return out;
}

std::optional<int> vector_degree(const PolyVector& v, const std::vector<int>& degrees) {
  std::optional<int> deg;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    auto d = v[i].homogeneous_degree();
    if (!d) return std::nullopt;
    int total = *d + degrees[i];
    if (deg && *deg != total) return std::nullopt;
    deg = total;
  }
  return deg;
}

FPModule::FPModule(RingPtr ring, std::vector<int> gen_degrees, std::vector<PolyVector> relations)
    : ring_(std::move(ring)), degrees_(std::move(gen_degrees)) {
  if (!ring_) throw RingMismatch("module without a ring");
  for (auto& rel : relations) {
    check_length(rel, num_gens(), "module relation");
    for (auto& p : rel) {
      if (!p.ring()) p = Polynomial(ring_);
      require_same_ring(ring_, p.ring(), "module relation");
    }
    if (is_zero_vector(rel)) continue;
    if (!vector_degree(rel, degrees_))
      throw PreconditionError("inhomogeneous relation " + degloci::to_string(rel) + " for generator degrees");
    relations_.push_back(std::move(rel));
  }
}

FPModule FPModule::free(RingPtr ring, int rank, std::vector<int> degrees) {
  if (rank < 0) throw PreconditionError("negative rank");
  if (degrees.empty()) degrees.assign(static_cast<std::size_t>(rank), 0);
  if (static_cast<int>(degrees.size()) != rank) throw PreconditionError("degree vector length mismatch");
  return FPModule(std::move(ring), std::move(degrees), {});
}

PolyMatrix FPModule::presentation() const {
  PolyMatrix m(ring_, num_relations(), num_gens());
  for (int r = 0; r < num_relations(); ++r)
    for (int c = 0; c < num_gens(); ++c) m.at(r, c) = relations_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
  return m;
}

const Span& FPModule::relation_span() const {
  std::call_once(cache_->once, [this] { cache_->span = Span(ring_, num_gens(), relations_); });
  return cache_->span;
}

bool FPModule::is_zero_element(const PolyVector& v) const {
  check_length(v, num_gens(), "module element");
  if (is_zero_vector(v)) return true;
  if (relations_.empty()) return false;
  return relation_span().contains(v);
}

bool FPModule::equal_elements(const PolyVector& a, const PolyVector& b) const {
  check_length(a, num_gens(), "module element");
  check_length(b, num_gens(), "module element");
  PolyVector d;
  for (std::size_t i = 0; i < a.size(); ++i) d.push_back(a[i] - b[i]);
  return is_zero_element(d);
}

PolyVector FPModule::reduce(const PolyVector& v) const {
  if (relations_.empty()) return v;
  return relation_span().reduce(v);
}

PolyVector FPModule::generator(int i) const {
  PolyVector v = zero_vector(ring_, num_gens());
  v.at(static_cast<std::size_t>(i)) = Polynomial::from_int(ring_, 1);
  return v;
}

std::optional<int> FPModule::element_degree(const PolyVector& v) const { return vector_degree(v, degrees_); }

std::string FPModule::to_string() const {
  std::string s = "module degrees=[";
  for (std::size_t i = 0; i < degrees_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(degrees_[i]);
  }
  s += "] relations=[";
  for (std::size_t i = 0; i < relations_.size(); ++i) {
    if (i) s += ", ";
    s += degloci::to_string(relations_[i]);
  }
  return s + "]";
}

ModuleMap::ModuleMap(FPModule source, FPModule target, PolyMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != target_.num_gens() || matrix_.cols() != source_.num_gens())
    throw PreconditionError("module map: matrix must be " + std::to_string(target_.num_gens()) + " x " +
                            std::to_string(source_.num_gens()));
  if (!matrix_.ring()) matrix_ = PolyMatrix(source_.ring(), matrix_.rows(), matrix_.cols());
  require_same_ring(source_.ring(), target_.ring(), "module map");
  require_same_ring(source_.ring(), matrix_.ring(), "module map");
  for (const auto& rel : source_.relations())
    if (!target_.is_zero_element(matrix_.apply(rel)))
      throw PreconditionError("module map is not well defined: relation " + to_string(rel) +
                              " does not map to zero");
}

ModuleMap ModuleMap::identity(const FPModule& m) {
  return ModuleMap(m, m, PolyMatrix::identity(m.ring(), m.num_gens()));
}

std::optional<int> ModuleMap::degree() const {
  std::vector<int> shifts;
  for (int a = 0; a < target_.num_gens(); ++a)
    for (int j = 0; j < source_.num_gens(); ++j) shifts.push_back(target_.gen_degree(a) - source_.gen_degree(j));
  return vector_degree(flatten(matrix_), shifts);
}

PolyVector ModuleMap::apply(const PolyVector& v) const { return matrix_.apply(v); }

ModuleMap ModuleMap::compose_after(const ModuleMap& first) const {
  return ModuleMap(first.source_, target_, matrix_ * first.matrix_);
}

bool ModuleMap::is_zero() const {
  for (int j = 0; j < source_.num_gens(); ++j)
    if (!target_.is_zero_element(matrix_.col(j))) return false;
  return true;
}

PolyMatrix HomModule::realize(const PolyVector& coords) const {
  check_length(coords, module.num_gens(), "hom coordinates");
  PolyMatrix out(source.ring(), target.num_gens(), source.num_gens());
  for (std::size_t k = 0; k < realizations.size(); ++k) {
    if (coords[k].is_zero()) continue;
    const PolyMatrix& f = realizations[k];
    for (int a = 0; a < f.rows(); ++a)
      for (int j = 0; j < f.cols(); ++j)
        if (!f.at(a, j).is_zero()) out.at(a, j) += coords[k] * f.at(a, j);
  }
  return out;
}

std::optional<PolyVector> HomModule::coordinates(const PolyMatrix& f) const {
  if (f.rows() != target.num_gens() || f.cols() != source.num_gens())
    throw PreconditionError("hom coordinates: matrix has the wrong shape");
  auto c = coordinates_span->lift(flatten(f));
  if (!c) return std::nullopt;
  c->resize(realizations.size());
  return c;
}

ModuleMap HomModule::as_map(int k) const {
  return ModuleMap(source, target, realizations.at(static_cast<std::size_t>(k)));
}

PolyVector HomModule::evaluate(int k, const PolyVector& m) const {
  return realizations.at(static_cast<std::size_t>(k)).apply(m);
}

HomModule hom_module(const FPModule& m, const FPModule& n) {
  require_same_ring(m.ring(), n.ring(), "hom_module");
  const RingPtr& ring = m.ring();
  const int gm = m.num_gens();
  const int gn = n.num_gens();
  const int rm = m.num_relations();
  const int rn = n.num_relations();
  const int nf = gn * gm;
  const int unknowns = nf + rm * rn;

  // Columns of the map (F, G) -> F·ρ_s − Σ_l G[s][l] σ_l, indexed (s, a).
  std::vector<PolyVector> cols;
  cols.reserve(static_cast<std::size_t>(unknowns));
  for (int a = 0; a < gn; ++a)
    for (int j = 0; j < gm; ++j) {
      PolyVector col = zero_vector(ring, rm * gn);
      for (int s = 0; s < rm; ++s)
        col[static_cast<std::size_t>(s * gn + a)] = m.relations()[static_cast<std::size_t>(s)][static_cast<std::size_t>(j)];
      cols.push_back(std::move(col));
    }
  for (int s = 0; s < rm; ++s)
    for (int l = 0; l < rn; ++l) {
      PolyVector col = zero_vector(ring, rm * gn);
      for (int a = 0; a < gn; ++a)
        col[static_cast<std::size_t>(s * gn + a)] = -n.relations()[static_cast<std::size_t>(l)][static_cast<std::size_t>(a)];
      cols.push_back(std::move(col));
    }
  std::vector<PolyVector> candidates;
  if (rm == 0) {
    for (int i = 0; i < nf; ++i) {
      PolyVector e = zero_vector(ring, nf);
      e[static_cast<std::size_t>(i)] = Polynomial::from_int(ring, 1);
      candidates.push_back(std::move(e));
    }
  } else {
    Span kernel(ring, rm * gn, cols);
    for (const auto& syz : kernel.syzygies()) {
      PolyVector f(syz.begin(), syz.begin() + nf);
      if (!is_zero_vector(f)) candidates.push_back(std::move(f));
    }
  }

  // Maps whose image lies in the relations of N (zero in Hom).
  std::vector<PolyVector> trivial;
  for (int l = 0; l < rn; ++l)
    for (int j = 0; j < gm; ++j) {
      PolyVector f = zero_vector(ring, nf);
      for (int a = 0; a < gn; ++a)
        f[static_cast<std::size_t>(a * gm + j)] = n.relations()[static_cast<std::size_t>(l)][static_cast<std::size_t>(a)];
      trivial.push_back(std::move(f));
    }

  std::vector<int> shifts;
  for (int a = 0; a < gn; ++a)
    for (int j = 0; j < gm; ++j) shifts.push_back(n.gen_degree(a) - m.gen_degree(j));
  std::vector<std::optional<int>> cand_deg;
  for (const auto& c : candidates) cand_deg.push_back(vector_degree(c, shifts));
  std::vector<std::size_t> kept = prune_generators(ring, candidates, cand_deg, trivial);

  HomModule h;
  h.source = m;
  h.target = n;
  std::vector<int> degrees;
  std::vector<PolyVector> span_gens;
  for (std::size_t idx : kept) {
    h.realizations.push_back(unflatten(ring, candidates[idx], gn, gm));
    degrees.push_back(cand_deg[idx].value_or(0));
    span_gens.push_back(candidates[idx]);
  }
  const std::size_t s = kept.size();
  span_gens.insert(span_gens.end(), trivial.begin(), trivial.end());
  auto coords = std::make_shared<Span>(ring, nf, span_gens);

  std::vector<PolyVector> rel_cands;
  for (const auto& syz : coords->syzygies()) {
    PolyVector r(syz.begin(), syz.begin() + static_cast<std::ptrdiff_t>(s));
    if (!is_zero_vector(r)) rel_cands.push_back(std::move(r));
  }
  std::vector<std::optional<int>> rel_deg;
  for (const auto& r : rel_cands) rel_deg.push_back(vector_degree(r, degrees));
  std::vector<PolyVector> relations;
  for (std::size_t idx : prune_generators(ring, rel_cands, rel_deg, {})) relations.push_back(rel_cands[idx]);

  h.module = FPModule(ring, degrees, relations);
  h.coordinates_span = std::move(coords);
  return h;
}

HomModule dual(const FPModule& m) { return hom_module(m, FPModule::free(m.ring(), 1)); }

PolyVector evaluation_vector(const HomModule& d, const PolyVector& v) {
  PolyVector out;
  for (const auto& f : d.realizations) out.push_back(f.apply(v).at(0));
  return out;
}

DoubleDual double_dual(const FPModule& m) {
  DoubleDual dd;
  dd.dual = dual(m);
  dd.double_dual = dual(dd.dual.module);
  const RingPtr& ring = m.ring();
  PolyMatrix nat(ring, dd.double_dual.module.num_gens(), m.num_gens());
  for (int j = 0; j < m.num_gens(); ++j) {
    PolyVector ev = evaluation_vector(dd.dual, m.generator(j));
    PolyMatrix row(ring, {ev});
    if (ev.empty()) row = PolyMatrix(ring, 1, 0);
    auto c = dd.double_dual.coordinates(row);
    if (!c) throw Error("double_dual: evaluation is not a functional on the dual (internal inconsistency)");
    for (int i = 0; i < nat.rows(); ++i) nat.at(i, j) = (*c)[static_cast<std::size_t>(i)];
  }
  dd.natural_map = ModuleMap(m, dd.double_dual.module, nat);
  return dd;
}

FPModule tensor(const FPModule& m, const FPModule& n) {
  require_same_ring(m.ring(), n.ring(), "tensor");
  const RingPtr& ring = m.ring();
  int gm = m.num_gens();
  int gn = n.num_gens();
  std::vector<int> degrees;
  for (int i = 0; i < gm; ++i)
    for (int j = 0; j < gn; ++j) degrees.push_back(m.gen_degree(i) + n.gen_degree(j));
  std::vector<PolyVector> rels;
  for (const auto& rho : m.relations())
    for (int j = 0; j < gn; ++j) {
      PolyVector r = zero_vector(ring, gm * gn);
      for (int i = 0; i < gm; ++i) r[static_cast<std::size_t>(i * gn + j)] = rho[static_cast<std::size_t>(i)];
      rels.push_back(std::move(r));
    }
  for (const auto& sigma : n.relations())
    for (int i = 0; i < gm; ++i) {
      PolyVector r = zero_vector(ring, gm * gn);
      for (int j = 0; j < gn; ++j) r[static_cast<std::size_t>(i * gn + j)] = sigma[static_cast<std::size_t>(j)];
      rels.push_back(std::move(r));
    }
  return FPModule(ring, degrees, rels);
}

PolyVector tensor_element(const FPModule& m, const FPModule& n, const PolyVector& a, const PolyVector& b) {
  check_length(a, m.num_gens(), "tensor factor");
  check_length(b, n.num_gens(), "tensor factor");
  PolyVector out;
  for (const auto& x : a)
    for (const auto& y : b) out.push_back(x * y);
  return out;
}

std::vector<std::vector<int>> exterior_basis(int g, int k) { return subsets(g, k); }

std::vector<std::vector<int>> symmetric_basis(int g, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0) return out;
  if (k == 0) return {{}};
  if (g == 0) return out;
  std::vector<int> cur(static_cast<std::size_t>(k), 0);
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == g - 1) --i;
    if (i < 0) break;
    int v = cur[static_cast<std::size_t>(i)] + 1;
    for (int j = i; j < k; ++j) cur[static_cast<std::size_t>(j)] = v;
  }
  return out;
}

int basis_index(const std::vector<std::vector<int>>& basis, const std::vector<int>& key) {
  auto it = std::lower_bound(basis.begin(), basis.end(), key);
  if (it == basis.end() || *it != key) return -1;
  return static_cast<int>(it - basis.begin());
}

namespace {

// Expands a product of elements over the generator multisets/sets.
std::map<std::vector<int>, Polynomial> expand_product(const RingPtr& ring, const std::vector<PolyVector>& factors,
                                                      bool alternating) {
  std::map<std::vector<int>, Polynomial> acc;
  acc.emplace(std::vector<int>{}, Polynomial::from_int(ring, 1));
  for (const auto& v : factors) {
    std::map<std::vector<int>, Polynomial> next;
    for (const auto& [key, c] : acc) {
      for (std::size_t a = 0; a < v.size(); ++a) {
        if (v[a].is_zero()) continue;
        int ai = static_cast<int>(a);
        if (alternating && std::find(key.begin(), key.end(), ai) != key.end()) continue;
        std::vector<int> k2 = key;
        auto pos = std::upper_bound(k2.begin(), k2.end(), ai);
        // Appending e_a and sorting moves it past every larger index.
        bool negative = alternating && ((k2.end() - pos) % 2 == 1);
        k2.insert(pos, ai);
        Polynomial term = c * v[a];
        if (negative) term = -term;
        auto it = next.find(k2);
        if (it == next.end())
          next.emplace(std::move(k2), std::move(term));
        else
          it->second += term;
      }
    }
    acc = std::move(next);
  }
  return acc;
}

PolyVector to_basis_vector(const RingPtr& ring, const std::vector<std::vector<int>>& basis,
                           const std::map<std::vector<int>, Polynomial>& coeffs) {
  PolyVector out = zero_vector(ring, static_cast<int>(basis.size()));
  for (const auto& [key, c] : coeffs) {
    int idx = basis_index(basis, key);
    if (idx < 0) throw Error("internal: basis key not found");
    out[static_cast<std::size_t>(idx)] += c;
  }
  return out;
}

FPModule power_module(const FPModule& m, int k, bool alternating) {
  if (k < 0) throw PreconditionError("negative power");
  const RingPtr& ring = m.ring();
  if (k == 0) return FPModule::free(ring, 1);
  int g = m.num_gens();
  auto basis = alternating ? exterior_basis(g, k) : symmetric_basis(g, k);
  std::vector<int> degrees;
  for (const auto& key : basis) {
    int d = 0;
    for (int i : key) d += m.gen_degree(i);
    degrees.push_back(d);
  }
  auto lower = alternating ? exterior_basis(g, k - 1) : symmetric_basis(g, k - 1);
  std::vector<PolyVector> rels;
  for (const auto& rho : m.relations())
    for (const auto& u : lower) {
      std::vector<PolyVector> factors{rho};
      for (int i : u) factors.push_back(m.generator(i));
      PolyVector r = to_basis_vector(ring, basis, expand_product(ring, factors, alternating));
      if (!is_zero_vector(r)) rels.push_back(std::move(r));
    }
  return FPModule(ring, degrees, rels);
}

ModuleMap power_map(const ModuleMap& f, int k, bool alternating) {
  FPModule src = power_module(f.source(), k, alternating);
  FPModule tgt = power_module(f.target(), k, alternating);
  const RingPtr& ring = f.source().ring();
  PolyMatrix mat(ring, tgt.num_gens(), src.num_gens());
  auto src_basis = k == 0 ? std::vector<std::vector<int>>{{}}
                          : (alternating ? exterior_basis(f.source().num_gens(), k)
                                         : symmetric_basis(f.source().num_gens(), k));
  auto tgt_basis = k == 0 ? std::vector<std::vector<int>>{{}}
                          : (alternating ? exterior_basis(f.target().num_gens(), k)
                                         : symmetric_basis(f.target().num_gens(), k));
  for (std::size_t j = 0; j < src_basis.size(); ++j) {
    std::vector<PolyVector> factors;
    for (int i : src_basis[j]) factors.push_back(f.matrix().col(i));
    PolyVector col = to_basis_vector(ring, tgt_basis, expand_product(ring, factors, alternating));
    for (int a = 0; a < mat.rows(); ++a) mat.at(a, static_cast<int>(j)) = col[static_cast<std::size_t>(a)];
  }
  return ModuleMap(src, tgt, mat);
}

}  // namespace

FPModule exterior_power(const FPModule& m, int k) { return power_module(m, k, true); }
FPModule symmetric_power(const FPModule& m, int k) { return power_module(m, k, false); }
ModuleMap exterior_power(const ModuleMap& f, int k) { return power_map(f, k, true); }
ModuleMap symmetric_power(const ModuleMap& f, int k) { return power_map(f, k, false); }

PolyVector symmetric_product(const FPModule& m, const std::vector<PolyVector>& factors) {
  for (const auto& v : factors) check_length(v, m.num_gens(), "symmetric factor");
  int k = static_cast<int>(factors.size());
  auto basis = k == 0 ? std::vector<std::vector<int>>{{}} : symmetric_basis(m.num_gens(), k);
  return to_basis_vector(m.ring(), basis, expand_product(m.ring(), factors, false));
}

PolyVector wedge_product(const FPModule& m, const std::vector<PolyVector>& factors) {
  for (const auto& v : factors) check_length(v, m.num_gens(), "wedge factor");
  int k = static_cast<int>(factors.size());
  auto basis = k == 0 ? std::vector<std::vector<int>>{{}} : exterior_basis(m.num_gens(), k);
  return to_basis_vector(m.ring(), basis, expand_product(m.ring(), factors, true));
}

Polynomial SymAlgebra::linear_form(const PolyVector& coords) const {
  check_length(coords, static_cast<int>(t_vars.size()), "linear form");
  Polynomial out(ring);
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (!coords[i].is_zero()) out += coords[i].in_ring(ring) * t(static_cast<int>(i));
  return out;
}

std::optional<int> SymAlgebra::sym_degree(const Polynomial& p) const {
  std::optional<int> deg;
  for (const auto& term : p.terms()) {
    int d = 0;
    for (int v : t_vars) d += term.mono[v];
    if (deg && *deg != d) return std::nullopt;
    deg = d;
  }
  return deg;
}

Ideal SymAlgebra::positive_part() const {
  PolyVector g = relations.gens();
  for (std::size_t i = 0; i < t_vars.size(); ++i) g.push_back(t(static_cast<int>(i)));
  return Ideal(ring, g);
}

SymAlgebra symmetric_algebra(const FPModule& e, const std::string& prefix) {
  SymAlgebra s;
  s.base = e.ring();
  s.module = e;
  std::vector<std::string> vars = s.base->vars();
  std::vector<int> weights = s.base->weights();
  RingPtr probe = s.base;
  for (int i = 0; i < e.num_gens(); ++i) {
    std::string name = prefix + std::to_string(i + 1);
    while (std::find(vars.begin(), vars.end(), name) != vars.end()) name = "_" + name;
    vars.push_back(name);
    weights.push_back(1);
    s.t_degrees.push_back(e.gen_degree(i));
  }
  if (static_cast<int>(vars.size()) > kMaxVars)
    throw ResourceError("symmetric algebra needs " + std::to_string(vars.size()) + " variables (limit " +
                        std::to_string(kMaxVars) + ")");
  OrderKind kind = s.base->order().kind == OrderKind::Block ? OrderKind::Grevlex : s.base->order().kind;
  s.ring = PolyRing::make(s.base->field(), vars, kind, weights);
  for (int i = 0; i < e.num_gens(); ++i) s.t_vars.push_back(s.base->nvars() + i);
  PolyVector l;
  for (const auto& rel : e.relations()) l.push_back(s.linear_form(rel));
  s.relations = Ideal(s.ring, l);
  return s;
}

Ideal fitting_ideal(const FPModule& m, int j) {
  if (j < 0) throw PreconditionError("fitting ideal index must be nonnegative");
  int k = m.num_gens() - j;
  if (k <= 0) return Ideal::unit(m.ring());
  if (k > m.num_relations()) return Ideal::zero(m.ring());
  return minors_ideal(m.presentation(), k);
}

int generic_rank(const FPModule& m) { return m.num_gens() - rank_over_fraction_field(m.presentation()); }

bool isolated_singularity_check(const FPModule& m, int r) {
  int rank = generic_rank(m);
  if (r != rank)
    throw PreconditionError("isolated_singularity_check: r = " + std::to_string(r) + " but the generic rank is " +
                            std::to_string(rank));
  if (r >= 1 && !fitting_ideal(m, r - 1).is_zero()) return false;
  return krull_dimension(fitting_ideal(m, r)) <= 0;
}

std::vector<PolyVector> irrelevant_multiples(const RingPtr& ring, const std::vector<PolyVector>& gens) {
  std::vector<PolyVector> out;
  for (int v : ring->positive_degree_vars()) {
    Polynomial x = Polynomial::variable(ring, v);
    for (const auto& g : gens) {
      PolyVector w;
      for (const auto& p : g) w.push_back(x * p);
      out.push_back(std::move(w));
    }
  }
  return out;
}

}  // namespace degloci
