#include "degloci/degeneracy.hpp"

#include <algorithm>

#include "degloci/error.hpp"

namespace degloci {

namespace {

Polynomial dot(const RingPtr& ring, const PolyVector& a, const PolyVector& b) {
  Polynomial s(ring);
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  return s;
}

std::vector<PolyVector> unit_vectors(const RingPtr& ring, int n) {
  std::vector<PolyVector> out;
  for (int i = 0; i < n; ++i) {
    PolyVector e = zero_vector(ring, n);
    e[static_cast<std::size_t>(i)] = Polynomial::from_int(ring, 1);
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<PolyVector> functional_rows(const HomModule& d) {
  std::vector<PolyVector> rows;
  for (const auto& r : d.realizations) rows.push_back(r.row(0));
  return rows;
}

FPModule second_power(Flavor kind, const FPModule& m) {
  if (kind == Flavor::Symmetric) return symmetric_power(m, 2);
  if (kind == Flavor::Alternating) return exterior_power(m, 2);
  throw PreconditionError("pairing flavor must be symmetric or alternating");
}

PolyVector pairing_value(Flavor kind, const FPModule& m, const PolyMatrix& values, int j, int jp) {
  int g = m.num_gens();
  if (kind == Flavor::Symmetric) {
    auto basis = symmetric_basis(g, 2);
    return values.col(basis_index(basis, {std::min(j, jp), std::max(j, jp)}));
  }
  if (j == jp) return zero_vector(values.ring(), values.rows());
  auto basis = exterior_basis(g, 2);
  PolyVector v = values.col(basis_index(basis, {std::min(j, jp), std::max(j, jp)}));
  if (j > jp)
    for (auto& p : v) p = -p;
  return v;
}

// Column j' of the partial map h(m_j, -) : M -> L.
PolyMatrix partial_map(Flavor kind, const FPModule& m, const PolyMatrix& values, int j) {
  PolyMatrix out(m.ring(), values.rows(), m.num_gens());
  for (int jp = 0; jp < m.num_gens(); ++jp) {
    PolyVector v = pairing_value(kind, m, values, j, jp);
    for (int a = 0; a < out.rows(); ++a) out.at(a, jp) = v[static_cast<std::size_t>(a)];
  }
  return out;
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

struct HypothesisCheck {
  bool in_m = false;
  std::string p_ample = "not-tested";
  bool p_ample_holds = false;
};

// Hypothesis (a) membership f ∈ m·X, else (b) p-ampleness of (A·f, X).
HypothesisCheck check_hypotheses(const FPModule& x, const PolyVector& coords, const BoundOptions& opts) {
  HypothesisCheck h;
  h.in_m = in_m_span(x.ring(), x.num_gens(), unit_vectors(x.ring(), x.num_gens()), coords, x.relations());
  if (!h.in_m) {
    if (x.ring()->field().is_rational()) {
      h.p_ample = "not-applicable (characteristic 0)";
    } else if (opts.try_p_ample) {
      AmpleVerdict v = p_ample_check({coords}, x, opts.a_max);
      h.p_ample = v.summary() + " (a<=" + std::to_string(opts.a_max) + ")";
      h.p_ample_holds = v.holds_on_range();
    }
  }
  return h;
}

void finish(BoundReport& r) {
  r.dim_ambient = r.locus.ring()->nvars();
  r.dim_locus = krull_dimension(r.locus);
  r.diagnostics.push_back({"expected_lower_bound", std::to_string(r.dim_ambient - r.tau)});
  if (r.dim_locus >= r.dim_ambient - r.tau)
    r.verdict = Verdict::Holds;
  else
    r.verdict = r.hypotheses_hold ? Verdict::Violated : Verdict::HypothesisUnmet;
  if (r.dim_locus < r.dim_ambient - r.tau)
    r.diagnostics.push_back({"shortfall", std::to_string(r.dim_ambient - r.tau - r.dim_locus)});
}

void record(BoundReport& r, const HypothesisCheck& h, const std::string& space) {
  r.diagnostics.push_back({"f_in_m_" + space, bool_text(h.in_m)});
  r.diagnostics.push_back({"p_ample", h.in_m ? "not-needed" : h.p_ample});
  r.hypotheses_hold = h.in_m || h.p_ample_holds;
}

}  // namespace

std::string flavor_name(Flavor f) {
  switch (f) {
    case Flavor::Generic: return "generic";
    case Flavor::Symmetric: return "symmetric";
    case Flavor::Alternating: return "alternating";
    case Flavor::Order: return "order";
    case Flavor::SymAlg: return "symalg";
  }
  return "?";
}

Flavor parse_flavor(const std::string& s) {
  if (s == "generic") return Flavor::Generic;
  if (s == "symmetric") return Flavor::Symmetric;
  if (s == "alternating") return Flavor::Alternating;
  if (s == "order") return Flavor::Order;
  if (s == "symalg") return Flavor::SymAlg;
  throw PreconditionError("unknown flavor '" + s + "'");
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Violated: return "violated";
    case Verdict::HypothesisUnmet: return "hypothesis-unmet";
  }
  return "?";
}

int binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return static_cast<int>(r);
}

std::string BoundReport::diagnostic(const std::string& key) const {
  for (const auto& d : diagnostics)
    if (d.key == key) return d.value;
  return {};
}

Ideal determinantal_ideal(const ModuleMap& f, int t, const std::vector<PolyVector>& functionals) {
  if (t < 0) throw PreconditionError("threshold t must be nonnegative");
  const RingPtr& ring = f.source().ring();
  for (const auto& phi : functionals) {
    if (static_cast<int>(phi.size()) != f.target().num_gens())
      throw PreconditionError("functional has the wrong length");
    for (const auto& rel : f.target().relations())
      if (!dot(ring, phi, rel).is_zero()) throw PreconditionError("functional does not vanish on the relations");
  }
  PolyMatrix w(ring, static_cast<int>(functionals.size()), f.source().num_gens());
  for (int i = 0; i < w.rows(); ++i)
    for (int j = 0; j < w.cols(); ++j) w.at(i, j) = dot(ring, functionals[static_cast<std::size_t>(i)], f.matrix().col(j));
  return minors_ideal(w, t + 1);
}

Ideal determinantal_ideal(const ModuleMap& f, int t) {
  return determinantal_ideal(f, t, functional_rows(dual(f.target())));
}

Ideal order_ideal(const FPModule& n, const PolyVector& f) {
  if (static_cast<int>(f.size()) != n.num_gens()) throw PreconditionError("element has the wrong length");
  HomModule d = dual(n);
  return Ideal(n.ring(), evaluation_vector(d, f));
}

PolyVector Pairing::value(int j, int jp) const { return pairing_value(kind, m, values, j, jp); }

ModuleMap Pairing::as_map() const { return ModuleMap(second_power(kind, m), l, values); }

Pairing pairing_from_matrix(Flavor kind, const FPModule& m, const PolyMatrix& square) {
  if (square.rows() != m.num_gens() || square.cols() != m.num_gens())
    throw PreconditionError("pairing matrix must be square of size equal to the generator count");
  if (kind == Flavor::Symmetric && !square.is_symmetric()) throw PreconditionError("matrix is not symmetric");
  if (kind == Flavor::Alternating && !square.is_alternating()) throw PreconditionError("matrix is not alternating");
  int g = m.num_gens();
  auto basis = kind == Flavor::Symmetric ? symmetric_basis(g, 2) : exterior_basis(g, 2);
  Pairing p;
  p.kind = kind;
  p.m = m;
  p.l = FPModule::free(m.ring(), 1);
  p.values = PolyMatrix(m.ring(), 1, static_cast<int>(basis.size()));
  for (std::size_t k = 0; k < basis.size(); ++k) p.values.at(0, static_cast<int>(k)) = square.at(basis[k][0], basis[k][1]);
  p.as_map();  // validates well-definedness on the second power
  return p;
}

Adjoint adjoint(const Pairing& f) {
  Adjoint out;
  out.target = hom_module(f.m, f.l);
  PolyMatrix mat(f.m.ring(), out.target.module.num_gens(), f.m.num_gens());
  for (int j = 0; j < f.m.num_gens(); ++j) {
    auto c = out.target.coordinates(partial_map(f.kind, f.m, f.values, j));
    if (!c) throw PreconditionError("pairing is not well defined on M");
    for (int i = 0; i < mat.rows(); ++i) mat.at(i, j) = (*c)[static_cast<std::size_t>(i)];
  }
  out.map = ModuleMap(f.m, out.target.module, mat);
  return out;
}

Ideal determinantal_ideal(const Pairing& f, int t) { return determinantal_ideal(adjoint(f).map, t); }

PolyVector GenericDeterminantal::functional_of(const PolyVector& hom_coords) const {
  PolyVector out;
  for (const auto& k : e.realizations) out.push_back(dot(hom.source.ring(), k.row(0), hom_coords));
  return out;
}

namespace {

GenericDeterminantal assemble(GenericDeterminantal g, const std::vector<std::vector<PolyVector>>& w_by_ij, int rows,
                              int cols) {
  g.e = dual(g.hom.module);
  g.sym = symmetric_algebra(g.e.module);
  const RingPtr& base = g.hom.source.ring();
  g.epsilon = PolyMatrix(g.sym.ring, rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      const PolyVector& w = w_by_ij[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      PolyMatrix row = w.empty() ? PolyMatrix(base, 1, 0) : PolyMatrix(base, {w});
      auto c = g.e.coordinates(row);
      if (!c) throw Error("internal: ε value is not a functional on H");
      g.epsilon.at(i, j) = g.sym.linear_form(*c);
    }
  g.ideal = minors_ideal(g.epsilon, g.t + 1) + g.sym.relations;
  return g;
}

}  // namespace

GenericDeterminantal generic_determinantal_ideal(const FPModule& m, const FPModule& n, int t) {
  if (t < 0) throw PreconditionError("threshold t must be nonnegative");
  GenericDeterminantal g;
  g.flavor = Flavor::Generic;
  g.t = t;
  g.hom = hom_module(m, n);
  auto phis = functional_rows(dual(n));
  const RingPtr& ring = m.ring();
  std::vector<std::vector<PolyVector>> w(phis.size(), std::vector<PolyVector>(static_cast<std::size_t>(m.num_gens())));
  for (std::size_t i = 0; i < phis.size(); ++i)
    for (int j = 0; j < m.num_gens(); ++j)
      for (const auto& h : g.hom.realizations) w[i][static_cast<std::size_t>(j)].push_back(dot(ring, phis[i], h.col(j)));
  return assemble(std::move(g), w, static_cast<int>(phis.size()), m.num_gens());
}

GenericDeterminantal generic_pairing_ideal(Flavor kind, const FPModule& m, const FPModule& l, int t) {
  if (t < 0) throw PreconditionError("threshold t must be nonnegative");
  GenericDeterminantal g;
  g.flavor = kind;
  g.t = t;
  g.hom = hom_module(second_power(kind, m), l);
  HomModule target = hom_module(m, l);
  auto phis = functional_rows(dual(target.module));
  const RingPtr& ring = m.ring();
  // u[k][j]: coordinates in Hom(M, L) of h_k(m_j, -).
  std::vector<std::vector<PolyVector>> u;
  for (const auto& h : g.hom.realizations) {
    std::vector<PolyVector> row;
    for (int j = 0; j < m.num_gens(); ++j) {
      auto c = target.coordinates(partial_map(kind, m, h, j));
      if (!c) throw Error("internal: partial map is not a homomorphism");
      row.push_back(std::move(*c));
    }
    u.push_back(std::move(row));
  }
  std::vector<std::vector<PolyVector>> w(phis.size(), std::vector<PolyVector>(static_cast<std::size_t>(m.num_gens())));
  for (std::size_t i = 0; i < phis.size(); ++i)
    for (int j = 0; j < m.num_gens(); ++j)
      for (std::size_t k = 0; k < u.size(); ++k)
        w[i][static_cast<std::size_t>(j)].push_back(dot(ring, phis[i], u[k][static_cast<std::size_t>(j)]));
  return assemble(std::move(g), w, static_cast<int>(phis.size()), m.num_gens());
}

Ideal phi_specialize(const SymAlgebra& s, const PolyVector& f, const Ideal& I) {
  if (static_cast<int>(f.size()) != s.module.num_gens())
    throw PreconditionError("f must have one value per generator of E");
  for (const auto& rel : s.module.relations())
    if (!dot(s.base, rel, f).is_zero()) throw PreconditionError("f is not well defined on E: a relation has nonzero value");
  require_same_ring(I.ring(), s.ring, "phi_specialize");
  PolyVector images;
  for (int i = 0; i < s.base->nvars(); ++i) images.push_back(Polynomial::variable(s.base, i));
  for (const auto& v : f) images.push_back(v.ring() ? v : Polynomial(s.base));
  PolyVector out;
  for (const auto& g : I.gens()) out.push_back(g.substitute(s.base, images));
  return Ideal(s.base, out);
}

std::vector<PolyVector> dual_generators(const SymAlgebra& s) { return functional_rows(dual(s.module)); }

LiftedMap lift_phi(const SymAlgebra& s, const PolyVector& f, const std::vector<PolyVector>& duals, const Ideal& I) {
  int ge = s.module.num_gens();
  if (static_cast<int>(f.size()) != ge) throw PreconditionError("f must have one value per generator of E");
  for (const auto& d : duals) {
    if (static_cast<int>(d.size()) != ge) throw PreconditionError("dual element has the wrong length");
    for (const auto& rel : s.module.relations())
      if (!dot(s.base, rel, d).is_zero()) throw PreconditionError("dual element does not vanish on the relations of E");
  }
  Span given(s.base, ge, duals);
  for (const auto& g : dual_generators(s))
    if (!given.contains(g)) throw HypothesisError("the supplied elements do not generate the dual of E");
  require_same_ring(I.ring(), s.ring, "lift_phi");

  int k = static_cast<int>(duals.size());
  std::vector<std::string> vars;
  std::vector<int> weights;
  for (int i = 0; i < k; ++i) {
    std::string name = "Y" + std::to_string(i + 1);
    while (s.base->index_of(name) >= 0) name = "_" + name;
    vars.push_back(name);
    weights.push_back(1);
  }
  for (int i = 0; i < s.base->nvars(); ++i) {
    vars.push_back(s.base->var(i));
    weights.push_back(s.base->weight(i));
  }
  if (static_cast<int>(vars.size()) > kMaxVars) throw ResourceError("too many variables for A[Y]");
  LiftedMap out;
  out.ring = PolyRing::make(s.base->field(), vars, OrderKind::Block, weights, k);
  for (int i = 0; i < k; ++i) out.y_vars.push_back(i);
  for (int l = 0; l < ge; ++l) {
    Polynomial img = f[static_cast<std::size_t>(l)].in_ring(out.ring);
    for (int i = 0; i < k; ++i) {
      const Polynomial& c = duals[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)];
      if (!c.is_zero()) img += c.in_ring(out.ring) * out.y(i);
    }
    out.t_images.push_back(img);
  }
  PolyVector images;
  for (int i = 0; i < s.base->nvars(); ++i) images.push_back(Polynomial::variable(out.ring, k + i));
  for (const auto& t : out.t_images) images.push_back(t);
  PolyVector jg;
  for (const auto& g : I.gens()) jg.push_back(g.substitute(out.ring, images));
  out.j = Ideal(out.ring, jg);
  return out;
}

bool pure_degree_one(const Polynomial& p, const std::vector<int>& vars) {
  for (const auto& t : p.terms()) {
    int d = 0;
    for (int v : vars) d += t.mono[v];
    if (d != 1) return false;
  }
  return true;
}

bool in_m_span(const RingPtr& ring, int rank, const std::vector<PolyVector>& gens, const PolyVector& v,
               const std::vector<PolyVector>& extra) {
  if (is_zero_vector(v)) return true;
  std::vector<PolyVector> all = irrelevant_multiples(ring, gens);
  all.insert(all.end(), extra.begin(), extra.end());
  return Span(ring, rank, all).contains(v);
}

Homogenization psi_homogenize(const LiftedMap& lift, const SymAlgebra& s, const PolyVector& f,
                              const std::vector<PolyVector>& duals) {
  int ge = s.module.num_gens();
  int k = static_cast<int>(duals.size());
  Homogenization h;
  for (int i = 0; i < k; ++i) h.t.push_back(Polynomial(s.base));
  if (!is_zero_vector(f)) {
    std::vector<int> pos = s.base->positive_degree_vars();
    Span span(s.base, ge, irrelevant_multiples(s.base, duals));
    auto c = span.lift(f);
    if (!c) throw HypothesisError("f is not in m·E^vv: no decomposition f = sum t_i f_i with t_i in m");
    for (std::size_t vi = 0; vi < pos.size(); ++vi) {
      Polynomial x = Polynomial::variable(s.base, pos[vi]);
      for (int i = 0; i < k; ++i) {
        const Polynomial& a = (*c)[vi * static_cast<std::size_t>(k) + static_cast<std::size_t>(i)];
        if (!a.is_zero()) h.t[static_cast<std::size_t>(i)] += a * x;
      }
    }
  }
  PolyVector psi;
  for (int v = 0; v < lift.ring->nvars(); ++v) psi.push_back(Polynomial::variable(lift.ring, v));
  for (int i = 0; i < k; ++i) psi[static_cast<std::size_t>(lift.y_vars[static_cast<std::size_t>(i)])] = lift.y(i) - h.t[static_cast<std::size_t>(i)].in_ring(lift.ring);
  for (const auto& img : lift.t_images) {
    Polynomial q = img.substitute(lift.ring, psi);
    if (!pure_degree_one(q, lift.y_vars)) throw Error("psi∘phi image " + q.to_string() + " is not of pure Y-degree 1");
    h.images.push_back(std::move(q));
  }
  return h;
}

BoundReport verify_dimension_bound(const ModuleMap& f, int t, const BoundOptions& opts) {
  const FPModule& m = f.source();
  const FPModule& n = f.target();
  int rm = generic_rank(m);
  int rn = generic_rank(n);
  if (t < 0 || t > std::min(rm, rn))
    throw PreconditionError("threshold t=" + std::to_string(t) + " outside [0, min(m, n)] with m=" + std::to_string(rm) +
                            ", n=" + std::to_string(rn));
  BoundReport r;
  r.flavor = Flavor::Generic;
  r.t = t;
  r.tau = (rn - t) * (rm - t);
  r.diagnostics.push_back({"generic_ranks", "m=" + std::to_string(rm) + ", n=" + std::to_string(rn)});
  HomModule h = hom_module(m, n);
  auto c = h.coordinates(f.matrix());
  if (!c) throw Error("internal: map has no coordinates in Hom(M, N)");
  record(r, check_hypotheses(h.module, *c, opts), "hom");
  r.locus = determinantal_ideal(f, t);
  finish(r);
  return r;
}

BoundReport verify_dimension_bound(const Pairing& f, int t, const BoundOptions& opts) {
  int rm = generic_rank(f.m);
  int rl = generic_rank(f.l);
  if (rl != 1) throw PreconditionError("L must have generic rank 1 (got " + std::to_string(rl) + ")");
  if (t < 0 || t > rm) throw PreconditionError("threshold t outside [0, m]");
  BoundReport r;
  r.flavor = f.kind;
  r.t = t;
  if (f.kind == Flavor::Alternating) {
    if (t % 2 != 0) throw PreconditionError("alternating flavor needs an even threshold t = 2s");
    r.tau = binomial(rm - t, 2);
  } else {
    r.tau = binomial(rm - t + 1, 2);
  }
  r.diagnostics.push_back({"generic_ranks", "m=" + std::to_string(rm) + ", l=1"});
  HomModule h = hom_module(second_power(f.kind, f.m), f.l);
  auto c = h.coordinates(f.values);
  if (!c) throw Error("internal: pairing has no coordinates");
  record(r, check_hypotheses(h.module, *c, opts), "hom");
  r.locus = determinantal_ideal(f, t);
  finish(r);
  return r;
}

BoundReport verify_order_bound(const FPModule& n, const PolyVector& f, const BoundOptions& opts) {
  BoundReport r;
  r.flavor = Flavor::Order;
  r.t = 0;
  int rn = generic_rank(n);
  r.tau = rn;
  r.diagnostics.push_back({"generic_ranks", "n=" + std::to_string(rn)});
  record(r, check_hypotheses(n, f, opts), "N");
  r.locus = order_ideal(n, f);
  finish(r);
  return r;
}

BoundReport verify_symalg_bound(const SymAlgebra& s, const PolyVector& f, const Ideal& I, const BoundOptions& opts) {
  require_same_ring(I.ring(), s.ring, "symalg bound");
  for (const auto& g : I.gens())
    if (!s.sym_degree(g)) throw PreconditionError("ideal generator " + g.to_string() + " is not homogeneous in T");
  BoundReport r;
  r.flavor = Flavor::SymAlg;
  Ideal full = I + s.relations;
  int rank = generic_rank(s.module);
  int fiber = generic_fiber_dimension(full, s.t_vars);
  r.tau = rank - fiber;
  r.diagnostics.push_back({"rank_E", std::to_string(rank)});
  r.diagnostics.push_back({"generic_fiber_dim", std::to_string(fiber)});
  bool contraction_ok = eliminate(full, s.t_vars).is_zero();
  r.diagnostics.push_back({"I_cap_A_in_q", bool_text(contraction_ok)});

  HypothesisCheck h;
  auto duals = dual_generators(s);
  h.in_m = in_m_span(s.base, s.module.num_gens(), duals, f);
  if (!h.in_m) {
    if (s.base->field().is_rational()) {
      h.p_ample = "not-applicable (characteristic 0)";
    } else if (opts.try_p_ample) {
      HomModule d = dual(s.module);
      auto c = d.coordinates(PolyMatrix(s.base, {f}));
      if (c) {
        AmpleVerdict v = p_ample_check({*c}, d.module, opts.a_max);
        h.p_ample = v.summary() + " (a<=" + std::to_string(opts.a_max) + ")";
        h.p_ample_holds = v.holds_on_range();
      }
    }
  }
  record(r, h, "dual_E");
  r.hypotheses_hold = r.hypotheses_hold && contraction_ok;
  r.locus = phi_specialize(s, f, I);
  finish(r);
  return r;
}

}  // namespace degloci
