#include "degloci/ideal.hpp"

#include <algorithm>
#include <functional>

#include "degloci/error.hpp"

namespace degloci {

Vec to_vec(const Polynomial& p, int comp) {
  Vec v;
  v.reserve(p.size());
  for (const auto& t : p.terms()) v.push_back(VTerm{t.mono, comp, t.coeff});
  return v;
}

Polynomial from_vec(const RingPtr& ring, const Vec& v) {
  std::vector<Term> terms;
  terms.reserve(v.size());
  for (const auto& t : v) terms.push_back(Term{t.mono, t.coeff});
  return Polynomial::from_terms(ring, std::move(terms));
}

ModuleOrder ideal_order(const PolyRing& ring) { return ModuleOrder{ring.order(), false, 0}; }

Ideal::Ideal(RingPtr ring, PolyVector gens) : ring_(std::move(ring)) {
  if (!ring_) throw RingMismatch("ideal without a ring");
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    require_same_ring(ring_, g.ring(), "ideal generators");
    gens_.push_back(std::move(g));
  }
}

Ideal Ideal::unit(RingPtr ring) {
  PolyVector g{Polynomial::from_int(ring, 1)};
  return Ideal(std::move(ring), std::move(g));
}

Ideal Ideal::irrelevant(RingPtr ring) { return of_variables(ring, ring->positive_degree_vars()); }

Ideal Ideal::of_variables(RingPtr ring, const std::vector<int>& vars) {
  PolyVector g;
  for (int v : vars) g.push_back(Polynomial::variable(ring, v));
  return Ideal(std::move(ring), std::move(g));
}

const PolyVector& Ideal::groebner_basis() const {
  std::call_once(cache_->once, [this] {
    std::vector<Vec> in;
    in.reserve(gens_.size());
    for (const auto& g : gens_) in.push_back(to_vec(g));
    auto out = degloci::groebner_basis(ring_->field(), ideal_order(*ring_), std::move(in));
    cache_->basis.reserve(out.size());
    for (const auto& v : out) cache_->basis.push_back(from_vec(ring_, v));
  });
  return cache_->basis;
}

Ideal Ideal::groebner() const {
  Ideal out(ring_, groebner_basis());
  // The basis is already reduced; share it as the new cache.
  std::call_once(out.cache_->once, [&] { out.cache_->basis = groebner_basis(); });
  return out;
}

Polynomial Ideal::normal_form(const Polynomial& p) const {
  require_same_ring(ring_, p.ring(), "normal form");
  return degloci::normal_form(p, groebner_basis());
}

bool Ideal::contains(const Polynomial& p) const { return p.is_zero() || normal_form(p).is_zero(); }

bool Ideal::contains(const Ideal& other) const {
  require_same_ring(ring_, other.ring_, "ideal containment");
  for (const auto& g : other.gens_)
    if (!contains(g)) return false;
  return true;
}

bool Ideal::equals(const Ideal& other) const {
  require_same_ring(ring_, other.ring_, "ideal equality");
  return groebner_basis() == other.groebner_basis();
}

bool Ideal::is_unit() const {
  const auto& g = groebner_basis();
  return g.size() == 1 && g[0].is_constant();
}

bool Ideal::is_zero() const { return gens_.empty(); }

Ideal Ideal::operator+(const Ideal& other) const {
  require_same_ring(ring_, other.ring_, "ideal sum");
  PolyVector g = gens_;
  g.insert(g.end(), other.gens_.begin(), other.gens_.end());
  return Ideal(ring_, std::move(g));
}

Ideal Ideal::operator*(const Ideal& other) const {
  require_same_ring(ring_, other.ring_, "ideal product");
  PolyVector g;
  for (const auto& a : gens_)
    for (const auto& b : other.gens_) g.push_back(a * b);
  return Ideal(ring_, std::move(g));
}

Ideal Ideal::with(const Polynomial& p) const {
  PolyVector g = gens_;
  g.push_back(p);
  return Ideal(ring_, std::move(g));
}

Ideal Ideal::in_ring(const RingPtr& target) const {
  PolyVector g;
  g.reserve(gens_.size());
  for (const auto& p : gens_) g.push_back(p.in_ring(target));
  return Ideal(target, std::move(g));
}

std::string Ideal::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) s += ", ";
    s += gens_[i].to_string();
  }
  return gens_.empty() ? "(0)" : s + ")";
}

Polynomial normal_form(const Polynomial& p, const PolyVector& basis) {
  if (p.is_zero()) return p;
  std::vector<Vec> b;
  b.reserve(basis.size());
  for (const auto& g : basis) {
    require_same_ring(p.ring(), g.ring(), "normal form");
    b.push_back(to_vec(g));
  }
  const auto& ring = p.ring();
  return from_vec(ring, reduce_vec(ring->field(), ideal_order(*ring), to_vec(p), b));
}

bool is_groebner_basis(const PolyVector& basis) {
  if (basis.empty()) return true;
  const auto& ring = basis.front().ring();
  std::vector<Vec> b;
  for (const auto& g : basis) b.push_back(to_vec(g));
  return is_groebner_basis(ring->field(), ideal_order(*ring), b);
}

Polynomial divide_exact(const Polynomial& p, const Polynomial& f) {
  require_same_ring(p.ring(), f.ring(), "exact division");
  if (f.is_zero()) throw Error("division by the zero polynomial");
  const auto& ring = p.ring();
  const auto& field = ring->field();
  Polynomial rem = p;
  std::vector<Term> q;
  const Term& lf = f.lead();
  while (!rem.is_zero()) {
    const Term& lr = rem.lead();
    if (!divides(lf.mono, lr.mono)) throw Error("exact division failed: " + f.to_string() + " does not divide");
    Term t{quotient(lr.mono, lf.mono), field.div(lr.coeff, lf.coeff)};
    rem = rem - f.mul_term(t.mono, t.coeff);
    q.push_back(t);
  }
  return Polynomial::from_terms(ring, std::move(q));
}

std::string fresh_variable(const PolyRing& ring, const std::string& base) {
  if (ring.index_of(base) < 0) return base;
  for (int k = 1;; ++k) {
    std::string name = base + std::to_string(k);
    if (ring.index_of(name) < 0) return name;
  }
}

Ideal eliminate(const Ideal& I, const std::vector<int>& drop) {
  const auto& ring = I.ring();
  std::vector<bool> dropped(static_cast<std::size_t>(ring->nvars()), false);
  for (int v : drop) {
    if (v < 0 || v >= ring->nvars()) throw PreconditionError("eliminate: variable index out of range");
    dropped[static_cast<std::size_t>(v)] = true;
  }
  std::vector<std::string> elim_vars;
  std::vector<int> elim_weights;
  std::vector<std::string> kept_vars;
  std::vector<int> kept_weights;
  for (int i = 0; i < ring->nvars(); ++i) {
    if (dropped[static_cast<std::size_t>(i)]) {
      elim_vars.push_back(ring->var(i));
      elim_weights.push_back(ring->weight(i));
    } else {
      kept_vars.push_back(ring->var(i));
      kept_weights.push_back(ring->weight(i));
    }
  }
  if (elim_vars.empty()) return I;
  OrderKind kind = ring->order().kind == OrderKind::Block ? OrderKind::Grevlex : ring->order().kind;
  RingPtr kept = PolyRing::make(ring->field(), kept_vars, kind, kept_weights);
  std::vector<std::string> all = elim_vars;
  all.insert(all.end(), kept_vars.begin(), kept_vars.end());
  std::vector<int> all_w = elim_weights;
  all_w.insert(all_w.end(), kept_weights.begin(), kept_weights.end());
  RingPtr block =
      PolyRing::make(ring->field(), all, OrderKind::Block, all_w, static_cast<int>(elim_vars.size()));
  Ideal lifted = I.in_ring(block);
  const std::uint32_t elim_mask = (elim_vars.size() >= 32) ? 0xFFFFFFFFU : ((1U << elim_vars.size()) - 1U);
  PolyVector out;
  for (const auto& g : lifted.groebner_basis())
    if ((g.support() & elim_mask) == 0) out.push_back(g.in_ring(kept));
  return Ideal(kept, std::move(out));
}

Ideal eliminate(const Ideal& I, const std::vector<std::string>& drop) {
  std::vector<int> idx;
  for (const auto& name : drop) {
    int i = I.ring()->index_of(name);
    if (i < 0) throw PreconditionError("eliminate: unknown variable '" + name + "'");
    idx.push_back(i);
  }
  return eliminate(I, idx);
}

namespace {

// Ring with one extra variable (placed first) for auxiliary tricks.
RingPtr with_aux(const RingPtr& ring, const std::string& base, std::string* name) {
  *name = fresh_variable(*ring, base);
  std::vector<std::string> vars{*name};
  vars.insert(vars.end(), ring->vars().begin(), ring->vars().end());
  std::vector<int> w{0};
  w.insert(w.end(), ring->weights().begin(), ring->weights().end());
  return PolyRing::make(ring->field(), vars, ring->order().kind == OrderKind::Block ? OrderKind::Grevlex
                                                                                      : ring->order().kind,
                        w);
}

// Re-expresses an eliminated ideal in the caller's original ring object.
Ideal back_to(const Ideal& I, const RingPtr& ring) {
  PolyVector g;
  for (const auto& p : I.groebner_basis()) g.push_back(p.in_ring(ring));
  return Ideal(ring, std::move(g));
}

}  // namespace

Ideal intersect(const Ideal& I, const Ideal& J) {
  require_same_ring(I.ring(), J.ring(), "intersect");
  const auto& ring = I.ring();
  if (I.is_zero() || J.is_zero()) return Ideal::zero(ring);
  if (I.is_unit()) return J;
  if (J.is_unit()) return I;
  std::string t;
  RingPtr ext = with_aux(ring, "_t", &t);
  Polynomial tv = Polynomial::variable(ext, 0);
  Polynomial one_minus_t = Polynomial::from_int(ext, 1) - tv;
  PolyVector g;
  for (const auto& p : I.gens()) g.push_back(tv * p.in_ring(ext));
  for (const auto& p : J.gens()) g.push_back(one_minus_t * p.in_ring(ext));
  return back_to(eliminate(Ideal(ext, std::move(g)), std::vector<int>{0}), ring);
}

Ideal quotient(const Ideal& I, const Polynomial& f) {
  require_same_ring(I.ring(), f.ring(), "quotient");
  if (f.is_zero() || I.contains(f)) return Ideal::unit(I.ring());
  Ideal inter = intersect(I, Ideal(I.ring(), {f}));
  PolyVector g;
  for (const auto& p : inter.groebner_basis()) g.push_back(divide_exact(p, f));
  return Ideal(I.ring(), std::move(g));
}

Ideal quotient(const Ideal& I, const Ideal& J) {
  require_same_ring(I.ring(), J.ring(), "quotient");
  Ideal result = Ideal::unit(I.ring());
  for (const auto& g : J.gens()) result = intersect(result, quotient(I, g));
  return result;
}

Ideal saturate(const Ideal& I, const Polynomial& f) {
  require_same_ring(I.ring(), f.ring(), "saturate");
  if (f.is_zero()) throw PreconditionError("saturation by the zero polynomial");
  const auto& ring = I.ring();
  if (f.is_constant() || I.is_unit()) return I;
  std::string t;
  RingPtr ext = with_aux(ring, "_t", &t);
  Polynomial tv = Polynomial::variable(ext, 0);
  PolyVector g;
  for (const auto& p : I.gens()) g.push_back(p.in_ring(ext));
  g.push_back(Polynomial::from_int(ext, 1) - tv * f.in_ring(ext));
  return back_to(eliminate(Ideal(ext, std::move(g)), std::vector<int>{0}), ring);
}

Ideal saturate(const Ideal& I, const Ideal& J) {
  require_same_ring(I.ring(), J.ring(), "saturate");
  if (J.is_zero()) throw PreconditionError("saturation by the zero ideal");
  std::vector<Ideal> parts;
  for (const auto& g : J.gens()) {
    Ideal s = saturate(I, g);
    if (!s.is_unit()) parts.push_back(std::move(s));
  }
  if (parts.empty()) return Ideal::unit(I.ring());
  Ideal result = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) result = intersect(result, parts[i]);
  return result;
}

bool radical_member(const Polynomial& f, const Ideal& I) {
  require_same_ring(f.ring(), I.ring(), "radical membership");
  if (f.is_zero() || I.contains(f)) return true;
  // Cheap certificate first: a small power already in I.
  if (f.total_degree() <= 8 && I.contains(f * f)) return true;
  const auto& ring = I.ring();
  std::string t;
  RingPtr ext = with_aux(ring, "_t", &t);
  Polynomial tv = Polynomial::variable(ext, 0);
  PolyVector g;
  for (const auto& p : I.gens()) g.push_back(p.in_ring(ext));
  g.push_back(Polynomial::from_int(ext, 1) - tv * f.in_ring(ext));
  return Ideal(ext, std::move(g)).is_unit();
}

int max_independent_set(const std::vector<std::uint32_t>& supports, std::uint32_t allowed, std::uint32_t* best) {
  // Minimal supports restricted to the allowed variables; a support with
  // variables outside `allowed` never blocks a subset of `allowed`.
  std::vector<std::uint32_t> sets;
  for (auto s : supports) {
    if ((s & ~allowed) != 0) continue;
    if (s == 0) {
      if (best) *best = 0;
      return -1;
    }
    sets.push_back(s);
  }
  std::sort(sets.begin(), sets.end(),
            [](std::uint32_t a, std::uint32_t b) { return __builtin_popcount(a) < __builtin_popcount(b); });
  std::vector<std::uint32_t> minimal;
  for (auto s : sets) {
    bool redundant = false;
    for (auto m : minimal)
      if ((m & s) == m) redundant = true;
    if (!redundant) minimal.push_back(s);
  }
  // Minimum hitting set by branching: the complement of a hitting set is independent.
  int best_size = __builtin_popcount(allowed) + 1;
  std::uint32_t best_cover = allowed;
  std::function<void(std::uint32_t, int)> search = [&](std::uint32_t cover, int size) {
    if (size >= best_size) return;
    const std::uint32_t* open = nullptr;
    for (const auto& s : minimal)
      if ((s & cover) == 0 && (!open || __builtin_popcount(s) < __builtin_popcount(*open))) open = &s;
    if (!open) {
      best_size = size;
      best_cover = cover;
      return;
    }
    for (std::uint32_t rest = *open; rest != 0; rest &= rest - 1) {
      std::uint32_t bit = rest & (~rest + 1U);
      search(cover | bit, size + 1);
    }
  };
  search(0, 0);
  if (best) *best = allowed & ~best_cover;
  return __builtin_popcount(allowed) - best_size;
}

int krull_dimension(const Ideal& I) {
  const auto& basis = I.groebner_basis();
  std::vector<std::uint32_t> supports;
  for (const auto& g : basis) supports.push_back(g.lead().mono.support);
  int n = I.ring()->nvars();
  std::uint32_t all = n >= 32 ? 0xFFFFFFFFU : ((1U << n) - 1U);
  return max_independent_set(supports, all, nullptr);
}

int generic_fiber_dimension(const Ideal& I, const std::vector<int>& fiber_vars) {
  const auto& ring = I.ring();
  std::vector<bool> fiber(static_cast<std::size_t>(ring->nvars()), false);
  for (int v : fiber_vars) fiber.at(static_cast<std::size_t>(v)) = true;
  std::vector<std::string> vars;
  std::vector<int> weights;
  for (int pass = 0; pass < 2; ++pass)
    for (int i = 0; i < ring->nvars(); ++i)
      if (fiber[static_cast<std::size_t>(i)] == (pass == 0)) {
        vars.push_back(ring->var(i));
        weights.push_back(ring->weight(i));
      }
  int k = static_cast<int>(fiber_vars.size());
  // With the fiber block first, a Gröbner basis stays one after extending
  // scalars to the fraction field of the other variables.
  RingPtr block = PolyRing::make(ring->field(), vars, OrderKind::Block, weights, k);
  std::uint32_t mask = k >= 32 ? 0xFFFFFFFFU : ((1U << k) - 1U);
  std::vector<std::uint32_t> supports;
  for (const auto& g : I.in_ring(block).groebner_basis()) {
    std::uint32_t s = g.lead().mono.support & mask;
    if (s == 0) return -1;
    supports.push_back(s);
  }
  return max_independent_set(supports, mask, nullptr);
}

}  // namespace degloci
