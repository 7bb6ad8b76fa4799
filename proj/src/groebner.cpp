#include "degloci/groebner.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <deque>
#include <string>

#include "degloci/error.hpp"

namespace degloci {

namespace {

int initial_max_degree() {
  if (const char* env = std::getenv("DEGLOCI_MAX_DEGREE")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v < 1000000) return static_cast<int>(v);
  }
  return 40;
}

std::atomic<int>& guard_cell() {
  static std::atomic<int> cap{initial_max_degree()};
  return cap;
}

thread_local int scoped_cap = 0;

}  // namespace

int default_max_degree() { return scoped_cap > 0 ? scoped_cap : guard_cell().load(std::memory_order_relaxed); }

void set_default_max_degree(int cap) {
  if (cap <= 0) throw PreconditionError("degree guard must be positive");
  guard_cell().store(cap, std::memory_order_relaxed);
}

DegreeGuardScope::DegreeGuardScope(int cap) : saved_(scoped_cap) {
  if (cap <= 0) throw PreconditionError("degree guard must be positive");
  scoped_cap = cap;
}

DegreeGuardScope::~DegreeGuardScope() { scoped_cap = saved_; }

Vec vec_sort(const Field& field, const ModuleOrder& order, Vec v) {
  std::sort(v.begin(), v.end(), [&](const VTerm& a, const VTerm& b) { return order.compare(a, b) > 0; });
  Vec out;
  out.reserve(v.size());
  for (auto& t : v) {
    if (!out.empty() && out.back().comp == t.comp && out.back().mono == t.mono) {
      out.back().coeff = field.add(out.back().coeff, t.coeff);
      if (field.is_zero(out.back().coeff)) out.pop_back();
    } else if (!field.is_zero(t.coeff)) {
      out.push_back(std::move(t));
    }
  }
  return out;
}

namespace {

// Replaces a by a[0..keep) followed by the merge of a[from..] and c*m*b[b_from..].
void axpy_tail(const Field& field, const ModuleOrder& order, Vec& a, std::size_t keep, std::size_t from,
               const Coeff& c, const Monomial& m, const Vec& b, std::size_t b_from) {
  Vec out;
  out.reserve(a.size() - from + b.size() - b_from);
  std::size_t i = from;
  std::size_t j = b_from;
  while (i < a.size() && j < b.size()) {
    Monomial bm = b[j].mono * m;
    int cmp = order.compare(a[i].mono, a[i].comp, bm, b[j].comp);
    if (cmp > 0) {
      out.push_back(std::move(a[i++]));
    } else if (cmp < 0) {
      out.push_back(VTerm{bm, b[j].comp, field.mul(c, b[j].coeff)});
      ++j;
    } else {
      Coeff s = field.add(a[i].coeff, field.mul(c, b[j].coeff));
      if (!field.is_zero(s)) out.push_back(VTerm{a[i].mono, a[i].comp, s});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(std::move(a[i]));
  for (; j < b.size(); ++j) out.push_back(VTerm{b[j].mono * m, b[j].comp, field.mul(c, b[j].coeff)});
  a.resize(keep);
  a.insert(a.end(), std::make_move_iterator(out.begin()), std::make_move_iterator(out.end()));
}

struct Elem {
  Vec v;
  int sugar = 0;
  bool active = true;
  const Monomial& lead() const { return v.front().mono; }
  int comp() const { return v.front().comp; }
};

struct Pair {
  int i;
  int j;
  Monomial lcm;
  int comp;
  int sugar;
};

int find_reducer(const std::vector<const Vec*>& basis, const VTerm& t) {
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const VTerm& l = basis[k]->front();
    if (l.comp == t.comp && divides(l.mono, t.mono)) return static_cast<int>(k);
  }
  return -1;
}

// Full reduction with sugar tracking.
Vec reduce_full(const Field& field, const ModuleOrder& order, Vec v, const std::vector<const Vec*>& basis,
                const std::vector<int>* sugars, int* sugar) {
  std::size_t head = 0;
  while (head < v.size()) {
    int k = find_reducer(basis, v[head]);
    if (k < 0) {
      ++head;
      continue;
    }
    const Vec& g = *basis[static_cast<std::size_t>(k)];
    Monomial m = quotient(v[head].mono, g.front().mono);
    Coeff c = field.neg(field.div(v[head].coeff, g.front().coeff));
    if (sugar && sugars)
      *sugar = std::max(*sugar, static_cast<int>(m.degree) + (*sugars)[static_cast<std::size_t>(k)]);
    // Leading terms cancel by construction; skip them on both sides.
    axpy_tail(field, order, v, head, head + 1, c, m, g, 1);
  }
  return v;
}

bool pair_before(const ModuleOrder& order, const Pair& a, const Pair& b) {
  if (a.sugar != b.sugar) return a.sugar < b.sugar;
  int c = order.compare(a.lcm, a.comp, b.lcm, b.comp);
  if (c != 0) return c < 0;
  if (a.j != b.j) return a.j < b.j;
  return a.i < b.i;
}

class Buchberger {
 public:
  Buchberger(const Field& field, const ModuleOrder& order, int max_degree, bool product_criterion)
      : field_(field), order_(order), cap_(max_degree), product_criterion_(product_criterion) {}

  bool add(Vec v, int sugar) {
    v = reduce_full(field_, order_, std::move(v), active_basis_, &active_sugars_, &sugar);
    if (v.empty()) return false;
    v = vec_monic(field_, v);
    if (product_criterion_ && v.front().mono.is_one()) unit_ = true;
    elems_.push_back(Elem{std::move(v), sugar, true});
    update(static_cast<int>(elems_.size()) - 1);
    return true;
  }

  void run(GroebnerStats* stats) {
    while (!pairs_.empty() && !unit_) {
      std::size_t best = 0;
      for (std::size_t k = 1; k < pairs_.size(); ++k)
        if (pair_before(order_, pairs_[k], pairs_[best])) best = k;
      Pair p = pairs_[best];
      pairs_[best] = pairs_.back();
      pairs_.pop_back();
      if (p.sugar > cap_)
        throw ResourceError("Groebner basis computation exceeded the degree guard (" + std::to_string(cap_) +
                            "); raise it with --max-degree or DEGLOCI_MAX_DEGREE");
      if (stats) ++stats->pairs_processed;
      Vec s = s_vector(p);
      if (!add(std::move(s), p.sugar) && stats) ++stats->zero_reductions;
    }
  }

  std::vector<Vec> result() const {
    if (unit_) {
      Vec one{VTerm{Monomial{}, 0, field_.one()}};
      return {one};
    }
    std::vector<const Vec*> minimal;
    for (const auto& e : elems_)
      if (e.active) minimal.push_back(&e.v);
    std::vector<Vec> out;
    out.reserve(minimal.size());
    for (std::size_t k = 0; k < minimal.size(); ++k) {
      std::vector<const Vec*> others;
      for (std::size_t l = 0; l < minimal.size(); ++l)
        if (l != k) others.push_back(minimal[l]);
      Vec v = *minimal[k];
      // The lead is irreducible by the others (minimal leads); only the tail changes.
      Vec tail(v.begin() + 1, v.end());
      tail = reduce_full(field_, order_, std::move(tail), others, nullptr, nullptr);
      Vec full;
      full.reserve(tail.size() + 1);
      full.push_back(v.front());
      full.insert(full.end(), tail.begin(), tail.end());
      out.push_back(vec_monic(field_, full));
    }
    std::sort(out.begin(), out.end(),
              [&](const Vec& a, const Vec& b) { return order_.compare(a.front(), b.front()) > 0; });
    return out;
  }

 private:
  Vec s_vector(const Pair& p) const {
    const Vec& a = elems_[static_cast<std::size_t>(p.i)].v;
    const Vec& b = elems_[static_cast<std::size_t>(p.j)].v;
    Monomial ma = quotient(p.lcm, a.front().mono);
    Monomial mb = quotient(p.lcm, b.front().mono);
    // Both elements are monic.
    Vec s = vec_scale(field_, a, ma, field_.one());
    s.erase(s.begin());
    axpy_tail(field_, order_, s, 0, 0, field_.neg(field_.one()), mb, b, 1);
    return s;
  }

  Monomial lcm_of(int i, int j) const {
    return lcm(elems_[static_cast<std::size_t>(i)].lead(), elems_[static_cast<std::size_t>(j)].lead());
  }

  int pair_sugar(int i, int j, const Monomial& l) const {
    const Elem& a = elems_[static_cast<std::size_t>(i)];
    const Elem& b = elems_[static_cast<std::size_t>(j)];
    int sa = a.sugar + static_cast<int>(l.degree - a.lead().degree);
    int sb = b.sugar + static_cast<int>(l.degree - b.lead().degree);
    return std::max(sa, sb);
  }

  void update(int h) {
    const Elem& eh = elems_[static_cast<std::size_t>(h)];
    const Monomial& lh = eh.lead();
    int ch = eh.comp();

    std::vector<Pair> c;
    for (int i = 0; i < h; ++i) {
      const Elem& e = elems_[static_cast<std::size_t>(i)];
      if (!e.active || e.comp() != ch) continue;
      Monomial l = lcm(e.lead(), lh);
      c.push_back(Pair{i, h, l, ch, pair_sugar(i, h, l)});
    }
    auto coprime_pair = [&](const Pair& p) {
      return product_criterion_ && coprime(elems_[static_cast<std::size_t>(p.i)].lead(), lh);
    };
    std::vector<Pair> d;
    for (std::size_t k = 0; k < c.size(); ++k) {
      const Pair& p = c[k];
      bool keep = coprime_pair(p);
      if (!keep) {
        keep = true;
        for (std::size_t q = k + 1; q < c.size() && keep; ++q)
          if (divides(c[q].lcm, p.lcm)) keep = false;
        for (std::size_t q = 0; q < d.size() && keep; ++q)
          if (divides(d[q].lcm, p.lcm)) keep = false;
      }
      if (keep) d.push_back(p);
    }
    std::vector<Pair> next;
    next.reserve(pairs_.size() + d.size());
    for (auto& p : pairs_) {
      if (p.comp == ch && divides(lh, p.lcm) && lcm_of(p.i, h) != p.lcm && lcm_of(p.j, h) != p.lcm) continue;
      next.push_back(std::move(p));
    }
    for (auto& p : d)
      if (!coprime_pair(p)) next.push_back(std::move(p));
    pairs_ = std::move(next);

    for (int i = 0; i < h; ++i) {
      Elem& e = elems_[static_cast<std::size_t>(i)];
      if (e.active && e.comp() == ch && divides(lh, e.lead())) e.active = false;
    }
    active_basis_.clear();
    active_sugars_.clear();
    for (const auto& e : elems_) {
      if (!e.active) continue;
      active_basis_.push_back(&e.v);
      active_sugars_.push_back(e.sugar);
    }
  }

  const Field& field_;
  const ModuleOrder& order_;
  int cap_;
  bool product_criterion_;
  bool unit_ = false;
  // std::deque keeps element addresses stable for active_basis_.
  std::deque<Elem> elems_;
  std::vector<Pair> pairs_;
  std::vector<const Vec*> active_basis_;
  std::vector<int> active_sugars_;
};

}  // namespace

Vec vec_add(const Field& field, const ModuleOrder& order, const Vec& a, const Vec& b) {
  Vec out = a;
  axpy_tail(field, order, out, 0, 0, field.one(), Monomial{}, b, 0);
  return out;
}

Vec vec_scale(const Field& field, const Vec& a, const Monomial& m, const Coeff& c) {
  Vec out;
  if (field.is_zero(c)) return out;
  out.reserve(a.size());
  for (const auto& t : a) out.push_back(VTerm{t.mono * m, t.comp, field.mul(t.coeff, c)});
  return out;
}

Vec vec_monic(const Field& field, const Vec& a) {
  if (a.empty() || field.is_one(a.front().coeff)) return a;
  Coeff inv = field.inv(a.front().coeff);
  return vec_scale(field, a, Monomial{}, inv);
}

int vec_max_degree(const Vec& a) {
  int d = -1;
  for (const auto& t : a) d = std::max(d, static_cast<int>(t.mono.degree));
  return d;
}

std::vector<Vec> groebner_basis(const Field& field, const ModuleOrder& order, std::vector<Vec> gens,
                                int max_degree, GroebnerStats* stats) {
  if (max_degree < 0) max_degree = default_max_degree();
  bool rank_one = true;
  for (const auto& g : gens)
    for (const auto& t : g)
      if (t.comp != 0) rank_one = false;
  std::vector<Vec> input;
  for (auto& g : gens)
    if (!g.empty()) input.push_back(std::move(g));
  // Smaller leading terms first; stable so ties keep input order.
  std::stable_sort(input.begin(), input.end(),
                   [&](const Vec& a, const Vec& b) { return order.compare(a.front(), b.front()) < 0; });
  Buchberger bb(field, order, max_degree, rank_one);
  for (auto& g : input) {
    int s = vec_max_degree(g);
    bb.add(std::move(g), s);
  }
  bb.run(stats);
  return bb.result();
}

Vec reduce_vec(const Field& field, const ModuleOrder& order, Vec v, const std::vector<Vec>& basis) {
  std::vector<const Vec*> ptrs;
  for (const auto& b : basis)
    if (!b.empty()) ptrs.push_back(&b);
  return reduce_full(field, order, std::move(v), ptrs, nullptr, nullptr);
}

Vec top_reduce_vec(const Field& field, const ModuleOrder& order, Vec v, const std::vector<Vec>& basis,
                   int stop_below) {
  std::vector<const Vec*> ptrs;
  for (const auto& b : basis)
    if (!b.empty()) ptrs.push_back(&b);
  while (!v.empty()) {
    if (stop_below >= 0 && v.front().comp >= stop_below) break;
    int k = find_reducer(ptrs, v.front());
    if (k < 0) break;
    const Vec& g = *ptrs[static_cast<std::size_t>(k)];
    Monomial m = quotient(v.front().mono, g.front().mono);
    Coeff c = field.neg(field.div(v.front().coeff, g.front().coeff));
    axpy_tail(field, order, v, 0, 1, c, m, g, 1);
  }
  return v;
}

bool is_groebner_basis(const Field& field, const ModuleOrder& order, const std::vector<Vec>& basis) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      const Vec& a = basis[i];
      const Vec& b = basis[j];
      if (a.empty() || b.empty() || a.front().comp != b.front().comp) continue;
      Monomial l = lcm(a.front().mono, b.front().mono);
      Vec s = vec_scale(field, a, quotient(l, a.front().mono), field.inv(a.front().coeff));
      Vec t = vec_scale(field, b, quotient(l, b.front().mono), field.neg(field.inv(b.front().coeff)));
      Vec sv = vec_add(field, order, s, t);
      if (!reduce_vec(field, order, std::move(sv), basis).empty()) return false;
    }
  }
  return true;
}

}  // namespace degloci
