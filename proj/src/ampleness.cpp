#include "degloci/ampleness.hpp"

#include <algorithm>

#include "degloci/error.hpp"
#include "degloci/groebner.hpp"

namespace degloci {

namespace {

std::uint64_t frobenius_power(const Field& field, int a) {
  if (field.is_rational()) throw PreconditionError("Frobenius twist needs a prime field (characteristic 0 given)");
  if (a < 0) throw PreconditionError("Frobenius exponent must be nonnegative");
  std::uint64_t q = 1;
  std::uint64_t p = field.characteristic();
  for (int i = 0; i < a; ++i) {
    if (q > (std::uint64_t{1} << 20) / p) throw ResourceError("Frobenius power p^a too large");
    q *= p;
  }
  return q;
}

}  // namespace

FPModule frobenius_module(const FPModule& m, int a) {
  std::uint64_t q = frobenius_power(m.ring()->field(), a);
  std::vector<int> degrees;
  for (int d : m.gen_degrees()) degrees.push_back(static_cast<int>(q) * d);
  std::vector<PolyVector> rels;
  for (const auto& rel : m.relations()) rels.push_back(frobenius_element(rel, a));
  return FPModule(m.ring(), degrees, rels);
}

PolyVector frobenius_element(const PolyVector& v, int a) {
  if (v.empty()) return v;
  std::uint64_t q = frobenius_power(v.front().ring()->field(), a);
  PolyVector out;
  out.reserve(v.size());
  for (const auto& p : v) out.push_back(p.frobenius(q));
  return out;
}

bool lands_in_m_double_dual(const FPModule& m, const std::vector<PolyVector>& elems) {
  HomModule d = dual(m);
  HomModule dd = dual(d.module);
  std::vector<PolyVector> ddgens;
  for (const auto& r : dd.realizations) ddgens.push_back(r.row(0));
  std::vector<PolyVector> mult = irrelevant_multiples(m.ring(), ddgens);
  int k = d.module.num_gens();
  if (k == 0) return true;
  Span target(m.ring(), k, mult);
  for (const auto& e : elems)
    if (!target.contains(evaluation_vector(d, e))) return false;
  return true;
}

bool AmpleVerdict::holds_on_range() const {
  for (bool h : holds)
    if (!h) return false;
  return true;
}

int AmpleVerdict::first_failure() const {
  for (std::size_t i = 0; i < holds.size(); ++i)
    if (!holds[i]) return levels[i];
  return 0;
}

std::string AmpleVerdict::summary() const {
  int f = first_failure();
  if (f == 0) return "holds-on-range";
  return std::string("fails-at-") + (kind == "ample" ? "n=" : "a=") + std::to_string(f);
}

bool p_ample_at(const std::vector<PolyVector>& mprime, const FPModule& m, int a) {
  // F^a multiplies every degree by q, so the guard is applied to the untwisted degrees.
  std::uint64_t q = frobenius_power(m.ring()->field(), a);
  std::uint64_t cap = static_cast<std::uint64_t>(default_max_degree()) * q;
  DegreeGuardScope guard(static_cast<int>(std::min<std::uint64_t>(cap, 1u << 30)));
  FPModule fm = frobenius_module(m, a);
  std::vector<PolyVector> images;
  for (const auto& v : mprime) {
    if (static_cast<int>(v.size()) != m.num_gens()) throw PreconditionError("p-ample check: element has wrong length");
    images.push_back(frobenius_element(v, a));
  }
  return lands_in_m_double_dual(fm, images);
}

AmpleVerdict p_ample_check(const std::vector<PolyVector>& mprime, const FPModule& m, int a_max) {
  if (m.ring()->field().is_rational()) throw PreconditionError("p-ampleness is only defined in prime characteristic");
  AmpleVerdict v;
  v.kind = "p-ample";
  for (int a = 1; a <= a_max; ++a) {
    v.levels.push_back(a);
    v.holds.push_back(p_ample_at(mprime, m, a));
  }
  return v;
}

bool ample_at(const std::vector<PolyVector>& mprime, const FPModule& m, int n) {
  if (n < 1) throw PreconditionError("ample check: n must be positive");
  for (const auto& v : mprime)
    if (static_cast<int>(v.size()) != m.num_gens()) throw PreconditionError("ample check: element has wrong length");
  FPModule sn = symmetric_power(m, n);
  std::vector<PolyVector> images;
  // S^n M' is generated by products of n generators of M'.
  for (const auto& key : symmetric_basis(static_cast<int>(mprime.size()), n)) {
    std::vector<PolyVector> factors;
    for (int i : key) factors.push_back(mprime[static_cast<std::size_t>(i)]);
    images.push_back(symmetric_product(m, factors));
  }
  return lands_in_m_double_dual(sn, images);
}

AmpleVerdict ample_check(const std::vector<PolyVector>& mprime, const FPModule& m, int n_max) {
  AmpleVerdict v;
  v.kind = "ample";
  for (int n = 1; n <= n_max; ++n) {
    v.levels.push_back(n);
    v.holds.push_back(ample_at(mprime, m, n));
  }
  return v;
}

std::vector<PolyVector> product_with_power(const FPModule& m, const std::vector<PolyVector>& mprime, int n) {
  if (n < 1) throw PreconditionError("product_with_power: n must be positive");
  std::vector<PolyVector> out;
  for (const auto& v : mprime)
    for (const auto& key : symmetric_basis(m.num_gens(), n - 1)) {
      std::vector<PolyVector> factors{v};
      for (int i : key) factors.push_back(m.generator(i));
      out.push_back(symmetric_product(m, factors));
    }
  return out;
}

}  // namespace degloci
