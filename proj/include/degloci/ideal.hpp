#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "degloci/groebner.hpp"
#include "degloci/polynomial.hpp"

namespace degloci {

/// Ideal of a polynomial ring. The reduced Gröbner basis for the ring's
/// order is computed on first use and shared by all copies.
class Ideal {
 public:
  Ideal() = default;
  Ideal(RingPtr ring, PolyVector gens);

  static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }
  static Ideal unit(RingPtr ring);
  /// The irrelevant ideal m: all variables of positive weight.
  static Ideal irrelevant(RingPtr ring);
  /// Ideal generated by the named variables.
  static Ideal of_variables(RingPtr ring, const std::vector<int>& vars);

  const RingPtr& ring() const { return ring_; }
  const PolyVector& gens() const { return gens_; }

  /// Reduced monic Gröbner basis, descending by leading monomial.
  const PolyVector& groebner_basis() const;
  /// Same ideal with the basis cache populated; generators replaced by the basis.
  Ideal groebner() const;

  Polynomial normal_form(const Polynomial& p) const;
  bool contains(const Polynomial& p) const;
  bool contains(const Ideal& other) const;
  bool equals(const Ideal& other) const;
  bool is_unit() const;
  bool is_zero() const;

  Ideal operator+(const Ideal& other) const;
  Ideal operator*(const Ideal& other) const;
  Ideal with(const Polynomial& p) const;
  /// Re-expresses generators in another ring (by variable name).
  Ideal in_ring(const RingPtr& target) const;

  std::string to_string() const;

 private:
  struct Cache {
    std::once_flag once;
    PolyVector basis;
  };
  RingPtr ring_;
  PolyVector gens_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// Division algorithm remainder of p by `basis` (no term divisible by a leading term).
Polynomial normal_form(const Polynomial& p, const PolyVector& basis);
/// Buchberger criterion on an arbitrary list.
bool is_groebner_basis(const PolyVector& basis);
/// p / f when f divides p exactly; throws Error otherwise.
Polynomial divide_exact(const Polynomial& p, const Polynomial& f);

/// Name not yet used in `ring`, derived from `base`.
std::string fresh_variable(const PolyRing& ring, const std::string& base);

/// I ∩ K[kept variables], returned in the ring of the kept variables with
/// the caller's order kind (block orders fall back to grevlex).
Ideal eliminate(const Ideal& I, const std::vector<int>& drop);
Ideal eliminate(const Ideal& I, const std::vector<std::string>& drop);

Ideal intersect(const Ideal& I, const Ideal& J);
Ideal quotient(const Ideal& I, const Polynomial& f);
Ideal quotient(const Ideal& I, const Ideal& J);
/// I : f^∞.
Ideal saturate(const Ideal& I, const Polynomial& f);
/// I : J^∞ = ∩_j I : g_j^∞.
Ideal saturate(const Ideal& I, const Ideal& J);
bool radical_member(const Polynomial& f, const Ideal& I);

/// Dimension of R/I (−1 when I is the unit ideal).
int krull_dimension(const Ideal& I);
/// Largest set of variables, as a bitmask, independent modulo the leading
/// term ideal; `allowed` restricts candidates. Returns -1 dimension for (1).
int max_independent_set(const std::vector<std::uint32_t>& supports, std::uint32_t allowed, std::uint32_t* best);

/// Dimension of I over the fraction field of the remaining variables, i.e.
/// of the generic fiber of Spec R/I over the non-fiber coordinates
/// (−1 when the generic fiber is empty).
int generic_fiber_dimension(const Ideal& I, const std::vector<int>& fiber_vars);

// Conversions between polynomials and rank-one module vectors.
Vec to_vec(const Polynomial& p, int comp = 0);
Polynomial from_vec(const RingPtr& ring, const Vec& v);
ModuleOrder ideal_order(const PolyRing& ring);

}  // namespace degloci
