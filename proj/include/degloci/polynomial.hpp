#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "degloci/ring.hpp"

namespace degloci {

struct Term {
  Monomial mono;
  Coeff coeff;
};

/// Sparse polynomial; terms are kept in descending order for the ring's
/// monomial order and never carry a zero coefficient.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr ring, const Coeff& c);
  static Polynomial from_int(RingPtr ring, std::int64_t v);
  static Polynomial variable(RingPtr ring, int index);
  static Polynomial term(RingPtr ring, const Monomial& m, const Coeff& c);
  /// Builds a polynomial from arbitrary terms: sorts, merges, drops zeros.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);
  /// Parses the canonical text form, e.g. "x0^2*x1 - 3*x2".
  static Polynomial parse(RingPtr ring, std::string_view text);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Term& lead() const { return terms_.front(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  bool is_one() const;

  /// Maximal total (unweighted) degree, -1 for zero.
  int total_degree() const;
  /// Weighted degree of a monomial under the ring grading.
  int weighted_degree(const Monomial& m) const;
  /// Common weighted degree when homogeneous (zero counts as homogeneous of any degree: nullopt).
  std::optional<int> homogeneous_degree() const;
  bool is_homogeneous() const;
  bool is_monomial() const { return terms_.size() == 1; }
  /// Bitmask of variables occurring.
  std::uint32_t support() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial scale(const Coeff& c) const;
  Polynomial mul_term(const Monomial& m, const Coeff& c) const;
  Polynomial pow(unsigned e) const;
  Polynomial monic() const;

  /// Ring map sending variable i to images[i] (all images in `target`).
  Polynomial substitute(const RingPtr& target, const std::vector<Polynomial>& images) const;
  /// Re-expresses the polynomial in a ring containing all used variables (matched by name).
  Polynomial in_ring(const RingPtr& target) const;
  /// Frobenius twist x^a -> x^{q a}, c -> c^q (characteristic p, q a power of p).
  Polynomial frobenius(std::uint64_t q) const;

  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

std::string monomial_to_string(const PolyRing& ring, const Monomial& m);

using PolyVector = std::vector<Polynomial>;
std::string to_string(const PolyVector& v);

}  // namespace degloci
