#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include <gmpxx.h>

namespace degloci {

/// A field element. The interpretation depends on the owning Field:
/// over Q it is a rational in lowest terms with positive denominator, over
/// F_p it is a residue in [0, p) stored in the numerator.
///
/// Rationals that fit into 64 bits stay inline; larger ones are promoted to a
/// shared immutable GMP rational. The representation is canonical, so two
/// coefficients are equal iff their fields compare equal.
class Coeff {
 public:
  Coeff() = default;

  bool is_small() const { return !big_; }
  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  const mpq_class& big() const { return *big_; }

  friend bool operator==(const Coeff& a, const Coeff& b) {
    if (a.big_ || b.big_) {
      if (!a.big_ || !b.big_) return false;
      return *a.big_ == *b.big_;
    }
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Coeff& a, const Coeff& b) { return !(a == b); }

 private:
  friend class Field;
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

/// Coefficient field: Q (characteristic 0) or F_p for a prime p < 2^31.
class Field {
 public:
  Field() = default;
  explicit Field(std::uint32_t characteristic);

  static Field rationals() { return Field(0); }
  static Field prime(std::uint32_t p) { return Field(p); }

  std::uint32_t characteristic() const { return p_; }
  bool is_rational() const { return p_ == 0; }
  std::string name() const;

  Coeff zero() const { return Coeff{}; }
  Coeff one() const { return from_int(1); }
  Coeff from_int(std::int64_t v) const;
  Coeff from_rational(const mpq_class& q) const;
  /// Parses an unsigned decimal integer literal (arbitrary length).
  Coeff from_decimal(const std::string& digits) const;

  bool is_zero(const Coeff& a) const { return a.is_small() && a.num_ == 0; }
  bool is_one(const Coeff& a) const { return a.is_small() && a.num_ == 1 && a.den_ == 1; }

  Coeff add(const Coeff& a, const Coeff& b) const;
  Coeff sub(const Coeff& a, const Coeff& b) const;
  Coeff mul(const Coeff& a, const Coeff& b) const;
  Coeff neg(const Coeff& a) const;
  Coeff inv(const Coeff& a) const;
  Coeff div(const Coeff& a, const Coeff& b) const { return mul(a, inv(b)); }
  Coeff pow(const Coeff& a, std::uint64_t e) const;

  /// Sign for printing: true when the canonical representative is "negative".
  /// Over F_p residues are printed in the symmetric range (-p/2, p/2].
  bool is_negative(const Coeff& a) const;
  std::string to_string(const Coeff& a) const;

  friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_; }
  friend bool operator!=(const Field& a, const Field& b) { return a.p_ != b.p_; }

 private:
  Coeff make_rational(__int128 n, __int128 d) const;
  Coeff from_mpq(mpq_class q) const;
  static mpq_class to_mpq(const Coeff& a);

  std::uint32_t p_ = 0;
};

}  // namespace degloci
