#include "degloci/coeff.hpp"

#include <limits>

#include "degloci/error.hpp"

namespace degloci {

namespace {

constexpr std::int64_t kSmallLimit = std::numeric_limits<std::int64_t>::max();

unsigned __int128 abs128(__int128 v) {
  return v < 0 ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
}

unsigned __int128 gcd128(unsigned __int128 a, unsigned __int128 b) {
  while (b != 0) {
    unsigned __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::int64_t mod_pow(std::int64_t base, std::uint64_t e, std::int64_t p) {
  std::int64_t result = 1 % p;
  base %= p;
  if (base < 0) base += p;
  while (e != 0) {
    if (e & 1U) result = result * base % p;
    base = base * base % p;
    e >>= 1U;
  }
  return result;
}

mpq_class mpq_from_i64(std::int64_t v) {
  mpz_class z;
  mpz_set_si(z.get_mpz_t(), v);
  return mpq_class(z);
}

}  // namespace

Field::Field(std::uint32_t characteristic) : p_(characteristic) {
  if (p_ != 0 && (!is_prime(p_) || p_ >= (1U << 31)))
    throw PreconditionError("field characteristic must be 0 or a prime below 2^31, got " +
                            std::to_string(p_));
}

std::string Field::name() const { return p_ == 0 ? "QQ" : "GF(" + std::to_string(p_) + ")"; }

Coeff Field::from_int(std::int64_t v) const {
  Coeff c;
  if (p_ != 0) {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    c.num_ = r;
  } else {
    c.num_ = v;
  }
  return c;
}

Coeff Field::from_rational(const mpq_class& q) const {
  if (p_ == 0) return from_mpq(q);
  mpz_class pm(p_);
  mpz_class n = q.get_num() % pm;
  mpz_class d = q.get_den() % pm;
  if (d == 0) throw PreconditionError("denominator vanishes in " + name());
  Coeff num = from_int(n.get_si());
  Coeff den = from_int(d.get_si());
  return div(num, den);
}

Coeff Field::from_decimal(const std::string& digits) const {
  mpz_class z(digits, 10);
  return from_rational(mpq_class(z));
}

Coeff Field::make_rational(__int128 n, __int128 d) const {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  if (n == 0) return Coeff{};
  unsigned __int128 g = gcd128(abs128(n), static_cast<unsigned __int128>(d));
  if (g > 1) {
    n /= static_cast<__int128>(g);
    d /= static_cast<__int128>(g);
  }
  if (abs128(n) <= static_cast<unsigned __int128>(kSmallLimit) &&
      static_cast<unsigned __int128>(d) <= static_cast<unsigned __int128>(kSmallLimit)) {
    Coeff c;
    c.num_ = static_cast<std::int64_t>(n);
    c.den_ = static_cast<std::int64_t>(d);
    return c;
  }
  // Spill to GMP through a decimal-free path: split into 64-bit halves.
  auto to_mpz = [](__int128 v) {
    bool negative = v < 0;
    unsigned __int128 u = abs128(v);
    mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
    mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
    mpz_class r = (hi << 64) + lo;
    return negative ? mpz_class(-r) : r;
  };
  mpq_class q(to_mpz(n), to_mpz(d));
  q.canonicalize();
  return from_mpq(std::move(q));
}

Coeff Field::from_mpq(mpq_class q) const {
  q.canonicalize();
  Coeff c;
  if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p()) {
    c.num_ = q.get_num().get_si();
    c.den_ = q.get_den().get_si();
    if (c.num_ == 0) c.den_ = 1;
    return c;
  }
  c.big_ = std::make_shared<const mpq_class>(std::move(q));
  return c;
}

mpq_class Field::to_mpq(const Coeff& a) {
  if (a.big_) return *a.big_;
  mpq_class q(mpq_from_i64(a.num_).get_num(), mpq_from_i64(a.den_).get_num());
  q.canonicalize();
  return q;
}

Coeff Field::add(const Coeff& a, const Coeff& b) const {
  if (p_ != 0) {
    std::int64_t s = a.num_ + b.num_;
    if (s >= static_cast<std::int64_t>(p_)) s -= p_;
    Coeff c;
    c.num_ = s;
    return c;
  }
  if (a.is_small() && b.is_small()) {
    if (a.den_ == 1 && b.den_ == 1) return make_rational(static_cast<__int128>(a.num_) + b.num_, 1);
    __int128 n = static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_;
    __int128 d = static_cast<__int128>(a.den_) * b.den_;
    return make_rational(n, d);
  }
  return from_mpq(to_mpq(a) + to_mpq(b));
}

Coeff Field::neg(const Coeff& a) const {
  if (p_ != 0) {
    Coeff c;
    c.num_ = a.num_ == 0 ? 0 : static_cast<std::int64_t>(p_) - a.num_;
    return c;
  }
  if (a.is_small()) return make_rational(-static_cast<__int128>(a.num_), a.den_);
  return from_mpq(-to_mpq(a));
}

Coeff Field::sub(const Coeff& a, const Coeff& b) const { return add(a, neg(b)); }

Coeff Field::mul(const Coeff& a, const Coeff& b) const {
  if (p_ != 0) {
    Coeff c;
    c.num_ = a.num_ * b.num_ % static_cast<std::int64_t>(p_);
    return c;
  }
  if (a.is_small() && b.is_small()) {
    if (a.num_ == 0 || b.num_ == 0) return Coeff{};
    return make_rational(static_cast<__int128>(a.num_) * b.num_,
                         static_cast<__int128>(a.den_) * b.den_);
  }
  return from_mpq(to_mpq(a) * to_mpq(b));
}

Coeff Field::inv(const Coeff& a) const {
  if (is_zero(a)) throw PreconditionError("division by zero in " + name());
  if (p_ != 0) {
    Coeff c;
    c.num_ = mod_pow(a.num_, p_ - 2, p_);
    return c;
  }
  if (a.is_small()) return make_rational(a.den_, a.num_);
  mpq_class q = to_mpq(a);
  return from_mpq(mpq_class(q.get_den(), q.get_num()));
}

Coeff Field::pow(const Coeff& a, std::uint64_t e) const {
  Coeff result = one();
  Coeff base = a;
  while (e != 0) {
    if (e & 1U) result = mul(result, base);
    e >>= 1U;
    if (e != 0) base = mul(base, base);
  }
  return result;
}

bool Field::is_negative(const Coeff& a) const {
  if (p_ != 0) return a.num_ > static_cast<std::int64_t>(p_ / 2);
  if (a.big_) return sgn(*a.big_) < 0;
  return a.num_ < 0;
}

std::string Field::to_string(const Coeff& a) const {
  if (p_ != 0) {
    std::int64_t v = a.num_;
    if (v > static_cast<std::int64_t>(p_ / 2)) v -= p_;
    return std::to_string(v);
  }
  if (a.big_) return a.big_->get_str();
  if (a.den_ == 1) return std::to_string(a.num_);
  return std::to_string(a.num_) + "/" + std::to_string(a.den_);
}

}  // namespace degloci
