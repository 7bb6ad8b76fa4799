#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace degloci {

/// Hard capacity on the number of ring variables (auxiliary variables included).
inline constexpr int kMaxVars = 32;

/// Exponent vector with cached total degree and support bitmask.
struct Monomial {
  std::array<std::uint16_t, kMaxVars> exp{};
  std::uint32_t degree = 0;
  std::uint32_t support = 0;

  static Monomial variable(int index, std::uint16_t power = 1) {
    Monomial m;
    m.set(index, power);
    return m;
  }

  std::uint16_t operator[](int i) const { return exp[static_cast<std::size_t>(i)]; }

  void set(int i, std::uint16_t e) {
    auto idx = static_cast<std::size_t>(i);
    degree = degree - exp[idx] + e;
    exp[idx] = e;
    if (e != 0)
      support |= (1U << i);
    else
      support &= ~(1U << i);
  }

  bool is_one() const { return degree == 0; }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.support == b.support && a.degree == b.degree && a.exp == b.exp;
  }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
};

Monomial operator*(const Monomial& a, const Monomial& b);

/// True iff a divides b.
inline bool divides(const Monomial& a, const Monomial& b) {
  if ((a.support & ~b.support) != 0 || a.degree > b.degree) return false;
  for (int i = 0; i < kMaxVars; ++i)
    if (a.exp[static_cast<std::size_t>(i)] > b.exp[static_cast<std::size_t>(i)]) return false;
  return true;
}

/// b / a, assuming divides(a, b).
Monomial quotient(const Monomial& b, const Monomial& a);
Monomial lcm(const Monomial& a, const Monomial& b);
inline bool coprime(const Monomial& a, const Monomial& b) { return (a.support & b.support) == 0; }

/// Monomial orders. Block(k) is an elimination order: grevlex on the first k
/// variables, ties broken by grevlex on the remaining ones.
enum class OrderKind { Grevlex, Lex, Block };

struct MonomialOrder {
  OrderKind kind = OrderKind::Grevlex;
  int nvars = 0;
  int block = 0;

  /// Returns >0 if a > b, <0 if a < b, 0 if equal.
  int compare(const Monomial& a, const Monomial& b) const;

  std::string name() const;

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.kind == b.kind && a.nvars == b.nvars && a.block == b.block;
  }
};

OrderKind parse_order_kind(const std::string& name);

}  // namespace degloci
