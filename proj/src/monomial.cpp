#include "degloci/monomial.hpp"

#include <algorithm>

#include "degloci/error.hpp"

namespace degloci {

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    std::uint32_t e = static_cast<std::uint32_t>(a.exp[i]) + b.exp[i];
    if (e > 0xFFFFU) throw ResourceError("exponent overflow in monomial product");
    m.exp[i] = static_cast<std::uint16_t>(e);
  }
  m.degree = a.degree + b.degree;
  m.support = a.support | b.support;
  return m;
}

Monomial quotient(const Monomial& b, const Monomial& a) {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    m.exp[i] = static_cast<std::uint16_t>(b.exp[i] - a.exp[i]);
    if (m.exp[i] != 0) m.support |= (1U << i);
  }
  m.degree = b.degree - a.degree;
  return m;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial m;
  std::uint32_t deg = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    m.exp[i] = std::max(a.exp[i], b.exp[i]);
    deg += m.exp[i];
  }
  m.degree = deg;
  m.support = a.support | b.support;
  return m;
}

namespace {

int grevlex_range(const Monomial& a, const Monomial& b, int lo, int hi) {
  std::uint32_t da = 0;
  std::uint32_t db = 0;
  for (int i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da > db ? 1 : -1;
  for (int i = hi - 1; i >= lo; --i) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind) {
    case OrderKind::Grevlex: {
      if (a.degree != b.degree) return a.degree > b.degree ? 1 : -1;
      for (int i = nvars - 1; i >= 0; --i)
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
      return 0;
    }
    case OrderKind::Lex: {
      for (int i = 0; i < nvars; ++i)
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
      return 0;
    }
    case OrderKind::Block: {
      int c = grevlex_range(a, b, 0, block);
      if (c != 0) return c;
      return grevlex_range(a, b, block, nvars);
    }
  }
  return 0;
}

std::string MonomialOrder::name() const {
  switch (kind) {
    case OrderKind::Grevlex:
      return "grevlex";
    case OrderKind::Lex:
      return "lex";
    case OrderKind::Block:
      return "block(" + std::to_string(block) + ")";
  }
  return "?";
}

OrderKind parse_order_kind(const std::string& name) {
  if (name == "grevlex") return OrderKind::Grevlex;
  if (name == "lex") return OrderKind::Lex;
  throw ParseError("unknown monomial order '" + name + "' (expected grevlex or lex)");
}

}  // namespace degloci
