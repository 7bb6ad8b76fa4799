#include "degloci/polynomial.hpp"

#include <algorithm>
#include <cctype>

#include "degloci/error.hpp"

namespace degloci {

namespace {

void require_ring(const RingPtr& r) {
  if (!r) throw RingMismatch("polynomial has no ring");
}

}  // namespace

Polynomial Polynomial::constant(RingPtr ring, const Coeff& c) {
  Polynomial p(std::move(ring));
  if (!p.ring_->field().is_zero(c)) p.terms_.push_back(Term{Monomial{}, c});
  return p;
}

Polynomial Polynomial::from_int(RingPtr ring, std::int64_t v) {
  Coeff c = ring->field().from_int(v);
  return constant(std::move(ring), c);
}

Polynomial Polynomial::variable(RingPtr ring, int index) {
  if (index < 0 || index >= ring->nvars()) throw PreconditionError("variable index out of range");
  Coeff one = ring->field().one();
  return term(std::move(ring), Monomial::variable(index), one);
}

Polynomial Polynomial::term(RingPtr ring, const Monomial& m, const Coeff& c) {
  Polynomial p(std::move(ring));
  if (!p.ring_->field().is_zero(c)) p.terms_.push_back(Term{m, c});
  return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  Polynomial p(std::move(ring));
  const auto& ord = p.ring_->order();
  const auto& field = p.ring_->field();
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return ord.compare(a.mono, b.mono) > 0; });
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff = field.add(p.terms_.back().coeff, t.coeff);
      if (field.is_zero(p.terms_.back().coeff)) p.terms_.pop_back();
    } else if (!field.is_zero(t.coeff)) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool Polynomial::is_one() const {
  return terms_.size() == 1 && terms_[0].mono.is_one() && ring_->field().is_one(terms_[0].coeff);
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono.degree));
  return d;
}

int Polynomial::weighted_degree(const Monomial& m) const {
  int d = 0;
  for (int i = 0; i < ring_->nvars(); ++i) d += ring_->weight(i) * m[i];
  return d;
}

std::optional<int> Polynomial::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  int d = weighted_degree(terms_[0].mono);
  for (const auto& t : terms_)
    if (weighted_degree(t.mono) != d) return std::nullopt;
  return d;
}

bool Polynomial::is_homogeneous() const { return terms_.empty() || homogeneous_degree().has_value(); }

std::uint32_t Polynomial::support() const {
  std::uint32_t s = 0;
  for (const auto& t : terms_) s |= t.mono.support;
  return s;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  require_ring(ring_);
  require_same_ring(ring_, o.ring_, "polynomial addition");
  const auto& ord = ring_->order();
  const auto& field = ring_->field();
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = ord.compare(terms_[i].mono, o.terms_[j].mono);
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      Coeff s = field.add(terms_[i].coeff, o.terms_[j].coeff);
      if (!field.is_zero(s)) r.terms_.push_back(Term{terms_[i].mono, s});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back(Term{t.mono, ring_->field().neg(t.coeff)});
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  require_ring(ring_);
  require_same_ring(ring_, o.ring_, "polynomial multiplication");
  if (is_zero() || o.is_zero()) return Polynomial(ring_);
  if (o.terms_.size() == 1) return mul_term(o.terms_[0].mono, o.terms_[0].coeff);
  if (terms_.size() == 1) return o.mul_term(terms_[0].mono, terms_[0].coeff);
  std::vector<Term> prod;
  prod.reserve(terms_.size() * o.terms_.size());
  const auto& field = ring_->field();
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) prod.push_back(Term{a.mono * b.mono, field.mul(a.coeff, b.coeff)});
  return from_terms(ring_, std::move(prod));
}

Polynomial Polynomial::scale(const Coeff& c) const {
  const auto& field = ring_->field();
  if (field.is_zero(c)) return Polynomial(ring_);
  if (field.is_one(c)) return *this;
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back(Term{t.mono, field.mul(t.coeff, c)});
  return r;
}

Polynomial Polynomial::mul_term(const Monomial& m, const Coeff& c) const {
  const auto& field = ring_->field();
  if (field.is_zero(c)) return Polynomial(ring_);
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  // Monomial orders are multiplicative, so the order is preserved.
  for (const auto& t : terms_) r.terms_.push_back(Term{t.mono * m, field.mul(t.coeff, c)});
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = from_int(ring_, 1);
  Polynomial base = *this;
  while (e != 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e != 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scale(ring_->field().inv(terms_[0].coeff));
}

Polynomial Polynomial::substitute(const RingPtr& target, const std::vector<Polynomial>& images) const {
  if (static_cast<int>(images.size()) != ring_->nvars())
    throw PreconditionError("substitute: need one image per variable");
  if (target->field() != ring_->field()) throw RingMismatch("substitute: coefficient fields differ");
  Polynomial result(target);
  // Cache powers per variable.
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power_of = [&](std::size_t v, unsigned e) -> const Polynomial& {
    auto& cache = powers[v];
    if (cache.empty()) cache.push_back(from_int(target, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * images[v]);
    return cache[e];
  };
  std::vector<Term> accum;
  for (const auto& t : terms_) {
    Polynomial prod = constant(target, t.coeff);
    for (int i = 0; i < ring_->nvars() && !prod.is_zero(); ++i) {
      if (t.mono[i] == 0) continue;
      prod = prod * power_of(static_cast<std::size_t>(i), t.mono[i]);
    }
    for (auto& term : prod.terms_) accum.push_back(std::move(term));
  }
  return from_terms(target, std::move(accum));
}

Polynomial Polynomial::in_ring(const RingPtr& target) const {
  if (target == ring_) return *this;
  std::vector<int> map(static_cast<std::size_t>(ring_->nvars()), -1);
  std::uint32_t used = support();
  for (int i = 0; i < ring_->nvars(); ++i) {
    map[static_cast<std::size_t>(i)] = target->index_of(ring_->var(i));
    if (map[static_cast<std::size_t>(i)] < 0 && (used & (1U << i)))
      throw RingMismatch("variable '" + ring_->var(i) + "' not present in target ring");
  }
  if (target->field() != ring_->field()) throw RingMismatch("in_ring: coefficient fields differ");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m;
    for (int i = 0; i < ring_->nvars(); ++i)
      if (t.mono[i]) m.set(map[static_cast<std::size_t>(i)], t.mono[i]);
    out.push_back(Term{m, t.coeff});
  }
  return from_terms(target, std::move(out));
}

Polynomial Polynomial::frobenius(std::uint64_t q) const {
  const auto& field = ring_->field();
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m;
    for (int i = 0; i < ring_->nvars(); ++i) {
      std::uint64_t e = static_cast<std::uint64_t>(t.mono[i]) * q;
      if (e > 0xFFFFU) throw ResourceError("exponent overflow in Frobenius twist");
      if (e) m.set(i, static_cast<std::uint16_t>(e));
    }
    out.push_back(Term{m, field.pow(t.coeff, q)});
  }
  return from_terms(ring_, std::move(out));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  if (a.ring_ && b.ring_ && a.ring_ != b.ring_ && !a.ring_->same_as(*b.ring_)) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  return true;
}

std::string monomial_to_string(const PolyRing& ring, const Monomial& m) {
  std::string s;
  for (int i = 0; i < ring.nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += ring.var(i);
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

std::string Polynomial::to_string() const {
  if (!ring_ || terms_.empty()) return "0";
  const auto& field = ring_->field();
  std::string s;
  bool first = true;
  for (const auto& t : terms_) {
    bool negative = field.is_negative(t.coeff);
    Coeff mag = negative ? field.neg(t.coeff) : t.coeff;
    if (first)
      s += negative ? "-" : "";
    else
      s += negative ? " - " : " + ";
    first = false;
    if (t.mono.is_one()) {
      s += field.to_string(mag);
    } else {
      if (!field.is_one(mag)) s += field.to_string(mag) + "*";
      s += monomial_to_string(*ring_, t.mono);
    }
  }
  return s;
}

std::string to_string(const PolyVector& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].to_string();
  }
  return s + "]";
}

// ---------------------------------------------------------------------------
// Parser: recursive descent over + - * / ^ ( ), integer literals and names.

namespace {

class PolyParser {
 public:
  PolyParser(RingPtr ring, std::string_view text) : ring_(std::move(ring)), text_(text) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " in polynomial \"" + std::string(text_) + "\"", 1,
                     static_cast<int>(pos_) + 1);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    skip_ws();
    bool negate = false;
    if (accept('-'))
      negate = true;
    else
      accept('+');
    Polynomial acc = term();
    if (negate) acc = -acc;
    while (true) {
      if (accept('+'))
        acc = acc + term();
      else if (accept('-'))
        acc = acc - term();
      else
        break;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (true) {
      if (accept('*')) {
        acc = acc * factor();
      } else if (accept('/')) {
        Polynomial d = factor();
        if (!d.is_constant() || d.is_zero()) fail("division only by nonzero constants");
        acc = acc.scale(ring_->field().inv(d.lead().coeff));
      } else if (starts_atom()) {
        acc = acc * factor();
      } else {
        break;
      }
    }
    return acc;
  }

  // Juxtaposition is multiplication: "2 x0 x1" == "2*x0*x1".
  bool starts_atom() {
    skip_ws();
    if (pos_ >= text_.size()) return false;
    unsigned char c = static_cast<unsigned char>(text_[pos_]);
    return std::isalnum(c) || c == '_' || c == '(';
  }

  Polynomial factor() {
    Polynomial base = atom();
    if (accept('^')) {
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      unsigned long e = std::stoul(std::string(text_.substr(start, pos_ - start)));
      if (e > 0xFFFFUL) fail("exponent too large");
      base = base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  Polynomial atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      Coeff v = ring_->field().from_decimal(std::string(text_.substr(start, pos_ - start)));
      return Polynomial::constant(ring_, v);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      int idx = ring_->index_of(name);
      if (idx < 0) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      return Polynomial::variable(ring_, idx);
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  RingPtr ring_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(RingPtr ring, std::string_view text) {
  return PolyParser(std::move(ring), text).parse();
}

}  // namespace degloci
