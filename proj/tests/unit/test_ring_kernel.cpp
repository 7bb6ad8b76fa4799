#include <random>

#include "doctest.h"
#include "degloci/error.hpp"
#include "degloci/ideal.hpp"

using namespace degloci;

namespace {

RingPtr qring(std::vector<std::string> vars, OrderKind order = OrderKind::Grevlex) {
  return PolyRing::make(Field::rationals(), std::move(vars), order);
}

Polynomial P(const RingPtr& r, std::string_view s) { return Polynomial::parse(r, s); }

Ideal make_ideal(const RingPtr& r, std::initializer_list<const char*> gens) {
  PolyVector g;
  for (const char* s : gens) g.push_back(P(r, s));
  return Ideal(r, g);
}

}  // namespace

TEST_CASE("coefficient arithmetic over Q and F_p") {
  Field q = Field::rationals();
  Coeff a = q.from_int(3);
  Coeff b = q.inv(q.from_int(-6));
  CHECK(q.to_string(q.mul(a, b)) == "-1/2");
  CHECK(q.to_string(b) == "-1/6");
  Coeff big = q.from_decimal("123456789012345678901234567890");
  CHECK(q.to_string(q.mul(big, q.inv(big))) == "1");
  CHECK_FALSE(big.is_small());
  Coeff back = q.sub(q.add(big, a), big);
  CHECK(back == a);
  CHECK(back.is_small());

  Field f5 = Field::prime(5);
  CHECK(f5.to_string(f5.from_int(-1)) == "-1");
  CHECK(f5.from_int(-1).num() == 4);
  CHECK(f5.mul(f5.from_int(2), f5.inv(f5.from_int(2))) == f5.one());
  CHECK(f5.pow(f5.from_int(2), 4) == f5.one());
  CHECK_THROWS_AS(Field::prime(6), PreconditionError);
}

TEST_CASE("polynomial parse and print round trip") {
  auto r = qring({"x0", "x1", "x2"});
  Polynomial p = P(r, "x0^2*x1 - 3*x2");
  CHECK(p.to_string() == "x0^2*x1 - 3*x2");
  CHECK(P(r, p.to_string()) == p);
  CHECK(P(r, "(x0+x1)^2 - x0^2 - 2 x0 x1").to_string() == "x1^2");
  CHECK(P(r, "x0/2 + x0/2") == P(r, "x0"));
  CHECK(P(r, "-x1 + 0").to_string() == "-x1");
  CHECK_THROWS_AS(P(r, "x3"), ParseError);
  CHECK_THROWS_AS(P(r, "x0 +"), ParseError);
  CHECK(P(r, "0").is_zero());
}

TEST_CASE("grevlex and lex term orders") {
  auto g = qring({"x", "y", "z"});
  CHECK(P(g, "z^2 + x*y + x").to_string() == "x*y + z^2 + x");
  auto l = qring({"x", "y", "z"}, OrderKind::Lex);
  CHECK(P(l, "z^2 + x*y + x").to_string() == "x*y + x + z^2");
}

TEST_CASE("normal form") {
  auto r = qring({"x", "y"});
  CHECK(normal_form(P(r, "x^2 + y"), {P(r, "x")}) == P(r, "y"));
  CHECK(normal_form(P(r, "0"), {P(r, "x")}).is_zero());
  PolyVector G{P(r, "x^2 - 1"), P(r, "y^2 - 1")};
  CHECK(normal_form(P(r, "x*y - 1"), G) == P(r, "x*y - 1"));
  Polynomial f = P(r, "x^3*y + y^3 + x");
  CHECK(normal_form(normal_form(f, G), G) == normal_form(f, G));
}

TEST_CASE("reduced Groebner bases") {
  auto lex = qring({"x", "y", "z"}, OrderKind::Lex);
  Ideal cubic = make_ideal(lex, {"x^2 - y", "x^3 - z"});
  const auto& gb = cubic.groebner_basis();
  bool found = false;
  for (const auto& g : gb) found = found || g == P(lex, "y^3 - z^2");
  CHECK(found);
  CHECK(is_groebner_basis(gb));
  CHECK(cubic.contains(P(lex, "y^3 - z^2")));

  auto r = qring({"x", "y"});
  CHECK(make_ideal(r, {"1"}).groebner_basis() == PolyVector{P(r, "1")});
  CHECK(make_ideal(r, {"x", "y"}).groebner_basis() == PolyVector{P(r, "x"), P(r, "y")});
  CHECK(make_ideal(r, {"x*y"}).contains(P(r, "x*y")));
  CHECK_FALSE(make_ideal(r, {"x"}).contains(P(r, "x + 1")));
}

TEST_CASE("reduced basis is independent of the generating set") {
  auto r = PolyRing::make(Field::prime(32003), {"a", "b", "c", "d"});
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coef(-3, 3);
  std::uniform_int_distribution<int> ex(0, 2);
  auto random_poly = [&] {
    std::vector<Term> t;
    for (int k = 0; k < 3; ++k) {
      Monomial m;
      for (int v = 0; v < 4; ++v) m.set(v, static_cast<std::uint16_t>(ex(rng)));
      t.push_back(Term{m, r->field().from_int(coef(rng))});
    }
    return Polynomial::from_terms(r, t);
  };
  for (int trial = 0; trial < 20; ++trial) {
    PolyVector g{random_poly(), random_poly(), random_poly()};
    Ideal I(r, g);
    PolyVector mixed{g[2], g[0] + g[1] * g[2], g[1] - g[0], g[0]};
    Ideal J(r, mixed);
    CHECK(I.groebner_basis() == J.groebner_basis());
    CHECK(is_groebner_basis(I.groebner_basis()));
  }
}

TEST_CASE("degree guard raises a resource error") {
  auto r = qring({"x", "y"});
  Ideal I = make_ideal(r, {"x^25*y - y", "x*y^25 - x"});
  DegreeGuardScope scope(10);
  CHECK_THROWS_AS(I.groebner_basis(), ResourceError);
}

TEST_CASE("elimination, intersection, quotient, saturation") {
  auto r = qring({"t", "x", "y"});
  Ideal I = make_ideal(r, {"t*x - 1", "t*y"});
  Ideal E = eliminate(I, std::vector<std::string>{"t"});
  CHECK(E.ring()->nvars() == 2);
  CHECK(E.groebner_basis() == PolyVector{P(E.ring(), "y")});

  auto s = qring({"x", "y"});
  CHECK(eliminate(make_ideal(s, {"x - y"}), std::vector<int>{}).equals(make_ideal(s, {"x - y"})));
  CHECK(eliminate(make_ideal(s, {"x"}), std::vector<std::string>{"x"}).groebner_basis().empty());

  Ideal sat = saturate(make_ideal(s, {"x^2", "x*y"}), make_ideal(s, {"x", "y"}));
  CHECK(sat.ring() == s);
  CHECK(sat.equals(make_ideal(s, {"x"})));
  CHECK(saturate(sat, make_ideal(s, {"x", "y"})).equals(sat));
  CHECK(quotient(make_ideal(s, {"x*y"}), P(s, "x")).equals(make_ideal(s, {"y"})));
  CHECK(intersect(make_ideal(s, {"x"}), make_ideal(s, {"y"})).equals(make_ideal(s, {"x*y"})));
  CHECK(intersect(make_ideal(s, {"x^2", "y"}), make_ideal(s, {"x", "y^2"})).equals(make_ideal(s, {"x^2", "x*y", "y^2"})));
}

TEST_CASE("radical membership") {
  auto r = qring({"x", "y"});
  CHECK(radical_member(P(r, "x"), make_ideal(r, {"x^2"})));
  CHECK_FALSE(radical_member(P(r, "y"), make_ideal(r, {"x^2"})));
  CHECK(radical_member(P(r, "x + y"), make_ideal(r, {"(x+y)^3", "x*(x+y)"})));
  CHECK(radical_member(P(r, "x"), make_ideal(r, {"x^7 + x^6*y"})) == false);
  CHECK(radical_member(P(r, "x*(x+y)"), make_ideal(r, {"x^7 + x^6*y"})));
}

TEST_CASE("Krull dimension") {
  auto r6 = qring({"a", "b", "c", "d", "e", "f"});
  Ideal minors = make_ideal(r6, {"a*e - b*d", "a*f - c*d", "b*f - c*e"});
  CHECK(krull_dimension(minors) == 4);
  CHECK(krull_dimension(Ideal::zero(r6)) == 6);
  CHECK(krull_dimension(Ideal::unit(r6)) == -1);
  // Symmetric 3x3 [[a,b,c],[b,d,e],[c,e,f]].
  Ideal sym = make_ideal(r6, {"a*d - b^2", "a*e - b*c", "b*e - c*d", "a*f - c^2", "b*f - c*e", "d*f - e^2"});
  CHECK(krull_dimension(sym) == 3);
  auto lex = qring({"a", "b", "c", "d", "e", "f"}, OrderKind::Lex);
  CHECK(krull_dimension(sym.in_ring(lex)) == 3);
  CHECK(krull_dimension(minors.in_ring(lex)) == 4);
}

TEST_CASE("generic fiber dimension") {
  auto r = qring({"T1", "T2", "x", "y"});
  // x*T1 - y*T2 cuts a line in the T-plane over the generic point.
  CHECK(generic_fiber_dimension(make_ideal(r, {"x*T1 - y*T2"}), {0, 1}) == 1);
  CHECK(generic_fiber_dimension(make_ideal(r, {"x*T1", "y*T2"}), {0, 1}) == 0);
  CHECK(generic_fiber_dimension(make_ideal(r, {"x*T1", "x"}), {0, 1}) == -1);
  CHECK(generic_fiber_dimension(Ideal::zero(r), {0, 1}) == 2);
}
