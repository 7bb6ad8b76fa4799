#include "doctest.h"
#include "degloci/ampleness.hpp"
#include "degloci/error.hpp"

using namespace degloci;

namespace {

RingPtr ring_over(Field k, std::vector<std::string> vars) { return PolyRing::make(k, std::move(vars)); }

Polynomial P(const RingPtr& r, std::string_view s) { return Polynomial::parse(r, s); }

PolyVector V(const RingPtr& r, std::initializer_list<const char*> entries) {
  PolyVector v;
  for (const char* s : entries) v.push_back(P(r, s));
  return v;
}

}  // namespace

TEST_CASE("Frobenius twist of presentations") {
  auto r = ring_over(Field::prime(3), {"x", "y"});
  FPModule free2 = FPModule::free(r, 2, {0, 1});
  FPModule f = frobenius_module(free2, 2);
  CHECK(f.num_gens() == 2);
  CHECK(f.num_relations() == 0);
  CHECK(f.gen_degrees() == std::vector<int>{0, 9});

  FPModule m(r, {0, 0}, {V(r, {"x", "y"})});
  FPModule fm = frobenius_module(m, 1);
  REQUIRE(fm.num_relations() == 1);
  CHECK(fm.relations()[0] == V(r, {"x^3", "y^3"}));

  auto r2 = ring_over(Field::prime(2), {"x"});
  FPModule c(r2, {0}, {V(r2, {"x"})});
  CHECK(frobenius_module(c, 2).relations()[0] == V(r2, {"x^4"}));

  auto q = ring_over(Field::rationals(), {"x"});
  CHECK_THROWS_AS(frobenius_module(FPModule::free(q, 1), 1), PreconditionError);
}

TEST_CASE("Frobenius commutes with tensor and symmetric powers") {
  auto r = ring_over(Field::prime(2), {"x", "y", "z"});
  FPModule m(r, {0, 0}, {V(r, {"x", "y"})});
  FPModule n(r, {0, 0}, {V(r, {"z", "x"}), V(r, {"y", "0"})});
  for (int a = 1; a <= 2; ++a) {
    FPModule lhs = frobenius_module(tensor(m, n), a);
    FPModule rhs = tensor(frobenius_module(m, a), frobenius_module(n, a));
    for (int j = 0; j <= 4; ++j) CHECK(fitting_ideal(lhs, j).equals(fitting_ideal(rhs, j)));
    FPModule sl = frobenius_module(symmetric_power(m, 2), a);
    FPModule sr = symmetric_power(frobenius_module(m, a), 2);
    for (int j = 0; j <= 3; ++j) CHECK(fitting_ideal(sl, j).equals(fitting_ideal(sr, j)));
  }
}

TEST_CASE("p-ample pairs") {
  auto r = ring_over(Field::prime(5), {"x", "y"});
  FPModule a = FPModule::free(r, 1);
  AmpleVerdict unit = p_ample_check({V(r, {"1"})}, a, 2);
  CHECK_FALSE(unit.holds_on_range());
  CHECK(unit.first_failure() == 1);
  CHECK(unit.summary() == "fails-at-a=1");

  FPModule m(r, {0, 0}, {V(r, {"x + y", "y"})});
  AmpleVerdict inside = p_ample_check({V(r, {"x", "y"}), V(r, {"0", "x*y"})}, m, 2);
  CHECK(inside.holds_on_range());
  CHECK(inside.summary() == "holds-on-range");

  // The ideal (x, y) as a module: its reflexive hull is A and both
  // generators land in m, although M' = M is not inside m·M.
  FPModule ideal(r, {0, 0}, {V(r, {"y", "-x"})});
  CHECK(p_ample_check({V(r, {"1", "0"}), V(r, {"0", "1"})}, ideal, 2).holds_on_range());

  // The Koszul form reduced mod 5: the pair (A·f, E^vv) fails at a = 1.
  auto a4 = ring_over(Field::prime(5), {"X0", "X1", "X2", "X3"});
  FPModule e(a4, {-1, -1, -1, -1}, {V(a4, {"X0", "X1", "X2", "X3"})});
  HomModule ed = dual(e);
  auto c = ed.coordinates(PolyMatrix(a4, {V(a4, {"-X1", "X0", "-X3", "X2"})}));
  REQUIRE(c.has_value());
  AmpleVerdict ex = p_ample_check({*c}, ed.module, 1);
  CHECK(ex.first_failure() == 1);
}

TEST_CASE("ample pairs") {
  auto r = ring_over(Field::rationals(), {"x", "y"});
  FPModule a = FPModule::free(r, 1);
  CHECK(ample_check({V(r, {"1"})}, a, 2).first_failure() == 1);
  CHECK(ample_check({V(r, {"x"}), V(r, {"y^2"})}, a, 3).holds_on_range());

  FPModule ideal(r, {0, 0}, {V(r, {"y", "-x"})});
  CHECK(ample_check({V(r, {"1", "0"}), V(r, {"0", "1"})}, ideal, 3).holds_on_range());
  // A submodule of an ample pair stays ample at each tested n.
  CHECK(ample_check({V(r, {"1", "1"})}, ideal, 3).holds_on_range());

  FPModule free2 = FPModule::free(r, 2);
  CHECK(ample_check({V(r, {"1", "0"})}, free2, 2).first_failure() == 1);
  CHECK(product_with_power(free2, {V(r, {"x", "y"})}, 2).size() == 2);
}
