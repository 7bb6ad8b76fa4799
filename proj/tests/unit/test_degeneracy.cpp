#include <random>

#include "doctest.h"
#include "degloci/degeneracy.hpp"
#include "degloci/error.hpp"

using namespace degloci;

namespace {

RingPtr ring_over(Field k, std::vector<std::string> vars) { return PolyRing::make(k, std::move(vars)); }
RingPtr qring(std::vector<std::string> vars) { return ring_over(Field::rationals(), std::move(vars)); }

Polynomial P(const RingPtr& r, std::string_view s) { return Polynomial::parse(r, s); }

PolyVector V(const RingPtr& r, std::initializer_list<const char*> entries) {
  PolyVector v;
  for (const char* s : entries) v.push_back(P(r, s));
  return v;
}

PolyMatrix M(const RingPtr& r, std::initializer_list<std::initializer_list<const char*>> rows) {
  std::vector<PolyVector> out;
  for (auto row : rows) out.push_back(V(r, row));
  return PolyMatrix(r, out);
}

struct KoszulCase {
  RingPtr a;
  FPModule e;
  SymAlgebra s;
  PolyVector f;
  std::vector<PolyVector> koszul;  // f_ij(e_k) = X_i δ_jk − X_j δ_ik, in the order 01, 02, 03, 12, 13, 23
};

KoszulCase koszul_example(Field k = Field::rationals()) {
  KoszulCase x;
  x.a = ring_over(k, {"X0", "X1", "X2", "X3"});
  x.e = FPModule(x.a, {-1, -1, -1, -1}, {V(x.a, {"X0", "X1", "X2", "X3"})});
  x.s = symmetric_algebra(x.e);
  x.f = V(x.a, {"-X1", "X0", "-X3", "X2"});
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      PolyVector v = zero_vector(x.a, 4);
      v[static_cast<std::size_t>(j)] = Polynomial::variable(x.a, i);
      v[static_cast<std::size_t>(i)] = -Polynomial::variable(x.a, j);
      x.koszul.push_back(v);
    }
  return x;
}

Polynomial random_form(const RingPtr& r, int degree, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coef(-3, 3);
  std::uniform_int_distribution<int> var(0, r->nvars() - 1);
  Polynomial p(r);
  for (int k = 0; k < 3; ++k) {
    Polynomial m = Polynomial::from_int(r, coef(rng));
    for (int d = 0; d < degree; ++d) m *= Polynomial::variable(r, var(rng));
    p += m;
  }
  return p;
}

}  // namespace

TEST_CASE("determinantal ideals of maps") {
  auto r = qring({"x", "y", "z"});
  FPModule a3 = FPModule::free(r, 3);
  ModuleMap id = ModuleMap::identity(a3);
  for (int t = 0; t < 3; ++t) CHECK(determinantal_ideal(id, t).is_unit());
  CHECK(determinantal_ideal(id, 3).is_zero());

  ModuleMap zero(a3, a3, PolyMatrix(r, 3, 3));
  CHECK(determinantal_ideal(zero, 0).is_zero());

  PolyMatrix f = M(r, {{"x", "y", "z"}, {"y", "z", "x"}});
  ModuleMap fm(a3, FPModule::free(r, 2), f);
  CHECK(determinantal_ideal(fm, 1).equals(minors_ideal(f, 2)));
  CHECK(determinantal_ideal(fm, 0).equals(minors_ideal(f, 1)));

  // Redundant functionals do not change the ideal.
  std::vector<PolyVector> phis{V(r, {"1", "0"}), V(r, {"0", "1"}), V(r, {"x", "y"}), V(r, {"1", "-1"})};
  CHECK(determinantal_ideal(fm, 1, phis).equals(determinantal_ideal(fm, 1)));
  CHECK_THROWS_AS(determinantal_ideal(fm, -1), PreconditionError);
}

TEST_CASE("determinantal ideal of a map into a module with relations") {
  auto r = qring({"x", "y"});
  // N = A^2 / (y e0 - x e1) is the ideal (x, y); its dual is generated by (x, y).
  FPModule n(r, {0, 0}, {V(r, {"y", "-x"})});
  FPModule a = FPModule::free(r, 1, {1});
  ModuleMap f(a, n, M(r, {{"x"}, {"y"}}));
  Ideal order = determinantal_ideal(f, 0);
  HomModule d = dual(n);
  REQUIRE(d.module.num_gens() == 1);
  // the functional is (x, y) up to scalar, so the value on (x, y) is x^2 + y^2
  CHECK(order.equals(Ideal(r, {P(r, "x^2 + y^2")})));
  CHECK(order.equals(order_ideal(n, V(r, {"x", "y"}))));
}

TEST_CASE("symmetric matrix over F_2 versus Q") {
  for (int p : {0, 2}) {
    Field k = p == 0 ? Field::rationals() : Field::prime(2);
    auto r = ring_over(k, {"X1", "X2", "X3"});
    PolyMatrix s = M(r, {{"0", "X1", "X2"}, {"X1", "0", "X3"}, {"X2", "X3", "0"}});
    Pairing f = pairing_from_matrix(Flavor::Symmetric, FPModule::free(r, 3), s);
    Ideal i3 = determinantal_ideal(f, 2);
    if (p == 2)
      CHECK(i3.is_zero());
    else
      CHECK(i3.equals(Ideal(r, {P(r, "2*X1*X2*X3")})));
    CHECK(i3.equals(minors_ideal(s, 3)));
    CHECK(determinantal_ideal(f, 1).equals(minors_ideal(s, 2)));
  }
}

TEST_CASE("alternating pairing") {
  auto r = qring({"a", "b", "c", "d", "e", "g"});
  PolyMatrix t = M(r, {{"0", "a", "b", "c"}, {"-a", "0", "d", "e"}, {"-b", "-d", "0", "g"}, {"-c", "-e", "-g", "0"}});
  Pairing f = pairing_from_matrix(Flavor::Alternating, FPModule::free(r, 4), t);
  CHECK(determinantal_ideal(f, 2).equals(minors_ideal(t, 3)));
  CHECK(pfaffian(t) == P(r, "a*g - b*e + c*d"));
  CHECK(pfaffian(t) * pfaffian(t) == determinant(t));
  CHECK_THROWS_AS(pairing_from_matrix(Flavor::Symmetric, FPModule::free(r, 4), t), PreconditionError);
}

TEST_CASE("order ideals") {
  auto r = qring({"x", "y"});
  CHECK(order_ideal(FPModule::free(r, 2), V(r, {"x", "y"})).equals(Ideal(r, V(r, {"x", "y"}))));
  auto s = qring({"x"});
  CHECK(order_ideal(FPModule(s, {0}, {V(s, {"x"})}), V(s, {"1"})).is_zero());

  KoszulCase x = koszul_example();
  HomModule ed = dual(x.e);
  auto c = ed.coordinates(PolyMatrix(x.a, {x.f}));
  REQUIRE(c.has_value());
  CHECK(order_ideal(ed.module, *c).equals(Ideal::irrelevant(x.a)));
}

TEST_CASE("generic determinantal ideals") {
  auto base = qring({});
  auto g = generic_determinantal_ideal(FPModule::free(base, 2), FPModule::free(base, 3), 1);
  CHECK(g.sym.t_vars.size() == 6);
  CHECK(g.epsilon.rows() == 3);
  CHECK(g.epsilon.cols() == 2);
  CHECK(krull_dimension(g.ideal) == 4);

  auto a = qring({"x", "y"});
  auto g2 = generic_determinantal_ideal(FPModule::free(a, 2), FPModule::free(a, 3), 1);
  CHECK(generic_fiber_dimension(g2.ideal, g2.sym.t_vars) == 4);

  auto g3 = generic_determinantal_ideal(FPModule::free(a, 1), FPModule::free(a, 1), 0);
  CHECK(g3.ideal.equals(Ideal(g3.sym.ring, {g3.sym.t(0)})));

  auto g4 = generic_determinantal_ideal(FPModule::free(a, 2), FPModule::free(a, 2), 2);
  CHECK(g4.ideal.is_zero());

  auto sym = generic_pairing_ideal(Flavor::Symmetric, FPModule::free(base, 3), FPModule::free(base, 1), 1);
  CHECK(sym.sym.t_vars.size() == 6);
  CHECK(sym.epsilon.is_symmetric());
  CHECK(krull_dimension(sym.ideal) == binomial(4, 2) - binomial(3, 2));

  auto alt = generic_pairing_ideal(Flavor::Alternating, FPModule::free(base, 4), FPModule::free(base, 1), 2);
  CHECK(alt.epsilon.is_alternating());
  CHECK(krull_dimension(alt.ideal) == binomial(4, 2) - binomial(2, 2));
}

TEST_CASE("specialization of the generic ideal recovers the determinantal ideal") {
  auto r = qring({"x", "y", "z"});
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 4; ++trial) {
    PolyMatrix f(r, 2, 3);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 3; ++j) f.at(i, j) = random_form(r, 1, rng);
    ModuleMap fm(FPModule::free(r, 3), FPModule::free(r, 2), f);
    for (int t = 0; t <= 2; ++t) {
      auto g = generic_determinantal_ideal(fm.source(), fm.target(), t);
      auto c = g.hom.coordinates(f);
      REQUIRE(c.has_value());
      Ideal specialized = phi_specialize(g.sym, g.functional_of(*c), g.ideal);
      CHECK(specialized.equals(determinantal_ideal(fm, t)));
    }
  }

  // A target with relations.
  FPModule n(r, {0, 0}, {V(r, {"z", "0"})});
  ModuleMap fm(FPModule::free(r, 2, {-1, -1}), n, M(r, {{"x", "y"}, {"y", "z"}}));
  for (int t = 0; t <= 1; ++t) {
    auto g = generic_determinantal_ideal(fm.source(), fm.target(), t);
    auto c = g.hom.coordinates(fm.matrix());
    REQUIRE(c.has_value());
    CHECK(phi_specialize(g.sym, g.functional_of(*c), g.ideal).equals(determinantal_ideal(fm, t)));
  }

  // Symmetric flavor over a module with relations.
  FPModule m(r, {0, 0}, {V(r, {"y", "-x"})});
  PolyMatrix vals = M(r, {{"x^2", "x*y", "y^2"}});
  Pairing pf{Flavor::Symmetric, m, FPModule::free(r, 1), vals};
  pf.as_map();
  for (int t = 0; t <= 2; ++t) {
    auto g = generic_pairing_ideal(Flavor::Symmetric, m, pf.l, t);
    auto c = g.hom.coordinates(vals);
    REQUIRE(c.has_value());
    CHECK(phi_specialize(g.sym, g.functional_of(*c), g.ideal).equals(determinantal_ideal(pf, t)));
  }
}

TEST_CASE("phi_specialize examples") {
  auto r = qring({"x", "y"});
  SymAlgebra s = symmetric_algebra(FPModule::free(r, 1));
  CHECK(phi_specialize(s, V(r, {"x"}), Ideal(s.ring, {s.t(0)})).equals(Ideal(r, V(r, {"x"}))));

  auto g = generic_determinantal_ideal(FPModule::free(r, 2), FPModule::free(r, 2), 1);
  auto c = g.hom.coordinates(PolyMatrix::identity(r, 2));
  REQUIRE(c.has_value());
  CHECK(phi_specialize(g.sym, g.functional_of(*c), g.ideal).is_unit());

  KoszulCase x = koszul_example();
  Ideal i_f = phi_specialize(x.s, x.f, x.s.positive_part());
  CHECK(i_f.equals(Ideal::irrelevant(x.a)));
  CHECK(krull_dimension(i_f) == 0);
  CHECK_THROWS_AS(phi_specialize(x.s, V(x.a, {"1", "0", "0", "0"}), x.s.positive_part()), PreconditionError);
}

TEST_CASE("lift and homogenization") {
  auto r = qring({"x", "y"});
  SymAlgebra s = symmetric_algebra(FPModule::free(r, 1));
  std::vector<PolyVector> duals{V(r, {"1"})};
  Ideal I(s.ring, {s.t(0)});
  LiftedMap l = lift_phi(s, V(r, {"x"}), duals, I);
  CHECK(l.j.equals(Ideal(l.ring, {P(l.ring, "x + Y1")})));
  Homogenization h = psi_homogenize(l, s, V(r, {"x"}), duals);
  CHECK(h.t[0] == P(r, "x"));
  CHECK(h.images[0] == P(l.ring, "Y1"));

  LiftedMap l0 = lift_phi(s, V(r, {"0"}), duals, I);
  CHECK(l0.t_images[0] == P(l0.ring, "Y1"));
  Homogenization h0 = psi_homogenize(l0, s, V(r, {"0"}), duals);
  CHECK(h0.images == l0.t_images);

  CHECK_THROWS_AS(lift_phi(s, V(r, {"x"}), {V(r, {"x"})}, I), HypothesisError);

  // Free E with I = 0: J = 0 and dim A[Y]/J = dim A + k.
  SymAlgebra s2 = symmetric_algebra(FPModule::free(r, 2));
  std::vector<PolyVector> d2{V(r, {"1", "0"}), V(r, {"0", "1"}), V(r, {"1", "1"})};
  LiftedMap l2 = lift_phi(s2, V(r, {"x", "y"}), d2, Ideal::zero(s2.ring));
  CHECK(l2.j.is_zero());
  CHECK(krull_dimension(l2.j) == 2 + 3);
  // With I = (T1 T2) of relative dimension 1: dim J = dim S/I + (k - r).
  Ideal i2(s2.ring, {s2.t(0) * s2.t(1)});
  LiftedMap l3 = lift_phi(s2, V(r, {"x", "y"}), d2, i2);
  CHECK(krull_dimension(l3.j) == krull_dimension(i2) + 1);
}

TEST_CASE("lift of the Koszul form") {
  KoszulCase x = koszul_example();
  Ideal I = x.s.positive_part();
  LiftedMap l = lift_phi(x.s, x.f, x.koszul, I);
  CHECK(l.j.gens().size() == 4);
  // setting Y = 0 recovers the direct specialization
  PolyVector images;
  for (int v = 0; v < l.ring->nvars(); ++v) {
    bool is_y = std::find(l.y_vars.begin(), l.y_vars.end(), v) != l.y_vars.end();
    images.push_back(is_y ? Polynomial(x.a) : Polynomial::parse(x.a, l.ring->var(v)));
  }
  PolyVector g;
  for (const auto& p : l.j.gens()) g.push_back(p.substitute(x.a, images));
  CHECK(Ideal(x.a, g).equals(phi_specialize(x.s, x.f, I)));
  CHECK_THROWS_AS(psi_homogenize(l, x.s, x.f, x.koszul), HypothesisError);

  // A multiple of the irrelevant ideal homogenizes.
  PolyVector f2;
  for (const auto& v : x.f) f2.push_back(v * P(x.a, "X0"));
  LiftedMap l2 = lift_phi(x.s, f2, x.koszul, I);
  Homogenization h = psi_homogenize(l2, x.s, f2, x.koszul);
  for (const auto& img : h.images) CHECK(pure_degree_one(img, l2.y_vars));
}

TEST_CASE("dimension bound reports") {
  auto r = qring({"x", "y", "z", "w"});
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 3; ++trial) {
    PolyMatrix f(r, 3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) f.at(i, j) = random_form(r, 1, rng);
    ModuleMap fm(FPModule::free(r, 3), FPModule::free(r, 3), f);
    BoundReport rep = verify_dimension_bound(fm, 1, {});
    CHECK(rep.tau == 4);
    CHECK(rep.diagnostic("f_in_m_hom") == "true");
    CHECK(rep.verdict == Verdict::Holds);
    CHECK_FALSE(rep.locus.is_unit());
  }
  ModuleMap zero(FPModule::free(r, 2), FPModule::free(r, 2), PolyMatrix(r, 2, 2));
  BoundReport z = verify_dimension_bound(zero, 0, {});
  CHECK(z.dim_locus == 4);
  CHECK(z.verdict == Verdict::Holds);

  // identity is not in m·Hom and the locus is empty
  ModuleMap id = ModuleMap::identity(FPModule::free(r, 2));
  BoundReport u = verify_dimension_bound(id, 1, {});
  CHECK(u.dim_locus == -1);
  CHECK(u.tau == 1);
  CHECK(u.verdict == Verdict::HypothesisUnmet);
  CHECK(u.diagnostic("p_ample").rfind("not-applicable", 0) == 0);

  KoszulCase x = koszul_example();
  BoundReport e = verify_symalg_bound(x.s, x.f, x.s.positive_part(), {});
  CHECK(e.tau == 3);
  CHECK(e.dim_ambient == 4);
  CHECK(e.dim_locus == 0);
  CHECK(e.verdict == Verdict::HypothesisUnmet);
  CHECK(e.diagnostic("f_in_m_dual_E") == "false");
  CHECK(e.diagnostic("shortfall") == "1");

  BoundReport o = verify_order_bound(FPModule::free(r, 2), V(r, {"x", "y"}), {});
  CHECK(o.tau == 2);
  CHECK(o.dim_locus == 2);
  CHECK(o.verdict == Verdict::Holds);
}

TEST_CASE("p-ample hypothesis in characteristic p") {
  // mod 5 the identity of A is not p-ample for the pair (A·1, A)
  auto r = ring_over(Field::prime(5), {"x", "y"});
  ModuleMap id = ModuleMap::identity(FPModule::free(r, 1));
  BoundReport rep = verify_dimension_bound(id, 0, {});
  CHECK(rep.diagnostic("p_ample").rfind("fails-at-a=1", 0) == 0);
  CHECK(rep.verdict == Verdict::HypothesisUnmet);
}
