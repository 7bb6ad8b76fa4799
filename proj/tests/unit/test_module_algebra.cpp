#include "doctest.h"
#include "degloci/error.hpp"
#include "degloci/module.hpp"

using namespace degloci;

namespace {

RingPtr qring(std::vector<std::string> vars) { return PolyRing::make(Field::rationals(), std::move(vars)); }

Polynomial P(const RingPtr& r, std::string_view s) { return Polynomial::parse(r, s); }

PolyVector V(const RingPtr& r, std::initializer_list<const char*> entries) {
  PolyVector v;
  for (const char* s : entries) v.push_back(P(r, s));
  return v;
}

Ideal make_ideal(const RingPtr& r, std::initializer_list<const char*> gens) { return Ideal(r, V(r, gens)); }

// Generators of the submodule of A^g_M sent into the target relations.
std::vector<PolyVector> kernel_of(const ModuleMap& f) {
  const auto& ring = f.source().ring();
  int gm = f.source().num_gens();
  int gn = f.target().num_gens();
  std::vector<PolyVector> cols;
  for (int j = 0; j < gm; ++j) cols.push_back(f.matrix().col(j));
  for (const auto& rel : f.target().relations()) cols.push_back(rel);
  Span s(ring, gn, cols);
  std::vector<PolyVector> out;
  for (const auto& syz : s.syzygies()) out.emplace_back(syz.begin(), syz.begin() + gm);
  return out;
}

// A^4 modulo the Euler relation, generators in degree -1.
FPModule euler_quotient(const RingPtr& a) {
  return FPModule(a, {-1, -1, -1, -1}, {V(a, {"X0", "X1", "X2", "X3"})});
}

}  // namespace

TEST_CASE("syzygies: Koszul, identity, and the four-term row") {
  auto r = qring({"x", "y"});
  PolyMatrix row(r, {V(r, {"x", "y"})});
  PolyMatrix s = syzygies(row);
  REQUIRE(s.cols() == 1);
  CHECK((row * s).is_zero());
  CHECK((s.col(0) == V(r, {"-y", "x"}) || s.col(0) == V(r, {"y", "-x"})));

  CHECK(syzygies(PolyMatrix::identity(r, 3)).cols() == 0);

  auto a = qring({"X0", "X1", "X2", "X3"});
  PolyMatrix f(a, {V(a, {"-X1", "X0", "-X3", "X2"})});
  PolyMatrix k = syzygies(f);
  CHECK((f * k).is_zero());
  // Expected generators: the six Koszul pairs of the entries and the Euler vector.
  std::vector<PolyVector> expected;
  PolyVector entries = f.row(0);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      PolyVector v = zero_vector(a, 4);
      v[static_cast<std::size_t>(i)] = entries[static_cast<std::size_t>(j)];
      v[static_cast<std::size_t>(j)] = -entries[static_cast<std::size_t>(i)];
      expected.push_back(v);
    }
  expected.push_back(V(a, {"X0", "X1", "X2", "X3"}));
  std::vector<PolyVector> got;
  for (int c = 0; c < k.cols(); ++c) got.push_back(k.col(c));
  Span got_span(a, 4, got);
  Span exp_span(a, 4, expected);
  for (const auto& e : expected) CHECK(got_span.contains(e));
  for (const auto& g : got) CHECK(exp_span.contains(g));
}

TEST_CASE("span lift reproduces the vector") {
  auto r = qring({"x", "y", "z"});
  std::vector<PolyVector> gens{V(r, {"x", "y"}), V(r, {"z", "0"}), V(r, {"y^2", "x*z"})};
  Span s(r, 2, gens);
  PolyVector target = V(r, {"x^2 + z*y - 3*x*y^2", "x*y - 3*x^2*z"});
  auto c = s.lift(target);
  REQUIRE(c.has_value());
  PolyVector sum = zero_vector(r, 2);
  for (std::size_t j = 0; j < gens.size(); ++j)
    for (std::size_t i = 0; i < 2; ++i) sum[i] += (*c)[j] * gens[j][i];
  CHECK(sum == target);
  CHECK_FALSE(s.lift(V(r, {"0", "y"})).has_value());
  CHECK_FALSE(s.contains(V(r, {"1", "0"})));
}

TEST_CASE("exactness: image of the syzygies is the kernel") {
  auto r = qring({"x", "y", "z"});
  PolyMatrix m(r, {V(r, {"x", "y", "z"}), V(r, {"y", "z", "x"})});
  PolyMatrix k = syzygies(m);
  CHECK((m * k).is_zero());
  std::vector<PolyVector> cols;
  for (int c = 0; c < k.cols(); ++c) cols.push_back(k.col(c));
  Span ks(r, 3, cols);
  // Cross product of the two rows is in the kernel.
  PolyVector cross = V(r, {"y*x - z^2", "z*y - x^2", "x*z - y^2"});
  CHECK(m.apply(cross) == zero_vector(r, 2));
  CHECK(ks.contains(cross));
}

TEST_CASE("hom modules") {
  auto r = qring({"x"});
  FPModule a = FPModule::free(r, 1);
  FPModule tors(r, {0}, {V(r, {"x"})});

  HomModule h0 = hom_module(tors, a);
  CHECK(h0.module.num_gens() == 0);

  HomModule h1 = hom_module(tors, tors);
  REQUIRE(h1.module.num_gens() == 1);
  CHECK(h1.module.gen_degree(0) == 0);
  // Hom(A/(x), A/(x)) is cyclic and killed by x.
  CHECK(fitting_ideal(h1.module, 0).equals(make_ideal(r, {"x"})));
  CHECK(h1.realizations[0].at(0, 0).is_constant());

  auto s = qring({"x", "y"});
  FPModule n(s, {0, 1}, {V(s, {"y", "-1"})});  // A^2 / (y e0 - e1) is free of rank one
  HomModule h2 = hom_module(FPModule::free(s, 1), n);
  CHECK(generic_rank(h2.module) == 1);
  // evaluation on the generator reproduces the realization column
  PolyVector img = h2.evaluate(0, V(s, {"1"}));
  CHECK(img == h2.realizations[0].col(0));

  auto t = qring({"x", "y", "z"});
  HomModule free_hom = hom_module(FPModule::free(t, 2), FPModule::free(t, 3));
  CHECK(free_hom.module.num_gens() == 6);
  CHECK(generic_rank(free_hom.module) == 6);
}

TEST_CASE("duals and double duals") {
  auto r = qring({"x", "y"});
  DoubleDual dd = double_dual(FPModule::free(r, 3, {0, 1, 2}));
  CHECK(dd.natural_map.matrix() == PolyMatrix::identity(r, 3));
  CHECK(dd.dual.module.gen_degrees() == std::vector<int>{-2, -1, 0});

  FPModule tors(r, {0}, {V(r, {"x"})});
  CHECK(dual(tors).module.num_gens() == 0);

  // A/(x) ⊕ A: the kernel of the natural map is the torsion summand.
  FPModule mixed(r, {0, 0}, {V(r, {"x", "0"})});
  DoubleDual md = double_dual(mixed);
  auto ker = kernel_of(md.natural_map);
  Span kspan(r, 2, ker);
  CHECK(kspan.contains(V(r, {"1", "0"})));
  CHECK_FALSE(kspan.contains(V(r, {"0", "1"})));

  // The Euler quotient is torsion free: the natural map is injective on elements.
  auto a = qring({"X0", "X1", "X2", "X3"});
  FPModule e = euler_quotient(a);
  DoubleDual ed = double_dual(e);
  CHECK(ed.dual.module.num_gens() == 6);
  for (const auto& k : kernel_of(ed.natural_map)) CHECK(e.is_zero_element(k));
  CHECK(generic_rank(ed.double_dual.module) == 3);
}

TEST_CASE("tensor, exterior and symmetric powers") {
  auto r = qring({"x", "y", "z"});
  FPModule a2 = FPModule::free(r, 2);
  FPModule l2 = exterior_power(a2, 2);
  CHECK(l2.num_gens() == 1);
  CHECK(l2.num_relations() == 0);
  FPModule s2 = symmetric_power(a2, 2);
  CHECK(s2.num_gens() == 3);
  CHECK(s2.num_relations() == 0);
  CHECK(exterior_power(a2, 3).num_gens() == 0);
  CHECK(exterior_power(a2, 0).num_gens() == 1);

  for (int m = 0; m <= 4; ++m)
    for (int k = 0; k <= m + 1; ++k) {
      FPModule p = exterior_power(FPModule::free(r, m), k);
      int binom = static_cast<int>(subsets(m, k).size());
      CHECK(generic_rank(p) == binom);
    }

  FPModule q(r, {0, 0, 0}, {V(r, {"x", "y", "z"})});
  FPModule w = exterior_power(q, 2);
  CHECK(w.num_gens() == 3);
  CHECK(fitting_ideal(w, 2).equals(make_ideal(r, {"x", "y", "z"})));
  CHECK(generic_rank(w) == 1);

  FPModule t = tensor(q, FPModule(r, {0}, {V(r, {"x"})}));
  CHECK(t.num_gens() == 3);
  CHECK(fitting_ideal(t, 0).contains(P(r, "x^3")));

  // functoriality on the identity
  ModuleMap id = ModuleMap::identity(q);
  CHECK(exterior_power(id, 2).matrix() == PolyMatrix::identity(r, 3));
  CHECK(symmetric_power(id, 2).matrix() == PolyMatrix::identity(r, 6));
}

TEST_CASE("wedge and symmetric products") {
  auto r = qring({"x", "y"});
  FPModule a2 = FPModule::free(r, 2);
  PolyVector u = V(r, {"x", "y"});
  PolyVector v = V(r, {"y", "x"});
  CHECK(wedge_product(a2, {u, v}) == V(r, {"x^2 - y^2"}));
  CHECK(wedge_product(a2, {v, u}) == V(r, {"-x^2 + y^2"}));
  CHECK(wedge_product(a2, {u, u}) == V(r, {"0"}));
  CHECK(symmetric_product(a2, {u, v}) == V(r, {"x*y", "x^2 + y^2", "x*y"}));
}

TEST_CASE("symmetric algebras") {
  auto r = qring({"x", "y"});
  SymAlgebra s1 = symmetric_algebra(FPModule::free(r, 2));
  CHECK(s1.ring->nvars() == 4);
  CHECK(s1.relations.is_zero());

  SymAlgebra s2 = symmetric_algebra(FPModule(r, {0}, {V(r, {"x"})}));
  CHECK(s2.relations.equals(Ideal(s2.ring, {P(s2.ring, "x*T1")})));

  SymAlgebra s3 = symmetric_algebra(FPModule(r, {0, 0}, {V(r, {"x", "y"})}));
  CHECK(s3.relations.equals(Ideal(s3.ring, {P(s3.ring, "x*T1 + y*T2")})));
  CHECK(s3.sym_degree(P(s3.ring, "x*T1 + y*T2")) == 1);
  CHECK(krull_dimension(s3.relations) == 3);
}

TEST_CASE("fitting ideals, generic rank, isolated singularities") {
  auto r = qring({"x"});
  FPModule tors(r, {0}, {V(r, {"x"})});
  CHECK(fitting_ideal(tors, 0).equals(make_ideal(r, {"x"})));
  CHECK(fitting_ideal(tors, 1).is_unit());

  auto s = qring({"x", "y"});
  FPModule free3 = FPModule::free(s, 3);
  CHECK(generic_rank(free3) == 3);
  CHECK(isolated_singularity_check(free3, 3));
  CHECK_THROWS_AS(isolated_singularity_check(free3, 2), PreconditionError);

  FPModule im(s, {0, 0}, {V(s, {"x", "y"})});
  CHECK(generic_rank(im) == 1);
  CHECK(fitting_ideal(im, 0).is_zero());
  CHECK(fitting_ideal(im, 1).equals(make_ideal(s, {"x", "y"})));
  CHECK(isolated_singularity_check(im, 1));

  auto a = qring({"X0", "X1", "X2", "X3"});
  FPModule e = euler_quotient(a);
  CHECK(generic_rank(e) == 3);
  CHECK(fitting_ideal(e, 2).is_zero());
  CHECK(krull_dimension(fitting_ideal(e, 3)) == 0);
  CHECK(isolated_singularity_check(e, 3));
}

TEST_CASE("presentation independence of Fitting ideals") {
  auto r = qring({"x", "y", "z"});
  FPModule m(r, {0, 0}, {V(r, {"x", "y"}), V(r, {"z", "0"})});
  // add a redundant generator e2 = x e0 + y e1 (degree 1) with its defining relation
  FPModule m2(r, {0, 0, 1}, {V(r, {"x", "y", "0"}), V(r, {"z", "0", "0"}), V(r, {"x", "y", "-1"})});
  for (int j = 0; j <= 3; ++j) CHECK(fitting_ideal(m, j).equals(fitting_ideal(m2, j)));
  CHECK(generic_rank(m) == generic_rank(m2));
  CHECK(dual(m).module.num_gens() == dual(m2).module.num_gens());
}

TEST_CASE("module validation") {
  auto r = qring({"x", "y"});
  CHECK_THROWS_AS(FPModule(r, {0, 0}, {V(r, {"x", "y^2"})}), PreconditionError);
  FPModule n(r, {0}, {V(r, {"x"})});
  CHECK_THROWS_AS(ModuleMap(n, FPModule::free(r, 1), PolyMatrix(r, {V(r, {"1"})})), PreconditionError);
  ModuleMap ok(FPModule::free(r, 1), n, PolyMatrix(r, {V(r, {"y"})}));
  CHECK(ok.degree() == 1);
  FPModule zero = FPModule::zero(r);
  CHECK(dual(zero).module.num_gens() == 0);
  CHECK(exterior_power(zero, 1).num_gens() == 0);
  CHECK(tensor(zero, n).num_gens() == 0);
}
