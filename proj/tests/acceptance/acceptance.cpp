// Acceptance suite: one PASS/FAIL line per criterion. Every comparison is an
// exact integer or ideal comparison (tolerance 0).
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "degloci/error.hpp"
#include "degloci/scenario.hpp"
#include "degloci/sweeps.hpp"

using namespace degloci;

namespace {

std::string scenario_dir = "scenarios";

struct Outcome {
  bool pass = true;
  std::string detail;
};

int choose(int n, int k) {
  if (k < 0 || n < k) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return static_cast<int>(r);
}

Outcome generic_dimensions() {
  Outcome o;
  auto cases = generic_dimension_sweep(Flavor::Generic, 12, Field::rationals());
  int expected_cases = 0;
  for (int n = 1; n <= 12; ++n)
    for (int m = 1; n * m <= 12; ++m) expected_cases += std::min(n, m) + 1;
  int bad = 0;
  for (const auto& c : cases) {
    int n = c.rows, m = c.cols, t = c.t;
    if (c.dim != n * m - (n - t) * (m - t)) ++bad;
  }
  o.pass = bad == 0 && static_cast<int>(cases.size()) == expected_cases;
  o.detail = std::to_string(cases.size()) + "/" + std::to_string(expected_cases) + " (n,m,t) triples, " +
             std::to_string(bad) + " mismatches";
  return o;
}

Outcome symmetric_dimensions() {
  Outcome o;
  auto cases = generic_dimension_sweep(Flavor::Symmetric, 4, Field::rationals());
  int bad = 0;
  for (const auto& c : cases)
    if (c.dim != choose(c.cols + 1, 2) - choose(c.cols - c.t + 1, 2)) ++bad;
  // m = 1..4 and t = 0..m
  o.pass = bad == 0 && cases.size() == 2 + 3 + 4 + 5;
  o.detail = std::to_string(cases.size()) + " (m,t) pairs, " + std::to_string(bad) + " mismatches";
  return o;
}

Outcome alternating_dimensions() {
  Outcome o;
  auto cases = generic_dimension_sweep(Flavor::Alternating, 6, Field::rationals());
  int bad = 0, radical_bad = 0, radical_checked = 0;
  for (const auto& c : cases) {
    if (c.dim != choose(c.cols, 2) - choose(c.cols - c.t, 2)) ++bad;
    if (c.t + 2 <= c.cols) {
      ++radical_checked;
      if (!alternating_radicals_agree(c.cols, c.t, Field::rationals())) ++radical_bad;
    }
  }
  // m = 1..6, t = 0, 2, .. <= m
  o.pass = bad == 0 && radical_bad == 0 && cases.size() == 1 + 2 + 2 + 3 + 3 + 4;
  o.detail = std::to_string(cases.size()) + " (m,t) pairs, " + std::to_string(bad) + " dimension mismatches; " +
             std::to_string(radical_checked) + " radical comparisons, " + std::to_string(radical_bad) + " failures";
  return o;
}

Outcome koszul_example() {
  Outcome o;
  auto a = PolyRing::make(Field::rationals(), {"X0", "X1", "X2", "X3"});
  auto P = [&](const char* s) { return Polynomial::parse(a, s); };
  FPModule e(a, {-1, -1, -1, -1}, {{P("X0"), P("X1"), P("X2"), P("X3")}});
  PolyVector f{P("-X1"), P("X0"), P("-X3"), P("X2")};
  std::vector<std::string> failed;
  auto check = [&](bool ok, const std::string& what) {
    if (!ok) failed.push_back(what);
  };

  Polynomial euler = Polynomial::from_int(a, 0);
  for (int i = 0; i < 4; ++i) euler += Polynomial::variable(a, i) * f[static_cast<std::size_t>(i)];
  check(euler.is_zero(), "euler");

  HomModule ed = dual(e);
  auto c = ed.coordinates(PolyMatrix(a, {f}));
  check(c.has_value(), "f in dual");
  if (c) {
    Ideal oi = order_ideal(ed.module, *c);
    check(oi.equals(Ideal::irrelevant(a)), "order ideal = m");
    check(krull_dimension(oi) == 0 && 0 < 4 - 3, "dim A/I(f) = 0 < 1");
  }

  SymAlgebra s = symmetric_algebra(e);
  std::vector<PolyVector> duals;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      PolyVector v = zero_vector(a, 4);
      v[static_cast<std::size_t>(j)] = Polynomial::variable(a, i);
      v[static_cast<std::size_t>(i)] = -Polynomial::variable(a, j);
      duals.push_back(v);
    }
  LiftedMap lift = lift_phi(s, f, duals, s.positive_part());
  check(lift.ring->nvars() == 10, "10 ambient variables");

  // f = e01 + e23 after the lift, so the Pfaffian of T + (e01 + e23) cuts Z1.
  PolyMatrix T(lift.ring, 4, 4);
  int k = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      T.at(i, j) = lift.y(k);
      T.at(j, i) = -lift.y(k);
      ++k;
    }
  Polynomial one = Polynomial::from_int(lift.ring, 1);
  T.at(0, 1) += one;
  T.at(1, 0) -= one;
  T.at(2, 3) += one;
  T.at(3, 2) -= one;
  Polynomial pf = pfaffian(T);

  std::vector<int> xs;
  for (int i = 0; i < 4; ++i) xs.push_back(lift.ring->index_of("X" + std::to_string(i)));
  Ideal X = Ideal::of_variables(lift.ring, xs);
  Ideal z1 = saturate(lift.j.with(pf), X);
  ComponentSet cs = verify_component_set(lift.j, {z1, X});
  check(cs.dims.size() == 2 && cs.dims[0] == 7 && cs.dims[1] == 6, "component dims 7, 6");
  check(connected_in_dimension(cs, 5, false).connected, "connected in dimension 5");
  check(!connected_in_dimension(cs, 6, false).connected, "not connected in dimension 6");
  check((z1 + Ideal::of_variables(lift.ring, lift.y_vars)).is_unit(), "Z1 misses the zero section");

  bool threw = false;
  try {
    psi_homogenize(lift, s, f, duals);
  } catch (const HypothesisError&) {
    threw = true;
  }
  check(threw, "f outside m·E^vv");

  o.pass = failed.empty();
  o.detail = o.pass ? "order ideal m, Euler relation, dim 0 < 1, dims 7/6, connected in 5 not 6, 1 in Z1+(Y)"
                    : "failed:";
  for (const auto& s : failed) o.detail += " [" + s + "]";
  return o;
}

Outcome char2_determinant() {
  Outcome o;
  auto run = [](const Field& field) {
    auto r = PolyRing::make(field, {"X1", "X2", "X3"});
    auto P = [&](const char* s) { return Polynomial::parse(r, s); };
    PolyMatrix sq(r, {{P("0"), P("X1"), P("X2")}, {P("X1"), P("0"), P("X3")}, {P("X2"), P("X3"), P("0")}});
    // cofactor expansion along the first row
    Polynomial det = sq.at(0, 0) * (sq.at(1, 1) * sq.at(2, 2) - sq.at(1, 2) * sq.at(2, 1)) -
                     sq.at(0, 1) * (sq.at(1, 0) * sq.at(2, 2) - sq.at(1, 2) * sq.at(2, 0)) +
                     sq.at(0, 2) * (sq.at(1, 0) * sq.at(2, 1) - sq.at(1, 1) * sq.at(2, 0));
    Ideal I = determinantal_ideal(pairing_from_matrix(Flavor::Symmetric, FPModule::free(r, 3), sq), 2);
    return std::make_pair(det, I);
  };
  auto [d2, i2] = run(Field::prime(2));
  auto [dq, iq] = run(Field::rationals());
  Polynomial expected_q = Polynomial::parse(dq.ring(), "2*X1*X2*X3");
  bool f2 = d2.is_zero() && i2.groebner_basis().empty();
  bool q = dq == expected_q && iq.equals(Ideal(dq.ring(), {expected_q}));
  o.pass = f2 && q;
  o.detail = std::string("F_2: I_3 ") + (f2 ? "= (0)" : "!= (0)") + "; Q: I_3 = (" + iq.gens().front().to_string() + ")";
  return o;
}

Outcome random_bounds() {
  Outcome o;
  auto cases = random_bound_sweep(24, 6, 3, 20240611, Field::rationals());
  int holds = 0, bad_tau = 0;
  for (const auto& c : cases) {
    if (c.tau != (c.rank_m - c.t) * (c.rank_n - c.t)) ++bad_tau;
    if (c.dim_locus >= c.nvars - c.tau && c.dim_ambient == c.nvars) ++holds;
  }
  o.pass = cases.size() >= 20 && holds == static_cast<int>(cases.size()) && bad_tau == 0;
  o.detail = std::to_string(holds) + "/" + std::to_string(cases.size()) + " random maps satisfy dim D_t >= dim A - tau";
  return o;
}

Outcome closures() {
  Outcome o;
  struct Run {
    Field field;
    bool p_ample;
    int count;
    int max_level;
  };
  std::vector<Run> runs{{Field::prime(2), true, 12, 2}, {Field::prime(5), true, 12, 2}, {Field::rationals(), false, 18, 3}};
  std::ostringstream detail;
  for (const auto& r : runs) {
    auto cases = closure_sweep(r.field, r.p_ample, r.count, r.max_level, 7);
    std::map<int, int> premises;
    int inconsistent = 0;
    for (const auto& c : cases) {
      premises[c.property] += c.premise ? 1 : 0;
      inconsistent += c.consistent() ? 0 : 1;
    }
    // every property must be exercised with a true premise
    bool covered = premises.size() == 5;
    for (const auto& [p, n] : premises) covered = covered && n > 0;
    o.pass = o.pass && covered && inconsistent == 0;
    detail << r.field.name() << ": " << cases.size() << " instances, " << inconsistent << " counterexamples; ";
  }
  o.detail = detail.str();
  o.detail.resize(o.detail.size() - 2);
  return o;
}

Outcome homogenization() {
  Outcome o;
  int certified = 0, refused = 0, wrong = 0;
  for (const auto& path : corpus_files(scenario_dir)) {
    Scenario s = load_scenario(path);
    for (const auto& [name, l] : s.lifts) {
      const SymAlgDecl& sa = s.symalgs.at(l.symalg);
      const PolyVector& f = s.functionals.at(l.functional).values;
      const auto& duals = s.functional_lists.at(l.duals).rows;
      // The plain Koszul form is the one corpus form outside m·E^vv.
      bool outside = s.name == "koszul_example";
      try {
        Homogenization h = psi_homogenize(l.lift, sa.algebra, f, duals);
        bool pure = true;
        for (const auto& p : h.images) pure = pure && pure_degree_one(p, l.lift.y_vars);
        if (pure && !outside) ++certified;
        else ++wrong;
      } catch (const HypothesisError&) {
        if (outside) ++refused;
        else ++wrong;
      }
    }
  }
  o.pass = wrong == 0 && refused == 1 && certified >= 3;
  o.detail = std::to_string(certified) + " corpus forms certified, " + std::to_string(refused) +
             " hypothesis error (plain Koszul form), " + std::to_string(wrong) + " unexpected";
  return o;
}

Outcome oracle() {
  Outcome o;
  auto cases = connectedness_oracle_sweep(500, 6, 31337);
  int agree = 0;
  for (const auto& c : cases) agree += c.criterion == face_complex_connected(c.supports, c.nvars, c.d) ? 1 : 0;
  o.pass = agree == static_cast<int>(cases.size()) && cases.size() >= 500;
  o.detail = std::to_string(agree) + "/" + std::to_string(cases.size()) + " (ideal, d) comparisons from 500 samples";
  return o;
}

Outcome coherence() {
  Outcome o;
  int checked = 0, bad = 0;
  auto compare = [&](const GenericDeterminantal& g, const PolyMatrix& values, const Ideal& direct) {
    ++checked;
    auto c = g.hom.coordinates(values);
    if (!c) {
      ++bad;
      return;
    }
    Ideal specialized = phi_specialize(g.sym, g.functional_of(*c), g.ideal);
    if (!(specialized.contains(direct) && direct.contains(specialized))) ++bad;
  };
  for (const auto& path : corpus_files(scenario_dir)) {
    Scenario s = load_scenario(path);
    for (const auto& [name, f] : s.maps) {
      int top = std::min(f.source().num_gens(), f.target().num_gens());
      for (int t = 0; t < top; ++t)
        compare(generic_determinantal_ideal(f.source(), f.target(), t), f.matrix(), determinantal_ideal(f, t));
    }
    for (const auto& [name, p] : s.pairings) {
      int g = p.pairing.m.num_gens();
      for (int t = 0; t < g; t += p.pairing.kind == Flavor::Alternating ? 2 : 1)
        compare(generic_pairing_ideal(p.pairing.kind, p.pairing.m, p.pairing.l, t), p.pairing.values,
                determinantal_ideal(p.pairing, t));
    }
  }
  o.pass = bad == 0 && checked > 0;
  o.detail = std::to_string(checked - bad) + "/" + std::to_string(checked) + " corpus (map, t) instances agree";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) scenario_dir = argv[1];
  struct Criterion {
    const char* label;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> criteria{
      {"generic determinantal dimensions nm - (n-t)(m-t), nm <= 12", generic_dimensions},
      {"symmetric dimensions C(m+1,2) - C(m-t+1,2), m <= 4", symmetric_dimensions},
      {"alternating dimensions C(m,2) - C(m-2s,2), m <= 6, with Pfaffian radicals", alternating_dimensions},
      {"Koszul example facts", koszul_example},
      {"symmetric 3x3 determinant: (0) over F_2, (2*X1*X2*X3) over Q", char2_determinant},
      {"random maps satisfy the dimension bound (>= 20 instances)", random_bounds},
      {"(p-)ample closure properties per level", closures},
      {"homogenization certificates on corpus forms", homogenization},
      {"graph criterion vs face-complex oracle (>= 500 samples)", oracle},
      {"coherence of generic specialization on the corpus", coherence},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failures += o.pass ? 0 : 1;
    std::printf("[%s] %2zu %s (tolerance: exact) -- %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].label,
                o.detail.c_str());
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
