#pragma once

#include <string>
#include <vector>

#include "degloci/ampleness.hpp"
#include "degloci/module.hpp"

namespace degloci {

enum class Flavor { Generic, Symmetric, Alternating, Order, SymAlg };

std::string flavor_name(Flavor f);
Flavor parse_flavor(const std::string& s);

/// Ideal of the (t+1)-minors det(φ_i(f(m_j))) over generators m_j of M and
/// φ_i of N^vv. The explicit overload takes the functionals as rows of
/// length g_N; each must vanish on the relations of N.
Ideal determinantal_ideal(const ModuleMap& f, int t);
Ideal determinantal_ideal(const ModuleMap& f, int t, const std::vector<PolyVector>& functionals);

/// N^vv(f): values of the dual generators of N on f.
Ideal order_ideal(const FPModule& n, const PolyVector& f);

/// A symmetric (or alternating) pairing M x M -> L, stored as the map
/// S²M -> L (or Λ²M -> L): column k is the value on basis element k.
struct Pairing {
  Flavor kind = Flavor::Symmetric;
  FPModule m;
  FPModule l;
  PolyMatrix values;

  /// Value on (m_j, m_j') as an element of L.
  PolyVector value(int j, int jp) const;
  ModuleMap as_map() const;
};

/// Pairing into L = A from a symmetric or alternating square matrix.
Pairing pairing_from_matrix(Flavor kind, const FPModule& m, const PolyMatrix& square);

/// The adjoint f: M -> Hom(M, L) of a pairing.
struct Adjoint {
  HomModule target;  // Hom(M, L)
  ModuleMap map;
};
Adjoint adjoint(const Pairing& f);
Ideal determinantal_ideal(const Pairing& f, int t);

/// The generic determinantal ideal I_{t+1} in S(E), E = H^vv where H is
/// Hom(M, N), Hom(S²M, L) or Hom(Λ²M, L).
struct GenericDeterminantal {
  Flavor flavor = Flavor::Generic;
  int t = 0;
  HomModule hom;        // H, generators realized as maps
  HomModule e;          // E = H^vv: generators are functionals on H
  SymAlgebra sym;       // S(E)
  PolyMatrix epsilon;   // (i, j) = ε(m_j ⊗ φ_i), a linear form in the T variables
  Ideal ideal;          // I_{t+1} + L inside sym.ring

  /// An element of H (coordinates) viewed as the functional on E it defines.
  PolyVector functional_of(const PolyVector& hom_coords) const;
};

GenericDeterminantal generic_determinantal_ideal(const FPModule& m, const FPModule& n, int t);
/// Symmetric or alternating flavor through Hom(S²M, L) or Hom(Λ²M, L).
GenericDeterminantal generic_pairing_ideal(Flavor kind, const FPModule& m, const FPModule& l, int t);

/// φ_f(I): substitutes T_l -> f(e_l) after checking that f kills the
/// relations of E. `f` lists the values of f on the generators of E.
Ideal phi_specialize(const SymAlgebra& s, const PolyVector& f, const Ideal& I);

/// Generators of E^vv as rows of values on the generators of E.
std::vector<PolyVector> dual_generators(const SymAlgebra& s);

struct LiftedMap {
  RingPtr ring;            // A[Y_1..Y_k], block order with the Y variables first
  std::vector<int> y_vars;
  PolyVector t_images;     // φ(e_l T) = f(e_l) + Σ f_i(e_l) Y_i
  Ideal j;                 // J = I·A[Y]

  Polynomial y(int i) const { return Polynomial::variable(ring, y_vars[static_cast<std::size_t>(i)]); }
};

/// Throws HypothesisError when the `duals` do not generate E^vv.
LiftedMap lift_phi(const SymAlgebra& s, const PolyVector& f, const std::vector<PolyVector>& duals, const Ideal& I);

struct Homogenization {
  PolyVector t;       // f = Σ t_i f_i with t_i in m
  PolyVector images;  // ψ∘φ(e_l T)
};

/// Finds f = Σ t_i f_i with t_i ∈ m and applies ψ: Y_i -> Y_i - t_i.
/// Throws HypothesisError when f is not in m·E^vv, and Error if some image
/// is not of pure Y-degree 1.
Homogenization psi_homogenize(const LiftedMap& lift, const SymAlgebra& s, const PolyVector& f,
                              const std::vector<PolyVector>& duals);

/// True iff every term has total degree exactly one in the given variables.
bool pure_degree_one(const Polynomial& p, const std::vector<int>& vars);

/// v ∈ m·span(gens) + span(extra) inside A^rank.
bool in_m_span(const RingPtr& ring, int rank, const std::vector<PolyVector>& gens, const PolyVector& v,
               const std::vector<PolyVector>& extra = {});

enum class Verdict { Holds, Violated, HypothesisUnmet };
std::string verdict_name(Verdict v);

struct Diagnostic {
  std::string key;
  std::string value;
};

struct BoundReport {
  Flavor flavor = Flavor::Generic;
  int t = 0;
  int tau = 0;
  int dim_ambient = 0;
  int dim_locus = 0;
  Verdict verdict = Verdict::Holds;
  std::vector<Diagnostic> diagnostics;
  Ideal locus;

  bool hypotheses_hold = false;
  std::string diagnostic(const std::string& key) const;
};

struct BoundOptions {
  int a_max = 3;
  bool try_p_ample = true;
};

BoundReport verify_dimension_bound(const ModuleMap& f, int t, const BoundOptions& opts = {});
BoundReport verify_dimension_bound(const Pairing& f, int t, const BoundOptions& opts = {});
BoundReport verify_order_bound(const FPModule& n, const PolyVector& f, const BoundOptions& opts = {});
/// Bound for a user-supplied homogeneous ideal I of S(E) and f ∈ E^vv
/// (values on the generators of E); I may be given with or without L.
BoundReport verify_symalg_bound(const SymAlgebra& s, const PolyVector& f, const Ideal& I,
                                const BoundOptions& opts = {});

int binomial(int n, int k);

}  // namespace degloci
