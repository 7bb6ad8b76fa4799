#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "degloci/matrix.hpp"

namespace degloci {

/// Submodule of the free module A^rank generated by a list of vectors, with
/// a Gröbner basis that also records how each basis element was built from
/// the generators. Supports membership, lifting to generator coefficients
/// and syzygies among the generators.
class Span {
 public:
  Span() = default;
  Span(RingPtr ring, int rank, std::vector<PolyVector> gens);

  const RingPtr& ring() const { return ring_; }
  int rank() const { return rank_; }
  const std::vector<PolyVector>& gens() const { return gens_; }

  bool contains(const PolyVector& v) const;
  /// Coefficients c with v = Σ c_j gens_j, or nullopt when v is not in the span.
  std::optional<PolyVector> lift(const PolyVector& v) const;
  /// Normal form modulo the span (zero iff contained).
  PolyVector reduce(const PolyVector& v) const;
  /// Generators of the relations among the generators (each of length gens().size()).
  const std::vector<PolyVector>& syzygies() const { return syz_; }

 private:
  RingPtr ring_;
  int rank_ = 0;
  std::vector<PolyVector> gens_;
  std::vector<Vec> basis_;      // extended basis (vector part, then tag part)
  std::vector<Vec> span_basis_;  // basis elements with a nonzero vector part, tag stripped
  std::vector<PolyVector> syz_;
};

bool is_zero_vector(const PolyVector& v);
PolyVector zero_vector(const RingPtr& ring, int n);

/// Columns generate the kernel of P acting on column vectors (P·v = 0).
/// The result has P.cols() rows.
PolyMatrix syzygies(const PolyMatrix& p);

/// Graded finitely presented module coker(A^relations -> A^gens). Relations
/// are rows: relation j is Σ_i P[j][i] e_i. Elements are coefficient vectors
/// on the generators.
class FPModule {
 public:
  FPModule() = default;
  /// Validates homogeneity of every relation with respect to the degrees.
  FPModule(RingPtr ring, std::vector<int> gen_degrees, std::vector<PolyVector> relations);

  static FPModule free(RingPtr ring, int rank, std::vector<int> degrees = {});
  static FPModule zero(RingPtr ring) { return free(std::move(ring), 0); }

  const RingPtr& ring() const { return ring_; }
  int num_gens() const { return static_cast<int>(degrees_.size()); }
  const std::vector<int>& gen_degrees() const { return degrees_; }
  int gen_degree(int i) const { return degrees_[static_cast<std::size_t>(i)]; }
  const std::vector<PolyVector>& relations() const { return relations_; }
  int num_relations() const { return static_cast<int>(relations_.size()); }
  /// Rows = relations, columns = generators.
  PolyMatrix presentation() const;
  bool has_relations() const { return !relations_.empty(); }

  /// Span of the relations inside the free module on the generators.
  const Span& relation_span() const;
  bool is_zero_element(const PolyVector& v) const;
  bool equal_elements(const PolyVector& a, const PolyVector& b) const;
  PolyVector reduce(const PolyVector& v) const;
  PolyVector generator(int i) const;
  /// Degree of a homogeneous element (nullopt for zero or inhomogeneous vectors).
  std::optional<int> element_degree(const PolyVector& v) const;

  std::string to_string() const;

 private:
  struct Cache {
    std::once_flag once;
    Span span;
  };
  RingPtr ring_;
  std::vector<int> degrees_;
  std::vector<PolyVector> relations_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// Degree of a homogeneous vector in the free module with the given
/// generator degrees (nullopt for zero or inhomogeneous).
std::optional<int> vector_degree(const PolyVector& v, const std::vector<int>& degrees);

/// Homomorphism given by the images of the source generators: column j of
/// the matrix is the image of generator j in target coordinates.
class ModuleMap {
 public:
  ModuleMap() = default;
  /// Verifies that every source relation maps into the target relations.
  ModuleMap(FPModule source, FPModule target, PolyMatrix matrix);

  static ModuleMap identity(const FPModule& m);

  const FPModule& source() const { return source_; }
  const FPModule& target() const { return target_; }
  const PolyMatrix& matrix() const { return matrix_; }
  /// Degree of the map when homogeneous and nonzero.
  std::optional<int> degree() const;
  PolyVector apply(const PolyVector& v) const;
  ModuleMap compose_after(const ModuleMap& first) const;  // this ∘ first
  bool is_zero() const;

 private:
  FPModule source_;
  FPModule target_;
  PolyMatrix matrix_;
};

/// Hom(M, N) with a realization of every generator as a concrete matrix.
struct HomModule {
  FPModule module;
  FPModule source;
  FPModule target;
  std::vector<PolyMatrix> realizations;
  /// Realizations (flattened) followed by the maps with image in the target
  /// relations; lifting against it yields coordinates.
  std::shared_ptr<const Span> coordinates_span;

  /// Σ_k a_k F_k.
  PolyMatrix realize(const PolyVector& coords) const;
  /// Coordinates of a homomorphism matrix, nullopt when it is not a well
  /// defined map M -> N.
  std::optional<PolyVector> coordinates(const PolyMatrix& f) const;
  ModuleMap as_map(int k) const;
  /// Value of generator k on an element of the source.
  PolyVector evaluate(int k, const PolyVector& m) const;
};

HomModule hom_module(const FPModule& m, const FPModule& n);
/// Hom(M, A): realizations are 1 x g rows of values on the generators.
HomModule dual(const FPModule& m);

struct DoubleDual {
  HomModule dual;
  HomModule double_dual;
  /// M -> M^vv, generator m_j goes to evaluation at m_j.
  ModuleMap natural_map;
};
DoubleDual double_dual(const FPModule& m);

/// Evaluation vector (φ_k(v))_k of an element against the dual generators.
PolyVector evaluation_vector(const HomModule& dual, const PolyVector& v);

FPModule tensor(const FPModule& m, const FPModule& n);
/// Generator (i, j) of M ⊗ N has index i * n.num_gens() + j.
PolyVector tensor_element(const FPModule& m, const FPModule& n, const PolyVector& a, const PolyVector& b);

/// Strictly increasing index tuples (exterior) or weakly increasing (symmetric).
std::vector<std::vector<int>> exterior_basis(int g, int k);
std::vector<std::vector<int>> symmetric_basis(int g, int k);
int basis_index(const std::vector<std::vector<int>>& basis, const std::vector<int>& key);

FPModule exterior_power(const FPModule& m, int k);
FPModule symmetric_power(const FPModule& m, int k);
ModuleMap exterior_power(const ModuleMap& f, int k);
ModuleMap symmetric_power(const ModuleMap& f, int k);
/// Product a_1 · ... · a_k of elements of M inside S^k M.
PolyVector symmetric_product(const FPModule& m, const std::vector<PolyVector>& factors);
/// Wedge a_1 ∧ ... ∧ a_k inside Λ^k M.
PolyVector wedge_product(const FPModule& m, const std::vector<PolyVector>& factors);

/// S(E) = A[T_1..T_k]/L with L generated by Σ_i P_{ji} T_i.
struct SymAlgebra {
  RingPtr base;
  FPModule module;
  RingPtr ring;
  std::vector<int> t_vars;     // indices of T_1..T_k in `ring`
  std::vector<int> t_degrees;  // module degree of T_i (generator degree of e_i)
  Ideal relations;             // L

  Polynomial t(int i) const { return Polynomial::variable(ring, t_vars[static_cast<std::size_t>(i)]); }
  /// Σ_i c_i T_i for coefficients in the base ring.
  Polynomial linear_form(const PolyVector& coords) const;
  /// Degree in the T variables of a T-homogeneous polynomial (nullopt otherwise).
  std::optional<int> sym_degree(const Polynomial& p) const;
  /// The ideal generated by all forms of positive symmetric degree, i.e. L + (T).
  Ideal positive_part() const;
};

SymAlgebra symmetric_algebra(const FPModule& e, const std::string& prefix = "T");

Ideal fitting_ideal(const FPModule& m, int j);
int generic_rank(const FPModule& m);
/// True iff Fitt_{r-1}(M) = 0 and dim A/Fitt_r(M) <= 0; r must be the generic rank.
bool isolated_singularity_check(const FPModule& m, int r);

/// Submodule m·M' generated by x_v·v (x_v of positive weight) inside A^g.
std::vector<PolyVector> irrelevant_multiples(const RingPtr& ring, const std::vector<PolyVector>& gens);

}  // namespace degloci
