#pragma once

#include <vector>

#include "degloci/polynomial.hpp"

namespace degloci {

/// Term of a vector in a free module A^r: coeff * mono * e_comp.
struct VTerm {
  Monomial mono;
  int comp = 0;
  Coeff coeff;
};

/// Sparse module vector, terms in descending module order, no zero coefficients.
using Vec = std::vector<VTerm>;

/// Module monomial order. Components below `split` dominate every other
/// component; within each group terms compare term-over-position (TOP) or
/// position-over-term (POT). Smaller component indices rank higher.
struct ModuleOrder {
  MonomialOrder mono;
  bool position_first = false;
  int split = 0;

  int compare(const Monomial& a, int ca, const Monomial& b, int cb) const {
    if (split > 0 && (ca < split) != (cb < split)) return ca < split ? 1 : -1;
    if (position_first && ca != cb) return ca < cb ? 1 : -1;
    int c = mono.compare(a, b);
    if (c != 0) return c;
    if (ca != cb) return ca < cb ? 1 : -1;
    return 0;
  }
  int compare(const VTerm& a, const VTerm& b) const { return compare(a.mono, a.comp, b.mono, b.comp); }
};

/// Process-wide default for the degree guard (initially 40, or the value of
/// the DEGLOCI_MAX_DEGREE environment variable). Thread safe.
int default_max_degree();
void set_default_max_degree(int cap);

/// Override of the default degree guard for the current thread.
class DegreeGuardScope {
 public:
  explicit DegreeGuardScope(int cap);
  ~DegreeGuardScope();
  DegreeGuardScope(const DegreeGuardScope&) = delete;
  DegreeGuardScope& operator=(const DegreeGuardScope&) = delete;

 private:
  int saved_;
};

struct GroebnerStats {
  std::size_t pairs_processed = 0;
  std::size_t zero_reductions = 0;
};

/// Reduced, monic Gröbner basis of the submodule generated by `gens`, sorted
/// by leading term in descending order. Throws ResourceError when an S-pair
/// or new basis element exceeds `max_degree` (negative: use the default).
std::vector<Vec> groebner_basis(const Field& field, const ModuleOrder& order, std::vector<Vec> gens,
                                int max_degree = -1, GroebnerStats* stats = nullptr);

/// Full normal form of v modulo `basis` (any generating set; remainder is
/// unique only for a Gröbner basis).
Vec reduce_vec(const Field& field, const ModuleOrder& order, Vec v, const std::vector<Vec>& basis);

/// Reduces only while the leading term is divisible; stops at the first
/// irreducible leading term. With `stop_below` >= 0 it also stops once the
/// leading component is >= stop_below.
Vec top_reduce_vec(const Field& field, const ModuleOrder& order, Vec v, const std::vector<Vec>& basis,
                   int stop_below = -1);

/// Buchberger criterion: every S-vector reduces to zero.
bool is_groebner_basis(const Field& field, const ModuleOrder& order, const std::vector<Vec>& basis);

// Helpers shared by the ideal and module layers.
Vec vec_sort(const Field& field, const ModuleOrder& order, Vec v);
Vec vec_add(const Field& field, const ModuleOrder& order, const Vec& a, const Vec& b);
Vec vec_scale(const Field& field, const Vec& a, const Monomial& m, const Coeff& c);
Vec vec_monic(const Field& field, const Vec& a);
int vec_max_degree(const Vec& a);

}  // namespace degloci
