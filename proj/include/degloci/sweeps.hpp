#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "degloci/connectedness.hpp"

namespace degloci {

/// Small deterministic generator (splitmix64), identical on every platform.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /// Uniform in [lo, hi].
  int range(int lo, int hi);
  bool coin() { return (next() & 1u) != 0; }

 private:
  std::uint64_t state_;
};

/// Random linear form Σ c_v x_v with 1..2 variables and coefficients in [-3, 3]
/// (possibly zero).
Polynomial random_linear_form(const RingPtr& ring, SeededRng& rng);
PolyMatrix random_linear_matrix(const RingPtr& ring, int rows, int cols, SeededRng& rng);

struct GenericDimCase {
  Flavor flavor = Flavor::Generic;
  int rows = 0;  // n (target rank) for the generic flavor, else m
  int cols = 0;  // m
  int t = 0;
  int dim = 0;
};

/// dim of the generic determinantal locus of A^cols -> A^rows over a field
/// (cols·rows <= limit), of symmetric m x m (m <= limit) or alternating m x m
/// (m <= limit, even t).
std::vector<GenericDimCase> generic_dimension_sweep(Flavor flavor, int limit, const Field& field);

/// Generic alternating m x m matrix over `field`, t even: every (t+2)-Pfaffian
/// lies in the radical of the (t+1)-minors and conversely.
bool alternating_radicals_agree(int m, int t, const Field& field);

struct RandomBoundCase {
  int nvars = 0;
  int rank_m = 0;
  int rank_n = 0;
  int t = 0;
  int tau = 0;
  int dim_ambient = 0;
  int dim_locus = 0;
  Verdict verdict = Verdict::Holds;
};

/// Seeded random f ∈ m·Hom(A^a, A^b), a, b <= max_rank, over 2..max_vars variables.
std::vector<RandomBoundCase> random_bound_sweep(int count, int max_vars, int max_rank, std::uint64_t seed,
                                                const Field& field);

/// One instance of a closure property of (p-)ample pairs at a single level.
struct ClosureCase {
  int property = 0;  // 1, 2, 4, 5 or 6
  int level = 0;     // a for p-ample, n for ample
  bool premise = false;
  bool conclusion = false;
  bool consistent() const { return !premise || conclusion; }
};

/// Random small modules over two variables. `p_ample` selects Frobenius
/// levels (needs prime characteristic), otherwise symmetric-power levels.
std::vector<ClosureCase> closure_sweep(const Field& field, bool p_ample, int count, int max_level, std::uint64_t seed);

/// Face-complex reference answer for V(I), I square-free monomial with the
/// given generator supports over n variables: enumerates all faces, and
/// decides connectedness in dimension d from the definition.
bool face_complex_connected(const std::vector<std::uint32_t>& supports, int n, int d);

struct OracleCase {
  int nvars = 0;
  std::vector<std::uint32_t> supports;
  int d = 0;
  bool criterion = false;
  bool oracle = false;
};

/// Random square-free monomial ideals in <= max_vars variables; every d in
/// [0, n - 1] is compared.
std::vector<OracleCase> connectedness_oracle_sweep(int samples, int max_vars, std::uint64_t seed);

}  // namespace degloci
