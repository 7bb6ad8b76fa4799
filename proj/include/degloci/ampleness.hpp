#pragma once

#include <string>
#include <vector>

#include "degloci/module.hpp"

namespace degloci {

/// F^a(M): presentation entries raised to the q = p^a power, generator
/// degrees multiplied by q. Requires a prime field.
FPModule frobenius_module(const FPModule& m, int a);
/// Image of m ⊗ 1 in F^a(M).
PolyVector frobenius_element(const PolyVector& v, int a);

/// True iff the images of `elems` under M -> M^vv lie in m·M^vv.
/// The double dual is realized inside A^k through the k dual generators.
bool lands_in_m_double_dual(const FPModule& m, const std::vector<PolyVector>& elems);

/// Per-level outcome of a finite ampleness test. Levels are Frobenius
/// exponents a (p-ample) or symmetric powers n (ample), tested independently.
struct AmpleVerdict {
  std::string kind;  // "p-ample" or "ample"
  std::vector<int> levels;
  std::vector<bool> holds;

  bool holds_on_range() const;
  /// First failing level, or 0 when every tested level holds.
  int first_failure() const;
  /// "holds-on-range" or "fails-at-<kind letter>=<level>".
  std::string summary() const;
};

bool p_ample_at(const std::vector<PolyVector>& mprime, const FPModule& m, int a);
AmpleVerdict p_ample_check(const std::vector<PolyVector>& mprime, const FPModule& m, int a_max = 3);

bool ample_at(const std::vector<PolyVector>& mprime, const FPModule& m, int n);
AmpleVerdict ample_check(const std::vector<PolyVector>& mprime, const FPModule& m, int n_max = 3);

/// Generators of M'·S^{n-1}M inside S^n M.
std::vector<PolyVector> product_with_power(const FPModule& m, const std::vector<PolyVector>& mprime, int n);

}  // namespace degloci
