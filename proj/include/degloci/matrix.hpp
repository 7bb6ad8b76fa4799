#pragma once

#include <vector>

#include "degloci/ideal.hpp"

namespace degloci {

/// Dense polynomial matrix stored as rows. All entries share one ring.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(RingPtr ring, int rows, int cols);
  PolyMatrix(RingPtr ring, std::vector<PolyVector> rows);

  static PolyMatrix identity(RingPtr ring, int n);

  const RingPtr& ring() const { return ring_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Polynomial& at(int r, int c) { return data_[static_cast<std::size_t>(r * cols_ + c)]; }
  const Polynomial& at(int r, int c) const { return data_[static_cast<std::size_t>(r * cols_ + c)]; }
  PolyVector row(int r) const;
  PolyVector col(int c) const;

  PolyMatrix transpose() const;
  PolyMatrix operator*(const PolyMatrix& o) const;
  PolyMatrix operator+(const PolyMatrix& o) const;
  PolyVector apply(const PolyVector& v) const;
  bool is_zero() const;
  bool is_alternating() const;
  bool is_symmetric() const;
  PolyMatrix submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const;
  PolyMatrix in_ring(const RingPtr& target) const;
  PolyMatrix substitute(const RingPtr& target, const PolyVector& images) const;

  std::string to_string() const;
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);

 private:
  RingPtr ring_;
  int rows_ = 0;
  int cols_ = 0;
  PolyVector data_;
};

Polynomial determinant(const PolyMatrix& m);
/// All k x k minors (in lexicographic order of row then column subsets),
/// zero minors included.
PolyVector minors(const PolyMatrix& m, int k);
/// Ideal of k x k minors; (1) for k <= 0, (0) for k > min(rows, cols).
Ideal minors_ideal(const PolyMatrix& m, int k);

/// Pfaffian of an alternating matrix (0 for odd size). Throws PreconditionError
/// when the matrix is not alternating.
Polynomial pfaffian(const PolyMatrix& m);
/// Ideal of the k x k Pfaffians of principal submatrices (k even).
Ideal pfaffian_ideal(const PolyMatrix& m, int k);

/// Rank over the fraction field (fraction-free elimination).
int rank_over_fraction_field(const PolyMatrix& m);

/// All k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<int>> subsets(int n, int k);

}  // namespace degloci
