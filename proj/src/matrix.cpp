#include "degloci/matrix.hpp"

#include <unordered_map>

#include "degloci/error.hpp"

namespace degloci {

PolyMatrix::PolyMatrix(RingPtr ring, int rows, int cols) : ring_(std::move(ring)), rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw PreconditionError("negative matrix dimension");
  data_.assign(static_cast<std::size_t>(rows * cols), Polynomial(ring_));
}

PolyMatrix::PolyMatrix(RingPtr ring, std::vector<PolyVector> rows) : ring_(std::move(ring)) {
  rows_ = static_cast<int>(rows.size());
  cols_ = rows.empty() ? 0 : static_cast<int>(rows.front().size());
  for (auto& r : rows) {
    if (static_cast<int>(r.size()) != cols_) throw PreconditionError("ragged matrix rows");
    for (auto& e : r) {
      if (!e.ring()) e = Polynomial(ring_);
      require_same_ring(ring_, e.ring(), "matrix entry");
      data_.push_back(std::move(e));
    }
  }
}

PolyMatrix PolyMatrix::identity(RingPtr ring, int n) {
  PolyMatrix m(ring, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Polynomial::from_int(ring, 1);
  return m;
}

PolyVector PolyMatrix::row(int r) const {
  PolyVector v;
  for (int c = 0; c < cols_; ++c) v.push_back(at(r, c));
  return v;
}

PolyVector PolyMatrix::col(int c) const {
  PolyVector v;
  for (int r = 0; r < rows_; ++r) v.push_back(at(r, c));
  return v;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix t(ring_, cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
  if (cols_ != o.rows_) throw PreconditionError("matrix product: dimension mismatch");
  require_same_ring(ring_, o.ring_, "matrix product");
  PolyMatrix p(ring_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      if (at(i, k).is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j)
        if (!o.at(k, j).is_zero()) p.at(i, j) += at(i, k) * o.at(k, j);
    }
  return p;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw PreconditionError("matrix sum: dimension mismatch");
  PolyMatrix s = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] += o.data_[i];
  return s;
}

PolyVector PolyMatrix::apply(const PolyVector& v) const {
  if (static_cast<int>(v.size()) != cols_) throw PreconditionError("matrix-vector product: dimension mismatch");
  PolyVector out(static_cast<std::size_t>(rows_), Polynomial(ring_));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero() && !v[static_cast<std::size_t>(j)].is_zero())
        out[static_cast<std::size_t>(i)] += at(i, j) * v[static_cast<std::size_t>(j)];
  return out;
}

bool PolyMatrix::is_zero() const {
  for (const auto& e : data_)
    if (!e.is_zero()) return false;
  return true;
}

bool PolyMatrix::is_alternating() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i) {
    if (!at(i, i).is_zero()) return false;
    for (int j = i + 1; j < cols_; ++j)
      if (at(i, j) != -at(j, i)) return false;
  }
  return true;
}

bool PolyMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = i + 1; j < cols_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

PolyMatrix PolyMatrix::submatrix(const std::vector<int>& rs, const std::vector<int>& cs) const {
  PolyMatrix s(ring_, static_cast<int>(rs.size()), static_cast<int>(cs.size()));
  for (std::size_t i = 0; i < rs.size(); ++i)
    for (std::size_t j = 0; j < cs.size(); ++j)
      s.at(static_cast<int>(i), static_cast<int>(j)) = at(rs[i], cs[j]);
  return s;
}

PolyMatrix PolyMatrix::in_ring(const RingPtr& target) const {
  PolyMatrix s(target, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] = data_[i].in_ring(target);
  return s;
}

PolyMatrix PolyMatrix::substitute(const RingPtr& target, const PolyVector& images) const {
  PolyMatrix s(target, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] = data_[i].substitute(target, images);
  return s;
}

std::string PolyMatrix::to_string() const {
  std::string s = "[";
  for (int r = 0; r < rows_; ++r) {
    if (r) s += ", ";
    s += degloci::to_string(row(r));
  }
  return s + "]";
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) cur[static_cast<std::size_t>(i)] = i;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

namespace {

// Minors sharing sub-minors: the minor on rows r_0..r_{k-1} (the first k of
// a fixed row list) and a column mask is expanded along its last row.
class MinorTable {
 public:
  explicit MinorTable(const PolyMatrix& m) : m_(m) {}

  Polynomial get(const std::vector<int>& rows, std::uint32_t colmask) {
    if (rows.empty()) return Polynomial::from_int(m_.ring(), 1);
    std::uint32_t rowmask = 0;
    for (int r : rows) rowmask |= 1U << r;
    std::uint64_t key = (static_cast<std::uint64_t>(rowmask) << 32) | colmask;
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    std::vector<int> head(rows.begin(), rows.end() - 1);
    int last = rows.back();
    Polynomial sum(m_.ring());
    int pos = 0;
    int k = static_cast<int>(rows.size());
    for (int c = 0; c < m_.cols(); ++c) {
      if (!(colmask & (1U << c))) continue;
      // Column c is at position `pos` among the selected ones; expanding
      // along the last row gives sign (-1)^{(k-1)+pos}.
      const Polynomial& e = m_.at(last, c);
      if (!e.is_zero()) {
        Polynomial sub = get(head, colmask & ~(1U << c));
        if (!sub.is_zero()) {
          Polynomial term = e * sub;
          if ((k - 1 + pos) % 2 == 0)
            sum += term;
          else
            sum -= term;
        }
      }
      ++pos;
    }
    memo_.emplace(key, sum);
    return sum;
  }

 private:
  const PolyMatrix& m_;
  std::unordered_map<std::uint64_t, Polynomial> memo_;
};

}  // namespace

Polynomial determinant(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw PreconditionError("determinant of a non-square matrix");
  if (m.rows() > 32) throw PreconditionError("matrix too large");
  MinorTable t(m);
  std::vector<int> rows;
  for (int i = 0; i < m.rows(); ++i) rows.push_back(i);
  std::uint32_t all = m.cols() == 32 ? 0xFFFFFFFFU : ((1U << m.cols()) - 1U);
  return t.get(rows, all);
}

PolyVector minors(const PolyMatrix& m, int k) {
  PolyVector out;
  if (k <= 0 || k > m.rows() || k > m.cols()) return out;
  if (m.rows() > 32 || m.cols() > 32) throw PreconditionError("matrix too large");
  MinorTable t(m);
  for (const auto& rs : subsets(m.rows(), k))
    for (const auto& cs : subsets(m.cols(), k)) {
      std::uint32_t mask = 0;
      for (int c : cs) mask |= 1U << c;
      out.push_back(t.get(rs, mask));
    }
  return out;
}

Ideal minors_ideal(const PolyMatrix& m, int k) {
  if (k <= 0) return Ideal::unit(m.ring());
  return Ideal(m.ring(), minors(m, k));
}

namespace {

Polynomial pfaffian_rec(const PolyMatrix& m, std::vector<int> idx) {
  if (idx.empty()) return Polynomial::from_int(m.ring(), 1);
  if (idx.size() % 2 == 1) return Polynomial(m.ring());
  int first = idx.front();
  Polynomial sum(m.ring());
  for (std::size_t j = 1; j < idx.size(); ++j) {
    const Polynomial& e = m.at(first, idx[j]);
    if (e.is_zero()) continue;
    std::vector<int> rest;
    for (std::size_t l = 1; l < idx.size(); ++l)
      if (l != j) rest.push_back(idx[l]);
    Polynomial term = e * pfaffian_rec(m, rest);
    // Sign (-1)^{j+1} for 0-based position j of the partner (first row expansion).
    if (j % 2 == 1)
      sum += term;
    else
      sum -= term;
  }
  return sum;
}

}  // namespace

Polynomial pfaffian(const PolyMatrix& m) {
  if (!m.is_alternating()) throw PreconditionError("pfaffian: matrix is not alternating");
  std::vector<int> idx;
  for (int i = 0; i < m.rows(); ++i) idx.push_back(i);
  return pfaffian_rec(m, idx);
}

Ideal pfaffian_ideal(const PolyMatrix& m, int k) {
  if (!m.is_alternating()) throw PreconditionError("pfaffian_ideal: matrix is not alternating");
  if (k <= 0) return Ideal::unit(m.ring());
  if (k % 2 == 1) throw PreconditionError("pfaffian_ideal: order must be even");
  PolyVector g;
  for (const auto& s : subsets(m.rows(), k)) g.push_back(pfaffian_rec(m, s));
  return Ideal(m.ring(), std::move(g));
}

int rank_over_fraction_field(const PolyMatrix& m) {
  // Bareiss fraction-free elimination; every division is exact.
  std::vector<PolyVector> a;
  for (int r = 0; r < m.rows(); ++r) a.push_back(m.row(r));
  int rows = m.rows();
  int cols = m.cols();
  Polynomial prev = Polynomial::from_int(m.ring(), 1);
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    std::size_t best = 0;
    for (int r = rank; r < rows; ++r) {
      const auto& e = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
      if (!e.is_zero() && (pivot < 0 || e.size() < best)) {
        pivot = r;
        best = e.size();
      }
    }
    if (pivot < 0) continue;
    std::swap(a[static_cast<std::size_t>(pivot)], a[static_cast<std::size_t>(rank)]);
    const PolyVector& prow = a[static_cast<std::size_t>(rank)];
    const Polynomial& p = prow[static_cast<std::size_t>(c)];
    for (int r = rank + 1; r < rows; ++r) {
      PolyVector& row = a[static_cast<std::size_t>(r)];
      Polynomial factor = row[static_cast<std::size_t>(c)];
      for (int j = c; j < cols; ++j) {
        auto jj = static_cast<std::size_t>(j);
        Polynomial v = p * row[jj] - factor * prow[jj];
        row[jj] = divide_exact(v, prev);
      }
    }
    prev = p;
    ++rank;
  }
  return rank;
}

}  // namespace degloci
