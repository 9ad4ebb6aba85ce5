#pragma once

#include <optional>
#include <vector>

#include "kt/eigen.hpp"
#include "kt/errors.hpp"

namespace kt {

// Exact dense linear algebra over an arbitrary field scalar, plus
// division-free determinants and characteristic polynomials over
// commutative rings. All routines take Eigen dense matrices.

/// Row-reduce in place; returns the rank. Records pivot columns if asked.
template <class T>
int rref_in_place(DenseMatrix<T>& m, std::vector<int>* pivotCols = nullptr) {
  const int rows = static_cast<int>(m.rows());
  const int cols = static_cast<int>(m.cols());
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (!m(r, col).is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != rank) m.row(pivot).swap(m.row(rank));
    T lcInv = inv(m(rank, col));
    for (int c = col; c < cols; ++c) m(rank, c) = lcInv * m(rank, c);
    for (int r = 0; r < rows; ++r) {
      if (r == rank || m(r, col).is_zero()) continue;
      T f = m(r, col);
      for (int c = col; c < cols; ++c) m(r, c) = m(r, c) - f * m(rank, c);
    }
    if (pivotCols) pivotCols->push_back(col);
    ++rank;
  }
  return rank;
}

template <class T>
int rank_of(DenseMatrix<T> m) {
  return rref_in_place(m);
}

/// Basis of the right kernel, one column per basis vector.
template <class T>
DenseMatrix<T> kernel_basis(DenseMatrix<T> m) {
  const int cols = static_cast<int>(m.cols());
  std::vector<int> pivots;
  int rank = rref_in_place(m, &pivots);
  std::vector<bool> isPivot(cols, false);
  for (int c : pivots) isPivot[c] = true;
  DenseMatrix<T> ker(cols, cols - rank);
  int idx = 0;
  for (int freeCol = 0; freeCol < cols; ++freeCol) {
    if (isPivot[freeCol]) continue;
    for (int r = 0; r < cols; ++r) ker(r, idx) = T(0);
    ker(freeCol, idx) = T(1);
    for (int pr = 0; pr < rank; ++pr) ker(pivots[pr], idx) = -m(pr, freeCol);
    ++idx;
  }
  return ker;
}

/// Solves A x = b; returns nullopt if inconsistent. When the system is
/// underdetermined the free variables are set to zero.
template <class T>
std::optional<DenseVector<T>> solve_linear(const DenseMatrix<T>& a,
                                           const DenseVector<T>& b) {
  const int rows = static_cast<int>(a.rows());
  const int cols = static_cast<int>(a.cols());
  DenseMatrix<T> aug(rows, cols + 1);
  aug.block(0, 0, rows, cols) = a;
  for (int r = 0; r < rows; ++r) aug(r, cols) = b(r);
  std::vector<int> pivots;
  int rank = rref_in_place(aug, &pivots);
  // inconsistent iff a pivot lands in the last column
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  DenseVector<T> x(cols);
  for (int c = 0; c < cols; ++c) x(c) = T(0);
  for (int pr = 0; pr < rank; ++pr) x(pivots[pr]) = aug(pr, cols);
  return x;
}

template <class T>
DenseMatrix<T> inverse_matrix(const DenseMatrix<T>& a) {
  const int n = static_cast<int>(a.rows());
  internal_check(a.cols() == n, "inverse of non-square matrix");
  DenseMatrix<T> aug(n, 2 * n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      aug(r, c) = a(r, c);
      aug(r, n + c) = T(r == c ? 1 : 0);
    }
  int rank = rref_in_place(aug);
  require(rank == n, "matrix is singular");
  return aug.block(0, n, n, n);
}

/// Kronecker product, row-major block convention.
template <class T>
DenseMatrix<T> kron(const DenseMatrix<T>& a, const DenseMatrix<T>& b) {
  DenseMatrix<T> r(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l)
          r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return r;
}

/// Division-free determinant over a commutative ring, by Laplace expansion
/// memoized over column subsets. Fine through dimension ~16.
template <class T>
T det_ring(const DenseMatrix<T>& m, const T& zero, const T& one) {
  const int n = static_cast<int>(m.rows());
  internal_check(m.cols() == n, "determinant of non-square matrix");
  require(n <= 16, "ring determinant beyond desk scale");
  if (n == 0) return one;
  std::vector<T> d(size_t(1) << n, zero);
  d[0] = one;
  for (std::uint32_t s = 1; s < (1u << n); ++s) {
    int r = __builtin_popcount(s) - 1;  // expand along row r of the prefix
    T acc = zero;
    int pos = 0;
    for (int j = 0; j < n; ++j) {
      if (!(s & (1u << j))) continue;
      T term = m(r, j) * d[s & ~(1u << j)];
      if ((r + pos) % 2 == 0)
        acc += term;
      else
        acc -= term;
      ++pos;
    }
    d[s] = acc;
  }
  return d[(size_t(1) << n) - 1];
}

/// Characteristic polynomial det(X I - M) over a commutative ring, ascending
/// coefficients, leading coefficient one. Same memoization as det_ring.
template <class T>
std::vector<T> charpoly_ring(const DenseMatrix<T>& m, const T& zero, const T& one) {
  const int n = static_cast<int>(m.rows());
  internal_check(m.cols() == n, "charpoly of non-square matrix");
  require(n <= 16, "ring charpoly beyond desk scale");
  using TPoly = std::vector<T>;  // coefficients in the charpoly variable
  auto padd = [&](TPoly& a, const TPoly& b, bool negate) {
    if (a.size() < b.size()) a.resize(b.size(), zero);
    for (size_t i = 0; i < b.size(); ++i) {
      if (negate)
        a[i] -= b[i];
      else
        a[i] += b[i];
    }
  };
  // multiply P by (X*[i==j] - M(i,j))
  auto pmul_entry = [&](const TPoly& p, int i, int j) {
    TPoly r(p.size() + 1, zero);
    T c = -m(i, j);
    for (size_t k = 0; k < p.size(); ++k) {
      r[k] += c * p[k];
      if (i == j) r[k + 1] += p[k];
    }
    while (r.size() > 1 && r.back() == zero) r.pop_back();
    return r;
  };
  if (n == 0) return {one};
  std::vector<TPoly> d(size_t(1) << n);
  d[0] = TPoly{one};
  for (std::uint32_t s = 1; s < (1u << n); ++s) {
    int r = __builtin_popcount(s) - 1;
    TPoly acc{zero};
    int pos = 0;
    for (int j = 0; j < n; ++j) {
      if (!(s & (1u << j))) continue;
      TPoly term = pmul_entry(d[s & ~(1u << j)], r, j);
      padd(acc, term, (r + pos) % 2 == 1);
      ++pos;
    }
    d[s] = std::move(acc);
  }
  TPoly out = d[(size_t(1) << n) - 1];
  out.resize(n + 1, zero);
  return out;
}

// --- dense elimination mod a small prime (for big semilinear systems) -----

/// Dimension of the right kernel of a dense matrix over F_p. Rows are added
/// incrementally; storage is bit-packed for p = 2.
class GFpKernel {
 public:
  GFpKernel(long long p, int cols);

  /// Reduce a row against the current basis; keeps it if independent.
  void add_row(const std::vector<long long>& row);

  int rank() const { return rank_; }
  int kernel_dim() const { return cols_ - rank_; }

 private:
  long long p_;
  int cols_;
  int rank_ = 0;
  // p == 2: packed rows; otherwise small-integer rows
  std::vector<std::vector<std::uint64_t>> bitRows_;
  std::vector<int> bitPivot_;
  std::vector<std::vector<long long>> rows_;
  std::vector<int> pivot_;
};

}  // namespace kt
