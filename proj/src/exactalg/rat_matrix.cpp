#include "pairloc/rat_matrix.hpp"

#include "pairloc/error.hpp"

namespace pairloc {

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorKind::InvalidArgument, "matrix shapes do not match");
  RatMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

std::vector<Rat> RatMatrix::apply(const std::vector<Rat>& v) const {
  if (v.size() != cols_) throw Error(ErrorKind::InvalidArgument, "vector length does not match matrix");
  std::vector<Rat> out(rows_, Rat(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
  return out;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RatMatrix& m, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    }
    const Rat inv = Rat(1) / m(row, col);
    for (std::size_t j = 0; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      const Rat f = m(r, col);
      for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t RatMatrix::rank() const {
  RatMatrix copy = *this;
  return rref(copy, cols_).size();
}

RatMatrix RatMatrix::inverse() const {
  if (rows_ != cols_) throw Error(ErrorKind::SingularMatrix, "matrix is not square");
  const std::size_t n = rows_;
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
    aug(i, n + i) = 1;
  }
  if (rref(aug, n).size() != n) throw Error(ErrorKind::SingularMatrix, "matrix of size " + std::to_string(n) + " is singular");
  RatMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
  return out;
}

std::optional<std::vector<Rat>> solve_consistent(const RatMatrix& A, const std::vector<Rat>& b) {
  if (b.size() != A.rows()) throw Error(ErrorKind::InvalidArgument, "right-hand side length does not match");
  RatMatrix aug(A.rows(), A.cols() + 1);
  for (std::size_t i = 0; i < A.rows(); ++i) {
    for (std::size_t j = 0; j < A.cols(); ++j) aug(i, j) = A(i, j);
    aug(i, A.cols()) = b[i];
  }
  const auto pivots = rref(aug, A.cols());
  for (std::size_t r = pivots.size(); r < aug.rows(); ++r) {
    if (aug(r, A.cols()) != 0) return std::nullopt;
  }
  std::vector<Rat> x(A.cols(), Rat(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, A.cols());
  return x;
}

}  // namespace pairloc
