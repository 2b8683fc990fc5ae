#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "pairloc/rat.hpp"

namespace pairloc {

/// Dense row-major matrix over Rat.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Rat(0)) {}
  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rat& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rat& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  std::vector<Rat> apply(const std::vector<Rat>& v) const;
  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

  std::size_t rank() const;
  /// Throws SingularMatrix.
  RatMatrix inverse() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

/// Some solution of A x = b (free variables set to zero), or nullopt when the
/// system is inconsistent.
std::optional<std::vector<Rat>> solve_consistent(const RatMatrix& A, const std::vector<Rat>& b);

}  // namespace pairloc
