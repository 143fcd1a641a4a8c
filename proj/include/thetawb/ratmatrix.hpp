// Dense matrices over Q with exact rank, echelon form and kernels.
#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include <gmpxx.h>

namespace thetawb {

class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  RatMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  mpq_class& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const mpq_class& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const mpq_class> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  /// Appends the rows of another matrix with the same column count.
  void append_rows(const RatMatrix& other);

  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpq_class> data_;
};

/// Exact rank by fraction-free (Bareiss) elimination. Rows are first scaled
/// to integers; row scaling does not change the rank.
std::size_t rank(const RatMatrix& m);

struct Echelon {
  RatMatrix rref;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form by Gauss-Jordan elimination over Q.
Echelon reduced_row_echelon(RatMatrix m);

/// Basis of {v : M v = 0}: one vector per free column f, with 1 in position
/// f and zeros in all other free positions. Ordered by increasing f.
std::vector<std::vector<mpq_class>> kernel_basis(const RatMatrix& m);

/// A solution of M v = b, or nullopt when the system is inconsistent.
/// Free variables are set to zero.
std::optional<std::vector<mpq_class>> solve(const RatMatrix& m, std::span<const mpq_class> b);

}  // namespace thetawb
