#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <vector>

#include "rank1/rational.hpp"

namespace rank1 {

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class RankError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dense row-major matrix of exact rationals.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);
  RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
  RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RatMatrix from_rows(const std::vector<Vec>& rows);
  static RatMatrix identity(std::size_t n);
  static RatMatrix outer(const Vec& a, const Vec& b);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;
  const std::vector<Rational>& entries() const { return data_; }

  RatMatrix transpose() const;

  /// M v
  Vec operator*(const Vec& v) const;
  /// Mᵀ v
  Vec transpose_times(const Vec& v) const;

  RatMatrix operator+(const RatMatrix& o) const;
  RatMatrix operator-(const RatMatrix& o) const;
  RatMatrix operator-() const;
  RatMatrix operator*(const Rational& s) const;

  bool operator==(const RatMatrix& o) const = default;

  bool is_zero() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Exact rank by fraction-free (Bareiss) elimination on the row-scaled
/// integer matrix.
std::size_t matrix_rank(const RatMatrix& m);

struct RankOneFactorization {
  Vec a;
  Vec b;

  RatMatrix outer() const { return RatMatrix::outer(a, b); }
};

/// a = column j0 of M, b = row i0 of M divided by M(i0, j0), where (i0, j0)
/// is the first nonzero entry in row-major order. Throws RankError when M is
/// zero or not of rank one.
RankOneFactorization factor_rank_one(const RatMatrix& m);

/// A − 1bᵀ: subtracts b_j from every entry of column j.
RatMatrix shift_columns(const RatMatrix& a, const Vec& b);

// Small dense linear algebra used by the face and vertex routines.

/// Unique solution of the square system M z = rhs, or nullopt if M is singular.
std::optional<Vec> solve_square(const RatMatrix& m, const Vec& rhs);

/// Basis of {z : M z = 0}. M may have zero rows (then the basis is the identity).
std::vector<Vec> null_space(const RatMatrix& m);

}  // namespace rank1
