#include "rank1/matrix.hpp"

#include <utility>

namespace rank1 {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_) throw DimensionError("RatMatrix: entry count does not match shape");
}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("RatMatrix: ragged rows");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

RatMatrix RatMatrix::from_rows(const std::vector<Vec>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  std::vector<Rational> data;
  data.reserve(rows.size() * cols);
  for (const auto& r : rows) {
    if (r.size() != cols) throw DimensionError("RatMatrix: ragged rows");
    data.insert(data.end(), r.begin(), r.end());
  }
  return RatMatrix(rows.size(), cols, std::move(data));
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::outer(const Vec& a, const Vec& b) {
  RatMatrix m(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) m(i, j) = a[i] * b[j];
  return m;
}

Vec RatMatrix::row(std::size_t i) const {
  return Vec(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
             data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vec RatMatrix::col(std::size_t j) const {
  Vec out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Vec RatMatrix::operator*(const Vec& v) const {
  if (v.size() != cols_) throw DimensionError("matrix-vector product: length mismatch");
  Vec out(rows_, Rational(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (sgn(v[j]) != 0) out[i] += (*this)(i, j) * v[j];
  return out;
}

Vec RatMatrix::transpose_times(const Vec& v) const {
  if (v.size() != rows_) throw DimensionError("transposed matrix-vector product: length mismatch");
  Vec out(cols_, Rational(0));
  for (std::size_t i = 0; i < rows_; ++i) {
    if (sgn(v[i]) == 0) continue;
    for (std::size_t j = 0; j < cols_; ++j) out[j] += (*this)(i, j) * v[i];
  }
  return out;
}

RatMatrix RatMatrix::operator+(const RatMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix sum: shape mismatch");
  RatMatrix r(*this);
  for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] += o.data_[k];
  return r;
}

RatMatrix RatMatrix::operator-(const RatMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix difference: shape mismatch");
  RatMatrix r(*this);
  for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] -= o.data_[k];
  return r;
}

RatMatrix RatMatrix::operator-() const {
  RatMatrix r(*this);
  for (auto& e : r.data_) e = -e;
  return r;
}

RatMatrix RatMatrix::operator*(const Rational& s) const {
  RatMatrix r(*this);
  for (auto& e : r.data_) e *= s;
  return r;
}

bool RatMatrix::is_zero() const {
  for (const auto& e : data_)
    if (sgn(e) != 0) return false;
  return true;
}

std::size_t matrix_rank(const RatMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  if (rows == 0 || cols == 0) return 0;

  // Clear denominators row by row so the elimination runs over integers.
  std::vector<std::vector<Integer>> w(rows, std::vector<Integer>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < cols; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < cols; ++j) w[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
  }

  Integer prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && w[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(w[pivot], w[rank]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        w[i][j] = (w[rank][c] * w[i][j] - w[i][c] * w[rank][j]);
        mpz_divexact(w[i][j].get_mpz_t(), w[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      w[i][c] = 0;
    }
    prev = w[rank][c];
    ++rank;
  }
  return rank;
}

RankOneFactorization factor_rank_one(const RatMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (sgn(m(i, j)) == 0) continue;
      RankOneFactorization f;
      f.a = m.col(j);
      f.b = m.row(i);
      const Rational pivot = m(i, j);
      for (auto& e : f.b) e /= pivot;
      if (f.outer() != m) throw RankError("matrix has rank greater than one");
      return f;
    }
  }
  throw RankError("zero matrix has no rank-one factorization");
}

RatMatrix shift_columns(const RatMatrix& a, const Vec& b) {
  if (b.size() != a.cols()) throw DimensionError("shift_columns: b must have one entry per column");
  RatMatrix r(a);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) -= b[j];
  return r;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(std::vector<Vec>& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && sgn(rows[p][c]) == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    const Rational inv = 1 / rows[r][c];
    for (auto& e : rows[r]) e *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || sgn(rows[i][c]) == 0) continue;
      const Rational f = rows[i][c];
      for (std::size_t j = c; j < rows[i].size(); ++j)
        if (sgn(rows[r][j]) != 0) rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::optional<Vec> solve_square(const RatMatrix& m, const Vec& rhs) {
  const std::size_t n = m.rows();
  if (m.cols() != n || rhs.size() != n) throw DimensionError("solve_square: shape mismatch");
  std::vector<Vec> aug(n);
  for (std::size_t i = 0; i < n; ++i) {
    aug[i] = m.row(i);
    aug[i].push_back(rhs[i]);
  }
  const auto pivots = rref(aug, n);
  if (pivots.size() != n) return std::nullopt;
  Vec z(n);
  for (std::size_t i = 0; i < n; ++i) z[i] = aug[i][n];
  return z;
}

std::vector<Vec> null_space(const RatMatrix& m) {
  const std::size_t cols = m.cols();
  std::vector<Vec> rows(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) rows[i] = m.row(i);
  const auto pivots = rref(rows, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vec z(cols, Rational(0));
    z[f] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) z[pivots[k]] = -rows[k][f];
    basis.push_back(std::move(z));
  }
  return basis;
}

}  // namespace rank1
