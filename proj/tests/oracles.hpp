#pragma once

// Test-side reference computations. These avoid the library's LP engine and
// linear algebra so they can serve as independent checks.

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "rank1/game.hpp"

namespace oracle {

using rank1::Rational;
using rank1::RatMatrix;
using rank1::Vec;

// Gauss-Jordan on a square system; nullopt when singular.
inline std::optional<Vec> gauss(std::vector<Vec> a, Vec rhs) {
  const std::size_t n = a.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[p], a[c]);
    std::swap(rhs[p], rhs[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const Rational f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
      rhs[r] -= f * rhs[c];
    }
  }
  Vec z(n);
  for (std::size_t i = 0; i < n; ++i) z[i] = rhs[i] / a[i][i];
  return z;
}

template <class F>
void subsets(std::size_t n, std::size_t k, F&& f) {
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(std::min(k, n)), true);
  if (k > n) return;
  do {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if (pick[i]) idx.push_back(i);
    f(idx);
  } while (std::prev_permutation(pick.begin(), pick.end()));
}

// Vertices (y, t) of D = {Ay + 1t ≤ 0, 1ᵀy = 1, y ≥ 0}.
inline std::vector<Vec> d_vertices(const RatMatrix& A) {
  const std::size_t m = A.rows(), n = A.cols();
  std::set<Vec> out;
  subsets(m + n, n, [&](const std::vector<std::size_t>& tight) {
    std::vector<Vec> sys;
    Vec rhs;
    Vec ones(n + 1, Rational(1));
    ones[n] = 0;
    sys.push_back(ones);
    rhs.push_back(1);
    for (auto k : tight) {
      Vec row(n + 1, Rational(0));
      if (k < m) {
        for (std::size_t j = 0; j < n; ++j) row[j] = A(k, j);
        row[n] = 1;
      } else {
        row[k - m] = 1;
      }
      sys.push_back(row);
      rhs.push_back(0);
    }
    auto z = gauss(sys, rhs);
    if (!z) return;
    for (std::size_t j = 0; j < n; ++j)
      if ((*z)[j] < 0) return;
    for (std::size_t i = 0; i < m; ++i) {
      Rational s = (*z)[n];
      for (std::size_t j = 0; j < n; ++j) s += A(i, j) * (*z)[j];
      if (s > 0) return;
    }
    out.insert(*z);
  });
  return {out.begin(), out.end()};
}

inline Rational objective(const Vec& yt, const Vec& b, const Rational& lambda) {
  Rational s = yt.back();
  for (std::size_t j = 0; j < b.size(); ++j) s += lambda * b[j] * yt[j];
  return s;
}

inline Rational phi(const RatMatrix& A, const Vec& b, const Rational& lambda) {
  auto vs = d_vertices(A);
  Rational best = objective(vs.front(), b, lambda);
  for (const auto& v : vs) best = std::max(best, objective(v, b, lambda));
  return best;
}

// Indices (0-based) of rows / columns that are strict somewhere on the
// optimal face, found from the optimal vertices.
inline std::pair<std::vector<std::size_t>, std::vector<std::size_t>> true_sets(const RatMatrix& A, const Vec& b,
                                                                                const Rational& lambda) {
  const auto vs = d_vertices(A);
  const Rational best = phi(A, b, lambda);
  std::set<std::size_t> M, N;
  for (const auto& v : vs) {
    if (objective(v, b, lambda) != best) continue;
    for (std::size_t i = 0; i < A.rows(); ++i) {
      Rational s = v.back();
      for (std::size_t j = 0; j < A.cols(); ++j) s += A(i, j) * v[j];
      if (s < 0) M.insert(i);
    }
    for (std::size_t j = 0; j < A.cols(); ++j)
      if (v[j] > 0) N.insert(j);
  }
  return {{M.begin(), M.end()}, {N.begin(), N.end()}};
}

// Breakpoints of φ as the upper envelope of the lines λ ↦ λ·bᵀy_v + t_v.
inline std::vector<Rational> breakpoints(const RatMatrix& A, const Vec& b) {
  struct L {
    Rational s, c;
  };
  std::vector<L> lines;
  for (const auto& v : d_vertices(A)) {
    Rational s = 0;
    for (std::size_t j = 0; j < b.size(); ++j) s += b[j] * v[j];
    lines.push_back({s, v.back()});
  }
  // Start with the smallest slope, largest intercept among those.
  L cur = lines.front();
  for (const auto& l : lines)
    if (l.s < cur.s || (l.s == cur.s && l.c > cur.c)) cur = l;
  std::vector<Rational> out;
  for (;;) {
    std::optional<Rational> next;
    L best = cur;
    for (const auto& l : lines) {
      if (l.s <= cur.s) continue;
      const Rational x = (cur.c - l.c) / (l.s - cur.s);
      if (!next || x < *next || (x == *next && l.s > best.s)) {
        next = x;
        best = l;
      }
    }
    if (!next) break;
    out.push_back(*next);
    cur = best;
  }
  return out;
}

// Value of a 2×2 zero-sum game by the classical saddle-point / mixed formula.
inline Rational minimax_2x2(const RatMatrix& M) {
  const Rational a = M(0, 0), b = M(0, 1), c = M(1, 0), d = M(1, 1);
  const Rational lower = std::max(std::min(a, b), std::min(c, d));
  const Rational upper = std::min(std::max(a, c), std::max(b, d));
  if (lower == upper) return lower;
  return (a * d - b * c) / (a + d - b - c);
}

inline Rational xAy(const RatMatrix& M, const Vec& x, const Vec& y) {
  Rational s = 0;
  for (std::size_t i = 0; i < M.rows(); ++i)
    for (std::size_t j = 0; j < M.cols(); ++j) s += x[i] * M(i, j) * y[j];
  return s;
}

}  // namespace oracle
