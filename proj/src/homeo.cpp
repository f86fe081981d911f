#include "rank1/homeo.hpp"

#include <algorithm>
#include <functional>

#include "rank1/oracle.hpp"

namespace rank1 {

WaterLevelResult water_level(const Vec& c) {
  if (c.empty()) throw DimensionError("water_level: empty vector");
  Vec sorted = c;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  // Largest k whose k-th highest pole still sticks out above (S_k − 1)/k.
  Rational prefix = 0;
  Rational level = sorted[0] - 1;
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    prefix += sorted[k];
    Rational w = (prefix - 1) / static_cast<unsigned long>(k + 1);
    if (sorted[k] > w)
      level = std::move(w);
    else
      break;
  }
  WaterLevelResult r;
  r.level = level;
  r.x.resize(c.size());
  r.p.resize(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    r.x[i] = c[i] > level ? Rational(c[i] - level) : Rational(0);
    r.p[i] = c[i] - r.x[i];
  }
  return r;
}

KmDecomposition km_decompose_rows(const RatMatrix& A) {
  KmDecomposition d{A, Vec(A.rows(), Rational(0))};
  for (std::size_t i = 0; i < A.rows(); ++i) {
    for (std::size_t j = 0; j < A.cols(); ++j) d.avg[i] += A(i, j);
    d.avg[i] /= static_cast<unsigned long>(A.cols());
    for (std::size_t j = 0; j < A.cols(); ++j) d.base(i, j) -= d.avg[i];
  }
  return d;
}

KmDecomposition km_decompose_cols(const RatMatrix& B) {
  auto t = km_decompose_rows(B.transpose());
  return KmDecomposition{t.base.transpose(), std::move(t.avg)};
}

Vec center(const Vec& v) {
  if (v.empty()) return v;
  const Rational mean = sum(v) / static_cast<unsigned long>(v.size());
  Vec out = v;
  for (auto& e : out) e -= mean;
  return out;
}

RatMatrix PsiDecomposition::compose() const {
  RatMatrix A = hat;
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j) A(i, j) += gamma + a[i] + b[j];
  return A;
}

PsiDecomposition psi_decompose(const RatMatrix& A) {
  const std::size_t m = A.rows(), n = A.cols();
  if (m == 0 || n == 0) throw DimensionError("psi_decompose: empty matrix");
  PsiDecomposition d;
  Vec rowavg(m, Rational(0)), colavg(n, Rational(0));
  d.gamma = 0;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      rowavg[i] += A(i, j);
      colavg[j] += A(i, j);
      d.gamma += A(i, j);
    }
  d.gamma /= static_cast<unsigned long>(m * n);
  d.a.resize(m);
  d.b.resize(n);
  for (std::size_t i = 0; i < m; ++i) d.a[i] = rowavg[i] / static_cast<unsigned long>(n) - d.gamma;
  for (std::size_t j = 0; j < n; ++j) d.b[j] = colavg[j] / static_cast<unsigned long>(m) - d.gamma;
  d.hat = A;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) d.hat(i, j) -= d.gamma + d.a[i] + d.b[j];
  return d;
}

namespace {

void require_equilibrium(const Game& g, const MixedProfile& p) {
  validate_profile(g, p);
  if (!is_nash(g, p).nash) throw NotAnEquilibrium("(x, y) is not an equilibrium of (A, B)");
}

Vec add(Vec l, const Vec& r) {
  for (std::size_t i = 0; i < l.size(); ++i) l[i] += r[i];
  return l;
}

Vec sub(Vec l, const Vec& r) {
  for (std::size_t i = 0; i < l.size(); ++i) l[i] -= r[i];
  return l;
}

}  // namespace

GamePair km_inverse(const Game& g, const MixedProfile& p) {
  require_equilibrium(g, p);
  const auto da = km_decompose_rows(g.A);
  const auto db = km_decompose_cols(g.B);
  const Vec c = add(g.A * p.y, p.x);
  const Vec d = add(g.B.transpose_times(p.x), p.y);
  GamePair out{da.base, db.base};
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) {
      out.C(i, j) += c[i];
      out.D(i, j) += d[j];
    }
  return out;
}

EquilibriumPoint km_forward(const RatMatrix& C, const RatMatrix& D) {
  if (C.rows() != D.rows() || C.cols() != D.cols()) throw DimensionError("km_forward: C and D differ in shape");
  const auto dc = km_decompose_rows(C);
  const auto dd = km_decompose_cols(D);
  const auto wx = water_level(dc.avg);
  const auto wy = water_level(dd.avg);
  const Vec a = sub(sub(dc.avg, wx.x), dc.base * wy.x);
  const Vec b = sub(sub(dd.avg, wy.x), dd.base.transpose_times(wx.x));
  RatMatrix A = dc.base, B = dd.base;
  for (std::size_t i = 0; i < C.rows(); ++i)
    for (std::size_t j = 0; j < C.cols(); ++j) {
      A(i, j) += a[i];
      B(i, j) += b[j];
    }
  return EquilibriumPoint{Game(std::move(A), std::move(B)), MixedProfile{wx.x, wy.x}};
}

EquilibriumPoint psi_forward(const RatMatrix& C, const RatMatrix& D, const RatMatrix& M) {
  if (C.rows() != D.rows() || C.cols() != D.cols() || M.rows() != C.rows() || M.cols() != C.cols())
    throw DimensionError("psi_forward: shape mismatch");
  if (C + D != M) throw SumMismatch("C + D differs from M");
  const auto dc = psi_decompose(C);
  const auto wx = water_level(dc.a);
  const auto wy = water_level(dc.b);
  PsiDecomposition da;
  da.hat = dc.hat;
  da.gamma = dc.gamma;
  da.a = sub(dc.a, center(add(dc.hat * wy.x, wx.x)));
  da.b = sub(center(add((M - dc.hat).transpose_times(wx.x), wy.x)), dc.b);
  RatMatrix A = da.compose();
  RatMatrix B = M - A;
  return EquilibriumPoint{Game(std::move(A), std::move(B)), MixedProfile{wx.x, wy.x}};
}

GamePair psi_inverse(const Game& g, const MixedProfile& p, const std::optional<RatMatrix>& M) {
  const RatMatrix sum = g.A + g.B;
  if (M && (M->rows() != sum.rows() || M->cols() != sum.cols() || *M != sum))
    throw SumMismatch("A + B differs from M");
  require_equilibrium(g, p);
  auto dc = psi_decompose(g.A);
  dc.a = center(add(g.A * p.y, p.x));
  dc.b = center(add(g.B.transpose_times(p.x), p.y));
  RatMatrix C = dc.compose();
  RatMatrix D = sum - C;
  return GamePair{std::move(C), std::move(D)};
}

}  // namespace rank1
