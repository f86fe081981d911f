#include "rank1/polyhedron.hpp"

#include <algorithm>
#include <set>

#include "rank1/matrix.hpp"

namespace rank1 {

void Polyhedron::add_le(Vec row, Rational rhs) {
  if (row.size() != dim) throw DimensionError("Polyhedron: row length mismatch");
  G.push_back(std::move(row));
  h.push_back(std::move(rhs));
}

void Polyhedron::add_ge(Vec row, Rational rhs) {
  for (auto& e : row) e = -e;
  add_le(std::move(row), -rhs);
}

void Polyhedron::add_eq(Vec row, Rational rhs) {
  if (row.size() != dim) throw DimensionError("Polyhedron: row length mismatch");
  C.push_back(std::move(row));
  d.push_back(std::move(rhs));
}

void Polyhedron::fix(std::size_t j, Rational value) {
  Vec row(dim, Rational(0));
  row[j] = 1;
  add_eq(std::move(row), std::move(value));
}

bool Polyhedron::contains(const Vec& z) const {
  if (z.size() != dim) return false;
  for (std::size_t j = 0; j < dim; ++j)
    if (nonneg[j] && sgn(z[j]) < 0) return false;
  for (std::size_t i = 0; i < G.size(); ++i)
    if (dot(G[i], z) > h[i]) return false;
  for (std::size_t i = 0; i < C.size(); ++i)
    if (dot(C[i], z) != d[i]) return false;
  return true;
}

lp::LpProblem Polyhedron::to_lp(const Vec& objective, lp::Sense sense) const {
  lp::LpProblem p(dim, sense);
  p.objective = objective;
  for (std::size_t j = 0; j < dim; ++j) p.bounds[j] = nonneg[j] ? lp::Bound::NonNegative : lp::Bound::Free;
  for (std::size_t i = 0; i < G.size(); ++i) p.add(G[i], lp::Relation::LessEqual, h[i]);
  for (std::size_t i = 0; i < C.size(); ++i) p.add(C[i], lp::Relation::Equal, d[i]);
  return p;
}

std::optional<TrueSet> true_set(const Polyhedron& p) {
  std::vector<std::size_t> flagged;
  for (std::size_t j = 0; j < p.dim; ++j)
    if (p.nonneg[j]) flagged.push_back(j);
  const std::size_t k = p.G.size() + flagged.size();
  // Variables: z (dim), u (k), α.
  const std::size_t nv = p.dim + k + 1;
  const std::size_t alpha = nv - 1;
  lp::LpProblem q(nv, lp::Sense::Maximize);
  for (std::size_t j = 0; j < p.dim; ++j) q.bounds[j] = p.nonneg[j] ? lp::Bound::NonNegative : lp::Bound::Free;
  for (std::size_t r = 0; r < k; ++r) q.objective[p.dim + r] = 1;

  for (std::size_t i = 0; i < p.G.size(); ++i) {
    Vec row(nv, Rational(0));
    std::copy(p.G[i].begin(), p.G[i].end(), row.begin());
    row[p.dim + i] = 1;
    row[alpha] = -p.h[i];
    q.add(std::move(row), lp::Relation::LessEqual, 0);
  }
  for (std::size_t f = 0; f < flagged.size(); ++f) {
    Vec row(nv, Rational(0));
    row[flagged[f]] = -1;
    row[p.dim + p.G.size() + f] = 1;
    q.add(std::move(row), lp::Relation::LessEqual, 0);
  }
  for (std::size_t i = 0; i < p.C.size(); ++i) {
    Vec row(nv, Rational(0));
    std::copy(p.C[i].begin(), p.C[i].end(), row.begin());
    row[alpha] = -p.d[i];
    q.add(std::move(row), lp::Relation::Equal, 0);
  }
  for (std::size_t r = 0; r < k; ++r) {
    Vec row(nv, Rational(0));
    row[p.dim + r] = 1;
    q.add(std::move(row), lp::Relation::LessEqual, 1);
  }
  Vec arow(nv, Rational(0));
  arow[alpha] = 1;
  q.add(std::move(arow), lp::Relation::GreaterEqual, 1);

  const auto s = lp::solve(q);
  if (s.status == lp::Status::Infeasible) return std::nullopt;
  if (!s.optimal()) throw std::logic_error("true-inequality LP cannot be unbounded");

  TrueSet out;
  out.rows.resize(p.G.size());
  out.coords.assign(p.dim, false);
  for (std::size_t i = 0; i < p.G.size(); ++i) out.rows[i] = s.primal[p.dim + i] == 1;
  for (std::size_t f = 0; f < flagged.size(); ++f) out.coords[flagged[f]] = s.primal[p.dim + p.G.size() + f] == 1;
  out.interior.resize(p.dim);
  for (std::size_t j = 0; j < p.dim; ++j) out.interior[j] = s.primal[j] / s.primal[alpha];
  return out;
}

namespace {

// Visits every size-k subset of {0..n-1} in lexicographic order.
template <class F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::vector<Vec> vertices(const Polyhedron& p) {
  const auto ts = true_set(p);
  if (!ts) throw EmptyFace("polyhedron is empty");
  const Vec& z0 = ts->interior;

  // The affine hull is cut out by the equalities and every inequality that
  // is tight on the whole polyhedron.
  std::vector<Vec> hull = p.C;
  struct Ineq {
    Vec row;
    Rational rhs;
  };
  std::vector<Ineq> strict;
  for (std::size_t i = 0; i < p.G.size(); ++i) {
    if (ts->rows[i])
      strict.push_back({p.G[i], p.h[i]});
    else
      hull.push_back(p.G[i]);
  }
  for (std::size_t j = 0; j < p.dim; ++j) {
    if (!p.nonneg[j]) continue;
    Vec e(p.dim, Rational(0));
    e[j] = -1;
    if (ts->coords[j])
      strict.push_back({std::move(e), Rational(0)});
    else
      hull.push_back(std::move(e));
  }

  std::vector<Vec> basis;
  if (hull.empty()) {
    for (std::size_t j = 0; j < p.dim; ++j) {
      Vec e(p.dim, Rational(0));
      e[j] = 1;
      basis.push_back(std::move(e));
    }
  } else {
    basis = null_space(RatMatrix::from_rows(hull));
  }
  const std::size_t k = basis.size();
  if (k == 0) return {z0};

  // Work in w-space, z = z0 + Σ w_r basis_r.
  std::vector<Vec> g(strict.size(), Vec(k));
  Vec slack(strict.size());
  for (std::size_t i = 0; i < strict.size(); ++i) {
    for (std::size_t r = 0; r < k; ++r) g[i][r] = dot(strict[i].row, basis[r]);
    slack[i] = strict[i].rhs - dot(strict[i].row, z0);
  }

  std::set<Vec> found;
  RatMatrix sys(k, k);
  Vec rhs(k);
  for_each_subset(strict.size(), k, [&](const std::vector<std::size_t>& sub) {
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t c = 0; c < k; ++c) sys(r, c) = g[sub[r]][c];
      rhs[r] = slack[sub[r]];
    }
    const auto w = solve_square(sys, rhs);
    if (!w) return;
    for (std::size_t i = 0; i < strict.size(); ++i)
      if (dot(g[i], *w) > slack[i]) return;
    Vec z = z0;
    for (std::size_t r = 0; r < k; ++r)
      if (sgn((*w)[r]) != 0)
        for (std::size_t j = 0; j < p.dim; ++j) z[j] += (*w)[r] * basis[r][j];
    found.insert(std::move(z));
  });
  if (found.empty()) throw std::logic_error("vertices: polyhedron is unbounded or has no vertex");
  return {found.begin(), found.end()};
}

Vec project(const Vec& z, const std::vector<std::size_t>& keep) {
  Vec out;
  out.reserve(keep.size());
  for (auto j : keep) out.push_back(z[j]);
  return out;
}

}  // namespace rank1
