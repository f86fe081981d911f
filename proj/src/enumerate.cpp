#include "rank1/enumerate.hpp"

#include <algorithm>
#include <set>

namespace rank1 {

std::vector<Vec> subset_vertices(const ParamContext& ctx, const TrueInequalities& tineq, const Vec& a,
                                 const std::optional<Rational>& fixed_lambda) {
  const PFaceLayout L{ctx.rows(), ctx.cols()};
  Polyhedron p = p_face(ctx, tineq);
  Vec h(L.dim(), Rational(0));
  h[L.lambda()] = -1;
  for (std::size_t i = 0; i < L.m; ++i) h[L.x(i)] = a[i];
  p.add_eq(std::move(h), 0);
  if (fixed_lambda) p.fix(L.lambda(), *fixed_lambda);

  std::vector<std::size_t> keep{L.lambda()};
  for (std::size_t i = 0; i < L.m; ++i) keep.push_back(L.x(i));
  std::set<Vec> out;
  for (const auto& v : vertices(p)) out.insert(project(v, keep));
  return {out.begin(), out.end()};
}

std::vector<Vec> y_face_vertices(const Polyhedron& y_face, std::size_t n) {
  std::vector<std::size_t> keep(n);
  for (std::size_t j = 0; j < n; ++j) keep[j] = j;
  std::set<Vec> out;
  for (const auto& v : vertices(y_face)) out.insert(project(v, keep));
  return {out.begin(), out.end()};
}

namespace {

std::vector<Vec> drop_lambda(const std::vector<Vec>& lx) {
  std::vector<Vec> out;
  for (const auto& v : lx) out.emplace_back(v.begin() + 1, v.end());
  return out;
}

}  // namespace

std::vector<NashSubset> enumerate_all(const RankOneGame& g) {
  const ParamContext ctx(g.A, g.b());
  const Vec& a = g.a();
  const Rational lo = min_entry(a);
  const Rational hi = max_entry(a);

  std::vector<NashSubset> out;
  for (const auto& seg : next_breakpoint_walk(ctx, lo, hi)) {
    const bool at_bp = seg.kind == SegmentKind::AtBreakpoint;
    std::vector<Vec> lx;
    try {
      lx = subset_vertices(ctx, seg.tineq, a, at_bp ? seg.lo : std::nullopt);
    } catch (const EmptyFace&) {
      continue;  // the piece misses the hyperplane
    }
    NashSubset s;
    s.kind = at_bp ? SubsetKind::AtBreakpoint : SubsetKind::OnInterval;
    s.lambda_lo = lx.front()[0];
    s.lambda_hi = lx.front()[0];
    for (const auto& v : lx) {
      if (v[0] < s.lambda_lo) s.lambda_lo = v[0];
      if (v[0] > s.lambda_hi) s.lambda_hi = v[0];
    }
    if (!at_bp && s.lambda_lo == s.lambda_hi &&
        ((seg.lo && *seg.lo == s.lambda_lo) || (seg.hi && *seg.hi == s.lambda_lo)))
      continue;  // contained in the neighbouring breakpoint subset
    s.x_vertices = drop_lambda(lx);
    s.y_vertices = y_face_vertices(seg.y_face, ctx.cols());
    s.defining_trueineq = seg.tineq;
    out.push_back(std::move(s));
  }
  std::stable_sort(out.begin(), out.end(), [](const NashSubset& l, const NashSubset& r) {
    if (l.lambda_lo != r.lambda_lo) return l.lambda_lo < r.lambda_lo;
    return l.kind == SubsetKind::AtBreakpoint && r.kind != SubsetKind::AtBreakpoint;
  });
  return out;
}

std::vector<MixedProfile> extreme_equilibria(const std::vector<NashSubset>& subsets) {
  std::set<std::pair<Vec, Vec>> pairs;
  for (const auto& s : subsets)
    for (const auto& x : s.x_vertices)
      for (const auto& y : s.y_vertices) pairs.emplace(x, y);
  std::vector<MixedProfile> out;
  for (const auto& [x, y] : pairs) out.push_back(MixedProfile{x, y});
  return out;
}

}  // namespace rank1
