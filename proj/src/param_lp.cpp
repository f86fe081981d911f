#include "rank1/param_lp.hpp"

#include <stdexcept>
#include <utility>

namespace rank1 {

ParamContext::ParamContext(RatMatrix a, Vec bvec) : A(std::move(a)), b(std::move(bvec)) {
  if (A.rows() == 0 || A.cols() == 0) throw DimensionError("ParamContext: empty matrix");
  if (b.size() != A.cols()) throw DimensionError("ParamContext: b must have one entry per column");
}

Polyhedron d_polyhedron(const ParamContext& ctx) {
  const std::size_t m = ctx.rows(), n = ctx.cols();
  Polyhedron p(n + 1);
  for (std::size_t j = 0; j < n; ++j) p.nonneg[j] = true;
  for (std::size_t i = 0; i < m; ++i) {
    Vec row = ctx.A.row(i);
    row.push_back(1);
    p.add_le(std::move(row), 0);
  }
  Vec ones(n + 1, Rational(1));
  ones[n] = 0;
  p.add_eq(std::move(ones), 1);
  return p;
}

Polyhedron optimal_y_face(const ParamContext& ctx, const Rational& lambda, const Rational& phi_value) {
  Polyhedron p = d_polyhedron(ctx);
  Vec row(ctx.cols() + 1);
  for (std::size_t j = 0; j < ctx.cols(); ++j) row[j] = lambda * ctx.b[j];
  row[ctx.cols()] = 1;
  p.add_eq(std::move(row), phi_value);
  return p;
}

Polyhedron interval_y_face(const ParamContext& ctx, const Rational& slope, const Rational& intercept) {
  Polyhedron p = d_polyhedron(ctx);
  Vec row = ctx.b;
  row.push_back(0);
  p.add_eq(std::move(row), slope);
  p.fix(ctx.cols(), intercept);
  return p;
}

DSolution solve_D(const ParamContext& ctx, const Rational& lambda) {
  const std::size_t n = ctx.cols();
  Vec obj(n + 1);
  for (std::size_t j = 0; j < n; ++j) obj[j] = lambda * ctx.b[j];
  obj[n] = 1;
  DSolution out;
  out.raw = lp::solve(d_polyhedron(ctx).to_lp(obj, lp::Sense::Maximize));
  if (!out.raw.optimal()) throw std::logic_error("D_lambda must have an optimum");
  out.y.assign(out.raw.primal.begin(), out.raw.primal.begin() + static_cast<std::ptrdiff_t>(n));
  out.t = out.raw.primal[n];
  return out;
}

PSolution solve_P(const ParamContext& ctx, const Rational& lambda) {
  const std::size_t m = ctx.rows(), n = ctx.cols();
  // Variables: x (m), v, s (n).
  lp::LpProblem p(m + 1 + n, lp::Sense::Minimize);
  p.bounds[m] = lp::Bound::Free;
  p.objective[m] = 1;
  for (std::size_t j = 0; j < n; ++j) {
    Vec row(m + 1 + n, Rational(0));
    for (std::size_t i = 0; i < m; ++i) row[i] = ctx.A(i, j);
    row[m] = 1;
    row[m + 1 + j] = -1;
    p.add(std::move(row), lp::Relation::Equal, ctx.b[j] * lambda);
  }
  Vec ones(m + 1 + n, Rational(0));
  for (std::size_t i = 0; i < m; ++i) ones[i] = 1;
  p.add(std::move(ones), lp::Relation::Equal, 1);

  PSolution out;
  out.raw = lp::solve(p);
  if (!out.raw.optimal()) throw std::logic_error("P_lambda must have an optimum");
  const auto& z = out.raw.primal;
  out.x.assign(z.begin(), z.begin() + static_cast<std::ptrdiff_t>(m));
  out.v = z[m];
  out.s.assign(z.begin() + static_cast<std::ptrdiff_t>(m + 1), z.end());
  return out;
}

Rational phi(const ParamContext& ctx, const Rational& lambda) { return solve_P(ctx, lambda).v; }

TrueInequalities true_inequalities_of(const ParamContext& ctx, const Polyhedron& y_face) {
  const auto ts = true_set(y_face);
  if (!ts) throw EmptyFace("optimal face is empty");
  TrueInequalities out;
  // The first m rows of any Y-face are Ay + 1t ≤ 0.
  for (std::size_t i = 0; i < ctx.rows(); ++i)
    if (ts->rows[i]) out.M.push_back(i);
  for (std::size_t j = 0; j < ctx.cols(); ++j)
    if (ts->coords[j]) out.N.push_back(j);
  return out;
}

TrueInequalities true_inequalities(const ParamContext& ctx, const Rational& lambda, const Rational& phi_value) {
  return true_inequalities_of(ctx, optimal_y_face(ctx, lambda, phi_value));
}

Polyhedron p_face(const ParamContext& ctx, const TrueInequalities& tineq) {
  const std::size_t m = ctx.rows(), n = ctx.cols();
  const PFaceLayout L{m, n};
  Polyhedron p(L.dim());
  for (std::size_t i = 0; i < m; ++i) p.nonneg[L.x(i)] = true;
  for (std::size_t j = 0; j < n; ++j) p.nonneg[L.s(j)] = true;
  for (std::size_t j = 0; j < n; ++j) {
    Vec row(L.dim(), Rational(0));
    row[L.lambda()] = -ctx.b[j];
    for (std::size_t i = 0; i < m; ++i) row[L.x(i)] = ctx.A(i, j);
    row[L.v()] = 1;
    row[L.s(j)] = -1;
    p.add_eq(std::move(row), 0);
  }
  Vec ones(L.dim(), Rational(0));
  for (std::size_t i = 0; i < m; ++i) ones[L.x(i)] = 1;
  p.add_eq(std::move(ones), 1);
  for (auto i : tineq.M) p.fix(L.x(i), 0);
  for (auto j : tineq.N) p.fix(L.s(j), 0);
  return p;
}

lp::LpSolution sl_lp(const ParamContext& ctx, const Rational& lambda, const Rational& phi_value, Direction dir) {
  Vec obj = ctx.b;
  obj.push_back(0);
  return lp::solve(optimal_y_face(ctx, lambda, phi_value)
                       .to_lp(obj, dir == Direction::Min ? lp::Sense::Minimize : lp::Sense::Maximize));
}

BrResult br_lp(const ParamContext& ctx, const TrueInequalities& tineq, Direction dir) {
  const PFaceLayout L{ctx.rows(), ctx.cols()};
  Vec obj(L.dim(), Rational(0));
  obj[L.lambda()] = 1;
  const auto s =
      lp::solve(p_face(ctx, tineq).to_lp(obj, dir == Direction::Min ? lp::Sense::Minimize : lp::Sense::Maximize));
  if (s.status == lp::Status::Infeasible) throw EmptyFace("P(M,N) is empty");
  BrResult out;
  if (s.status == lp::Status::Unbounded) return out;
  out.lambda = s.primal[L.lambda()];
  for (std::size_t i = 0; i < L.m; ++i) out.x.push_back(s.primal[L.x(i)]);
  return out;
}

std::optional<Breakpoint> breakpoint_at(const ParamContext& ctx, const Rational& lambda) {
  const Rational value = phi(ctx, lambda);
  const auto lo = sl_lp(ctx, lambda, value, Direction::Min);
  const auto hi = sl_lp(ctx, lambda, value, Direction::Max);
  if (!lo.optimal() || !hi.optimal()) throw std::logic_error("slope LPs must have an optimum");
  if (lo.objective_value == hi.objective_value) return std::nullopt;
  return Breakpoint{lambda, lo.objective_value, hi.objective_value, value};
}

namespace {

Segment interval_segment(const ParamContext& ctx, const Rational& slope, const Rational& intercept,
                         std::optional<Rational> lo, bool find_lo) {
  Segment seg;
  seg.kind = SegmentKind::Interval;
  seg.slope = slope;
  seg.intercept = intercept;
  seg.right_slope = slope;
  seg.y_face = interval_y_face(ctx, slope, intercept);
  const auto ts = true_set(seg.y_face);
  if (!ts) throw std::logic_error("interval face must be nonempty");
  seg.y.assign(ts->interior.begin(), ts->interior.end() - 1);
  seg.t = ts->interior.back();
  seg.tineq = true_inequalities_of(ctx, seg.y_face);
  seg.lo = find_lo ? br_lp(ctx, seg.tineq, Direction::Min).lambda : std::move(lo);
  seg.hi = br_lp(ctx, seg.tineq, Direction::Max).lambda;
  return seg;
}

Segment breakpoint_segment(const ParamContext& ctx, const Breakpoint& bp) {
  Segment seg;
  seg.kind = SegmentKind::AtBreakpoint;
  seg.lo = bp.lambda;
  seg.hi = bp.lambda;
  seg.slope = bp.left_slope;
  seg.right_slope = bp.right_slope;
  seg.intercept = bp.phi;
  seg.y_face = optimal_y_face(ctx, bp.lambda, bp.phi);
  const auto ts = true_set(seg.y_face);
  if (!ts) throw std::logic_error("breakpoint face must be nonempty");
  seg.y.assign(ts->interior.begin(), ts->interior.end() - 1);
  seg.t = ts->interior.back();
  seg.tineq = true_inequalities_of(ctx, seg.y_face);
  return seg;
}

}  // namespace

std::vector<Segment> next_breakpoint_walk(const ParamContext& ctx, const std::optional<Rational>& from,
                                          const std::optional<Rational>& to) {
  std::vector<Segment> out;
  std::optional<Rational> next;  // next breakpoint to visit

  if (!from) {
    // Leftmost piece: smallest slope bᵀy, then the largest t on it.
    const Polyhedron d = d_polyhedron(ctx);
    Vec obj = ctx.b;
    obj.push_back(0);
    const auto beta = lp::solve(d.to_lp(obj, lp::Sense::Minimize));
    Polyhedron d2 = d;
    d2.add_eq(obj, beta.objective_value);
    Vec tobj(ctx.cols() + 1, Rational(0));
    tobj[ctx.cols()] = 1;
    const auto tau = lp::solve(d2.to_lp(tobj, lp::Sense::Maximize));
    if (!beta.optimal() || !tau.optimal()) throw std::logic_error("leftmost piece LPs must have an optimum");
    out.push_back(interval_segment(ctx, beta.objective_value, tau.objective_value, std::nullopt, false));
    next = out.back().hi;
  } else if (auto bp = breakpoint_at(ctx, *from)) {
    next = *from;
  } else {
    const auto d = solve_D(ctx, *from);
    const Rational slope = dot(ctx.b, d.y);
    out.push_back(interval_segment(ctx, slope, d.t, std::nullopt, true));
    next = out.back().hi;
  }

  while (next && (!to || *next <= *to)) {
    const auto bp = breakpoint_at(ctx, *next);
    if (!bp) throw std::logic_error("expected a breakpoint at " + to_string(*next));
    out.push_back(breakpoint_segment(ctx, *bp));
    if (to && !(bp->lambda < *to)) break;
    out.push_back(interval_segment(ctx, bp->right_slope, bp->phi - bp->lambda * bp->right_slope, bp->lambda, false));
    next = out.back().hi;
  }
  return out;
}

Rational ValueFunction::operator()(const Rational& lambda) const {
  for (const auto& p : pieces)
    if ((!p.lo || *p.lo <= lambda) && (!p.hi || lambda <= *p.hi)) return p.slope * lambda + p.intercept;
  throw std::logic_error("value function has no piece at " + to_string(lambda));
}

ValueFunction value_function(const ParamContext& ctx) {
  ValueFunction vf;
  for (const auto& seg : next_breakpoint_walk(ctx, std::nullopt, std::nullopt)) {
    if (seg.kind == SegmentKind::Interval)
      vf.pieces.push_back({seg.lo, seg.hi, seg.slope, seg.intercept});
    else
      vf.breakpoints.push_back({*seg.lo, seg.slope, seg.right_slope, seg.intercept});
  }
  return vf;
}

}  // namespace rank1
