#include "rank1/binsearch.hpp"

#include <stdexcept>

#include "rank1/oracle.hpp"

namespace rank1 {

namespace {

// x is optimal in P_λ iff max_j (bλ − Aᵀx)_j = φ(λ).
bool optimal_in_P(const ParamContext& ctx, const Vec& x, const Rational& lambda) {
  if (!is_simplex_point(x)) return false;
  const Vec ax = ctx.A.transpose_times(x);
  Vec slack(ctx.cols());
  for (std::size_t j = 0; j < ctx.cols(); ++j) slack[j] = ctx.b[j] * lambda - ax[j];
  return max_entry(slack) == phi(ctx, lambda);
}

}  // namespace

bool search_invariant_holds(const ParamContext& ctx, const Vec& a, const SearchState& s) {
  return s.lo <= s.hi && optimal_in_P(ctx, s.lo_witness, s.lo) && s.lo <= dot(s.lo_witness, a) &&
         optimal_in_P(ctx, s.hi_witness, s.hi) && dot(s.hi_witness, a) <= s.hi;
}

QResult q_lp(const ParamContext& ctx, const TrueInequalities& tineq, const Vec& a, const Rational& lambda_prime,
             QSense sense) {
  const PFaceLayout L{ctx.rows(), ctx.cols()};
  Polyhedron p = p_face(ctx, tineq);
  // xᵀa − λ ≥ 0 (max) or ≤ 0 (min)
  Vec row(L.dim(), Rational(0));
  row[L.lambda()] = -1;
  for (std::size_t i = 0; i < L.m; ++i) row[L.x(i)] = a[i];
  Vec lam(L.dim(), Rational(0));
  lam[L.lambda()] = 1;
  if (sense == QSense::Max) {
    p.add_ge(std::move(row), 0);
    p.add_ge(lam, lambda_prime);
  } else {
    p.add_le(std::move(row), 0);
    p.add_le(lam, lambda_prime);
  }
  Vec obj(L.dim(), Rational(0));
  obj[L.lambda()] = 1;
  for (std::size_t i = 0; i < L.m; ++i) obj[L.x(i)] = -a[i];

  QResult out;
  out.raw = lp::solve(p.to_lp(obj, sense == QSense::Max ? lp::Sense::Maximize : lp::Sense::Minimize));
  if (!out.raw.optimal()) return out;
  out.objective = out.raw.objective_value;
  out.lambda = out.raw.primal[L.lambda()];
  for (std::size_t i = 0; i < L.m; ++i) out.x.push_back(out.raw.primal[L.x(i)]);
  return out;
}

BinsearchResult binsearch(const RankOneGame& g, const BinsearchOptions& opts) {
  const ParamContext ctx(g.A, g.b());
  const Vec& a = g.a();
  BinsearchResult res;
  auto& stats = res.stats;

  Rational lambda_star;
  Vec x_star;

  SearchState st;
  st.lo = min_entry(a);
  st.hi = max_entry(a);
  if (st.lo == st.hi) {
    // Every x has xᵀa = a₁, so any optimal x of P_{a₁} will do.
    lambda_star = st.lo;
    x_star = solve_P(ctx, lambda_star).x;
  } else {
    // Any optimal x satisfies min a ≤ xᵀa ≤ max a.
    st.lo_witness = solve_P(ctx, st.lo).x;
    st.hi_witness = solve_P(ctx, st.hi).x;
    bool done = false;
    while (!done) {
      if (stats.iterations >= opts.max_iterations) throw std::runtime_error("binsearch: iteration limit reached");
      if (opts.check_invariant) {
        ++stats.invariant_checks;
        if (!search_invariant_holds(ctx, a, st)) ++stats.invariant_failures;
      }
      ++stats.iterations;
      const Rational lambda = (st.lo + st.hi) / 2;
      stats.midpoints.push_back(lambda);
      const PSolution p = solve_P(ctx, lambda);
      const Rational xa = dot(p.x, a);
      if (xa == lambda) {
        lambda_star = lambda;
        x_star = p.x;
        break;
      }
      const TrueInequalities tineq = true_inequalities(ctx, lambda, p.v);
      const bool up = lambda < xa;
      const QResult q = q_lp(ctx, tineq, a, lambda, up ? QSense::Max : QSense::Min);
      if (!q.raw.optimal()) throw std::logic_error("binsearch: Q LP has no optimum");
      if (sgn(q.objective) == 0) {
        lambda_star = q.lambda;
        x_star = q.x;
        done = true;
        continue;
      }
      // Jump to the breakpoint that ends this piece.
      const BrResult br = br_lp(ctx, tineq, up ? Direction::Max : Direction::Min);
      if (!br.lambda) throw std::logic_error("binsearch: piece without an end misses the hyperplane");
      if (up) {
        st.lo = *br.lambda;
        st.lo_witness = br.x;
      } else {
        st.hi = *br.lambda;
        st.hi_witness = br.x;
      }
    }
  }

  const DSolution d = solve_D(ctx, lambda_star);
  res.record.profile = MixedProfile{x_star, d.y};
  res.record.lambda = lambda_star;
  const auto check = is_nash(g.game(), res.record.profile);
  if (!check.nash || dot(x_star, a) != lambda_star) throw std::logic_error("binsearch produced a non-equilibrium");
  res.record.payoff_1 = check.u;
  res.record.payoff_2 = check.v;
  return res;
}

EquilibriumRecord binsearch(const RankOneGame& g) { return binsearch(g, BinsearchOptions{}).record; }

}  // namespace rank1
