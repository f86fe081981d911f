#include <doctest.h>

#include <random>

#include "rank1/binsearch.hpp"
#include "rank1/generators.hpp"
#include "rank1/oracle.hpp"

using namespace rank1;

namespace {

RankOneGame ex1() { return RankOneGame::from_game(fixture("ex1")); }

bool in_oracle_set(const Game& g, const MixedProfile& p) {
  for (const auto& e : support_enumeration(g))
    if (e == p) return true;
  return false;
}

}  // namespace

TEST_CASE("q_lp on the 2x2 example") {
  const auto g = ex1();
  const ParamContext ctx(g.A, g.b());
  SUBCASE("middle piece reaches the hyperplane at -1/4") {
    const Rational lp(-1, 4);
    const auto t = true_inequalities(ctx, lp, phi(ctx, lp));
    const auto q = q_lp(ctx, t, g.a(), lp, QSense::Max);
    REQUIRE(q.raw.optimal());
    CHECK(q.objective == 0);
    CHECK(q.lambda == lp);
    CHECK(q.x == Vec{Rational(1, 4), Rational(3, 4)});
  }
  SUBCASE("right piece from lambda' = 1") {
    const auto t = true_inequalities(ctx, 1, phi(ctx, 1));
    const auto q = q_lp(ctx, t, g.a(), 1, QSense::Max);
    REQUIRE(q.raw.optimal());
    CHECK(q.objective == 0);
    CHECK(q.lambda == 2);
    CHECK(q.x == Vec{1, 0});
  }
}

TEST_CASE("binsearch on the 2x2 example") {
  const auto g = ex1();
  const auto r = binsearch(g, BinsearchOptions{true});
  CHECK(r.stats.invariant_failures == 0);
  CHECK(r.stats.iterations >= 1);
  const auto& e = r.record;
  CHECK(in_oracle_set(g.game(), e.profile));
  CHECK(dot(e.profile.x, g.a()) == e.lambda);
  const bool known = (e.lambda == 2 && e.profile.x == Vec{1, 0}) || (e.lambda == -1 && e.profile.x == Vec{0, 1}) ||
                     (e.lambda == Rational(-1, 4) && e.profile.x == Vec{Rational(1, 4), Rational(3, 4)});
  CHECK(known);
  // Payoffs to player 1 and 2 from the best-response values.
  const auto chk = is_nash(g.game(), e.profile);
  CHECK(e.payoff_1 == chk.u);
  CHECK(e.payoff_2 == chk.v);
}

TEST_CASE("binsearch on a zero-sum game returns the minmax solution without iterating") {
  const RatMatrix A{{1, -1}, {-1, 1}};
  const auto g = RankOneGame::from_game(Game(A, -A));
  const auto r = binsearch(g, BinsearchOptions{true});
  CHECK(r.stats.iterations == 0);
  CHECK(r.record.lambda == 0);
  CHECK(r.record.profile.x == Vec{Rational(1, 2), Rational(1, 2)});
  CHECK(r.record.profile.y == Vec{Rational(1, 2), Rational(1, 2)});
}

TEST_CASE("binsearch with a constant a-vector") {
  const auto g = RankOneGame(RatMatrix{{3, 0}, {0, 1}}, Vec{2, 2}, Vec{1, -1});
  const auto r = binsearch(g, BinsearchOptions{true});
  CHECK(r.stats.iterations == 0);
  CHECK(r.record.lambda == 2);
  CHECK(is_nash(g.game(), r.record.profile).nash);
}

TEST_CASE("binsearch on the exponential game, n = 3") {
  const auto g = gen_expo_rank1({3, 3});
  const auto r = binsearch(g, BinsearchOptions{true});
  CHECK(r.stats.invariant_failures == 0);
  CHECK(in_oracle_set(g.game(), r.record.profile));
  for (std::size_t i = 0; i < 3; ++i) CHECK((sgn(r.record.profile.x[i]) == 0) == (sgn(r.record.profile.y[i]) == 0));
}

TEST_CASE("binsearch on random rank-1 games") {
  std::mt19937_64 eng(31);
  for (int k = 0; k < 60; ++k) {
    const auto g = gen_random_rank1(1 + eng() % 4, 1 + eng() % 4, 9, eng());
    const auto r = binsearch(g, BinsearchOptions{true});
    CHECK(r.stats.invariant_failures == 0);
    CHECK(r.stats.iterations <= 64);
    CHECK(dot(r.record.profile.x, g.a()) == r.record.lambda);
    // Degenerate games may yield a non-extreme equilibrium.
    CHECK(is_nash(g.game(), r.record.profile).nash);
    // Each step without success at least halves the bracket.
    const Rational width = max_entry(g.a()) - min_entry(g.a());
    for (std::size_t s = 1; s < r.stats.midpoints.size(); ++s) {
      const Rational step = r.stats.midpoints[s] - r.stats.midpoints[s - 1];
      CHECK(abs(step) <= width);
    }
  }
}

TEST_CASE("search invariant detects a bad witness") {
  const auto g = ex1();
  const ParamContext ctx(g.A, g.b());
  SearchState st{-1, 2, solve_P(ctx, -1).x, solve_P(ctx, 2).x};
  CHECK(search_invariant_holds(ctx, g.a(), st));
  st.lo_witness = Vec{1, 0};  // not optimal in P_{-1}
  CHECK_FALSE(search_invariant_holds(ctx, g.a(), st));
}
