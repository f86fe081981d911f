#include <doctest.h>

#include <random>

#include "rank1/generators.hpp"
#include "rank1/lp.hpp"
#include "rank1/oracle.hpp"
#include "oracles.hpp"

using namespace rank1;

namespace {

const Game pennies{RatMatrix{{1, -1}, {-1, 1}}, RatMatrix{{-1, 1}, {1, -1}}};

Vec random_simplex(std::mt19937_64& eng, std::size_t k) {
  Vec v(k);
  Rational s = 0;
  for (auto& e : v) {
    e = static_cast<long>(eng() % 4);
    s += e;
  }
  if (s == 0) {
    v[eng() % k] = 1;
    return v;
  }
  for (auto& e : v) e /= s;
  return v;
}

}  // namespace

TEST_CASE("is_nash on the example games") {
  const Game g = fixture("ex1");
  const auto mixed = is_nash(g, {{Rational(1, 4), Rational(3, 4)}, {Rational(1, 2), Rational(1, 2)}});
  CHECK(mixed.nash);
  CHECK(mixed.u == Rational(1, 2));
  CHECK(mixed.v == Rational(-1, 2));
  CHECK(mixed.row.best_value == mixed.u);

  const auto off = is_nash(g, {{1, 0}, {0, 1}});
  CHECK_FALSE(off.nash);
  CHECK_FALSE(off.row.support_ok[0]);
  CHECK(off.row.payoff_vector == Vec{0, 1});

  CHECK(is_nash(fixture("ex3"), {{1, 0}, {1, 0}}).nash);
}

TEST_CASE("is_nash rejects malformed profiles") {
  const Game g = fixture("ex1");
  CHECK_THROWS_AS(is_nash(g, {{1, 0, 0}, {1, 0}}), DimensionError);
  CHECK_THROWS_AS(is_nash(g, {{Rational(1, 2), Rational(1, 3)}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(is_nash(g, {{2, -1}, {1, 0}}), std::invalid_argument);
}

TEST_CASE("qp_value") {
  const Game g = fixture("ex1");
  CHECK(qp_value(g, {{Rational(1, 4), Rational(3, 4)}, {Rational(1, 2), Rational(1, 2)}}) == 0);
  // x(A+B)y = -2, max Ay = 1, max Bᵀx = 1.
  CHECK(qp_value(g, {{1, 0}, {0, 1}}) == -4);
  // Zero-sum at pure (1,1): both players can gain 1 by deviating.
  CHECK(qp_value(pennies, {{1, 0}, {1, 0}}) == -2);

  std::mt19937_64 eng(5);
  for (int k = 0; k < 200; ++k) {
    const Game h = gen_random_game(2, 3, 3, eng());
    const MixedProfile p{random_simplex(eng, 2), random_simplex(eng, 3)};
    const Rational q = qp_value(h, p);
    CHECK(q <= 0);
    CHECK((q == 0) == is_nash(h, p).nash);
  }
}

TEST_CASE("support enumeration") {
  const auto eq = support_enumeration(fixture("ex1"));
  CHECK(eq == std::vector<MixedProfile>{{{0, 1}, {0, 1}},
                                        {{Rational(1, 4), Rational(3, 4)}, {Rational(1, 2), Rational(1, 2)}},
                                        {{1, 0}, {1, 0}}});
  CHECK(support_enumeration(pennies) ==
        std::vector<MixedProfile>{{{Rational(1, 2), Rational(1, 2)}, {Rational(1, 2), Rational(1, 2)}}});

  const auto expo = support_enumeration(gen_expo({3, 3}));
  CHECK(expo.size() == 7);
  for (const auto& p : expo)
    for (std::size_t i = 0; i < 3; ++i) CHECK((p.x[i] == 0) == (p.y[i] == 0));

  CHECK_THROWS_AS(support_enumeration(gen_random_game(6, 2, 1, 1)), LimitExceeded);
  CHECK_NOTHROW(support_enumeration(gen_random_game(6, 2, 1, 1), 6));
}

TEST_CASE("support enumeration on zero-sum games agrees with the LP value") {
  std::mt19937_64 eng(9);
  for (int k = 0; k < 40; ++k) {
    const std::size_t m = 1 + eng() % 3, n = 1 + eng() % 3;
    const Game h = gen_random_game(m, n, 5, eng());
    const Game z(h.A, -h.A);
    const auto sol = lp::solve_zero_sum(h.A);
    const auto eq = support_enumeration(z);
    REQUIRE_FALSE(eq.empty());
    for (const auto& p : eq) CHECK(oracle::xAy(h.A, p.x, p.y) == sol.value);
  }
}

TEST_CASE("degeneracy") {
  for (std::size_t n = 1; n <= 4; ++n) CHECK_FALSE(is_degenerate(gen_expo({n, 3})));
  CHECK(is_degenerate(fixture("param-N2", Rational(0))));
  CHECK_FALSE(is_degenerate(pennies));
  CHECK(is_degenerate(Game(RatMatrix(2, 2), RatMatrix(2, 2))));
}

TEST_CASE("column shifts of A do not change equilibria") {
  std::mt19937_64 eng(13);
  for (int k = 0; k < 150; ++k) {
    const Game g = gen_random_game(3, 3, 4, eng());
    Vec b(3);
    for (auto& e : b) e = static_cast<long>(eng() % 9) - 4;
    const Game shifted(shift_columns(g.A, b), g.B);
    std::vector<MixedProfile> probes = support_enumeration(g);
    probes.push_back({random_simplex(eng, 3), random_simplex(eng, 3)});
    for (const auto& p : probes) CHECK(is_nash(g, p).nash == is_nash(shifted, p).nash);
    CHECK(support_enumeration(shifted) == support_enumeration(g));
  }
}

TEST_CASE("the three rank-1 equilibrium conditions agree") {
  const Game g = fixture("ex1");
  const RatMatrix C = -g.A;
  const Vec a{2, -1}, b{1, -1};
  const auto r = check_lemma_equiv(g.A, C, a, b, {{Rational(1, 4), Rational(3, 4)}, {Rational(1, 2), Rational(1, 2)}});
  CHECK((r.a && r.b && r.c));
  const auto bad = check_lemma_equiv(g.A, C, a, b, {{1, 0}, {0, 1}});
  CHECK_FALSE((bad.a || bad.b || bad.c));

  std::mt19937_64 eng(17);
  for (int k = 0; k < 200; ++k) {
    const auto h = gen_random_rank1(1 + eng() % 3, 1 + eng() % 3, 3, eng());
    const RatMatrix Ck = -h.A;
    std::vector<MixedProfile> probes = support_enumeration(h.game());
    probes.push_back({random_simplex(eng, h.rows()), random_simplex(eng, h.cols())});
    for (const auto& p : probes) {
      const auto res = check_lemma_equiv(h.A, Ck, h.a(), h.b(), p);
      CHECK(res.agree());
      CHECK(res.a == is_nash(h.game(), p).nash);
    }
  }
}
