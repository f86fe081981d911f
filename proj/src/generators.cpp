#include "rank1/generators.hpp"

#include <random>

namespace rank1 {

namespace {

Rational power(const Rational& base, std::size_t e) {
  Rational r = 1;
  for (std::size_t k = 0; k < e; ++k) r *= base;
  return r;
}

}  // namespace

Game gen_expo(const ExpoParams& params) {
  if (params.n == 0) throw std::invalid_argument("expo: n must be at least 1");
  if (params.p <= 2) throw std::invalid_argument("expo: p must exceed 2");
  const std::size_t n = params.n;
  RatMatrix A(n, n);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i; j <= n; ++j) A(i - 1, j - 1) = j > i ? 2 * power(params.p, i + j) : power(params.p, 2 * i);
  RatMatrix B = A.transpose();
  return Game(std::move(A), std::move(B));
}

RankOneGame gen_expo_rank1(const ExpoParams& params) {
  const Game g = gen_expo(params);
  Vec a(params.n), b(params.n);
  for (std::size_t i = 1; i <= params.n; ++i) {
    a[i - 1] = power(params.p, i);
    b[i - 1] = 2 * power(params.p, i);
  }
  return RankOneGame(g.A, std::move(a), std::move(b));
}

TradeGames gen_trade(const TradeParams& tp) {
  const std::size_t m = tp.quality.size();
  const std::size_t n = tp.quantity.size();
  if (m == 0 || n == 0) throw DimensionError("trade: need quality and quantity levels");
  if (tp.prices.rows() != m || tp.prices.cols() != n) throw DimensionError("trade: price matrix must be m x n");
  if (!tp.gamma.empty() && tp.gamma.size() != n) throw DimensionError("trade: gamma must have n entries");
  if (!tp.delta.empty() && tp.delta.size() != m) throw DimensionError("trade: delta must have m entries");
  if (!(tp.beta > tp.alpha && tp.alpha > 0)) throw std::invalid_argument("trade: need beta > alpha > 0");

  RatMatrix A(m, n), B(m, n), Ar(m, n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Rational ab = tp.quality[i] * tp.quantity[j];
      Ar(i, j) = tp.prices(i, j) - tp.alpha * ab;
      A(i, j) = Ar(i, j) + (tp.gamma.empty() ? Rational(0) : tp.gamma[j]);
      B(i, j) = -tp.prices(i, j) + tp.beta * ab + (tp.delta.empty() ? Rational(0) : tp.delta[i]);
    }
  }
  Vec a = tp.quality;
  for (auto& e : a) e *= tp.beta - tp.alpha;
  return TradeGames{Game(std::move(A), std::move(B)), RankOneGame(std::move(Ar), std::move(a), tp.quantity)};
}

Game fixture(const std::string& name, const std::optional<Rational>& lambda) {
  if (name == "ex1") return Game(RatMatrix{{1, 0}, {0, 1}}, RatMatrix{{1, -2}, {-1, 0}});
  if (name == "ex3") return Game(RatMatrix{{1, -1}, {0, 0}}, RatMatrix{{1, 0}, {2, 0}});
  std::optional<Rational> lam = lambda;
  if (name.rfind("param-N2(", 0) == 0 && name.back() == ')') {
    lam = parse_rational(std::string_view(name).substr(9, name.size() - 10));
  } else if (name != "param-N2") {
    throw UnknownFixture("unknown fixture '" + name + "' (expected ex1, ex3 or param-N2)");
  }
  if (!lam) throw std::invalid_argument("fixture param-N2 needs a lambda value");
  return Game(RatMatrix{{1, -1}, {0, 0}}, RatMatrix{{4 + *lam, 0}, {*lam, 0}});
}

namespace {

// Modulo draw keeps streams identical across standard libraries.
Rational draw(std::mt19937_64& eng, std::int64_t bound) {
  const auto span = static_cast<std::uint64_t>(2 * bound + 1);
  return Rational(static_cast<long>(static_cast<std::int64_t>(eng() % span) - bound));
}

}  // namespace

RankOneGame gen_random_rank1(std::size_t m, std::size_t n, std::int64_t bound, std::uint64_t seed) {
  if (m == 0 || n == 0 || bound <= 0) throw std::invalid_argument("random: sizes and bound must be positive");
  std::mt19937_64 eng(seed);
  RatMatrix A(m, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) A(i, j) = draw(eng, bound);
  Vec a(m), b(n);
  for (auto& e : a) e = draw(eng, bound);
  for (auto& e : b) e = draw(eng, bound);
  return RankOneGame(std::move(A), std::move(a), std::move(b));
}

Game gen_random_game(std::size_t m, std::size_t n, std::int64_t bound, std::uint64_t seed) {
  if (m == 0 || n == 0 || bound <= 0) throw std::invalid_argument("random: sizes and bound must be positive");
  std::mt19937_64 eng(seed);
  RatMatrix A(m, n), B(m, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) A(i, j) = draw(eng, bound);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) B(i, j) = draw(eng, bound);
  return Game(std::move(A), std::move(B));
}

}  // namespace rank1
