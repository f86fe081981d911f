#include "rank1/game.hpp"

#include <stdexcept>
#include <utility>

namespace rank1 {

Game::Game(RatMatrix a, RatMatrix b) : A(std::move(a)), B(std::move(b)) {
  if (A.rows() != B.rows() || A.cols() != B.cols()) throw DimensionError("Game: A and B differ in shape");
  if (A.rows() == 0 || A.cols() == 0) throw DimensionError("Game: need at least one row and one column");
}

bool is_simplex_point(const Vec& v) {
  if (v.empty()) return false;
  for (const auto& e : v)
    if (sgn(e) < 0) return false;
  return sum(v) == 1;
}

void validate_profile(const Game& g, const MixedProfile& p) {
  if (p.x.size() != g.rows() || p.y.size() != g.cols())
    throw DimensionError("profile lengths do not match the game");
  if (!is_simplex_point(p.x)) throw std::invalid_argument("x is not a mixed strategy");
  if (!is_simplex_point(p.y)) throw std::invalid_argument("y is not a mixed strategy");
}

RankOneGame::RankOneGame(RatMatrix a_matrix, Vec a, Vec b)
    : A(std::move(a_matrix)), factorization{std::move(a), std::move(b)} {
  if (A.rows() == 0 || A.cols() == 0) throw DimensionError("RankOneGame: empty payoff matrix");
  if (factorization.a.size() != A.rows() || factorization.b.size() != A.cols())
    throw DimensionError("RankOneGame: factor lengths do not match A");
}

RankOneGame RankOneGame::from_game(const Game& g) {
  const RatMatrix sum = g.A + g.B;
  const std::size_t r = matrix_rank(sum);
  if (r == 0) return RankOneGame(g.A, zeros(g.rows()), zeros(g.cols()));
  if (r > 1) throw RankError("game has rank " + std::to_string(r) + ", expected at most 1");
  auto f = factor_rank_one(sum);
  return RankOneGame(g.A, std::move(f.a), std::move(f.b));
}

RatMatrix RankOneGame::B() const { return -A + factorization.outer(); }

}  // namespace rank1
