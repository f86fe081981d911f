#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "rank1/game.hpp"

namespace rank1 {

struct ExpoParams {
  std::size_t n = 1;
  Rational p = 3;
};

/// a_ij = 2p^{i+j} above the diagonal, p^{2i} on it, 0 below (1-based);
/// B = Aᵀ. A + B = abᵀ with a_i = p^i, b_j = 2p^j.
Game gen_expo(const ExpoParams& params);
RankOneGame gen_expo_rank1(const ExpoParams& params);

struct TradeParams {
  Vec quality;       // m
  Vec quantity;      // n
  RatMatrix prices;  // m×n
  Rational alpha;
  Rational beta;
  Vec gamma;  // n, empty means zero
  Vec delta;  // m, empty means zero
};

struct TradeGames {
  Game full;
  RankOneGame reduced;
};

/// Seller/buyer payoffs p_ij − α a_i b_j + γ_j and −p_ij + β a_i b_j + δ_i.
/// The reduced game drops γ and δ; its A + B is (β − α)·quality·quantityᵀ.
TradeGames gen_trade(const TradeParams& params);

class UnknownFixture : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// "ex1", "ex3", or "param-N2" with `lambda` (also accepts "param-N2(λ)").
Game fixture(const std::string& name, const std::optional<Rational>& lambda = std::nullopt);

/// Integer entries uniform in [−bound, bound]; B = −A + abᵀ.
RankOneGame gen_random_rank1(std::size_t m, std::size_t n, std::int64_t bound, std::uint64_t seed);
/// Independent integer A and B in [−bound, bound].
Game gen_random_game(std::size_t m, std::size_t n, std::int64_t bound, std::uint64_t seed);

}  // namespace rank1
