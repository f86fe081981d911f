#pragma once

// Game file format:
//
//   m n
//   <m rows of n rationals: A>
//   <blank line>
//   <m rows of n rationals: B>
//   # factorization: a = a_1 … a_m; b = b_1 … b_n      (optional)
//
// Other lines starting with '#' are comments.

#include <optional>
#include <string>
#include <string_view>

#include "rank1/game.hpp"

namespace rank1 {

struct GameFile {
  Game game;
  std::optional<RankOneFactorization> factorization;
};

/// Throws ParseError.
GameFile parse_game_file(std::string_view text);
GameFile read_game_file(const std::string& path);

std::string format_game_file(const Game& g, const std::optional<RankOneFactorization>& f = std::nullopt);

/// Uses the file's factorization when present (checked against A + B),
/// otherwise factors A + B. Throws RankError when the rank exceeds one and
/// ParseError when a stated factorization is wrong.
RankOneGame to_rank_one(const GameFile& f);

}  // namespace rank1
