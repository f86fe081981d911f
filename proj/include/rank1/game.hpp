#pragma once

#include "rank1/matrix.hpp"
#include "rank1/rational.hpp"

namespace rank1 {

/// Bimatrix game: A pays the row player, B the column player. Both m×n.
struct Game {
  RatMatrix A;
  RatMatrix B;

  Game() = default;
  Game(RatMatrix a, RatMatrix b);

  std::size_t rows() const { return A.rows(); }
  std::size_t cols() const { return A.cols(); }

  bool operator==(const Game&) const = default;
};

/// Mixed strategy pair; x over rows, y over columns.
struct MixedProfile {
  Vec x;
  Vec y;

  bool operator==(const MixedProfile&) const = default;
};

bool is_simplex_point(const Vec& v);

/// Throws DimensionError on length mismatch, std::invalid_argument when a
/// vector is not a probability vector.
void validate_profile(const Game& g, const MixedProfile& p);

/// Rank-1 game (A, −A + abᵀ), stored as A and the factorization of A + B.
/// Zero-sum games are represented with a = 0, b = 0.
struct RankOneGame {
  RatMatrix A;
  RankOneFactorization factorization;

  RankOneGame() = default;
  RankOneGame(RatMatrix a_matrix, Vec a, Vec b);

  /// Computes rank(A + B) and the canonical factorization. Throws RankError
  /// when the rank exceeds one.
  static RankOneGame from_game(const Game& g);

  const Vec& a() const { return factorization.a; }
  const Vec& b() const { return factorization.b; }
  std::size_t rows() const { return A.rows(); }
  std::size_t cols() const { return A.cols(); }

  RatMatrix B() const;
  Game game() const { return Game(A, B()); }
};

}  // namespace rank1
