#pragma once

// The Kohlberg–Mertens map between games and the equilibrium
// correspondence, and a variant that keeps A + B fixed.

#include <optional>
#include <stdexcept>

#include "rank1/game.hpp"

namespace rank1 {

class NotAnEquilibrium : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SumMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// c = p + x with x on the simplex, x_i > 0 only where p_i = max p = level.
struct WaterLevelResult {
  Vec x;
  Vec p;
  Rational level;
};

WaterLevelResult water_level(const Vec& c);

/// A = base + avg·1ᵀ with base·1 = 0 (rows), or B = base + 1·avgᵀ with
/// 1ᵀ·base = 0 (columns).
struct KmDecomposition {
  RatMatrix base;
  Vec avg;
};

KmDecomposition km_decompose_rows(const RatMatrix& A);
KmDecomposition km_decompose_cols(const RatMatrix& B);

/// A = hat + γ·11ᵀ + a1ᵀ + 1bᵀ with 1ᵀhat = 0, hat·1 = 0, 1ᵀa = 0, bᵀ1 = 0.
struct PsiDecomposition {
  RatMatrix hat;
  Rational gamma;
  Vec a;
  Vec b;

  RatMatrix compose() const;
};

PsiDecomposition psi_decompose(const RatMatrix& A);

/// Subtract the mean from every entry.
Vec center(const Vec& v);

struct GamePair {
  RatMatrix C;
  RatMatrix D;
};

struct EquilibriumPoint {
  Game game;
  MixedProfile profile;
};

/// C = Ã + (Ay + x)1ᵀ, D = B̃ + 1(xᵀB + yᵀ). Throws NotAnEquilibrium.
GamePair km_inverse(const Game& g, const MixedProfile& p);
EquilibriumPoint km_forward(const RatMatrix& C, const RatMatrix& D);

/// Requires C + D = M (SumMismatch otherwise). The output has A + B = M.
EquilibriumPoint psi_forward(const RatMatrix& C, const RatMatrix& D, const RatMatrix& M);
/// M defaults to A + B. Throws NotAnEquilibrium or SumMismatch.
GamePair psi_inverse(const Game& g, const MixedProfile& p, const std::optional<RatMatrix>& M = std::nullopt);

}  // namespace rank1
