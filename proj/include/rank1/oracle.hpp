#pragma once

// Ground-truth checks. Nothing here calls the LP engine.

#include <optional>
#include <stdexcept>
#include <vector>

#include "rank1/game.hpp"

namespace rank1 {

class LimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct BestResponseCert {
  Vec payoff_vector;
  Rational best_value;
  std::vector<bool> support_ok;

  bool ok() const;
};

struct NashCheck {
  bool nash = false;
  BestResponseCert row;  // Ay against x
  BestResponseCert col;  // Bᵀx against y
  Rational u;            // best payoff of player 1
  Rational v;            // best payoff of player 2
};

/// Exact best-response test. Throws DimensionError / invalid_argument on
/// malformed profiles.
NashCheck is_nash(const Game& g, const MixedProfile& p);

/// xᵀ(A+B)y − max(Ay) − max(Bᵀx). Zero exactly at equilibria, else negative.
Rational qp_value(const Game& g, const MixedProfile& p);

constexpr std::size_t kDefaultOracleLimit = 5;

/// Every extreme equilibrium, sorted. A pair is extreme when x and y are
/// vertices of the best-response polyhedra
///   {(x,v) : x ≥ 0, 1ᵀx = 1, Bᵀx ≤ 1v},  {(y,u) : y ≥ 0, 1ᵀy = 1, Ay ≤ 1u}
/// with x supported on best responses to y and vice versa.
std::vector<MixedProfile> support_enumeration(const Game& g, std::size_t limit = kDefaultOracleLimit);

/// Whether some vertex of either best-response polyhedron has more pure best
/// responses than its support size.
bool is_degenerate(const Game& g, std::size_t limit = kDefaultOracleLimit);

struct LemmaEquivResult {
  bool a = false;  // NE of (A, C + abᵀ)
  bool b = false;  // NE of (A, C + 1λbᵀ) and xᵀa = λ
  bool c = false;  // NE of (A − 1λbᵀ, C + 1λbᵀ) and xᵀa = λ

  bool agree() const { return a == b && b == c; }
};

/// Evaluates the three conditions separately; λ defaults to xᵀa.
LemmaEquivResult check_lemma_equiv(const RatMatrix& A, const RatMatrix& C, const Vec& a, const Vec& b,
                                   const MixedProfile& p, const std::optional<Rational>& lambda = std::nullopt);

}  // namespace rank1
