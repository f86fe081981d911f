#pragma once

#include <cstdint>
#include <vector>

#include "rank1/game.hpp"
#include "rank1/param_lp.hpp"

namespace rank1 {

struct EquilibriumRecord {
  MixedProfile profile;
  Rational payoff_1;
  Rational payoff_2;
  Rational lambda;  // = xᵀa
};

/// Bracket [lo, hi] with witnesses: x optimal in P_lo with lo ≤ xᵀa, and
/// x optimal in P_hi with xᵀa ≤ hi.
struct SearchState {
  Rational lo;
  Rational hi;
  Vec lo_witness;
  Vec hi_witness;
};

bool search_invariant_holds(const ParamContext& ctx, const Vec& a, const SearchState& s);

enum class QSense { Max, Min };

struct QResult {
  lp::LpSolution raw;
  Rational objective;
  Rational lambda;
  Vec x;
};

/// Max: maximize λ − xᵀa over P(M,N) ∩ {xᵀa ≥ λ ≥ λ′}.
/// Min: minimize λ − xᵀa over P(M,N) ∩ {xᵀa ≤ λ ≤ λ′}.
/// Objective zero means the piece reaches the hyperplane xᵀa = λ.
QResult q_lp(const ParamContext& ctx, const TrueInequalities& tineq, const Vec& a, const Rational& lambda_prime,
             QSense sense);

struct BinsearchOptions {
  bool check_invariant = false;
  std::size_t max_iterations = 100000;
};

struct BinsearchStats {
  std::size_t iterations = 0;
  std::size_t invariant_checks = 0;
  std::size_t invariant_failures = 0;
  std::vector<Rational> midpoints;
};

struct BinsearchResult {
  EquilibriumRecord record;
  BinsearchStats stats;
};

BinsearchResult binsearch(const RankOneGame& g, const BinsearchOptions& opts);
EquilibriumRecord binsearch(const RankOneGame& g);

}  // namespace rank1
