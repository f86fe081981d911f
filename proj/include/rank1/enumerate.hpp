#pragma once

#include <vector>

#include "rank1/game.hpp"
#include "rank1/param_lp.hpp"

namespace rank1 {

enum class SubsetKind { AtBreakpoint, OnInterval };

/// A maximal Nash subset conv(x_vertices) × conv(y_vertices). The λ values
/// xᵀa over the subset form [lambda_lo, lambda_hi].
struct NashSubset {
  SubsetKind kind = SubsetKind::AtBreakpoint;
  Rational lambda_lo;
  Rational lambda_hi;
  std::vector<Vec> x_vertices;
  std::vector<Vec> y_vertices;
  TrueInequalities defining_trueineq;
};

/// Vertices of {x : (λ, x) ∈ P(M,N), xᵀa = λ}, optionally with λ fixed.
/// Returns (λ, x) pairs as vectors [λ, x₁, …, x_m]. Throws EmptyFace.
std::vector<Vec> subset_vertices(const ParamContext& ctx, const TrueInequalities& tineq, const Vec& a,
                                 const std::optional<Rational>& fixed_lambda);

/// Vertices of a Y-face, projected to y.
std::vector<Vec> y_face_vertices(const Polyhedron& y_face, std::size_t n);

/// All maximal Nash subsets, ordered by λ with breakpoint subsets first at ties.
std::vector<NashSubset> enumerate_all(const RankOneGame& g);

/// Every (x, y) vertex pair over all subsets, sorted and deduplicated.
std::vector<MixedProfile> extreme_equilibria(const std::vector<NashSubset>& subsets);

}  // namespace rank1
