#pragma once

// The λ-parameterized LP pair
//   D_λ: maximize λbᵀy + t   s.t.  Ay + 1t ≤ 0, 1ᵀy = 1, y ≥ 0
//   P_λ: minimize v          s.t.  Aᵀx + 1v − s = bλ, 1ᵀx = 1, x, s ≥ 0
// with common optimum φ(λ), a convex piecewise-linear function of λ.

#include <optional>
#include <vector>

#include "rank1/lp.hpp"
#include "rank1/matrix.hpp"
#include "rank1/polyhedron.hpp"

namespace rank1 {

struct ParamContext {
  RatMatrix A;
  Vec b;

  ParamContext() = default;
  ParamContext(RatMatrix a, Vec bvec);

  std::size_t rows() const { return A.rows(); }
  std::size_t cols() const { return A.cols(); }
};

/// M: rows with (Ay)_i + t < 0 somewhere on the face; N: columns with
/// y_j > 0 somewhere on the face. 0-based, ascending.
struct TrueInequalities {
  std::vector<std::size_t> M;
  std::vector<std::size_t> N;

  bool operator==(const TrueInequalities&) const = default;
};

struct Breakpoint {
  Rational lambda;
  Rational left_slope;
  Rational right_slope;
  Rational phi;
};

enum class SegmentKind { Interval, AtBreakpoint };

/// A piece of the solution path. Missing ends are ±∞.
struct Segment {
  SegmentKind kind = SegmentKind::Interval;
  std::optional<Rational> lo;
  std::optional<Rational> hi;
  TrueInequalities tineq;
  Vec y;
  Rational t;
  /// Interval: φ(λ) = slope·λ + intercept on [lo, hi].
  /// Breakpoint: slope = φ′₋, right_slope = φ′₊, intercept = φ(λ_k).
  Rational slope;
  Rational intercept;
  Rational right_slope;

  /// Set for breakpoint segments: the face {λ_k bᵀy + t = φ(λ_k)}.
  /// Set for interval segments: the face {bᵀy = slope, t = intercept}.
  Polyhedron y_face;
};

struct ValuePiece {
  std::optional<Rational> lo;
  std::optional<Rational> hi;
  Rational slope;
  Rational intercept;
};

struct ValueFunction {
  std::vector<ValuePiece> pieces;
  std::vector<Breakpoint> breakpoints;

  Rational operator()(const Rational& lambda) const;
};

struct PSolution {
  Vec x;
  Rational v;
  Vec s;
  lp::LpSolution raw;
};

struct DSolution {
  Vec y;
  Rational t;
  lp::LpSolution raw;
};

PSolution solve_P(const ParamContext& ctx, const Rational& lambda);
DSolution solve_D(const ParamContext& ctx, const Rational& lambda);
Rational phi(const ParamContext& ctx, const Rational& lambda);

/// D as a polyhedron in (y, t).
Polyhedron d_polyhedron(const ParamContext& ctx);
/// D ∩ {λbᵀy + t = φ}.
Polyhedron optimal_y_face(const ParamContext& ctx, const Rational& lambda, const Rational& phi_value);
/// D ∩ {bᵀy = slope, t = intercept}.
Polyhedron interval_y_face(const ParamContext& ctx, const Rational& slope, const Rational& intercept);

TrueInequalities true_inequalities_of(const ParamContext& ctx, const Polyhedron& y_face);
TrueInequalities true_inequalities(const ParamContext& ctx, const Rational& lambda, const Rational& phi_value);

/// P(M,N) over (λ, x, v, s): P_λ's constraints with λ free, x_M = 0, s_N = 0.
Polyhedron p_face(const ParamContext& ctx, const TrueInequalities& tineq);

/// Column offsets of the P(M,N) coordinates.
struct PFaceLayout {
  std::size_t m, n;
  std::size_t lambda() const { return 0; }
  std::size_t x(std::size_t i) const { return 1 + i; }
  std::size_t v() const { return 1 + m; }
  std::size_t s(std::size_t j) const { return 2 + m + j; }
  std::size_t dim() const { return 2 + m + n; }
};

enum class Direction { Min, Max };

/// minimize/maximize bᵀy over the optimal face of D_λ.
lp::LpSolution sl_lp(const ParamContext& ctx, const Rational& lambda, const Rational& phi_value, Direction dir);

struct BrResult {
  std::optional<Rational> lambda;  // nullopt: unbounded in that direction
  Vec x;                           // x part of the optimal point
};

/// minimize/maximize λ over P(M,N). Throws EmptyFace when P(M,N) is empty.
BrResult br_lp(const ParamContext& ctx, const TrueInequalities& tineq, Direction dir);

/// Left and right slopes of φ at λ when they differ.
std::optional<Breakpoint> breakpoint_at(const ParamContext& ctx, const Rational& lambda);

/// Alternating interval and breakpoint segments, left to right. Starts with
/// the segment containing `from` (the leftmost interval when nullopt) and
/// stops after the last segment starting at or before `to`.
std::vector<Segment> next_breakpoint_walk(const ParamContext& ctx, const std::optional<Rational>& from,
                                          const std::optional<Rational>& to);

ValueFunction value_function(const ParamContext& ctx);

}  // namespace rank1
