#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "rank1/lp.hpp"
#include "rank1/rational.hpp"

namespace rank1 {

class EmptyFace : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// {z : G z ≤ h, C z = d, z_j ≥ 0 for flagged j}.
struct Polyhedron {
  std::size_t dim = 0;
  std::vector<Vec> G;
  Vec h;
  std::vector<Vec> C;
  Vec d;
  std::vector<bool> nonneg;

  Polyhedron() = default;
  explicit Polyhedron(std::size_t dimension) : dim(dimension), nonneg(dimension, false) {}

  void add_le(Vec row, Rational rhs);
  void add_ge(Vec row, Rational rhs);
  void add_eq(Vec row, Rational rhs);
  /// Fix coordinate j to a value.
  void fix(std::size_t j, Rational value);

  bool contains(const Vec& z) const;

  /// LP over this polyhedron; flagged coordinates become nonnegative
  /// variables, the rest are free. Rows keep their insertion order with
  /// the ≤ rows first, then the equalities.
  lp::LpProblem to_lp(const Vec& objective, lp::Sense sense) const;
};

/// Which inequalities can hold strictly, and a point where all of them do.
struct TrueSet {
  std::vector<bool> rows;    // per G row
  std::vector<bool> coords;  // per coordinate; false for unflagged ones
  Vec interior;
};

/// Solves the true-inequality LP
///   maximize 1ᵀu  s.t.  Gz + u − hα ≤ 0, −z_j + u_j ≤ 0 (flagged j),
///                       Cz − dα = 0, 0 ≤ u ≤ 1, α ≥ 1.
/// Returns nullopt when the polyhedron is empty.
std::optional<TrueSet> true_set(const Polyhedron& p);

/// Vertices of a nonempty polytope, sorted lexicographically. The polytope
/// must be bounded. Throws EmptyFace when it is empty.
std::vector<Vec> vertices(const Polyhedron& p);

/// Keeps the coordinates listed in `keep`, in that order.
Vec project(const Vec& z, const std::vector<std::size_t>& keep);

}  // namespace rank1
