#pragma once

// Exact linear programming over the rationals: dense two-phase primal
// simplex with Bland's least-index rule.
//
// Dual sign convention. For an Optimal solution the multipliers y satisfy
//   objective_value = Σ_k y_k rhs_k
//   r = objective − Σ_k y_k row_k   (reduced costs)
// with r_j = 0 for free variables and, for nonnegative variables,
// r_j ≥ 0 when minimizing and r_j ≤ 0 when maximizing. Multipliers of
// equality rows are free; for inequality rows
//   minimize:  y_k ≤ 0 on "≤" rows, y_k ≥ 0 on "≥" rows
//   maximize:  y_k ≥ 0 on "≤" rows, y_k ≤ 0 on "≥" rows.

#include <cstdint>
#include <vector>

#include "rank1/matrix.hpp"
#include "rank1/rational.hpp"

namespace rank1::lp {

enum class Sense { Minimize, Maximize };
enum class Relation { LessEqual, Equal, GreaterEqual };
enum class Bound { NonNegative, Free };
enum class Status { Optimal, Infeasible, Unbounded };

const char* to_string(Status s);

struct Constraint {
  Vec coefficients;
  Relation relation;
  Rational rhs;
};

struct LpProblem {
  Sense sense = Sense::Minimize;
  Vec objective;
  std::vector<Constraint> constraints;
  std::vector<Bound> bounds;

  LpProblem() = default;
  /// num_vars nonnegative variables and a zero objective.
  LpProblem(std::size_t num_vars, Sense s);

  std::size_t num_vars() const { return objective.size(); }
  std::size_t add(Vec coefficients, Relation rel, Rational rhs);

  /// Throws DimensionError when rows and bounds disagree with the objective.
  void validate() const;
};

struct LpSolution {
  Status status = Status::Infeasible;
  Vec primal;
  Vec dual;
  Rational objective_value;
  /// Basic columns of the internal standard form, one per constraint row.
  std::vector<std::size_t> basis;

  bool optimal() const { return status == Status::Optimal; }
};

LpSolution solve(const LpProblem& p);

struct CertificateReport {
  bool primal_feasible = false;
  bool dual_feasible = false;
  bool strong_duality = false;
  bool complementary_slackness = false;

  bool ok() const { return primal_feasible && dual_feasible && strong_duality && complementary_slackness; }
};

/// Checks the Optimal certificates of `s` against `p` exactly.
CertificateReport check_certificates(const LpProblem& p, const LpSolution& s);

/// When enabled, every Optimal return of solve() is passed through
/// check_certificates and tallied. Process-wide atomic counters.
struct AuditCounters {
  std::uint64_t checked = 0;
  std::uint64_t violations = 0;
};
void set_audit(bool enabled);
AuditCounters audit_counters();
void reset_audit();

struct ZeroSumSolution {
  Vec x;
  Vec y;
  Rational value;
};

/// Equilibrium of the zero-sum game (M, −M): y solves
///   maximize u  s.t.  My + 1u ≤ 0, y ∈ Y,
/// x is read off the multipliers of the ≤ rows, and value = −u.
ZeroSumSolution solve_zero_sum(const RatMatrix& m);

}  // namespace rank1::lp
