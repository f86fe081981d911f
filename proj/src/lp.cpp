#include "rank1/lp.hpp"

#include <atomic>
#include <limits>
#include <utility>

namespace rank1::lp {

const char* to_string(Status s) {
  switch (s) {
    case Status::Optimal:
      return "optimal";
    case Status::Infeasible:
      return "infeasible";
    case Status::Unbounded:
      return "unbounded";
  }
  return "?";
}

LpProblem::LpProblem(std::size_t num_vars, Sense s)
    : sense(s), objective(num_vars, Rational(0)), bounds(num_vars, Bound::NonNegative) {}

std::size_t LpProblem::add(Vec coefficients, Relation rel, Rational rhs) {
  constraints.push_back(Constraint{std::move(coefficients), rel, std::move(rhs)});
  return constraints.size() - 1;
}

void LpProblem::validate() const {
  if (objective.empty()) throw DimensionError("LpProblem: no variables");
  if (bounds.size() != objective.size()) throw DimensionError("LpProblem: bounds/objective length mismatch");
  for (const auto& c : constraints)
    if (c.coefficients.size() != objective.size()) throw DimensionError("LpProblem: constraint row length mismatch");
}

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

std::atomic<bool> g_audit{false};
std::atomic<std::uint64_t> g_checked{0};
std::atomic<std::uint64_t> g_violations{0};

// Dense tableau for  min cᵀz  s.t.  Tz = rhs, z ≥ 0  with an explicit basis.
class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), t_(rows * (cols + 1)), z_(cols + 1), basis_(rows, kNone) {}

  Rational& at(std::size_t i, std::size_t j) { return t_[i * (cols_ + 1) + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return t_[i * (cols_ + 1) + j]; }
  Rational& rhs(std::size_t i) { return at(i, cols_); }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::vector<std::size_t>& basis() { return basis_; }

  // Reduced-cost row for costs c (indexed by column); z_[cols_] = −objective.
  void price(const Vec& c) {
    for (std::size_t j = 0; j <= cols_; ++j) z_[j] = j < cols_ ? c[j] : Rational(0);
    for (std::size_t i = 0; i < rows_; ++i) {
      const Rational& cb = c[basis_[i]];
      if (sgn(cb) == 0) continue;
      for (std::size_t j = 0; j <= cols_; ++j)
        if (sgn(at(i, j)) != 0) z_[j] -= cb * at(i, j);
    }
  }

  Rational objective() const { return -z_[cols_]; }

  void pivot(std::size_t r, std::size_t c) {
    const Rational inv = 1 / at(r, c);
    nz_.clear();
    for (std::size_t j = 0; j <= cols_; ++j) {
      if (sgn(at(r, j)) == 0) continue;
      at(r, j) *= inv;
      nz_.push_back(j);
    }
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r || sgn(at(i, c)) == 0) continue;
      const Rational f = at(i, c);
      for (std::size_t j : nz_) at(i, j) -= f * at(r, j);
    }
    if (sgn(z_[c]) != 0) {
      const Rational f = z_[c];
      for (std::size_t j : nz_) z_[j] -= f * at(r, j);
    }
    basis_[r] = c;
  }

  enum class Outcome { Optimal, Unbounded };

  // Bland's rule: least-index entering column, least-index basic variable
  // among ratio-test ties. Columns >= `barred_from` never enter.
  Outcome run(std::size_t barred_from) {
    for (;;) {
      std::size_t enter = kNone;
      for (std::size_t j = 0; j < barred_from; ++j) {
        if (sgn(z_[j]) < 0) {
          enter = j;
          break;
        }
      }
      if (enter == kNone) return Outcome::Optimal;
      std::size_t leave = kNone;
      Rational best;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (sgn(at(i, enter)) <= 0) continue;
        Rational ratio = at(i, cols_) / at(i, enter);
        if (leave == kNone || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = std::move(ratio);
        }
      }
      if (leave == kNone) return Outcome::Unbounded;
      pivot(leave, enter);
    }
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> t_;
  Vec z_;
  std::vector<std::size_t> basis_;
  std::vector<std::size_t> nz_;
};

}  // namespace

LpSolution solve(const LpProblem& p) {
  p.validate();
  const std::size_t nvars = p.num_vars();
  const std::size_t nrows = p.constraints.size();
  const bool maximize = p.sense == Sense::Maximize;

  // Column layout: structural (free variables split in two), slacks, artificials.
  std::vector<std::size_t> pos_col(nvars), neg_col(nvars, kNone);
  std::size_t ncols = 0;
  for (std::size_t j = 0; j < nvars; ++j) {
    pos_col[j] = ncols++;
    if (p.bounds[j] == Bound::Free) neg_col[j] = ncols++;
  }
  std::vector<std::size_t> slack_col(nrows, kNone);
  std::vector<int> row_sign(nrows, 1);
  for (std::size_t k = 0; k < nrows; ++k) {
    if (p.constraints[k].relation != Relation::Equal) slack_col[k] = ncols++;
    if (sgn(p.constraints[k].rhs) < 0) row_sign[k] = -1;
  }
  // A slack whose normalized coefficient is +1 serves as the initial basic column.
  std::vector<std::size_t> init_col(nrows, kNone);
  for (std::size_t k = 0; k < nrows; ++k) {
    const auto rel = p.constraints[k].relation;
    if ((rel == Relation::LessEqual && row_sign[k] == 1) || (rel == Relation::GreaterEqual && row_sign[k] == -1))
      init_col[k] = slack_col[k];
  }
  const std::size_t first_artificial = ncols;
  for (std::size_t k = 0; k < nrows; ++k)
    if (init_col[k] == kNone) init_col[k] = ncols++;

  Tableau tab(nrows, ncols);
  for (std::size_t k = 0; k < nrows; ++k) {
    const auto& con = p.constraints[k];
    const int s = row_sign[k];
    for (std::size_t j = 0; j < nvars; ++j) {
      if (sgn(con.coefficients[j]) == 0) continue;
      tab.at(k, pos_col[j]) = s > 0 ? con.coefficients[j] : Rational(-con.coefficients[j]);
      if (neg_col[j] != kNone) tab.at(k, neg_col[j]) = -tab.at(k, pos_col[j]);
    }
    if (slack_col[k] != kNone) tab.at(k, slack_col[k]) = (con.relation == Relation::LessEqual ? 1 : -1) * s;
    if (init_col[k] >= first_artificial) tab.at(k, init_col[k]) = 1;
    tab.rhs(k) = s > 0 ? con.rhs : Rational(-con.rhs);
    tab.basis()[k] = init_col[k];
  }

  LpSolution out;

  if (first_artificial < ncols) {
    Vec phase1(ncols, Rational(0));
    for (std::size_t j = first_artificial; j < ncols; ++j) phase1[j] = 1;
    tab.price(phase1);
    tab.run(ncols);  // bounded below by zero
    if (sgn(tab.objective()) > 0) {
      out.status = Status::Infeasible;
      return out;
    }
    // Pivot zero-level artificials out where the row allows it.
    for (std::size_t r = 0; r < nrows; ++r) {
      if (tab.basis()[r] < first_artificial) continue;
      for (std::size_t j = 0; j < first_artificial; ++j) {
        if (sgn(tab.at(r, j)) != 0) {
          tab.pivot(r, j);
          break;
        }
      }
    }
  }

  Vec cost(ncols, Rational(0));
  for (std::size_t j = 0; j < nvars; ++j) {
    const Rational c = maximize ? Rational(-p.objective[j]) : p.objective[j];
    cost[pos_col[j]] = c;
    if (neg_col[j] != kNone) cost[neg_col[j]] = -c;
  }
  tab.price(cost);
  if (tab.run(first_artificial) == Tableau::Outcome::Unbounded) {
    out.status = Status::Unbounded;
    return out;
  }

  Vec z(ncols, Rational(0));
  for (std::size_t r = 0; r < nrows; ++r) z[tab.basis()[r]] = tab.rhs(r);

  out.status = Status::Optimal;
  out.primal.resize(nvars);
  for (std::size_t j = 0; j < nvars; ++j) {
    out.primal[j] = z[pos_col[j]];
    if (neg_col[j] != kNone) out.primal[j] -= z[neg_col[j]];
  }
  // π = c_Bᵀ B⁻¹, where column k of B⁻¹ sits under the initial basic column of row k.
  out.dual.assign(nrows, Rational(0));
  for (std::size_t k = 0; k < nrows; ++k) {
    Rational pi = 0;
    for (std::size_t r = 0; r < nrows; ++r) {
      const Rational& cb = cost[tab.basis()[r]];
      if (sgn(cb) != 0 && sgn(tab.at(r, init_col[k])) != 0) pi += cb * tab.at(r, init_col[k]);
    }
    if (row_sign[k] < 0) pi = -pi;
    out.dual[k] = maximize ? Rational(-pi) : pi;
  }
  out.objective_value = dot(p.objective, out.primal);
  out.basis = tab.basis();

  if (g_audit.load(std::memory_order_relaxed)) {
    g_checked.fetch_add(1, std::memory_order_relaxed);
    if (!check_certificates(p, out).ok()) g_violations.fetch_add(1, std::memory_order_relaxed);
  }
  return out;
}

CertificateReport check_certificates(const LpProblem& p, const LpSolution& s) {
  CertificateReport rep;
  if (!s.optimal() || s.primal.size() != p.num_vars() || s.dual.size() != p.constraints.size()) return rep;
  const bool maximize = p.sense == Sense::Maximize;

  rep.primal_feasible = true;
  rep.complementary_slackness = true;
  rep.dual_feasible = true;
  for (std::size_t j = 0; j < p.num_vars(); ++j)
    if (p.bounds[j] == Bound::NonNegative && sgn(s.primal[j]) < 0) rep.primal_feasible = false;

  Vec reduced = p.objective;
  Rational dual_obj = 0;
  for (std::size_t k = 0; k < p.constraints.size(); ++k) {
    const auto& con = p.constraints[k];
    const Rational lhs = dot(con.coefficients, s.primal);
    const Rational slack = con.rhs - lhs;
    const Rational& y = s.dual[k];
    switch (con.relation) {
      case Relation::LessEqual:
        if (sgn(slack) < 0) rep.primal_feasible = false;
        if (maximize ? sgn(y) < 0 : sgn(y) > 0) rep.dual_feasible = false;
        break;
      case Relation::GreaterEqual:
        if (sgn(slack) > 0) rep.primal_feasible = false;
        if (maximize ? sgn(y) > 0 : sgn(y) < 0) rep.dual_feasible = false;
        break;
      case Relation::Equal:
        if (sgn(slack) != 0) rep.primal_feasible = false;
        break;
    }
    if (sgn(y) != 0 && sgn(slack) != 0) rep.complementary_slackness = false;
    if (sgn(y) != 0)
      for (std::size_t j = 0; j < p.num_vars(); ++j) reduced[j] -= y * con.coefficients[j];
    dual_obj += y * con.rhs;
  }
  for (std::size_t j = 0; j < p.num_vars(); ++j) {
    const int r = sgn(reduced[j]);
    if (p.bounds[j] == Bound::Free) {
      if (r != 0) rep.dual_feasible = false;
    } else {
      if (maximize ? r > 0 : r < 0) rep.dual_feasible = false;
      if (r != 0 && sgn(s.primal[j]) != 0) rep.complementary_slackness = false;
    }
  }
  const Rational primal_obj = dot(p.objective, s.primal);
  rep.strong_duality = primal_obj == dual_obj && primal_obj == s.objective_value;
  return rep;
}

void set_audit(bool enabled) { g_audit.store(enabled); }

AuditCounters audit_counters() { return AuditCounters{g_checked.load(), g_violations.load()}; }

void reset_audit() {
  g_checked.store(0);
  g_violations.store(0);
}

ZeroSumSolution solve_zero_sum(const RatMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  if (rows == 0 || cols == 0) throw DimensionError("solve_zero_sum: empty matrix");
  // Variables: y_1..y_n, u.
  LpProblem p(cols + 1, Sense::Maximize);
  p.bounds[cols] = Bound::Free;
  p.objective[cols] = 1;
  for (std::size_t i = 0; i < rows; ++i) {
    Vec row = m.row(i);
    row.push_back(1);
    p.add(std::move(row), Relation::LessEqual, 0);
  }
  Vec simplex(cols + 1, Rational(1));
  simplex[cols] = 0;
  p.add(std::move(simplex), Relation::Equal, 1);

  const LpSolution s = solve(p);
  if (!s.optimal()) throw std::logic_error("zero-sum LP must be feasible and bounded");
  ZeroSumSolution out;
  out.y.assign(s.primal.begin(), s.primal.begin() + static_cast<std::ptrdiff_t>(cols));
  out.x.assign(s.dual.begin(), s.dual.begin() + static_cast<std::ptrdiff_t>(rows));
  out.value = -s.primal[cols];
  return out;
}

}  // namespace rank1::lp
