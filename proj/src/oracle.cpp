#include "rank1/oracle.hpp"

#include <algorithm>
#include <map>

namespace rank1 {

bool BestResponseCert::ok() const {
  return std::all_of(support_ok.begin(), support_ok.end(), [](bool b) { return b; });
}

namespace {

BestResponseCert best_response(Vec payoffs, const Vec& strategy) {
  BestResponseCert c;
  c.best_value = max_entry(payoffs);
  c.support_ok.resize(payoffs.size());
  for (std::size_t i = 0; i < payoffs.size(); ++i) c.support_ok[i] = sgn(strategy[i]) == 0 || payoffs[i] == c.best_value;
  c.payoff_vector = std::move(payoffs);
  return c;
}

}  // namespace

NashCheck is_nash(const Game& g, const MixedProfile& p) {
  validate_profile(g, p);
  NashCheck out;
  out.row = best_response(g.A * p.y, p.x);
  out.col = best_response(g.B.transpose_times(p.x), p.y);
  out.u = out.row.best_value;
  out.v = out.col.best_value;
  out.nash = out.row.ok() && out.col.ok();
  return out;
}

Rational qp_value(const Game& g, const MixedProfile& p) {
  validate_profile(g, p);
  const Rational xAy = dot(p.x, g.A * p.y);
  const Rational xBy = dot(p.x, g.B * p.y);
  return xAy + xBy - max_entry(g.A * p.y) - max_entry(g.B.transpose_times(p.x));
}

namespace {

struct BrVertex {
  Vec s;
  Rational level;
  std::vector<bool> best;  // which opponent pure strategies are best responses
};

// Vertices of {(s, w) : s ≥ 0, 1ᵀs = 1, W s ≤ 1w} by trying every choice of
// r tight inequalities among the r + k. W is k×r.
std::vector<BrVertex> br_vertices(const RatMatrix& W) {
  const std::size_t r = W.cols();
  const std::size_t k = W.rows();
  const std::size_t total = r + k;
  std::map<Vec, BrVertex> found;

  std::vector<std::size_t> idx(r);
  for (std::size_t i = 0; i < r; ++i) idx[i] = i;
  RatMatrix sys(r + 1, r + 1);
  Vec rhs(r + 1);
  for (;;) {
    // Row 0: 1ᵀs = 1. Then one row per chosen tight inequality.
    for (std::size_t c = 0; c <= r; ++c) sys(0, c) = c < r ? 1 : 0;
    rhs[0] = 1;
    for (std::size_t q = 0; q < r; ++q) {
      const std::size_t label = idx[q];
      for (std::size_t c = 0; c <= r; ++c) sys(q + 1, c) = 0;
      if (label < r) {
        sys(q + 1, label) = 1;  // s_label = 0
      } else {
        for (std::size_t c = 0; c < r; ++c) sys(q + 1, c) = W(label - r, c);
        sys(q + 1, r) = -1;  // (Ws)_j − w = 0
      }
      rhs[q + 1] = 0;
    }
    if (auto z = solve_square(sys, rhs)) {
      Vec s(z->begin(), z->begin() + static_cast<std::ptrdiff_t>(r));
      const Rational w = (*z)[r];
      bool feasible = std::all_of(s.begin(), s.end(), [](const Rational& e) { return sgn(e) >= 0; });
      std::vector<bool> best(k);
      if (feasible) {
        const Vec ws = W * s;
        for (std::size_t j = 0; j < k; ++j) {
          if (ws[j] > w) feasible = false;
          best[j] = ws[j] == w;
        }
      }
      if (feasible && !found.count(s)) found.emplace(s, BrVertex{s, w, std::move(best)});
    }
    std::size_t i = r;
    while (i > 0 && idx[i - 1] == total - r + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
  std::vector<BrVertex> out;
  for (auto& [key, vtx] : found) out.push_back(std::move(vtx));
  return out;
}

void check_limit(const Game& g, std::size_t limit) {
  if (g.rows() > limit || g.cols() > limit)
    throw LimitExceeded("game is " + std::to_string(g.rows()) + "x" + std::to_string(g.cols()) +
                        ", oracle limit is " + std::to_string(limit));
}

}  // namespace

std::vector<MixedProfile> support_enumeration(const Game& g, std::size_t limit) {
  check_limit(g, limit);
  const auto xs = br_vertices(g.B.transpose());  // best[j]: column j is a best response to x
  const auto ys = br_vertices(g.A);              // best[i]: row i is a best response to y
  std::vector<MixedProfile> out;
  for (const auto& xv : xs) {
    for (const auto& yv : ys) {
      bool ok = true;
      for (std::size_t i = 0; ok && i < g.rows(); ++i)
        if (sgn(xv.s[i]) != 0 && !yv.best[i]) ok = false;
      for (std::size_t j = 0; ok && j < g.cols(); ++j)
        if (sgn(yv.s[j]) != 0 && !xv.best[j]) ok = false;
      if (ok) out.push_back(MixedProfile{xv.s, yv.s});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const MixedProfile& l, const MixedProfile& r) { return std::tie(l.x, l.y) < std::tie(r.x, r.y); });
  return out;
}

bool is_degenerate(const Game& g, std::size_t limit) {
  check_limit(g, limit);
  auto degenerate = [](const std::vector<BrVertex>& vs) {
    for (const auto& v : vs) {
      const auto support = std::count_if(v.s.begin(), v.s.end(), [](const Rational& e) { return sgn(e) != 0; });
      const auto responses = std::count(v.best.begin(), v.best.end(), true);
      if (responses > support) return true;
    }
    return false;
  };
  return degenerate(br_vertices(g.B.transpose())) || degenerate(br_vertices(g.A));
}

LemmaEquivResult check_lemma_equiv(const RatMatrix& A, const RatMatrix& C, const Vec& a, const Vec& b,
                                   const MixedProfile& p, const std::optional<Rational>& lambda) {
  if (a.size() != A.rows() || b.size() != A.cols()) throw DimensionError("check_lemma_equiv: factor lengths");
  const Rational lam = lambda ? *lambda : dot(p.x, a);
  const bool on_hyperplane = dot(p.x, a) == lam;
  Vec lam_a(A.rows(), lam);
  const RatMatrix shift = RatMatrix::outer(lam_a, b);

  LemmaEquivResult r;
  r.a = is_nash(Game(A, C + RatMatrix::outer(a, b)), p).nash;
  r.b = on_hyperplane && is_nash(Game(A, C + shift), p).nash;
  r.c = on_hyperplane && is_nash(Game(A - shift, C + shift), p).nash;
  return r;
}

}  // namespace rank1
