// Acceptance suite: one PASS/FAIL line per criterion. All comparisons are
// exact rational equality; the only tolerances are the wall-clock limits.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>

#include "rank1/binsearch.hpp"
#include "rank1/enumerate.hpp"
#include "rank1/generators.hpp"
#include "rank1/homeo.hpp"
#include "rank1/lp.hpp"
#include "rank1/oracle.hpp"

using namespace rank1;

namespace {

constexpr double kAc1Seconds = 1.0;
constexpr double kAc3Seconds = 300.0;
constexpr std::size_t kCorpusSize = 200;
constexpr std::size_t kMaxIterations = 64;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond && pass) detail << "first failure: " << what << "; ";
    pass = pass && cond;
  }
};

int failures = 0;
std::map<std::string, std::string> lines;

void criterion(const char* id, const char* title, const std::function<void(Outcome&)>& body) {
  Outcome o;
  try {
    body(o);
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail << "exception: " << e.what();
  }
  if (!o.pass) ++failures;
  lines[id] = std::string(id) + ' ' + (o.pass ? "PASS" : "FAIL") + "  " + title + "  [" + o.detail.str() + "]";
}

bool equal_supports(const Vec& x, const Vec& y) {
  for (std::size_t i = 0; i < x.size(); ++i)
    if ((sgn(x[i]) == 0) != (sgn(y[i]) == 0)) return false;
  return true;
}

Vec random_simplex(std::mt19937_64& eng, std::size_t k) {
  Vec v(k);
  Rational s = 0;
  for (auto& e : v) {
    e = static_cast<long>(eng() % 4);
    s += e;
  }
  if (s == 0) {
    v[eng() % k] = 1;
    return v;
  }
  for (auto& e : v) e /= s;
  return v;
}

RatMatrix random_matrix(std::mt19937_64& eng, std::size_t m, std::size_t n) {
  RatMatrix M(m, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      M(i, j) = make_rational(static_cast<long>(eng() % 19) - 9, 1 + static_cast<long>(eng() % 3));
  return M;
}

std::vector<RankOneGame> random_corpus() {
  std::mt19937_64 eng(20240601);
  std::vector<RankOneGame> out;
  for (std::size_t k = 0; k < kCorpusSize; ++k) {
    const std::size_t m = 1 + eng() % 4, n = 1 + eng() % 4;
    out.push_back(gen_random_rank1(m, n, 9, eng()));
  }
  return out;
}

int run_cli(const std::string& args, std::string& out) {
  FILE* p = popen((std::string(RANK1EQ_PATH) + " " + args + " 2>&1").c_str(), "r");
  if (!p) return -1;
  char buf[4096];
  std::size_t k;
  while ((k = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, k);
  const int st = pclose(p);
  return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
}

}  // namespace

int main() {
  lp::reset_audit();
  lp::set_audit(true);
  const auto corpus = random_corpus();

  criterion("AC1", "2x2 example: three singleton subsets, exact", [](Outcome& o) {
    const auto t0 = Clock::now();
    const auto subsets = enumerate_all(RankOneGame::from_game(fixture("ex1")));
    const double dt = seconds_since(t0);
    const std::vector<std::pair<Rational, MixedProfile>> want{
        {-1, {{0, 1}, {0, 1}}},
        {Rational(-1, 4), {{Rational(1, 4), Rational(3, 4)}, {Rational(1, 2), Rational(1, 2)}}},
        {2, {{1, 0}, {1, 0}}}};
    o.require(subsets.size() == 3, "subset count");
    for (std::size_t i = 0; i < std::min<std::size_t>(3, subsets.size()); ++i) {
      const auto& s = subsets[i];
      o.require(s.x_vertices.size() == 1 && s.y_vertices.size() == 1, "singleton");
      o.require(s.lambda_lo == want[i].first && s.lambda_hi == want[i].first, "lambda");
      o.require(s.x_vertices == std::vector<Vec>{want[i].second.x}, "x");
      o.require(s.y_vertices == std::vector<Vec>{want[i].second.y}, "y");
    }
    o.require(dt < kAc1Seconds, "runtime");
    o.detail << "subsets=" << subsets.size() << " time=" << dt << "s limit=" << kAc1Seconds << "s";
  });

  criterion("AC2", "2x2 example: breakpoints {-1/2, 1/2}, phi(-1,0,1) = (0,-1/2,0)", [](Outcome& o) {
    const auto g = RankOneGame::from_game(fixture("ex1"));
    const ParamContext ctx(g.A, g.b());
    std::vector<Rational> bps;
    for (const auto& s : next_breakpoint_walk(ctx, std::nullopt, std::nullopt))
      if (s.kind == SegmentKind::AtBreakpoint) bps.push_back(*s.lo);
    o.require(bps == std::vector<Rational>{Rational(-1, 2), Rational(1, 2)}, "breakpoints");
    o.require(phi(ctx, -1) == 0 && phi(ctx, 0) == Rational(-1, 2) && phi(ctx, 1) == 0, "phi values");
    const auto vf = value_function(ctx);
    o.require(vf(-1) == 0 && vf(0) == Rational(-1, 2) && vf(1) == 0, "value function");
    o.detail << "breakpoints=" << bps.size();
  });

  criterion("AC3", "exponential family n=1..8: 2^n - 1 equilibria, equal supports", [](Outcome& o) {
    const auto t0 = Clock::now();
    for (std::size_t n = 1; n <= 8; ++n) {
      const auto g = gen_expo_rank1({n, 3});
      const Game game = g.game();
      const auto subsets = enumerate_all(g);
      const std::size_t want = (std::size_t{1} << n) - 1;
      o.require(subsets.size() == want, "count at n=" + std::to_string(n));
      for (const auto& s : subsets) {
        o.require(s.x_vertices.size() == 1 && s.y_vertices.size() == 1, "singleton");
        const auto& x = s.x_vertices.front();
        const auto& y = s.y_vertices.front();
        o.require(is_nash(game, {x, y}).nash, "is_nash");
        o.require(equal_supports(x, y), "equal supports");
      }
      if (n <= 4) o.require(!is_degenerate(game), "nondegenerate at n=" + std::to_string(n));
      o.detail << "n=" << n << ":" << subsets.size() << " ";
    }
    const double dt = seconds_since(t0);
    o.require(dt < kAc3Seconds, "runtime");
    o.detail << "time=" << dt << "s limit=" << kAc3Seconds << "s";
  });

  criterion("AC4", "oracle equivalence on the random corpus", [&](Outcome& o) {
    std::size_t mismatches = 0;
    for (const auto& g : corpus)
      if (extreme_equilibria(enumerate_all(g)) != support_enumeration(g.game())) ++mismatches;
    o.require(mismatches == 0, "mismatch");
    o.detail << "games=" << corpus.size() << " mismatches=" << mismatches;
  });

  criterion("AC5", "binsearch: NE, lambda = x'a, invariant, iterations <= 64", [&](Outcome& o) {
    std::vector<RankOneGame> games = corpus;
    for (std::size_t n = 1; n <= 6; ++n) games.push_back(gen_expo_rank1({n, 3}));
    std::size_t worst = 0, checks = 0, bad = 0;
    for (const auto& g : games) {
      const auto r = binsearch(g, BinsearchOptions{true});
      o.require(is_nash(g.game(), r.record.profile).nash, "is_nash");
      o.require(dot(r.record.profile.x, g.a()) == r.record.lambda, "lambda");
      worst = std::max(worst, r.stats.iterations);
      checks += r.stats.invariant_checks;
      bad += r.stats.invariant_failures;
    }
    o.require(bad == 0, "invariant");
    o.require(worst <= kMaxIterations, "iterations");
    o.detail << "games=" << games.size() << " max_iterations=" << worst << " invariant_checks=" << checks
             << " invariant_failures=" << bad;
  });

  criterion("AC6", "rank-2 game: CLI rank error, pure NE confirmed", [](Outcome& o) {
    std::string out;
    const int code = run_cli("solve " RANK1_TEST_DIR "/data/ex3.txt", out);
    o.require(code == 3, "exit code");
    o.require(out.find("rank error") != std::string::npos, "message");
    o.require(is_nash(fixture("ex3"), {{1, 0}, {1, 0}}).nash, "is_nash");
    o.detail << "exit=" << code;
  });

  criterion("AC7", "psi and KM round trips, water level conditions", [](Outcome& o) {
    std::mt19937_64 eng(77);
    std::size_t samples = 0;
    for (; samples < 100; ++samples) {
      const auto r = gen_random_rank1(1 + eng() % 4, 1 + eng() % 4, 9, eng());
      const Game g = r.game();
      const RatMatrix M = g.A + g.B;
      const std::size_t m = g.rows(), n = g.cols();

      // Γ_M → E_M → Γ_M
      const RatMatrix C = random_matrix(eng, m, n);
      const auto e = psi_forward(C, M - C, M);
      o.require(e.game.A + e.game.B == M, "psi sum");
      o.require(is_nash(e.game, e.profile).nash, "psi nash");
      const auto cd = psi_inverse(e.game, e.profile, M);
      o.require(cd.C == C && cd.D == M - C, "psi inverse after psi");

      // E_M → Γ_M → E_M
      for (const auto& p : support_enumeration(g)) {
        const auto back = psi_inverse(g, p, M);
        o.require(back.C + back.D == M, "psi inverse sum");
        const auto fwd = psi_forward(back.C, back.D, M);
        o.require(fwd.game == g && fwd.profile == p, "psi after psi inverse");
      }

      // KM on unrestricted games
      const RatMatrix D = random_matrix(eng, m, n);
      const auto k = km_forward(C, D);
      o.require(is_nash(k.game, k.profile).nash, "km nash");
      const auto kd = km_inverse(k.game, k.profile);
      o.require(kd.C == C && kd.D == D, "km inverse after km");
      const Game h = gen_random_game(m, n, 9, eng());
      for (const auto& p : support_enumeration(h)) {
        const auto kc = km_inverse(h, p);
        const auto kf = km_forward(kc.C, kc.D);
        o.require(kf.game == h && kf.profile == p, "km after km inverse");
      }

      Vec c(1 + eng() % 6);
      for (auto& x : c) x = make_rational(static_cast<long>(eng() % 19) - 9, 1 + static_cast<long>(eng() % 4));
      const auto w = water_level(c);
      Rational total = 0;
      bool ok = max_entry(w.p) == w.level;
      for (std::size_t i = 0; i < c.size(); ++i) {
        ok = ok && c[i] == w.p[i] + w.x[i] && w.x[i] >= 0 && (w.x[i] == 0 || w.p[i] == w.level);
        total += w.x[i];
      }
      o.require(ok && total == 1, "water level");
    }
    o.detail << "samples=" << samples;
  });

  criterion("AC9", "column shift invariance, three-way condition agreement, qp_value", [](Outcome& o) {
    std::mt19937_64 eng(99);
    std::size_t shift = 0, equiv = 0, qp = 0;
    for (int k = 0; k < 150; ++k) {
      const std::size_t m = 1 + eng() % 3, n = 1 + eng() % 3;
      const Game g = gen_random_game(m, n, 9, eng());
      Vec b(n);
      for (auto& e : b) e = static_cast<long>(eng() % 19) - 9;
      const Game shifted(shift_columns(g.A, b), g.B);
      std::vector<MixedProfile> probes = support_enumeration(g);
      probes.push_back({random_simplex(eng, m), random_simplex(eng, n)});
      for (const auto& p : probes) {
        o.require(is_nash(g, p).nash == is_nash(shifted, p).nash, "column shift");
        ++shift;
        const Rational q = qp_value(g, p);
        o.require(q <= 0 && (q == 0) == is_nash(g, p).nash, "qp_value");
        ++qp;
      }

      const auto r = gen_random_rank1(m, n, 9, eng());
      std::vector<MixedProfile> rp = support_enumeration(r.game());
      rp.push_back({random_simplex(eng, m), random_simplex(eng, n)});
      for (const auto& p : rp) {
        const auto res = check_lemma_equiv(r.A, -r.A, r.a(), r.b(), p);
        o.require(res.agree() && res.a == is_nash(r.game(), p).nash, "three-way agreement");
        ++equiv;
      }
    }
    o.require(shift >= 100 && equiv >= 100 && qp >= 100, "case counts");
    o.detail << "column_shift=" << shift << " three_way=" << equiv << " qp_value=" << qp;
  });

  // Last, so the audit covers every LP solved above.
  criterion("AC8", "LP certificates on every optimal solve; zero-sum values", [](Outcome& o) {
    std::mt19937_64 eng(88);
    std::size_t games = 0;
    for (; games < 50; ++games) {
      const Game h = gen_random_game(1 + eng() % 4, 1 + eng() % 4, 9, eng());
      const auto z = lp::solve_zero_sum(h.A);
      const auto eq = support_enumeration(Game(h.A, -h.A));
      o.require(!eq.empty(), "oracle found nothing");
      for (const auto& p : eq) o.require(dot(p.x, h.A * p.y) == z.value, "value");
    }
    const auto a = lp::audit_counters();
    o.require(a.checked > 0, "audit ran");
    o.require(a.violations == 0, "certificate violations");
    o.detail << "audited_solves=" << a.checked << " violations=" << a.violations << " zero_sum_games=" << games;
  });

  for (const auto& [id, line] : lines) std::cout << line << '\n';
  std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " FAILED") << std::endl;
  return failures == 0 ? 0 : 1;
}
