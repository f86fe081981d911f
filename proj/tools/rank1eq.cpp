// rank1eq: exact equilibria of rank-1 bimatrix games.
//
// Exit codes: 0 success (or NE), 1 negative verdict, 2 parse/usage error,
// 3 rank of A + B exceeds one.

#include <CLI11.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "rank1/binsearch.hpp"
#include "rank1/enumerate.hpp"
#include "rank1/generators.hpp"
#include "rank1/homeo.hpp"
#include "rank1/io.hpp"
#include "rank1/oracle.hpp"
#include "rank1/report.hpp"

using namespace rank1;
using report::json;

namespace {

enum Exit { kOk = 0, kNegative = 1, kParse = 2, kRank = 3 };

struct Common {
  bool json = false;
  bool approx = false;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_flag("--json", c.json, "Print a JSON report");
  cmd->add_flag("--float", c.approx, "Add decimal approximations (marked approximate)");
}

void print_rows(const std::vector<std::pair<std::string, std::string>>& rows) {
  std::size_t w = 0;
  for (const auto& [k, v] : rows) w = std::max(w, k.size());
  for (const auto& [k, v] : rows) std::cout << k << std::string(w - k.size() + 2, ' ') << v << "\n";
}

std::string approx_text(const Vec& v) {
  std::ostringstream ss;
  for (std::size_t i = 0; i < v.size(); ++i) ss << (i ? " " : "") << to_double(v[i]);
  return ss.str();
}

std::string approx_text(const Rational& r) { return approx_text(Vec{r}); }

void print_matrix(const std::string& name, const RatMatrix& m) {
  std::cout << name << ":\n";
  for (std::size_t i = 0; i < m.rows(); ++i) std::cout << "  " << to_string(m.row(i)) << "\n";
}

int cmd_solve(const std::string& path, const Common& c) {
  const auto g = to_rank_one(read_game_file(path));
  const auto res = binsearch(g, BinsearchOptions{});
  const auto& r = res.record;
  if (c.json) {
    json out{{"command", "solve"},
             {"m", g.rows()},
             {"n", g.cols()},
             {"a", report::to_json(g.a())},
             {"b", report::to_json(g.b())},
             {"equilibrium", report::equilibrium_json(r, c.approx)},
             {"iterations", res.stats.iterations}};
    std::cout << out.dump(2) << "\n";
    return kOk;
  }
  std::vector<std::pair<std::string, std::string>> rows{{"x", to_string(r.profile.x)},
                                                        {"y", to_string(r.profile.y)},
                                                        {"payoff_1", to_string(r.payoff_1)},
                                                        {"payoff_2", to_string(r.payoff_2)},
                                                        {"lambda", to_string(r.lambda)},
                                                        {"iterations", std::to_string(res.stats.iterations)}};
  if (c.approx) {
    rows.push_back({"x (approx)", approx_text(r.profile.x)});
    rows.push_back({"y (approx)", approx_text(r.profile.y)});
  }
  print_rows(rows);
  return kOk;
}

int cmd_enumerate(const std::string& path, const Common& c) {
  const auto g = to_rank_one(read_game_file(path));
  const auto subsets = enumerate_all(g);
  if (c.json) {
    json list = json::array();
    for (const auto& s : subsets) list.push_back(report::subset_json(s, c.approx));
    json out{{"command", "enumerate"},
             {"m", g.rows()},
             {"n", g.cols()},
             {"a", report::to_json(g.a())},
             {"b", report::to_json(g.b())},
             {"count", subsets.size()},
             {"subsets", list}};
    std::cout << out.dump(2) << "\n";
    return kOk;
  }
  std::cout << subsets.size() << " maximal Nash subset(s)\n";
  for (std::size_t k = 0; k < subsets.size(); ++k) {
    const auto& s = subsets[k];
    std::cout << "\n#" << (k + 1) << " " << (s.kind == SubsetKind::AtBreakpoint ? "breakpoint" : "interval")
              << "  lambda in [" << to_string(s.lambda_lo) << ", " << to_string(s.lambda_hi) << "]\n";
    for (const auto& x : s.x_vertices)
      std::cout << "  x  " << to_string(x) << (c.approx ? "   ~ " + approx_text(x) : "") << "\n";
    for (const auto& y : s.y_vertices)
      std::cout << "  y  " << to_string(y) << (c.approx ? "   ~ " + approx_text(y) : "") << "\n";
  }
  return kOk;
}

int cmd_check(const std::string& path, const std::string& xs, const std::string& ys, const Common& c) {
  const auto f = read_game_file(path);
  const MixedProfile p{parse_vector(xs), parse_vector(ys)};
  const auto chk = is_nash(f.game, p);
  const Rational qp = qp_value(f.game, p);
  if (c.json) {
    json out = report::check_json(chk, qp, c.approx);
    out["command"] = "check";
    std::cout << out.dump(2) << "\n";
  } else {
    std::vector<std::pair<std::string, std::string>> rows{{"verdict", chk.nash ? "Nash equilibrium" : "not a Nash equilibrium"},
                                                          {"u", to_string(chk.u)},
                                                          {"v", to_string(chk.v)},
                                                          {"qp_value", to_string(qp)},
                                                          {"Ay", to_string(chk.row.payoff_vector)},
                                                          {"B'x", to_string(chk.col.payoff_vector)}};
    if (c.approx) rows.push_back({"qp_value (approx)", approx_text(qp)});
    print_rows(rows);
  }
  return chk.nash ? kOk : kNegative;
}

int cmd_rank(const std::string& path, const Common& c) {
  const auto f = read_game_file(path);
  const RatMatrix s = f.game.A + f.game.B;
  const std::size_t r = matrix_rank(s);
  std::optional<RankOneFactorization> fac;
  if (r == 1) fac = factor_rank_one(s);
  if (c.json) {
    json out{{"command", "rank"}, {"rank", r}, {"factorization", nullptr}};
    if (fac) out["factorization"] = json{{"a", report::to_json(fac->a)}, {"b", report::to_json(fac->b)}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::vector<std::pair<std::string, std::string>> rows{{"rank", std::to_string(r)}};
    if (fac) {
      rows.push_back({"a", to_string(fac->a)});
      rows.push_back({"b", to_string(fac->b)});
    }
    print_rows(rows);
  }
  return kOk;
}

int cmd_homeo(const std::string& map, const std::string& path, const std::string& xs, const std::string& ys,
              const Common& c) {
  const auto f = read_game_file(path);
  const MixedProfile p{parse_vector(xs), parse_vector(ys)};
  GamePair cd;
  EquilibriumPoint back;
  if (map == "psi") {
    const RatMatrix M = f.game.A + f.game.B;
    cd = psi_inverse(f.game, p, M);
    back = psi_forward(cd.C, cd.D, M);
  } else {
    cd = km_inverse(f.game, p);
    back = km_forward(cd.C, cd.D);
  }
  const bool identity = back.game == f.game && back.profile == p;
  const bool nash = is_nash(back.game, back.profile).nash;
  if (c.json) {
    json out{{"command", "homeo"},
             {"map", map},
             {"C", report::to_json(cd.C)},
             {"D", report::to_json(cd.D)},
             {"roundtrip", report::equilibrium_point_json(back)},
             {"identity", identity},
             {"nash", nash}};
    if (map == "psi") out["rank_preserved"] = matrix_rank(cd.C + cd.D) == matrix_rank(f.game.A + f.game.B);
    std::cout << out.dump(2) << "\n";
  } else {
    print_matrix("C", cd.C);
    print_matrix("D", cd.D);
    print_rows({{"round trip", identity ? "identity" : "MISMATCH"}, {"equilibrium", nash ? "yes" : "no"}});
  }
  return identity && nash ? kOk : kNegative;
}

RatMatrix parse_matrix_arg(const std::string& text, std::size_t m, std::size_t n, const char* what) {
  if (text.empty()) return RatMatrix(m, n);
  std::vector<Vec> rows;
  std::string_view rest = text;
  while (true) {
    const auto semi = rest.find(';');
    rows.push_back(parse_vector(rest.substr(0, semi)));
    if (semi == std::string_view::npos) break;
    rest = rest.substr(semi + 1);
  }
  if (rows.size() != m) throw ParseError(std::string(what) + ": expected " + std::to_string(m) + " rows");
  for (const auto& r : rows)
    if (r.size() != n) throw ParseError(std::string(what) + ": expected " + std::to_string(n) + " columns");
  return RatMatrix::from_rows(rows);
}

struct GenArgs {
  std::size_t n = 2;
  std::string p = "3";
  std::string quality, quantity, alpha = "1", beta = "2", prices, gamma, delta;
  bool reduced = false;
  std::size_t rm = 2, rn = 2;
  std::int64_t bound = 9;
  std::uint64_t seed = 0;
  std::string name;
  std::string lambda;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Nash equilibria of rank-1 bimatrix games"};
  app.require_subcommand(1);
  Common common;

  std::string path, xs, ys, map;

  auto* solve = app.add_subcommand("solve", "Find one equilibrium by binary search on lambda");
  solve->add_option("file", path, "Game file")->required();
  add_common(solve, common);

  auto* enumerate = app.add_subcommand("enumerate", "List all maximal Nash subsets");
  enumerate->add_option("file", path, "Game file")->required();
  add_common(enumerate, common);

  auto* check = app.add_subcommand("check", "Test whether (x, y) is an equilibrium");
  check->add_option("file", path, "Game file")->required();
  check->add_option("--x", xs, "Row strategy, e.g. \"1/4 3/4\"")->required();
  check->add_option("--y", ys, "Column strategy")->required();
  add_common(check, common);

  auto* rank = app.add_subcommand("rank", "Rank of A + B and its rank-1 factorization");
  rank->add_option("file", path, "Game file")->required();
  add_common(rank, common);

  auto* homeo = app.add_subcommand("homeo", "Round trip through the psi or KM map");
  homeo->add_option("map", map, "psi or km")->required()->check(CLI::IsMember({"psi", "km"}));
  homeo->add_option("file", path, "Game file")->required();
  homeo->add_option("--x", xs, "Row strategy")->required();
  homeo->add_option("--y", ys, "Column strategy")->required();
  add_common(homeo, common);

  GenArgs ga;
  auto* gen = app.add_subcommand("gen", "Write a game file to stdout");
  gen->require_subcommand(1);
  auto* expo = gen->add_subcommand("expo", "n x n game with 2^n - 1 equilibria");
  expo->add_option("--n", ga.n, "Size")->required();
  expo->add_option("--p", ga.p, "Base p > 2");
  auto* trade = gen->add_subcommand("trade", "Seller/buyer trade game");
  trade->add_option("--quality", ga.quality, "Quality levels")->required();
  trade->add_option("--quantity", ga.quantity, "Quantity levels")->required();
  trade->add_option("--alpha", ga.alpha, "Cost of quality to the seller");
  trade->add_option("--beta", ga.beta, "Benefit of quality to the buyer");
  trade->add_option("--prices", ga.prices, "Price matrix, rows separated by ';' (default 0)");
  trade->add_option("--gamma", ga.gamma, "Seller bonus per quantity level");
  trade->add_option("--delta", ga.delta, "Buyer bonus per quality level");
  trade->add_flag("--reduced", ga.reduced, "Emit the reduced game (gamma = delta = 0)");
  auto* random = gen->add_subcommand("random", "Random integer rank-1 game");
  random->add_option("--m", ga.rm, "Rows");
  random->add_option("--n", ga.rn, "Columns");
  random->add_option("--bound", ga.bound, "Entries lie in [-bound, bound]");
  random->add_option("--seed", ga.seed, "Seed");
  auto* fix = gen->add_subcommand("fixture", "Named example game");
  fix->add_option("name", ga.name, "ex1, ex3, param-N2 or param-N2(<lambda>)")->required();
  fix->add_option("--lambda", ga.lambda, "Parameter of param-N2");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  try {
    if (*solve) return cmd_solve(path, common);
    if (*enumerate) return cmd_enumerate(path, common);
    if (*check) return cmd_check(path, xs, ys, common);
    if (*rank) return cmd_rank(path, common);
    if (*homeo) return cmd_homeo(map, path, xs, ys, common);
    if (*expo) {
      const ExpoParams ep{ga.n, parse_rational(ga.p)};
      const auto g = gen_expo_rank1(ep);
      std::cout << format_game_file(g.game(), g.factorization);
    } else if (*trade) {
      TradeParams tp;
      tp.quality = parse_vector(ga.quality);
      tp.quantity = parse_vector(ga.quantity);
      tp.alpha = parse_rational(ga.alpha);
      tp.beta = parse_rational(ga.beta);
      tp.prices = parse_matrix_arg(ga.prices, tp.quality.size(), tp.quantity.size(), "--prices");
      tp.gamma = parse_vector(ga.gamma);
      tp.delta = parse_vector(ga.delta);
      const auto games = gen_trade(tp);
      if (ga.reduced)
        std::cout << format_game_file(games.reduced.game(), games.reduced.factorization);
      else
        std::cout << format_game_file(games.full);
    } else if (*random) {
      const auto g = gen_random_rank1(ga.rm, ga.rn, ga.bound, ga.seed);
      std::cout << format_game_file(g.game(), g.factorization);
    } else if (*fix) {
      std::optional<Rational> lam;
      if (!ga.lambda.empty()) lam = parse_rational(ga.lambda);
      std::cout << format_game_file(fixture(ga.name, lam));
    }
    return kOk;
  } catch (const RankError& e) {
    std::cerr << "rank error: " << e.what() << "\n";
    return kRank;
  } catch (const NotAnEquilibrium& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNegative;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kParse;
  }
}
