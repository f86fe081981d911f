#include "rank1/report.hpp"

namespace rank1::report {

json to_json(const Rational& r) { return to_string(r); }

json to_json(const Vec& v) {
  json out = json::array();
  for (const auto& e : v) out.push_back(to_string(e));
  return out;
}

json to_json(const RatMatrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(to_json(m.row(i)));
  return out;
}

json approx(const Vec& v) {
  json out = json::array();
  for (const auto& e : v) out.push_back(to_double(e));
  return out;
}

namespace {

json one_based(const std::vector<std::size_t>& idx) {
  json out = json::array();
  for (auto i : idx) out.push_back(i + 1);
  return out;
}

}  // namespace

json game_json(const Game& g) { return json{{"A", to_json(g.A)}, {"B", to_json(g.B)}}; }

json equilibrium_json(const EquilibriumRecord& r, bool with_approx) {
  json out{{"x", to_json(r.profile.x)},
           {"y", to_json(r.profile.y)},
           {"payoff_1", to_json(r.payoff_1)},
           {"payoff_2", to_json(r.payoff_2)},
           {"lambda", to_json(r.lambda)}};
  if (with_approx)
    out["approximate"] = json{{"x", approx(r.profile.x)},
                              {"y", approx(r.profile.y)},
                              {"payoff_1", to_double(r.payoff_1)},
                              {"payoff_2", to_double(r.payoff_2)},
                              {"lambda", to_double(r.lambda)}};
  return out;
}

json subset_json(const NashSubset& s, bool with_approx) {
  json xs = json::array(), ys = json::array();
  for (const auto& x : s.x_vertices) xs.push_back(to_json(x));
  for (const auto& y : s.y_vertices) ys.push_back(to_json(y));
  json out{{"kind", s.kind == SubsetKind::AtBreakpoint ? "breakpoint" : "interval"},
           {"lambda", json::array({to_json(s.lambda_lo), to_json(s.lambda_hi)})},
           {"x_vertices", xs},
           {"y_vertices", ys},
           {"M", one_based(s.defining_trueineq.M)},
           {"N", one_based(s.defining_trueineq.N)}};
  if (with_approx) {
    json ax = json::array(), ay = json::array();
    for (const auto& x : s.x_vertices) ax.push_back(approx(x));
    for (const auto& y : s.y_vertices) ay.push_back(approx(y));
    out["approximate"] = json{{"lambda", json::array({to_double(s.lambda_lo), to_double(s.lambda_hi)})},
                              {"x_vertices", ax},
                              {"y_vertices", ay}};
  }
  return out;
}

json check_json(const NashCheck& c, const Rational& qp, bool with_approx) {
  json out{{"nash", c.nash},
           {"u", to_json(c.u)},
           {"v", to_json(c.v)},
           {"qp_value", to_json(qp)},
           {"row_payoffs", to_json(c.row.payoff_vector)},
           {"col_payoffs", to_json(c.col.payoff_vector)},
           {"row_support_ok", c.row.support_ok},
           {"col_support_ok", c.col.support_ok}};
  if (with_approx)
    out["approximate"] = json{{"u", to_double(c.u)}, {"v", to_double(c.v)}, {"qp_value", to_double(qp)}};
  return out;
}

json equilibrium_point_json(const EquilibriumPoint& e) {
  return json{{"A", to_json(e.game.A)}, {"B", to_json(e.game.B)}, {"x", to_json(e.profile.x)}, {"y", to_json(e.profile.y)}};
}

Rational rational_from_json(const json& j) {
  if (!j.is_string()) throw ParseError("expected a rational string");
  return parse_rational(j.get<std::string>());
}

Vec vec_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("expected an array of rationals");
  Vec out;
  for (const auto& e : j) out.push_back(rational_from_json(e));
  return out;
}

}  // namespace rank1::report
