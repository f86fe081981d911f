#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rank1/binsearch.hpp"
#include "rank1/enumerate.hpp"
#include "rank1/generators.hpp"
#include "rank1/homeo.hpp"
#include "rank1/oracle.hpp"
#include "rank1/report.hpp"

namespace py = pybind11;
using namespace rank1;

// Rationals cross the boundary as strings; the Python layer turns them into
// Fractions.
using StrMatrix = std::vector<std::vector<std::string>>;
using StrVec = std::vector<std::string>;

namespace {

RatMatrix to_matrix(const StrMatrix& rows) {
  std::vector<Vec> out;
  for (const auto& r : rows) {
    Vec v;
    for (const auto& e : r) v.push_back(parse_rational(e));
    out.push_back(std::move(v));
  }
  return RatMatrix::from_rows(out);
}

Vec to_vec(const StrVec& v) {
  Vec out;
  for (const auto& e : v) out.push_back(parse_rational(e));
  return out;
}

std::string dump(const report::json& j) { return j.dump(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  py::register_exception<RankError>(m, "RankError", PyExc_ValueError);
  py::register_exception<NotAnEquilibrium>(m, "NotAnEquilibrium", PyExc_ValueError);

  m.def("solve", [](const StrMatrix& A, const StrMatrix& B) {
    const auto g = RankOneGame::from_game(Game(to_matrix(A), to_matrix(B)));
    const auto r = binsearch(g, BinsearchOptions{});
    auto j = report::equilibrium_json(r.record, false);
    j["iterations"] = r.stats.iterations;
    return dump(j);
  });

  m.def("enumerate", [](const StrMatrix& A, const StrMatrix& B) {
    const auto g = RankOneGame::from_game(Game(to_matrix(A), to_matrix(B)));
    report::json out = report::json::array();
    for (const auto& s : enumerate_all(g)) out.push_back(report::subset_json(s, false));
    return dump(out);
  });

  m.def("check", [](const StrMatrix& A, const StrMatrix& B, const StrVec& x, const StrVec& y) {
    const Game g(to_matrix(A), to_matrix(B));
    const MixedProfile p{to_vec(x), to_vec(y)};
    return dump(report::check_json(is_nash(g, p), qp_value(g, p), false));
  });

  m.def("rank", [](const StrMatrix& M) {
    const RatMatrix mat = to_matrix(M);
    report::json j{{"rank", matrix_rank(mat)}};
    if (matrix_rank(mat) == 1) {
      const auto f = factor_rank_one(mat);
      j["a"] = report::to_json(f.a);
      j["b"] = report::to_json(f.b);
    }
    return dump(j);
  });

  m.def("support_enumeration", [](const StrMatrix& A, const StrMatrix& B) {
    report::json out = report::json::array();
    for (const auto& p : support_enumeration(Game(to_matrix(A), to_matrix(B))))
      out.push_back({{"x", report::to_json(p.x)}, {"y", report::to_json(p.y)}});
    return dump(out);
  });

  m.def("gen_expo", [](std::size_t n, const std::string& p) {
    return dump(report::game_json(gen_expo({n, parse_rational(p)})));
  });

  m.def("fixture", [](const std::string& name) { return dump(report::game_json(fixture(name))); });

  m.def("psi_inverse", [](const StrMatrix& A, const StrMatrix& B, const StrVec& x, const StrVec& y) {
    const auto cd = psi_inverse(Game(to_matrix(A), to_matrix(B)), {to_vec(x), to_vec(y)});
    return dump({{"C", report::to_json(cd.C)}, {"D", report::to_json(cd.D)}});
  });

  m.def("psi_forward", [](const StrMatrix& C, const StrMatrix& D) {
    const RatMatrix c = to_matrix(C), d = to_matrix(D);
    return dump(report::equilibrium_point_json(psi_forward(c, d, c + d)));
  });
}
