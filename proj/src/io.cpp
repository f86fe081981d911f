#include "rank1/io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace rank1 {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

struct Line {
  std::size_t number;
  std::string_view text;
};

RatMatrix read_block(const std::vector<Line>& lines, std::size_t& pos, std::size_t m, std::size_t n, const char* what) {
  std::vector<Vec> rows;
  while (rows.size() < m) {
    if (pos >= lines.size()) throw ParseError(std::string("unexpected end of file in matrix ") + what);
    const Line& l = lines[pos++];
    if (l.text.empty()) {
      if (rows.empty()) continue;
      throw ParseError("line " + std::to_string(l.number) + ": blank line inside matrix " + what);
    }
    Vec row = parse_vector(l.text);
    if (row.size() != n)
      throw ParseError("line " + std::to_string(l.number) + ": expected " + std::to_string(n) + " entries, got " +
                       std::to_string(row.size()));
    rows.push_back(std::move(row));
  }
  return RatMatrix::from_rows(rows);
}

RankOneFactorization parse_factorization(std::string_view body, std::size_t line) {
  // "a = …; b = …"
  const auto semi = body.find(';');
  if (semi == std::string_view::npos) throw ParseError("line " + std::to_string(line) + ": factorization needs ';'");
  auto side = [&](std::string_view part, char name) {
    part = trim(part);
    if (part.size() < 2 || part[0] != name) throw ParseError("line " + std::to_string(line) + ": bad factorization");
    part = trim(part.substr(1));
    if (part.empty() || part[0] != '=') throw ParseError("line " + std::to_string(line) + ": bad factorization");
    return parse_vector(part.substr(1));
  };
  return RankOneFactorization{side(body.substr(0, semi), 'a'), side(body.substr(semi + 1), 'b')};
}

}  // namespace

GameFile parse_game_file(std::string_view text) {
  std::vector<Line> lines;
  std::optional<std::pair<std::size_t, std::string_view>> fact_line;
  std::size_t number = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++number;
    const auto t = trim(raw);
    if (!t.empty() && t[0] == '#') {
      constexpr std::string_view tag = "factorization:";
      const auto body = trim(t.substr(1));
      if (body.substr(0, tag.size()) == tag) fact_line.emplace(number, trim(body.substr(tag.size())));
      continue;
    }
    lines.push_back({number, t});
  }

  std::size_t pos = 0;
  while (pos < lines.size() && lines[pos].text.empty()) ++pos;
  if (pos == lines.size()) throw ParseError("empty game file");
  std::istringstream header{std::string(lines[pos].text)};
  long long m = 0, n = 0;
  std::string extra;
  if (!(header >> m >> n) || (header >> extra) || m <= 0 || n <= 0)
    throw ParseError("line " + std::to_string(lines[pos].number) + ": header must be two positive integers 'm n'");
  ++pos;
  const auto um = static_cast<std::size_t>(m), un = static_cast<std::size_t>(n);
  RatMatrix A = read_block(lines, pos, um, un, "A");
  if (pos >= lines.size() || !lines[pos].text.empty())
    throw ParseError("expected a blank line between A and B");
  RatMatrix B = read_block(lines, pos, um, un, "B");
  for (; pos < lines.size(); ++pos)
    if (!lines[pos].text.empty())
      throw ParseError("line " + std::to_string(lines[pos].number) + ": trailing content after B");

  GameFile out{Game(std::move(A), std::move(B)), std::nullopt};
  if (fact_line) {
    auto f = parse_factorization(fact_line->second, fact_line->first);
    if (f.a.size() != um || f.b.size() != un)
      throw ParseError("line " + std::to_string(fact_line->first) + ": factor lengths do not match the game");
    out.factorization = std::move(f);
  }
  return out;
}

GameFile read_game_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_game_file(ss.str());
}

std::string format_game_file(const Game& g, const std::optional<RankOneFactorization>& f) {
  std::string out = std::to_string(g.rows()) + " " + std::to_string(g.cols()) + "\n";
  for (std::size_t i = 0; i < g.rows(); ++i) out += to_string(g.A.row(i)) + "\n";
  out += "\n";
  for (std::size_t i = 0; i < g.rows(); ++i) out += to_string(g.B.row(i)) + "\n";
  if (f) out += "# factorization: a = " + to_string(f->a) + "; b = " + to_string(f->b) + "\n";
  return out;
}

RankOneGame to_rank_one(const GameFile& f) {
  if (!f.factorization) return RankOneGame::from_game(f.game);
  if (f.factorization->outer() != f.game.A + f.game.B) throw ParseError("stated factorization does not equal A + B");
  return RankOneGame(f.game.A, f.factorization->a, f.factorization->b);
}

}  // namespace rank1
