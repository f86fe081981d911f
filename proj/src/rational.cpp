#include "rank1/rational.hpp"

#include <algorithm>
#include <cctype>

namespace rank1 {
namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  bool negative = false;
  constexpr std::string_view kUnicodeMinus = "\xE2\x88\x92";
  if (s.starts_with(kUnicodeMinus)) {
    negative = true;
    s.remove_prefix(kUnicodeMinus.size());
  } else if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  std::string_view num = s;
  std::string_view den = "1";
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den)) {
    throw ParseError("not a rational number: '" + std::string(text) + "'");
  }
  Integer p(std::string(num), 10);
  Integer q(std::string(den), 10);
  if (q == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
  Rational r(p, q);
  r.canonicalize();
  if (negative) r = -r;
  return r;
}

std::string to_string(const Rational& r) {
  // mpq_class::get_str already omits "/1" for integers.
  return r.get_str(10);
}

Vec parse_vector(std::string_view text) {
  Vec out;
  std::string token;
  auto flush = [&] {
    if (!token.empty()) {
      out.push_back(parse_rational(token));
      token.clear();
    }
  };
  for (char c : text) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      flush();
    } else {
      token.push_back(c);
    }
  }
  flush();
  return out;
}

std::string to_string(const Vec& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out.push_back(' ');
    out += to_string(v[i]);
  }
  return out;
}

double to_double(const Rational& r) { return r.get_d(); }

Rational dot(const Vec& u, const Vec& v) {
  if (u.size() != v.size()) throw std::invalid_argument("dot: length mismatch");
  Rational acc = 0;
  for (std::size_t i = 0; i < u.size(); ++i)
    if (sgn(u[i]) != 0 && sgn(v[i]) != 0) acc += u[i] * v[i];
  return acc;
}

Rational sum(const Vec& v) {
  Rational acc = 0;
  for (const auto& x : v) acc += x;
  return acc;
}

Vec zeros(std::size_t n) { return Vec(n, Rational(0)); }

const Rational& max_entry(const Vec& v) {
  if (v.empty()) throw std::invalid_argument("max_entry: empty vector");
  return *std::max_element(v.begin(), v.end());
}

const Rational& min_entry(const Vec& v) {
  if (v.empty()) throw std::invalid_argument("min_entry: empty vector");
  return *std::min_element(v.begin(), v.end());
}

}  // namespace rank1
