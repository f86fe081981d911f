#pragma once

// Exact rational scalars and vectors. Rational is GMP's mpq_class; every
// value leaving this library is in canonical form (reduced, positive
// denominator).

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rank1 {

using Rational = mpq_class;
using Integer = mpz_class;
using Vec = std::vector<Rational>;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// n/d in canonical form. mpq_class(n, d) alone does not reduce.
inline Rational make_rational(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

/// Parses "p", "p/q", "-p/q" (ASCII '-', '+' or U+2212). The result is
/// canonicalized. Throws ParseError on anything else, including q = 0.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p/q", or "p" when q = 1.
std::string to_string(const Rational& r);

/// Entries separated by whitespace and/or commas.
Vec parse_vector(std::string_view text);

/// Space-separated canonical entries.
std::string to_string(const Vec& v);

double to_double(const Rational& r);

Rational dot(const Vec& u, const Vec& v);
Rational sum(const Vec& v);
Vec zeros(std::size_t n);

/// Largest / smallest entry; the vector must be nonempty.
const Rational& max_entry(const Vec& v);
const Rational& min_entry(const Vec& v);

}  // namespace rank1
