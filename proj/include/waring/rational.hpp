#ifndef WARING_RATIONAL_HPP
#define WARING_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace waring {

// GMP keeps mpq_class canonical (lowest terms, positive denominator, 0/1).
using Integer = mpz_class;
using Rational = mpq_class;

// mpq_class(num, den) does not reduce; this does.
inline Rational make_rational(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

inline int sign(const Rational& q) { return sgn(q); }

inline std::string to_string(const Rational& q) { return q.get_str(); }

// Accepts "p", "-p" and "p/q"; throws std::invalid_argument otherwise.
Rational parse_rational(std::string_view text);

// Exact square root when q is the square of a rational.
std::optional<Rational> rational_sqrt(const Rational& q);

Integer binomial(unsigned n, unsigned k);

}  // namespace waring

#endif
