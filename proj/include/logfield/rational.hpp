#ifndef LOGFIELD_RATIONAL_HPP
#define LOGFIELD_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace logfield {

// Exact rational scalar; always kept in canonical form (reduced, positive
// denominator) by mpq_class itself.
using Rational = mpq_class;
using Integer = mpz_class;

namespace rat {

inline Rational of(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_integer(const Rational& q) { return q.get_den() == 1; }
inline int sign(const Rational& q) { return sgn(q); }

Rational pow_int(const Rational& base, long e);

// base^(p/q) when the result is rational; nullopt otherwise (e.g. 2^(1/2)).
std::optional<Rational> pow_exact(const Rational& base, const Rational& expo);

// Parses "p", "p/q", or decimal-free signed integers; rejects everything else.
std::optional<Rational> parse(const std::string& text);

std::string to_string(const Rational& q);

double to_double(const Rational& q);

// Prime factorization of a positive integer by trial division (desk scale);
// factors above the trial bound are returned as-is, as a single pseudo-prime
// cofactor.
std::vector<std::pair<Integer, long>> factor_positive(const Integer& n);

} // namespace rat

} // namespace logfield

#endif
