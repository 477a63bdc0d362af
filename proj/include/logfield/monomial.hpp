#ifndef LOGFIELD_MONOMIAL_HPP
#define LOGFIELD_MONOMIAL_HPP

#include "logfield/rational.hpp"
#include "logfield/scalar.hpp"

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace logfield {

// Log-level: -1 denotes exp, 0 the identity x, k >= 1 the k-th iterate of log.
using Level = int;
constexpr Level kLevelExp = -1;

// Element of the ordered group L: a finite product prod log_i ^ r_i with
// exact rational exponents. Canonical form: levels strictly ascending, no
// zero exponents; structural equality is group equality.
class Monomial {
public:
    Monomial() = default;

    // Canonicalizes: merges duplicate levels, drops zero exponents.
    static Monomial make(std::vector<std::pair<Level, Rational>> exps);
    static Monomial one() { return Monomial(); }
    // Single factor log_level ^ expo.
    static Monomial factor(Level level, const Rational& expo);

    bool is_one() const { return exps_.empty(); }
    const std::vector<std::pair<Level, Rational>>& exponents() const { return exps_; }
    Rational exponent(Level level) const;
    Level max_level() const { return exps_.empty() ? kLevelExp : exps_.back().first; }

    Monomial times(const Monomial& o) const;
    Monomial inverse() const;
    Monomial pow(const Rational& r) const;
    // Shifts every level by delta (levels must stay >= -1).
    Monomial shift_levels(int delta) const;
    // Forgets the exp component (level -1).
    Monomial drop_exp() const;

    // Lexicographic comparison over levels -1, 0, 1, ... with missing
    // exponents read as zero; agrees with the germ ordering of L.
    std::strong_ordering operator<=>(const Monomial& o) const;
    bool operator==(const Monomial& o) const { return exps_ == o.exps_; }

    bool is_small() const { return *this < Monomial(); }
    bool is_large() const { return *this > Monomial(); }

    // Canonical text, e.g. "exp^-1 * x^2 * log[2]^-1/2"; "1" for the unit.
    std::string to_string() const;

private:
    std::vector<std::pair<Level, Rational>> exps_;
};

// Exact derivative of the germ of m: a finite list of (coefficient, monomial)
// pairs, each monomial of the form m * d_level with d_level <= 1.
std::vector<std::pair<Rational, Monomial>> mono_derivative(const Monomial& m);

// One series/term coefficient-monomial pair.
struct Term {
    Scalar coeff;
    Monomial mono;
};

} // namespace logfield

#endif
