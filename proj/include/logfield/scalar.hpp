#ifndef LOGFIELD_SCALAR_HPP
#define LOGFIELD_SCALAR_HPP

#include "logfield/rational.hpp"

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace logfield {

// Multiplicative basis symbol e^{e_exp} * prod_i log(base_i)^{pow_i}.
// Bases are primes (or large prime-ish cofactors), powers are nonzero
// integers, sorted by base. The trivial symbol is the rational unit and is
// never stored explicitly.
struct ScalarSym {
    Rational e_exp{0};
    std::vector<std::pair<Integer, long>> logs;

    bool trivial() const { return rat::is_zero(e_exp) && logs.empty(); }
    bool operator==(const ScalarSym&) const = default;
    std::strong_ordering operator<=>(const ScalarSym& o) const;

    ScalarSym times(const ScalarSym& o) const;
    ScalarSym inverse() const;
    double value() const;
};

// Exact scalar in the finitely generated extension of the rationals by the
// symbols log(p) and e^q, in normal form: a rational part plus a sorted,
// zero-free list of nontrivial symbol terms. Equality of normal forms is
// the equality test; the rational-only case stays allocation-light.
class Scalar {
public:
    Scalar() = default;
    Scalar(const Rational& q) : rat_(q) {}
    Scalar(long n) : rat_(n) {}

    static Scalar zero() { return Scalar(); }
    static Scalar one() { return Scalar(1); }
    // The symbol e^q (exact, irrational unless q = 0).
    static Scalar e_power(const Rational& q);
    // log(a) for a positive rational a, split over prime factors.
    static Scalar log_of_rational(const Rational& a);

    bool is_zero() const { return tail_.empty() && rat::is_zero(rat_); }
    bool is_rational() const { return tail_.empty(); }
    std::optional<Rational> as_rational() const;

    // Exact sign when the normal form decides it (zero or a single term);
    // genuine sums fall back to a floating estimate and refuse to answer
    // near zero.
    int sign() const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    bool operator==(const Scalar& o) const { return rat_ == o.rat_ && tail_ == o.tail_; }

    // Reciprocal; defined for nonzero single-term scalars. Sums such as
    // 1 + log(2) have no inverse in the carried extension.
    Scalar inverse() const;
    // Exact power; requires single-term shape, a rational-valued power of
    // the coefficient, and integer log powers after scaling.
    Scalar pow(const Rational& r) const;
    // log of a positive single-term scalar with no log factors.
    Scalar log() const;
    // exp of a scalar that is a rational combination of 1 and first powers
    // of log(p) with integer coefficients on the latter.
    Scalar exp() const;

    double to_double() const;
    std::string to_string() const;

private:
    Rational rat_{0};
    std::vector<std::pair<ScalarSym, Rational>> tail_;

    void insert_term(const ScalarSym& sym, const Rational& coeff);
    // (sym, coeff) view of the single term; requires single-term shape.
    std::pair<ScalarSym, Rational> only_term() const;
    bool single_term() const {
        return (tail_.empty() && !rat::is_zero(rat_)) || (tail_.size() == 1 && rat::is_zero(rat_));
    }
    std::size_t term_count() const { return tail_.size() + (rat::is_zero(rat_) ? 0 : 1); }
};

inline Scalar operator*(const Rational& q, const Scalar& s) { return Scalar(q) * s; }

} // namespace logfield

#endif
