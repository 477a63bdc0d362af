#include "logfield/rational.hpp"

#include "logfield/error.hpp"

#include <cctype>

namespace logfield {

const char* error_kind_name(ErrorKind k) {
    switch (k) {
    case ErrorKind::BudgetExhausted: return "BudgetExhausted";
    case ErrorKind::ZeroSeries: return "ZeroSeries";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NotSmall: return "NotSmall";
    case ErrorKind::NotInfIncreasing: return "NotInfIncreasing";
    case ErrorKind::NonPositiveLeading: return "NonPositiveLeading";
    case ErrorKind::LargePartNotLogLinear: return "LargePartNotLogLinear";
    case ErrorKind::HasExpPart: return "HasExpPart";
    case ErrorKind::SummabilityViolation: return "SummabilityViolation";
    case ErrorKind::IrrationalScalar: return "IrrationalScalar";
    case ErrorKind::ShapeNotSupported: return "ShapeNotSupported";
    case ErrorKind::MalformedInput: return "MalformedInput";
    case ErrorKind::BelowThreshold: return "BelowThreshold";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnboundName: return "UnboundName";
    case ErrorKind::InternalInvariant: return "InternalInvariant";
    }
    return "UnknownError";
}

namespace rat {

Rational pow_int(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    Rational b = base;
    unsigned long n;
    if (e < 0) {
        if (is_zero(base)) raise(ErrorKind::DivisionByZero, "0 raised to a negative power");
        b = 1 / base;
        n = static_cast<unsigned long>(-(e + 1)) + 1;
    } else {
        n = static_cast<unsigned long>(e);
    }
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), b.get_num_mpz_t(), n);
    mpz_pow_ui(den.get_mpz_t(), b.get_den_mpz_t(), n);
    Rational out(num, den);
    out.canonicalize();
    return out;
}

std::optional<Rational> pow_exact(const Rational& base, const Rational& expo) {
    if (is_zero(expo)) return Rational(1);
    if (is_zero(base)) {
        if (sgn(expo) < 0) return std::nullopt;
        return Rational(0);
    }
    if (is_integer(expo)) {
        if (!expo.get_num().fits_slong_p()) return std::nullopt;
        return pow_int(base, expo.get_num().get_si());
    }
    // base^(p/q): need an exact rational q-th root of base first.
    if (!expo.get_den().fits_ulong_p() || !expo.get_num().fits_slong_p()) return std::nullopt;
    unsigned long q = expo.get_den().get_ui();
    if (sgn(base) < 0) return std::nullopt; // even roots aside, stay off negative radicands
    Integer num_root, den_root;
    int num_exact = mpz_root(num_root.get_mpz_t(), base.get_num_mpz_t(), q);
    int den_exact = mpz_root(den_root.get_mpz_t(), base.get_den_mpz_t(), q);
    if (!num_exact || !den_exact) return std::nullopt;
    Rational root(num_root, den_root);
    root.canonicalize();
    return pow_int(root, expo.get_num().get_si());
}

std::optional<Rational> parse(const std::string& text) {
    if (text.empty()) return std::nullopt;
    std::size_t i = 0;
    bool neg = false;
    if (text[i] == '+' || text[i] == '-') {
        neg = text[i] == '-';
        ++i;
    }
    auto digits = [&](std::string& out) {
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) out.push_back(text[i++]);
        return i > start;
    };
    std::string num, den;
    if (!digits(num)) return std::nullopt;
    if (i < text.size() && text[i] == '/') {
        ++i;
        if (!digits(den)) return std::nullopt;
    }
    if (i != text.size()) return std::nullopt;
    Rational q;
    if (den.empty()) {
        q = Rational(Integer(num));
    } else {
        Integer d(den);
        if (d == 0) return std::nullopt;
        q = Rational(Integer(num), d);
        q.canonicalize();
    }
    if (neg) q = -q;
    return q;
}

std::string to_string(const Rational& q) {
    std::string s = q.get_num().get_str();
    if (!is_integer(q)) {
        s += "/";
        s += q.get_den().get_str();
    }
    return s;
}

double to_double(const Rational& q) { return q.get_d(); }

std::vector<std::pair<Integer, long>> factor_positive(const Integer& n) {
    if (n <= 0) raise(ErrorKind::MalformedInput, "factor_positive requires a positive integer");
    std::vector<std::pair<Integer, long>> out;
    Integer m = n;
    auto push = [&](const Integer& p, long e) {
        if (e > 0) out.emplace_back(p, e);
    };
    long e2 = 0;
    while (mpz_even_p(m.get_mpz_t())) {
        m /= 2;
        ++e2;
    }
    push(2, e2);
    const unsigned long trial_bound = 1000000;
    for (unsigned long p = 3; p <= trial_bound && m > 1; p += 2) {
        if (mpz_cmp_ui(m.get_mpz_t(), p * p) < 0) break; // remaining cofactor is prime
        long e = 0;
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
            ++e;
        }
        push(Integer(static_cast<long>(p)), e);
    }
    if (m > 1) push(m, 1); // prime, or a cofactor beyond the trial bound
    return out;
}

} // namespace rat
} // namespace logfield
