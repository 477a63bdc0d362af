#include "logfield/calculus.hpp"

#include "logfield/field.hpp"
#include "test_support.hpp"

#include <doctest.h>

using namespace logfield;
using logfield::testing::Rng;
using logfield::testing::prefixes_agree;
using logfield::testing::test_budget;

namespace {

Monomial mono(std::vector<std::pair<Level, Rational>> e) { return Monomial::make(std::move(e)); }
Term term(long num, long den, std::vector<std::pair<Level, Rational>> e) {
    return {Scalar(rat::of(num, den)), mono(std::move(e))};
}

} // namespace

TEST_CASE("derivative examples") {
    // d/dx sum_{n>=1} x^-n = sum_{n>=1} -n x^-(n+1)
    Series f = mul_monomial(compose_ps1(ps1_geom(), from_terms({term(1, 1, {{0, Rational(-1)}})})),
                            Monomial::factor(0, Rational(-1)));
    auto p = terms_prefix(derivative(f), 4, test_budget());
    REQUIRE(p.size() == 4);
    for (long n = 1; n <= 4; ++n) {
        CHECK(p[n - 1].coeff == Scalar(Rational(-n)));
        CHECK(p[n - 1].mono == mono({{0, Rational(-n - 1)}}));
    }

    CHECK(terms_prefix(derivative(series_const(Scalar(Rational(7)))), 2, test_budget()).empty());

    // (exp^-1 log^2)' = -exp^-1 log^2 + 2 exp^-1 x^-1 log
    Series g = from_terms({term(1, 1, {{kLevelExp, Rational(-1)}, {1, Rational(2)}})});
    p = terms_prefix(derivative(g), 4, test_budget());
    REQUIRE(p.size() == 2);
    CHECK(p[0].coeff == Scalar(Rational(-1)));
    CHECK(p[0].mono == mono({{kLevelExp, Rational(-1)}, {1, Rational(2)}}));
    CHECK(p[1].coeff == Scalar(Rational(2)));
    CHECK(p[1].mono == mono({{kLevelExp, Rational(-1)}, {0, Rational(-1)}, {1, Rational(1)}}));
}

TEST_CASE("nth_derivative") {
    Series x2 = from_terms({term(1, 1, {{0, Rational(2)}})});
    auto p = terms_prefix(nth_derivative(x2, 2), 3, test_budget());
    REQUIRE(p.size() == 1);
    CHECK(p[0].coeff == Scalar(Rational(2)));
    CHECK(p[0].mono.is_one());

    Rng rng(31);
    Series f = rng.finite_series(6, -1, 2);
    CHECK(prefixes_agree(nth_derivative(f, 0), f, 8, test_budget()));

    Series e = from_terms({term(1, 1, {{kLevelExp, Rational(1)}})});
    CHECK(prefixes_agree(nth_derivative(e, 3), e, 3, test_budget()));
}

TEST_CASE("derivation laws") {
    Rng rng(32);
    for (int i = 0; i < 40; ++i) {
        Series f = rng.finite_series(8, -1, 3);
        Series g = rng.finite_series(8, -1, 3);
        CHECK(prefixes_agree(derivative(add(f, g)), add(derivative(f), derivative(g)), 12, test_budget()));
        CHECK(prefixes_agree(derivative(mul(f, g)), add(mul(derivative(f), g), mul(f, derivative(g))), 12,
                             test_budget()));
    }
}

TEST_CASE("E-graded derivative law") {
    // e_coefficient(F', r) = (f_r)' - r f_r
    Rng rng(33);
    for (int i = 0; i < 25; ++i) {
        Series f = rng.finite_series(8, -1, 2);
        std::vector<Rational> grades;
        for (const auto& t : terms_prefix(f, 12, test_budget())) {
            Rational r = -t.mono.exponent(kLevelExp);
            if (grades.empty() || grades.back() != r) grades.push_back(r);
        }
        for (const auto& r : grades) {
            Series fr = e_coefficient(f, r);
            Series lhs = e_coefficient(derivative(f), r);
            Series rhs = sub(derivative(fr), scalar_mul(Scalar(r), fr));
            CHECK(prefixes_agree(lhs, rhs, 12, test_budget()));
        }
    }
}

TEST_CASE("derivative certificate covers derivative terms") {
    Rng rng(34);
    for (int i = 0; i < 10; ++i) {
        Series f = rng.finite_series(5, -1, 2);
        Series df = derivative(f);
        GridCertificate cert = df.certificate();
        for (const auto& t : terms_prefix(df, 10, test_budget())) CHECK(cert.contains(t.mono));
    }
}
