#include "logfield/series.hpp"

#include "test_support.hpp"

#include <doctest.h>

#include <thread>

using namespace logfield;
using logfield::testing::Rng;
using logfield::testing::prefixes_agree;
using logfield::testing::test_budget;

namespace {

Monomial mono(std::vector<std::pair<Level, Rational>> e) { return Monomial::make(std::move(e)); }
Term term(long num, long den, std::vector<std::pair<Level, Rational>> e) {
    return {Scalar(rat::of(num, den)), mono(std::move(e))};
}

const Monomial kX = Monomial::factor(0, Rational(1));
const Monomial kXinv = Monomial::factor(0, Rational(-1));
const Monomial kExpInv = Monomial::factor(kLevelExp, Rational(-1));

} // namespace

TEST_CASE("from_terms canonicalizes") {
    Series zero = from_terms({});
    CHECK(terms_prefix(zero, 5, test_budget()).empty());

    // 1*x^-1 + 2 - 1*x^-1 collapses to the constant 2
    Series s = from_terms({term(1, 1, {{0, Rational(-1)}}), term(2, 1, {}), term(-1, 1, {{0, Rational(-1)}})});
    auto p = terms_prefix(s, 5, test_budget());
    REQUIRE(p.size() == 1);
    CHECK(p[0].coeff == Scalar(Rational(2)));
    CHECK(p[0].mono.is_one());

    Series e = from_terms({term(1, 1, {{kLevelExp, Rational(-1)}})});
    p = terms_prefix(e, 5, test_budget());
    REQUIRE(p.size() == 1);
    CHECK(p[0].mono == kExpInv);
}

TEST_CASE("add, negate, scalar_mul") {
    Series a = from_terms({term(1, 1, {}), term(1, 1, {{0, Rational(-1)}})});
    Series b = from_terms({term(-1, 1, {}), term(1, 1, {{0, Rational(-2)}})});
    auto p = terms_prefix(add(a, b), 5, test_budget());
    REQUIRE(p.size() == 2);
    CHECK(p[0].mono == kXinv);
    CHECK(p[1].mono == mono({{0, Rational(-2)}}));

    CHECK(terms_prefix(add(a, negate(a)), 3, test_budget()).empty());
    CHECK(terms_prefix(scalar_mul(Scalar::zero(), a), 3, test_budget()).empty());
}

TEST_CASE("mul basics") {
    // (x + 1)(x - 1) = x^2 - 1
    Series f = from_terms({term(1, 1, {{0, Rational(1)}}), term(1, 1, {})});
    Series g = from_terms({term(1, 1, {{0, Rational(1)}}), term(-1, 1, {})});
    auto p = terms_prefix(mul(f, g), 5, test_budget());
    REQUIRE(p.size() == 2);
    CHECK(p[0].mono == mono({{0, Rational(2)}}));
    CHECK(p[0].coeff == Scalar(Rational(1)));
    CHECK(p[1].mono.is_one());
    CHECK(p[1].coeff == Scalar(Rational(-1)));

    // unit law
    Rng rng(11);
    for (int i = 0; i < 20; ++i) {
        Series h = rng.finite_series(8, -1, 3);
        CHECK(prefixes_agree(mul(h, series_one()), h, 12, test_budget()));
    }
}

TEST_CASE("mul_monomial") {
    Series f = from_terms({term(1, 1, {}), term(1, 1, {{0, Rational(-1)}})});
    auto p = terms_prefix(mul_monomial(f, kExpInv), 4, test_budget());
    REQUIRE(p.size() == 2);
    CHECK(p[0].mono == kExpInv);
    CHECK(p[1].mono == kExpInv.times(kXinv));
    CHECK(prefixes_agree(mul_monomial(f, Monomial::one()), f, 4, test_budget()));
}

TEST_CASE("truncate_above") {
    Series f = from_terms({term(1, 1, {}), term(1, 1, {{0, Rational(-1)}}), term(1, 1, {{kLevelExp, Rational(-1)}})});
    Monomial x5 = mono({{0, Rational(-5)}});
    auto p = terms_prefix(truncate_above(f, x5), 5, test_budget());
    REQUIRE(p.size() == 2); // exp^-1 < x^-5 drops
    CHECK(p[0].mono.is_one());
    CHECK(p[1].mono == kXinv);

    CHECK(prefixes_agree(truncate_above(truncate_above(f, x5), x5), truncate_above(f, x5), 5, test_budget()));
    CHECK(terms_prefix(truncate_above(f, mono({{0, Rational(7)}})), 2, test_budget()).empty());
}

TEST_CASE("exp_order and e_coefficient") {
    Series f = from_terms({term(1, 1, {{kLevelExp, Rational(-2)}}), term(1, 1, {{kLevelExp, Rational(-2)}, {0, Rational(-1)}})});
    CHECK(exp_order(f, test_budget()) == 2);
    CHECK(exp_order(from_terms({term(1, 1, {{0, Rational(-3)}})}), test_budget()) == 0);
    CHECK(exp_order(from_terms({term(1, 1, {{kLevelExp, Rational(3)}, {1, Rational(-1)}})}), test_budget()) == -3);
    CHECK_THROWS_AS(exp_order(Series(), test_budget()), Error);

    Series g = from_terms({term(1, 1, {{kLevelExp, Rational(-1)}, {1, Rational(-1)}}), term(1, 1, {{0, Rational(-2)}})});
    auto p = terms_prefix(e_coefficient(g, Rational(1)), 4, test_budget());
    REQUIRE(p.size() == 1);
    CHECK(p[0].mono == mono({{1, Rational(-1)}}));
    CHECK(terms_prefix(e_coefficient(g, Rational(5)), 2, test_budget()).empty());
}

TEST_CASE("predicates") {
    CHECK(is_small(Series(), test_budget()));
    CHECK(!is_inf_increasing(Series(), test_budget()));
    Series f = from_terms({term(1, 1, {{0, Rational(-1)}}), term(1, 1, {{0, Rational(-2)}})});
    CHECK(is_small(f, test_budget()));
    Series g = from_terms({term(-3, 1, {{0, Rational(1)}}), term(1, 1, {})});
    CHECK(!is_inf_increasing(g, test_budget()));
    Series h = from_terms({term(2, 1, {{2, Rational(1)}}), term(5, 1, {})});
    CHECK(is_inf_increasing(h, test_budget()));
}

TEST_CASE("almost_regular") {
    auto one_row = almost_regular({{Rational(0), {Rational(1)}}});
    auto p = terms_prefix(one_row, 3, test_budget());
    REQUIRE(p.size() == 1);
    CHECK(p[0].mono.is_one());

    auto two = almost_regular({{Rational(0), {Rational(2)}}, {Rational(1), {Rational(0), Rational(3)}}});
    p = terms_prefix(two, 4, test_budget());
    REQUIRE(p.size() == 2);
    CHECK(p[0].coeff == Scalar(Rational(2)));
    CHECK(p[1].mono == mono({{0, Rational(1)}, {kLevelExp, Rational(-1)}}));
    CHECK(p[1].coeff == Scalar(Rational(3)));

    CHECK_THROWS_AS(almost_regular({{Rational(1), {Rational(1)}}, {rat::of(1, 2), {Rational(1)}}}), Error);
    CHECK_THROWS_AS(almost_regular({{Rational(0), {Rational(0), Rational(1)}}}, true), Error);
}

TEST_CASE("ring laws on random finite series") {
    Rng rng(77);
    for (int i = 0; i < 60; ++i) {
        Series f = rng.finite_series(8, -1, 3);
        Series g = rng.finite_series(8, -1, 3);
        Series h = rng.finite_series(8, -1, 3);
        CHECK(prefixes_agree(mul(mul(f, g), h), mul(f, mul(g, h)), 12, test_budget()));
        CHECK(prefixes_agree(mul(f, g), mul(g, f), 12, test_budget()));
        CHECK(prefixes_agree(mul(f, add(g, h)), add(mul(f, g), mul(f, h)), 12, test_budget()));
        CHECK(prefixes_agree(add(f, g), add(g, f), 12, test_budget()));
    }
}

TEST_CASE("truncation laws") {
    Rng rng(78);
    for (int i = 0; i < 40; ++i) {
        Series f = rng.finite_series(8, -1, 3);
        Monomial n = rng.monomial(-1, 3);
        Series t = truncate_above(f, n);
        for (const auto& tm : terms_prefix(t, 12, test_budget())) CHECK(tm.mono >= n);
        CHECK(prefixes_agree(truncate_above(t, n), t, 12, test_budget()));
        CHECK(prefixes_agree(add(t, sub(f, t)), f, 12, test_budget()));
    }
}

TEST_CASE("E-grading reassembles the series") {
    Rng rng(79);
    for (int i = 0; i < 30; ++i) {
        Series f = rng.finite_series(8, -1, 2);
        std::vector<Rational> grades;
        for (const auto& t : terms_prefix(f, 12, test_budget())) {
            Rational r = -t.mono.exponent(kLevelExp);
            if (grades.empty() || grades.back() != r) grades.push_back(r);
        }
        Series sum;
        for (const auto& r : grades)
            sum = add(sum, mul_monomial(e_coefficient(f, r), Monomial::factor(kLevelExp, -r)));
        CHECK(prefixes_agree(sum, f, 12, test_budget()));
    }
}

TEST_CASE("enumeration soundness: decreasing, certified, nonzero") {
    Rng rng(80);
    for (int i = 0; i < 30; ++i) {
        Series f = rng.finite_series(6, -1, 2);
        Series g = rng.finite_series(6, -1, 2);
        Series prod = mul(f, g);
        auto p = terms_prefix(prod, 12, test_budget());
        GridCertificate cert = prod.certificate();
        for (std::size_t j = 0; j < p.size(); ++j) {
            CHECK(!p[j].coeff.is_zero());
            if (j > 0) CHECK(p[j].mono < p[j - 1].mono);
            CHECK(cert.contains(p[j].mono));
        }
    }
}

TEST_CASE("determinism and memoization") {
    Rng rng(81);
    Series f = rng.finite_series(8, -1, 2);
    Series g = rng.finite_series(8, -1, 2);
    Series prod = mul(f, g);
    auto p1 = terms_prefix(prod, 9, test_budget());
    auto p2 = terms_prefix(prod, 9, test_budget());
    REQUIRE(p1.size() == p2.size());
    for (std::size_t i = 0; i < p1.size(); ++i) {
        CHECK(p1[i].mono == p2[i].mono);
        CHECK(p1[i].coeff == p2[i].coeff);
    }
}

TEST_CASE("budget exhaustion is reported, not decided") {
    Series f = from_terms({term(1, 1, {{0, Rational(8)}}), term(1, 1, {})});
    Series big = mul(mul(f, f), mul(f, f));
    Budget tiny;
    tiny.max_steps = 2;
    CHECK_THROWS_AS(terms_prefix(big, 5, tiny), Error);
    // and with fuel the same value observes fine
    CHECK(!terms_prefix(big, 5, test_budget()).empty());
}

TEST_CASE("concurrent observation") {
    Rng rng(82);
    Series f = rng.nonzero_finite_series(8, -1, 2);
    Series g = rng.nonzero_finite_series(8, -1, 2);
    Series prod = mul(f, g);
    std::vector<std::vector<Term>> got(4);
    std::vector<std::thread> threads;
    for (int t = 0; t < 4; ++t)
        threads.emplace_back([&, t] { got[t] = terms_prefix(prod, 10, test_budget()); });
    for (auto& th : threads) th.join();
    for (int t = 1; t < 4; ++t) {
        REQUIRE(got[t].size() == got[0].size());
        for (std::size_t i = 0; i < got[t].size(); ++i) {
            CHECK(got[t][i].mono == got[0][i].mono);
            CHECK(got[t][i].coeff == got[0][i].coeff);
        }
    }
}
