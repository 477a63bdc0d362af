#include "logfield/monomial.hpp"

#include "test_support.hpp"

#include <doctest.h>

using namespace logfield;
using logfield::testing::Rng;

namespace {

Monomial mono(std::vector<std::pair<Level, Rational>> e) { return Monomial::make(std::move(e)); }

} // namespace

TEST_CASE("group laws and canonical form") {
    Monomial x = Monomial::factor(0, Rational(1));
    Monomial xi = Monomial::factor(0, Rational(-1));
    CHECK(x.times(xi).is_one());
    CHECK(mono({{kLevelExp, Rational(-1)}}).times(mono({{1, rat::of(-1, 2)}})) ==
          mono({{kLevelExp, Rational(-1)}, {1, rat::of(-1, 2)}}));
    CHECK(mono({{0, Rational(2)}, {1, Rational(1)}}).times(mono({{0, rat::of(-1, 2)}})) ==
          mono({{0, rat::of(3, 2)}, {1, Rational(1)}}));
    CHECK(mono({{0, rat::of(3, 2)}, {2, Rational(-1)}}).inverse() ==
          mono({{0, rat::of(-3, 2)}, {2, Rational(1)}}));
    CHECK(Monomial::one().inverse().is_one());

    Rng rng(101);
    for (int i = 0; i < 300; ++i) {
        Monomial a = rng.monomial(-1, 3), b = rng.monomial(-1, 3), c = rng.monomial(-1, 3);
        CHECK(a.times(b) == b.times(a));
        CHECK(a.times(b.times(c)) == a.times(b).times(c));
        CHECK(a.times(a.inverse()).is_one());
        CHECK(a.times(Monomial::one()) == a);
    }
}

TEST_CASE("lexicographic order") {
    // exp^-1 < x^-1 in L
    CHECK(mono({{kLevelExp, Rational(-1)}}) < mono({{0, Rational(-1)}}));
    // x < x log x
    CHECK(mono({{0, Rational(1)}}) < mono({{0, Rational(1)}, {1, Rational(1)}}));
    CHECK(Monomial::one() <=> Monomial::one() == std::strong_ordering::equal);

    CHECK(!Monomial::one().is_small());
    CHECK(!Monomial::one().is_large());
    CHECK(mono({{0, Rational(-1)}}).is_small());
    CHECK(mono({{kLevelExp, Rational(1)}, {0, Rational(-100)}}).is_large());

    Rng rng(202);
    for (int i = 0; i < 300; ++i) {
        Monomial a = rng.monomial(-1, 3), b = rng.monomial(-1, 3), c = rng.monomial(-1, 3);
        // total, antisymmetric
        CHECK(((a < b) + (b < a) + (a == b)) == 1);
        // transitive
        if (a <= b && b <= c) CHECK(a <= c);
        // order respects the group operation
        if (a < b) CHECK(a.times(c) < b.times(c));
    }
}

TEST_CASE("monomial derivative") {
    auto d_log = mono_derivative(mono({{1, Rational(1)}}));
    REQUIRE(d_log.size() == 1);
    CHECK(d_log[0].first == 1);
    CHECK(d_log[0].second == mono({{0, Rational(-1)}}));

    auto d_exp2 = mono_derivative(mono({{kLevelExp, Rational(2)}}));
    REQUIRE(d_exp2.size() == 1);
    CHECK(d_exp2[0].first == 2);
    CHECK(d_exp2[0].second == mono({{kLevelExp, Rational(2)}}));

    auto d_loglog = mono_derivative(mono({{2, Rational(1)}}));
    REQUIRE(d_loglog.size() == 1);
    CHECK(d_loglog[0].first == 1);
    CHECK(d_loglog[0].second == mono({{0, Rational(-1)}, {1, Rational(-1)}}));

    CHECK(mono_derivative(Monomial::one()).empty());
}

namespace {

// Reference Leibniz check via sorted-term normalization.
std::vector<std::pair<Rational, Monomial>> normalize(std::vector<std::pair<Rational, Monomial>> terms) {
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.second > b.second; });
    std::vector<std::pair<Rational, Monomial>> out;
    for (auto& [c, m] : terms) {
        if (!out.empty() && out.back().second == m)
            out.back().first += c;
        else
            out.emplace_back(c, m);
    }
    std::erase_if(out, [](const auto& t) { return rat::is_zero(t.first); });
    return out;
}

} // namespace

TEST_CASE("Leibniz law at the monomial level") {
    Rng rng(303);
    for (int i = 0; i < 200; ++i) {
        Monomial m = rng.monomial(-1, 3), n = rng.monomial(-1, 3);
        auto lhs = mono_derivative(m.times(n));
        std::vector<std::pair<Rational, Monomial>> rhs;
        for (const auto& [c, dm] : mono_derivative(m)) rhs.emplace_back(c, dm.times(n));
        for (const auto& [c, dn] : mono_derivative(n)) rhs.emplace_back(c, m.times(dn));
        CHECK(normalize(lhs) == normalize(rhs));
    }
}

TEST_CASE("derivative terms never exceed the source monomial") {
    Rng rng(404);
    for (int i = 0; i < 200; ++i) {
        Monomial m = rng.small_monomial(-1, 3);
        for (const auto& [c, dm] : mono_derivative(m)) CHECK(dm <= m);
    }
}

TEST_CASE("canonical text") {
    CHECK(Monomial::one().to_string() == "1");
    CHECK(mono({{kLevelExp, Rational(-1)}, {0, Rational(2)}, {2, rat::of(-1, 2)}}).to_string() ==
          "exp^-1 * x^2 * log[2]^-1/2");
    CHECK(mono({{1, Rational(1)}}).to_string() == "log");
}
