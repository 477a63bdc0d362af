#include "logfield/monomial.hpp"

#include "logfield/error.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace logfield {

Monomial Monomial::make(std::vector<std::pair<Level, Rational>> exps) {
    std::sort(exps.begin(), exps.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    Monomial m;
    for (auto& [level, e] : exps) {
        if (level < kLevelExp) raise(ErrorKind::MalformedInput, "monomial level below -1");
        if (!m.exps_.empty() && m.exps_.back().first == level) {
            m.exps_.back().second += e;
            if (rat::is_zero(m.exps_.back().second)) m.exps_.pop_back();
        } else if (!rat::is_zero(e)) {
            m.exps_.emplace_back(level, std::move(e));
        }
    }
    return m;
}

Monomial Monomial::factor(Level level, const Rational& expo) {
    return make({{level, expo}});
}

Rational Monomial::exponent(Level level) const {
    for (const auto& [l, e] : exps_)
        if (l == level) return e;
    return Rational(0);
}

Monomial Monomial::times(const Monomial& o) const {
    Monomial out;
    auto a = exps_.begin(), b = o.exps_.begin();
    while (a != exps_.end() || b != o.exps_.end()) {
        if (b == o.exps_.end() || (a != exps_.end() && a->first < b->first)) {
            out.exps_.push_back(*a++);
        } else if (a == exps_.end() || b->first < a->first) {
            out.exps_.push_back(*b++);
        } else {
            Rational e = a->second + b->second;
            if (!rat::is_zero(e)) out.exps_.emplace_back(a->first, std::move(e));
            ++a;
            ++b;
        }
    }
    return out;
}

Monomial Monomial::inverse() const {
    Monomial out = *this;
    for (auto& [l, e] : out.exps_) e = -e;
    return out;
}

Monomial Monomial::pow(const Rational& r) const {
    if (rat::is_zero(r)) return Monomial();
    Monomial out = *this;
    for (auto& [l, e] : out.exps_) e *= r;
    return out;
}

Monomial Monomial::shift_levels(int delta) const {
    Monomial out;
    for (const auto& [l, e] : exps_) {
        if (l + delta < kLevelExp) raise(ErrorKind::MalformedInput, "level shift below -1");
        out.exps_.emplace_back(l + delta, e);
    }
    return out;
}

Monomial Monomial::drop_exp() const {
    Monomial out = *this;
    if (!out.exps_.empty() && out.exps_.front().first == kLevelExp) out.exps_.erase(out.exps_.begin());
    return out;
}

std::strong_ordering Monomial::operator<=>(const Monomial& o) const {
    auto a = exps_.begin(), b = o.exps_.begin();
    while (a != exps_.end() || b != o.exps_.end()) {
        Level la = a != exps_.end() ? a->first : std::numeric_limits<Level>::max();
        Level lb = b != o.exps_.end() ? b->first : std::numeric_limits<Level>::max();
        Level l = std::min(la, lb);
        const Rational za(0);
        const Rational& ea = la == l ? a->second : za;
        const Rational& eb = lb == l ? b->second : za;
        if (int c = cmp(ea, eb); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
        if (la == l) ++a;
        if (lb == l) ++b;
    }
    return std::strong_ordering::equal;
}

std::string Monomial::to_string() const {
    if (exps_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [l, e] : exps_) {
        if (!first) os << " * ";
        first = false;
        if (l == kLevelExp)
            os << "exp";
        else if (l == 0)
            os << "x";
        else if (l == 1)
            os << "log";
        else
            os << "log[" << l << "]";
        if (e != 1) os << "^" << rat::to_string(e);
    }
    return os.str();
}

namespace {

// (log_i)' / log_i as a monomial: 1 for exp, prod_{j=0..i} log_j^-1 otherwise.
Monomial derivative_multiplier(Level i) {
    std::vector<std::pair<Level, Rational>> exps;
    for (Level j = 0; j <= i; ++j) exps.emplace_back(j, Rational(-1));
    return Monomial::make(std::move(exps));
}

} // namespace

std::vector<std::pair<Rational, Monomial>> mono_derivative(const Monomial& m) {
    std::vector<std::pair<Rational, Monomial>> out;
    for (const auto& [level, expo] : m.exponents())
        out.emplace_back(expo, m.times(derivative_multiplier(level)));
    // Distinct levels give distinct multipliers, so monomials never collide;
    // keep the result sorted decreasingly all the same.
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.second > b.second; });
    return out;
}

} // namespace logfield
