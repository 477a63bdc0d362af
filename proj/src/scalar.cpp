#include "logfield/scalar.hpp"

#include "logfield/error.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace logfield {

std::strong_ordering ScalarSym::operator<=>(const ScalarSym& o) const {
    if (int c = cmp(e_exp, o.e_exp); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    std::size_t n = std::min(logs.size(), o.logs.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (int c = cmp(logs[i].first, o.logs[i].first); c != 0)
            return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
        if (logs[i].second != o.logs[i].second)
            return logs[i].second < o.logs[i].second ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    if (logs.size() != o.logs.size())
        return logs.size() < o.logs.size() ? std::strong_ordering::less : std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

ScalarSym ScalarSym::times(const ScalarSym& o) const {
    ScalarSym out;
    out.e_exp = e_exp + o.e_exp;
    auto a = logs.begin(), b = o.logs.begin();
    while (a != logs.end() || b != o.logs.end()) {
        if (b == o.logs.end() || (a != logs.end() && cmp(a->first, b->first) < 0)) {
            out.logs.push_back(*a++);
        } else if (a == logs.end() || cmp(b->first, a->first) < 0) {
            out.logs.push_back(*b++);
        } else {
            long p = a->second + b->second;
            if (p != 0) out.logs.emplace_back(a->first, p);
            ++a;
            ++b;
        }
    }
    return out;
}

ScalarSym ScalarSym::inverse() const {
    ScalarSym out;
    out.e_exp = -e_exp;
    out.logs = logs;
    for (auto& [base, pow] : out.logs) pow = -pow;
    return out;
}

double ScalarSym::value() const {
    double v = std::exp(rat::to_double(e_exp));
    for (const auto& [base, pow] : logs) v *= std::pow(std::log(mpz_get_d(base.get_mpz_t())), static_cast<double>(pow));
    return v;
}

Scalar Scalar::e_power(const Rational& q) {
    if (rat::is_zero(q)) return Scalar::one();
    Scalar s;
    s.tail_.emplace_back(ScalarSym{q, {}}, Rational(1));
    return s;
}

Scalar Scalar::log_of_rational(const Rational& a) {
    if (sgn(a) <= 0) raise(ErrorKind::MalformedInput, "log of a non-positive rational");
    Scalar out;
    auto accumulate = [&](const Integer& n, int dir) {
        for (const auto& [p, e] : rat::factor_positive(n)) {
            if (p == 1) continue;
            ScalarSym sym;
            sym.logs.emplace_back(p, 1);
            out.insert_term(sym, Rational(dir * e));
        }
    };
    accumulate(a.get_num(), +1);
    accumulate(a.get_den(), -1);
    return out;
}

void Scalar::insert_term(const ScalarSym& sym, const Rational& coeff) {
    if (rat::is_zero(coeff)) return;
    if (sym.trivial()) {
        rat_ += coeff;
        return;
    }
    auto it = std::lower_bound(tail_.begin(), tail_.end(), sym,
                               [](const auto& t, const ScalarSym& s) { return t.first < s; });
    if (it != tail_.end() && it->first == sym) {
        it->second += coeff;
        if (rat::is_zero(it->second)) tail_.erase(it);
    } else {
        tail_.insert(it, {sym, coeff});
    }
}

std::pair<ScalarSym, Rational> Scalar::only_term() const {
    if (tail_.empty()) return {ScalarSym{}, rat_};
    return tail_[0];
}

std::optional<Rational> Scalar::as_rational() const {
    if (tail_.empty()) return rat_;
    return std::nullopt;
}

int Scalar::sign() const {
    if (is_zero()) return 0;
    if (tail_.empty()) return sgn(rat_);
    if (single_term()) return sgn(tail_[0].second);
    double v = to_double(), scale = std::fabs(rat::to_double(rat_));
    for (const auto& [sym, c] : tail_) scale += std::fabs(rat::to_double(c) * sym.value());
    if (std::fabs(v) > 1e-9 * scale) return v > 0 ? 1 : -1;
    raise(ErrorKind::IrrationalScalar, "cannot decide the sign of " + to_string());
}

Scalar Scalar::operator-() const {
    Scalar out = *this;
    out.rat_ = -out.rat_;
    for (auto& [sym, c] : out.tail_) c = -c;
    return out;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    rat_ += o.rat_;
    for (const auto& [sym, c] : o.tail_) insert_term(sym, c);
    return *this;
}

Scalar Scalar::operator+(const Scalar& o) const {
    Scalar out = *this;
    out += o;
    return out;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    if (tail_.empty() && o.tail_.empty()) return Scalar(Rational(rat_ * o.rat_));
    Scalar out;
    out.rat_ = rat_ * o.rat_;
    for (const auto& [sb, cb] : o.tail_) out.insert_term(sb, rat_ * cb);
    for (const auto& [sa, ca] : tail_) {
        out.insert_term(sa, ca * o.rat_);
        for (const auto& [sb, cb] : o.tail_) out.insert_term(sa.times(sb), ca * cb);
    }
    return out;
}

Scalar Scalar::inverse() const {
    if (is_zero()) raise(ErrorKind::DivisionByZero, "inverse of the zero scalar");
    if (tail_.empty()) return Scalar(Rational(1 / rat_));
    if (!single_term())
        raise(ErrorKind::IrrationalScalar, "scalar " + to_string() + " has no inverse in the carried extension");
    Scalar out;
    out.tail_.emplace_back(tail_[0].first.inverse(), 1 / tail_[0].second);
    return out;
}

Scalar Scalar::pow(const Rational& r) const {
    if (rat::is_zero(r)) return Scalar::one();
    if (is_zero()) {
        if (sgn(r) < 0) raise(ErrorKind::DivisionByZero, "0 raised to a negative power");
        return Scalar::zero();
    }
    if (!single_term())
        raise(ErrorKind::IrrationalScalar, "cannot raise " + to_string() + " to a rational power exactly");
    auto [sym, c] = only_term();
    auto croot = rat::pow_exact(c, r);
    if (!croot) raise(ErrorKind::IrrationalScalar, rat::to_string(c) + "^" + rat::to_string(r) + " is not rational");
    ScalarSym out_sym;
    out_sym.e_exp = sym.e_exp * r;
    for (const auto& [base, pow] : sym.logs) {
        Rational scaled = Rational(pow) * r;
        if (!rat::is_integer(scaled) || !scaled.get_num().fits_slong_p())
            raise(ErrorKind::IrrationalScalar,
                  "log-power scaling " + to_string() + "^" + rat::to_string(r) + " leaves the extension");
        if (!rat::is_zero(scaled)) out_sym.logs.emplace_back(base, scaled.get_num().get_si());
    }
    Scalar out;
    out.insert_term(out_sym, *croot);
    return out;
}

Scalar Scalar::log() const {
    if (is_zero()) raise(ErrorKind::MalformedInput, "log of zero");
    if (!single_term() || !only_term().first.logs.empty())
        raise(ErrorKind::IrrationalScalar, "log(" + to_string() + ") is outside the carried extension");
    auto [sym, c] = only_term();
    if (sgn(c) <= 0) raise(ErrorKind::MalformedInput, "log of a negative scalar");
    return Scalar(sym.e_exp) + log_of_rational(c);
}

Scalar Scalar::exp() const {
    Rational rat_factor(1);
    for (const auto& [sym, c] : tail_) {
        if (!rat::is_zero(sym.e_exp) || sym.logs.size() != 1 || sym.logs[0].second != 1)
            raise(ErrorKind::IrrationalScalar, "exp(" + to_string() + ") is outside the carried extension");
        if (!rat::is_integer(c) || !c.get_num().fits_slong_p())
            raise(ErrorKind::IrrationalScalar,
                  "exp(" + to_string() + ") would need an irrational power of " + sym.logs[0].first.get_str());
        rat_factor *= rat::pow_int(Rational(sym.logs[0].first), c.get_num().get_si());
    }
    return Scalar(rat_factor) * e_power(rat_);
}

double Scalar::to_double() const {
    double v = rat::to_double(rat_);
    for (const auto& [sym, c] : tail_) v += rat::to_double(c) * sym.value();
    return v;
}

std::string Scalar::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const ScalarSym& sym, const Rational& c) {
        Rational coeff = c;
        if (first) {
            if (sgn(coeff) < 0) {
                os << "-";
                coeff = -coeff;
            }
        } else {
            os << (sgn(coeff) < 0 ? " - " : " + ");
            coeff = abs(coeff);
        }
        std::vector<std::string> factors;
        if (coeff != 1 || sym.trivial()) factors.push_back(rat::to_string(coeff));
        if (!rat::is_zero(sym.e_exp))
            factors.push_back(sym.e_exp == 1 ? "e" : "e^" + rat::to_string(sym.e_exp));
        for (const auto& [base, pow] : sym.logs) {
            std::string f = "log(" + base.get_str() + ")";
            if (pow != 1) f += "^" + std::to_string(pow);
            factors.push_back(f);
        }
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (i) os << "*";
            os << factors[i];
        }
        first = false;
    };
    if (!rat::is_zero(rat_)) emit(ScalarSym{}, rat_);
    for (const auto& [sym, c] : tail_) emit(sym, c);
    return os.str();
}

} // namespace logfield
