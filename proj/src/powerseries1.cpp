#include "logfield/powerseries1.hpp"

namespace logfield {

PowerSeries1::PowerSeries1(std::string label, Step step, std::optional<unsigned long> degree)
    : state_(std::make_shared<State>()) {
    state_->label = std::move(label);
    state_->step = std::move(step);
    state_->degree = degree;
}

Rational PowerSeries1::coeff(std::size_t n) const {
    std::lock_guard lk(state_->mu);
    while (state_->memo.size() <= n) state_->memo.push_back(state_->step(state_->memo.size(), state_->memo));
    return state_->memo[n];
}

PowerSeries1 ps1_geom() {
    return PowerSeries1("geom", [](std::size_t, const std::vector<Rational>&) { return Rational(1); });
}

PowerSeries1 ps1_log() {
    return PowerSeries1("F_log", [](std::size_t n, const std::vector<Rational>&) {
        if (n == 0) return Rational(0);
        Rational c(1, static_cast<unsigned long>(n));
        return n % 2 == 0 ? Rational(-c) : c;
    });
}

PowerSeries1 ps1_binomial(const Rational& r) {
    std::optional<unsigned long> degree;
    if (rat::is_integer(r) && sgn(r) >= 0 && r.get_num().fits_ulong_p()) degree = r.get_num().get_ui();
    return PowerSeries1(
        "P_" + rat::to_string(r),
        [r](std::size_t n, const std::vector<Rational>& prev) {
            if (n == 0) return Rational(1);
            // C(r, n) = C(r, n-1) * (r - n + 1) / n
            return Rational(prev[n - 1] * (r - Rational(static_cast<long>(n) - 1)) / Rational(static_cast<long>(n)));
        },
        degree);
}

PowerSeries1 ps1_exp(const Rational& r) {
    std::optional<unsigned long> degree;
    if (rat::is_zero(r)) degree = 0;
    return PowerSeries1(
        "F_exp^" + rat::to_string(r),
        [r](std::size_t n, const std::vector<Rational>& prev) {
            if (n == 0) return Rational(1);
            return Rational(prev[n - 1] * r / Rational(static_cast<long>(n)));
        },
        degree);
}

} // namespace logfield
