#ifndef LOGFIELD_POWERSERIES1_HPP
#define LOGFIELD_POWERSERIES1_HPP

#include "logfield/rational.hpp"

#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace logfield {

// One-variable formal power series given by an exact coefficient generator.
// Coefficients are memoized; a known finite degree marks polynomials.
class PowerSeries1 {
public:
    // step(n, prev) computes coefficient n from the already-memoized prefix.
    using Step = std::function<Rational(std::size_t, const std::vector<Rational>&)>;

    PowerSeries1(std::string label, Step step, std::optional<unsigned long> degree = std::nullopt);

    Rational coeff(std::size_t n) const;
    const std::string& label() const { return state_->label; }
    std::optional<unsigned long> degree() const { return state_->degree; }

private:
    struct State {
        std::string label;
        Step step;
        std::optional<unsigned long> degree;
        mutable std::mutex mu;
        mutable std::vector<Rational> memo;
    };
    std::shared_ptr<State> state_;
};

// geom = sum X^n
PowerSeries1 ps1_geom();
// Taylor series of log(1+x) at 0
PowerSeries1 ps1_log();
// Taylor series of (1+x)^r at 0
PowerSeries1 ps1_binomial(const Rational& r);
// Taylor series of exp(r x) at 0
PowerSeries1 ps1_exp(const Rational& r);

} // namespace logfield

#endif
