#ifndef LOGFIELD_BUDGET_HPP
#define LOGFIELD_BUDGET_HPP

#include "logfield/error.hpp"

#include <cstdint>
#include <string>

namespace logfield {

// Observation budget: caps on produced terms and on internal production
// steps. Exceeding it never asserts a mathematical fact; it only says the
// observation ran out of fuel.
struct Budget {
    std::uint64_t max_terms = 10000;
    std::uint64_t max_steps = 1000000;

    static Budget defaults() { return {}; }
};

// Per-observation fuel counter threaded through every producer pull.
class Workspace {
public:
    explicit Workspace(const Budget& b) : terms_left_(b.max_terms), steps_left_(b.max_steps) {}

    void count_step(const char* what) {
        if (steps_left_ == 0)
            raise(ErrorKind::BudgetExhausted,
                  std::string("step budget exhausted during ") + what + " (raise --max-steps)");
        --steps_left_;
    }

    void count_term() {
        if (terms_left_ == 0)
            raise(ErrorKind::BudgetExhausted, "term budget exhausted (raise --max-terms)");
        --terms_left_;
    }

private:
    std::uint64_t terms_left_;
    std::uint64_t steps_left_;
};

} // namespace logfield

#endif
