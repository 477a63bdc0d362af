#ifndef LOGFIELD_COMPOSITION_HPP
#define LOGFIELD_COMPOSITION_HPP

#include "logfield/field.hpp"
#include "logfield/series.hpp"

namespace logfield {

// Finite log-linear shape c + sum_i coeffs[i] * log_i (levels >= 0), the
// exact boundary of what formal exponentiation keeps inside L.
struct LogLinearPart {
    Scalar constant;
    std::vector<std::pair<Level, Rational>> coeffs;
};

// F o log: every level shifted up by one; lands in Gs(R, L').
Series shift_log(const Series& f);

// log o G = log a + log o g + F_log(eps) for G = a g (1 + eps), a > 0.
Series log_of(const Series& g, const Budget& budget);
Series log_of_ws(const Series& g, Workspace& ws);

// i-fold log of an infinitely increasing series.
Series log_iter(const Series& g, unsigned i, const Budget& budget);

// exp o F for F with log-linear large part; inverse of log_of where defined.
Series exp_of(const Series& f, const Budget& budget);
Series exp_of_ws(const Series& f, Workspace& ws);

// F o G for F supported in L' and infinitely increasing G: monomial-wise
// substitution log_i -> log_i o G, summed under monotone activation.
Series substitute_logfree(const Series& f, const Series& g, const Budget& budget);

// F o log o G: E-grade F and sum (f_r o log o G) G^-r per the composition
// calculus; equal to substitute_logfree(shift_log(F), G) by associativity.
Series compose_with_log(const Series& f, const Series& g, const Budget& budget);

// F o (G + H) = sum_i F^(i) o G * H^i / i! for G = log_of(g0) shapes and
// small H, evaluated through compose_with_log(F^(i), g0).
Series taylor_compose(const Series& f, const Series& g, const Series& h, const Budget& budget);

} // namespace logfield

#endif
