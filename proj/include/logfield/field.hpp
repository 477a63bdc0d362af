#ifndef LOGFIELD_FIELD_HPP
#define LOGFIELD_FIELD_HPP

#include "logfield/powerseries1.hpp"
#include "logfield/series.hpp"

namespace logfield {

// P(eps) = sum_n P.coeff(n) eps^n for small (or zero) eps; NotSmall is
// raised at first observation when the leading monomial of eps is not < 1.
Series compose_ps1(const PowerSeries1& p, const Series& eps);

// F/G via the leading-term split G = a g (1 + eps) and the geometric series.
Series divide(const Series& f, const Series& g, const Budget& budget);
Series divide_ws(const Series& f, const Series& g, Workspace& ws);

// G^r = a^r g^r (P_r o eps); IrrationalScalar when a^r leaves the scalars.
Series power(const Series& g, const Rational& r, const Budget& budget);
Series power_ws(const Series& g, const Rational& r, Workspace& ws);

// F = head * exp^-d * (1 + eps) with d = exp_order(F), head in L'.
struct LeadingDecomposition {
    Rational d;
    Series head;
    Series eps;
};
LeadingDecomposition decompose_leading(const Series& f, const Budget& budget);

} // namespace logfield

#endif
