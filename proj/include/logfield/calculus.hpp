#ifndef LOGFIELD_CALCULUS_HPP
#define LOGFIELD_CALCULUS_HPP

#include "logfield/series.hpp"

namespace logfield {

// Term-wise formal derivative sum a_m m'. Derivative terms of a source term
// never exceed its monomial, so a pending maximum is emitted once the next
// source term falls strictly below it.
Series derivative(const Series& f);

Series nth_derivative(const Series& f, std::size_t i);

} // namespace logfield

#endif
