#ifndef LOGFIELD_ERROR_HPP
#define LOGFIELD_ERROR_HPP

#include <stdexcept>
#include <string>

namespace logfield {

enum class ErrorKind {
    BudgetExhausted,
    ZeroSeries,
    DivisionByZero,
    NotSmall,
    NotInfIncreasing,
    NonPositiveLeading,
    LargePartNotLogLinear,
    HasExpPart,
    SummabilityViolation,
    IrrationalScalar,
    ShapeNotSupported,
    MalformedInput,
    BelowThreshold,
    SyntaxError,
    UnboundName,
    InternalInvariant,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& detail)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + detail), kind_(kind), detail_(detail) {}

    ErrorKind kind() const { return kind_; }
    const std::string& detail() const { return detail_; }

private:
    ErrorKind kind_;
    std::string detail_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& detail) { throw Error(kind, detail); }

} // namespace logfield

#endif
