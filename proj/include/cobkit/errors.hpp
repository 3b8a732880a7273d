#pragma once

#include <stdexcept>
#include <string>

namespace cobkit {

// Base class for all toolkit errors. `code()` is a stable identifier used in
// CLI diagnostics; `what()` carries the human-readable detail.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

#define COBKIT_DEFINE_ERROR(NAME)                                            \
    class NAME : public Error {                                              \
    public:                                                                  \
        explicit NAME(const std::string& message) : Error(#NAME, message) {} \
    }

COBKIT_DEFINE_ERROR(MalformedComplex);
COBKIT_DEFINE_ERROR(NotPseudomanifold);
COBKIT_DEFINE_ERROR(UnknownCorpusName);
COBKIT_DEFINE_ERROR(ClosedInput);
COBKIT_DEFINE_ERROR(EmptyBoundary);
COBKIT_DEFINE_ERROR(DimensionMismatch);
COBKIT_DEFINE_ERROR(NotClosed);
COBKIT_DEFINE_ERROR(NotOriented);
COBKIT_DEFINE_ERROR(NotSpin);
COBKIT_DEFINE_ERROR(BadDimension);
COBKIT_DEFINE_ERROR(EvenDimension);
COBKIT_DEFINE_ERROR(DegreeOverflow);
COBKIT_DEFINE_ERROR(MissingInvariant);
COBKIT_DEFINE_ERROR(OddChi);
COBKIT_DEFINE_ERROR(PreconditionUnresolved);
COBKIT_DEFINE_ERROR(GroupMismatch);
COBKIT_DEFINE_ERROR(NotEligible);
COBKIT_DEFINE_ERROR(UnsupportedDegree);
COBKIT_DEFINE_ERROR(BudgetExceeded);
COBKIT_DEFINE_ERROR(ParseError);
COBKIT_DEFINE_ERROR(MalformedRecord);

#undef COBKIT_DEFINE_ERROR

}  // namespace cobkit
