#pragma once

#include <stdexcept>
#include <string>

namespace galois {

enum class ErrorKind {
    MixedRadicands,
    UnsupportedSplitting,
    NotAPole,
    NoPolynomialSqrtPart,
    ZeroCouplingEntry,
    SeedNotASolution,
    OddHalfPower,
    WronskianIdenticallyZero,
    NotShapeInvariant,
    NonConstantRemainder,
    NonConstantCoefficient,
    NoFactor,
    NonCommensurable,
    IrrationalResidue,
    UnsupportedAlpha,
    FuchsViolation,
    ZeroLeading,
    UnknownFamily,
    OddDegree,
    NonMonic,
    UnsupportedLambdaPlacement,
    SyntaxError,
    UnsupportedFunction,
    MixedAtoms,
    UnsupportedSqrtPattern,
    DivisionByZero,
    InvalidArgument,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what);
    ErrorKind kind() const { return kind_; }
    // inputs outside the supported tower/atom table (CLI exit code 2)
    bool unsupported() const;

private:
    ErrorKind kind_;
};

[[noreturn]] void raise(ErrorKind kind, const std::string& what);

}  // namespace galois
