#include "galois/errors.hpp"

namespace galois {

const char* error_kind_name(ErrorKind k)
{
    switch (k) {
    case ErrorKind::MixedRadicands: return "MixedRadicands";
    case ErrorKind::UnsupportedSplitting: return "UnsupportedSplitting";
    case ErrorKind::NotAPole: return "NotAPole";
    case ErrorKind::NoPolynomialSqrtPart: return "NoPolynomialSqrtPart";
    case ErrorKind::ZeroCouplingEntry: return "ZeroCouplingEntry";
    case ErrorKind::SeedNotASolution: return "SeedNotASolution";
    case ErrorKind::OddHalfPower: return "OddHalfPower";
    case ErrorKind::WronskianIdenticallyZero: return "WronskianIdenticallyZero";
    case ErrorKind::NotShapeInvariant: return "NotShapeInvariant";
    case ErrorKind::NonConstantRemainder: return "NonConstantRemainder";
    case ErrorKind::NonConstantCoefficient: return "NonConstantCoefficient";
    case ErrorKind::NoFactor: return "NoFactor";
    case ErrorKind::NonCommensurable: return "NonCommensurable";
    case ErrorKind::IrrationalResidue: return "IrrationalResidue";
    case ErrorKind::UnsupportedAlpha: return "UnsupportedAlpha";
    case ErrorKind::FuchsViolation: return "FuchsViolation";
    case ErrorKind::ZeroLeading: return "ZeroLeading";
    case ErrorKind::UnknownFamily: return "UnknownFamily";
    case ErrorKind::OddDegree: return "OddDegree";
    case ErrorKind::NonMonic: return "NonMonic";
    case ErrorKind::UnsupportedLambdaPlacement: return "UnsupportedLambdaPlacement";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnsupportedFunction: return "UnsupportedFunction";
    case ErrorKind::MixedAtoms: return "MixedAtoms";
    case ErrorKind::UnsupportedSqrtPattern: return "UnsupportedSqrtPattern";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind)
{
}

bool Error::unsupported() const
{
    switch (kind_) {
    case ErrorKind::MixedRadicands:
    case ErrorKind::UnsupportedSplitting:
    case ErrorKind::NoPolynomialSqrtPart:
    case ErrorKind::NonCommensurable:
    case ErrorKind::IrrationalResidue:
    case ErrorKind::UnsupportedAlpha:
    case ErrorKind::UnsupportedLambdaPlacement:
    case ErrorKind::SyntaxError:
    case ErrorKind::UnsupportedFunction:
    case ErrorKind::MixedAtoms:
    case ErrorKind::UnsupportedSqrtPattern:
    case ErrorKind::UnknownFamily:
    case ErrorKind::FuchsViolation:
    case ErrorKind::ZeroLeading:
    case ErrorKind::OddDegree:
    case ErrorKind::NonMonic:
    case ErrorKind::InvalidArgument:
    case ErrorKind::SeedNotASolution:
    case ErrorKind::NotShapeInvariant:
    case ErrorKind::WronskianIdenticallyZero:
    case ErrorKind::ZeroCouplingEntry:
        return true;
    default:
        return false;
    }
}

void raise(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace galois
