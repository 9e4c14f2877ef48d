#pragma once

#include <stdexcept>
#include <string>

namespace limitvor {

enum class ErrorKind {
    ZeroDenominator,
    CoincidentSites,
    CollinearTriple,
    GeneralPositionViolation,
    NotZeroCluster,
    EmptySkeleton,
    PointOutsideUnitDisk,
    NTooSmall,
    CoincidentPoints,
    InfiniteSlopeOnChart,
    DegenerateDenominator,
    CoincidentWithHinge,
    NotNested,
    InvalidQ,
    NotAccepted,
    TooManyZeroRatios,
    ReadOffUndefined,
    InvalidInput,
};

const char* error_kind_name(ErrorKind k);

// Domain errors map to CLI exit code 1.
class DomainError : public std::runtime_error {
public:
    DomainError(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

// I/O and parse failures map to exit code 2.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public IoError {
public:
    using IoError::IoError;
};

}  // namespace limitvor
