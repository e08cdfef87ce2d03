#pragma once

#include <stdexcept>
#include <string>

namespace osswb {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ChartMismatch : Error {
    using Error::Error;
};
struct UnknownCoordinate : Error {
    using Error::Error;
};
struct DimensionMismatch : Error {
    using Error::Error;
};
struct SingularMatrix : Error {
    using Error::Error;
};
struct NotSymmetric : Error {
    using Error::Error;
};
struct InvalidInput : Error {
    using Error::Error;
};
struct InvalidSequence : Error {
    using Error::Error;
};
struct NonNilpotent : Error {
    using Error::Error;
};
struct SamplingExhausted : Error {
    using Error::Error;
};
struct DegenerateMetric : Error {
    using Error::Error;
};
struct SpecParseError : Error {
    using Error::Error;
};
struct IoFailure : Error {
    using Error::Error;
};

}  // namespace osswb
