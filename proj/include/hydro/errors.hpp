#pragma once

#include <stdexcept>
#include <string>

namespace hydro {

/// Base of every error the library throws.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class ArithmeticError : public Error {
    using Error::Error;
};
class DimensionMismatch : public Error {
    using Error::Error;
};
class ParseError : public Error {
    using Error::Error;
};
class IdenticallySingular : public Error {
    using Error::Error;
};
class FirstMetricNotConstant : public Error {
    using Error::Error;
};
/// The two independent two-metric criteria disagreed; always an implementation defect.
class DisagreementBug : public Error {
    using Error::Error;
};
class DegenerateEverywhere : public Error {
    using Error::Error;
};
class UnsupportedEigenvalueField : public Error {
    using Error::Error;
};
class ScalingNotNormalized : public Error {
    using Error::Error;
};
class NonSquareGamma : public Error {
    using Error::Error;
};
class OutOfRange : public Error {
    using Error::Error;
};

} // namespace hydro
