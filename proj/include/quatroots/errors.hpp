#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace quatroots {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ZeroDivision : public Error {
public:
    using Error::Error;
};

/// Polynomial division by the zero polynomial.
class ZeroDivisor : public Error {
public:
    using Error::Error;
};

/// The simultaneous root iteration hit its cap before every root met the
/// residual bound. Carries the best-effort roots and their residuals.
class NoConvergence : public Error {
public:
    NoConvergence(const std::string& what, std::vector<std::complex<double>> roots,
                  std::vector<double> residuals)
        : Error(what), roots_(std::move(roots)), residuals_(std::move(residuals)) {}

    const std::vector<std::complex<double>>& roots() const noexcept { return roots_; }
    const std::vector<double>& residuals() const noexcept { return residuals_; }

private:
    std::vector<std::complex<double>> roots_;
    std::vector<double> residuals_;
};

class UnpairedRoot : public Error {
public:
    using Error::Error;
};

class DegreeZero : public Error {
public:
    using Error::Error;
};

class NonRealDiscriminant : public Error {
public:
    using Error::Error;
};

class NonRealCompanion : public Error {
public:
    using Error::Error;
};

class BothDenominatorsZero : public Error {
public:
    using Error::Error;
};

class InexactDivision : public Error {
public:
    using Error::Error;
};

class NotComplexCoefficients : public Error {
public:
    using Error::Error;
};

/// Malformed problem input. `line` is 0 when the position is unknown.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line = 0, std::string field = {})
        : Error(what), line_(line), field_(std::move(field)) {}

    std::size_t line() const noexcept { return line_; }
    const std::string& field() const noexcept { return field_; }

private:
    std::size_t line_;
    std::string field_;
};

}  // namespace quatroots
