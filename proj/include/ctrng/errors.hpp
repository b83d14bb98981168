#pragma once

#include <stdexcept>
#include <string>

namespace ctrng {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    virtual const char* kind() const noexcept { return "error"; }
};

/// Invalid or inconsistent configuration (bad value, misaligned grid, timing violation).
class ConfigError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "config"; }
};

/// A time or index lookup fell outside the covered range.
class RangeError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "range"; }
};

/// Numerical breakdown during integration. Carries the simulation time.
class NumericalError : public Error {
public:
    NumericalError(const std::string& what, double t_ns) : Error(what), t_ns_(t_ns) {}
    const char* kind() const noexcept override { return "numerical"; }
    double time_ns() const noexcept { return t_ns_; }

private:
    double t_ns_;
};

/// Malformed input data (parse failures, bad file contents).
class FormatError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "format"; }
};

}  // namespace ctrng
