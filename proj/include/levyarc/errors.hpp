#pragma once

#include <stdexcept>
#include <string>

namespace levyarc {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    virtual const char* kind() const noexcept { return "Error"; }
};

class MalformedMeasure : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "MalformedMeasure"; }
};

// Input outside the domain of an operation (e.g. arcsine1 on a measure without
// a finite first truncated moment).
class DomainError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "DomainError"; }
};

// Output of an operation fails the Levy condition.
class RangeError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "RangeError"; }
};

// Recovered tail is not monotone: the input is not the image of any measure.
class NotInRange : public Error {
public:
    NotInRange(const std::string& what, double location)
        : Error(what), location_(location) {}
    const char* kind() const noexcept override { return "NotInRange"; }
    double location() const noexcept { return location_; }

private:
    double location_;
};

class QuadratureNonConvergence : public Error {
public:
    QuadratureNonConvergence(const std::string& what, double partial, double bound)
        : Error(what), partial_(partial), bound_(bound) {}
    const char* kind() const noexcept override { return "QuadratureNonConvergence"; }
    double partial_value() const noexcept { return partial_; }
    double error_bound() const noexcept { return bound_; }

private:
    double partial_;
    double bound_;
};

class ConfigError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "ConfigError"; }
};

class GridMismatch : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "GridMismatch"; }
};

}  // namespace levyarc
