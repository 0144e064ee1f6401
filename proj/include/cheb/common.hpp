#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace cheb {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Error taxonomy shared by the library and the CLI exit codes.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct CapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct RamifiedPrimeError : ValidationError {
    using ValidationError::ValidationError;
};
struct FitError : ValidationError {
    using ValidationError::ValidationError;
};
struct ConstructionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string to_string(const Rational& q);
// "3", "-1/3", "0.2784", "1e-3"
Rational parse_rational(const std::string& s);
double to_double(const Rational& q);

// Locale-independent shortest round-trip formatting.
std::string fmt_double(double x);
std::string fmt_double(double x, int digits);

}  // namespace cheb
