#pragma once

#include <stdexcept>
#include <string>

namespace wrapxg {

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Malformed or unusable input data (files, samples).
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Optimizer or aggregation could not produce a usable number.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace wrapxg
