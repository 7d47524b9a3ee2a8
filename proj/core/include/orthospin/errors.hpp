#pragma once

#include <stdexcept>
#include <string>

namespace orthospin {

// Precondition violated by the caller (bad partition, bad θ, ...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Dense state space larger than the configured cap.
class CapExceeded : public std::length_error {
public:
    using std::length_error::length_error;
};

// Parameter region where no rigorous free energy is available.
class NotProven : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Spectral extraction could not separate candidate eigenvalues.
class Unresolved : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace orthospin
