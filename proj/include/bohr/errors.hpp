#pragma once

#include <stdexcept>
#include <string>

namespace bohr {

/// An argument lies outside the documented domain (|z| >= 1, weight out of
/// range, Blaschke zero on or outside the unit circle, ...).
class domain_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A certified root solve could not establish a sign change on its bracket.
class convergence_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An evaluation was refused because the rigorous tail bound degenerates
/// (radius too close to 1 for the requested quantity).
class precision_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Unknown name or malformed request.
class usage_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A construction-time consistency check failed; indicates a bug, not bad input.
class internal_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace bohr
