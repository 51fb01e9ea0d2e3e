#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace scg {

/// Base class for all library errors.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A caller-supplied parameter is out of range or ill-shaped.
class invalid_parameter : public error {
public:
    using error::error;
};

/// A constructed object violates one of its axioms; the message names the
/// failed axiom and a witness.
class validation_error : public error {
public:
    using error::error;
};

/// A stated precondition of an operation does not hold for the given inputs.
class precondition_error : public error {
public:
    using error::error;
};

/// An enumeration exceeded its configured cap. `partial_count` is how many
/// elements were produced before giving up.
class capacity_error : public error {
public:
    capacity_error(const std::string& what, std::size_t partial)
        : error(what), partial_count(partial) {}
    std::size_t partial_count;
};

/// Parse failure for an input file; message carries the position.
class parse_error : public error {
public:
    using error::error;
};

} // namespace scg
