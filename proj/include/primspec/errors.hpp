#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace primspec {

/// Malformed ring-spec text. `position` is the 0-based offset into the input.
class SpecSyntaxError : public std::runtime_error {
public:
    SpecSyntaxError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Well-formed input that names an invalid object (Zn(1), GF(6), non-monic modulus, ...).
class ValidationError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An element, ideal, or enumeration cap was exceeded.
class CapExceeded : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A closed-set family failed the topology axioms. Always an engine bug.
class AxiomViolation : public std::logic_error {
    using std::logic_error::logic_error;
};

/// A family of open sets that does not cover the requested subset.
class NotACover : public std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace primspec
