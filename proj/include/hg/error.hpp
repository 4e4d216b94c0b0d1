#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hg {

/// Base class for all library failures.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid caller input: bad labels, mismatched vertex sets, violated preconditions.
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// Text that does not match a grammar. `position` is a byte offset into the input.
class ParseError : public InvalidInput {
public:
    ParseError(const std::string& what, std::size_t position)
        : InvalidInput(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Request exceeds an enumeration bound.
class BoundError : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

}  // namespace hg
