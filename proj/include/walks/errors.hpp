#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace walks {

/// Malformed user input: bad type letters, unknown walk tokens, invalid paths.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A token that is not part of the step alphabet, located by byte offset.
class ParseError : public InputError {
public:
    ParseError(const std::string& what, std::size_t offset) : InputError(what), offset_(offset) {}
    [[nodiscard]] std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// An enumeration or memo table would exceed its configured ceiling.
class GuardExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace walks
