#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fltl {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed text input. `position` is a byte offset for formulas and words,
/// a 1-based line number for machine files.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at " + std::to_string(position)), position_(position)
    {
    }

    [[nodiscard]] std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// A letter is used that the relevant alphabet does not declare.
class AlphabetError : public Error {
public:
    using Error::Error;
};

class MachineError : public Error {
public:
    using Error::Error;
};

} // namespace fltl
