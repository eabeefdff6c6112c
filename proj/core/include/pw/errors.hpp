#ifndef PW_ERRORS_HPP
#define PW_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pw {

/// Base class for errors caused by bad input (exit code 3 in the CLI).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionError : public InputError {
public:
    using InputError::InputError;
};

class SingularMatrixError : public InputError {
public:
    using InputError::InputError;
};

class PreconditionError : public InputError {
public:
    using InputError::InputError;
};

class RangeError : public InputError {
public:
    using InputError::InputError;
};

class EmptyPolynomialError : public InputError {
public:
    using InputError::InputError;
};

class NotAdmissibleError : public InputError {
public:
    using InputError::InputError;
};

class CommutativityError : public InputError {
public:
    using InputError::InputError;
};

class ArityError : public InputError {
public:
    using InputError::InputError;
};

class MultilinearityError : public InputError {
public:
    using InputError::InputError;
};

/// Syntax error in textual or JSON input; `position` is a 0-based offset
/// into the text, or npos when not applicable.
class ParseError : public InputError {
public:
    ParseError(const std::string& what, std::size_t position = std::string::npos)
        : InputError(position == std::string::npos
                         ? what
                         : what + " (at offset " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// A state the construction proves impossible was reached. Always a bug.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace pw

#endif  // PW_ERRORS_HPP
