#ifndef GSTAR_ERRORS_HPP
#define GSTAR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gstar {

enum class ErrorKind {
    InvalidParameter,
    MalformedInput,
    NotNilpotent,
    Capacity,
    IllegalSubstitution,
    MustBeHomogeneous,
    Syntax,
    Structural,
};

const char* to_string(ErrorKind kind) noexcept;

// Base of every error raised by the library. The kind drives CLI exit codes.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

class SyntaxError : public Error {
public:
    SyntaxError(const std::string& what, std::size_t position)
        : Error(ErrorKind::Syntax, what + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace gstar

#endif
