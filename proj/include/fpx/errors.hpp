#ifndef FPX_ERRORS_HPP
#define FPX_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fpx {

// Thrown when a requested object would exceed the desk-scale size cap
// (interval enumerations, p^n matrices and the like).
class capacity_error : public std::length_error {
  public:
    using std::length_error::length_error;
};

// Thrown when an internal consistency check fails. Seeing this exception
// always means an implementation bug, never bad user input.
class invariant_violation : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

// Syntax error in a polynomial expression, with the byte offset of the
// offending token.
class parse_error : public std::runtime_error {
  public:
    parse_error(const std::string& message, std::size_t position)
        : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

  private:
    std::size_t position_;
};

} // namespace fpx

#endif // FPX_ERRORS_HPP
