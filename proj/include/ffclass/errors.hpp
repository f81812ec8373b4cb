#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ffclass {

/// Violated mathematical precondition (bad modulus, wrong discriminant, ...).
class math_error : public std::runtime_error {
  public:
    explicit math_error(const std::string& what) : std::runtime_error(what) {}
};

/// Text-input syntax error; carries the 0-based offset of the offending character.
class parse_error : public std::runtime_error {
  public:
    parse_error(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

  private:
    std::size_t position_;
};

} // namespace ffclass
