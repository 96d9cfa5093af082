#ifndef DELTACODE_ERROR_HPP
#define DELTACODE_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace deltacode {

/// Machine-readable error categories. Every exception thrown by the library
/// carries one of these next to its human-readable message.
enum class Errc {
  invalid_argument,
  division_by_zero,
  field_mismatch,
  not_a_delta_sequence,
  inconsistent_witness,
  order_mismatch,
  not_a_member,
  below_zero,
  extend_prefix,
  rank_ceiling,
  dual_code_zero,
  zero_code,
  unsupported,
  overflow,
  parse_error,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Config parse failure, addressed by 1-based line (0 when not line-specific).
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error(Errc::parse_error, message), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace deltacode

#endif  // DELTACODE_ERROR_HPP
