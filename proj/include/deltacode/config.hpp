#ifndef DELTACODE_CONFIG_HPP
#define DELTACODE_CONFIG_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "deltacode/codes.hpp"
#include "deltacode/genesis.hpp"
#include "deltacode/gf.hpp"

namespace deltacode {

struct DeltaConfig {
  char type = 'N';  // N, C, D or E
  std::vector<std::int64_t> sequence;
  std::vector<std::int64_t> digits;  // type D
  std::int64_t radicand = 0;         // type D: b = sqrt(radicand)
  std::size_t steps = 0;             // type E
  std::vector<ExtendChoice> choices; // type E
};

struct JobOptions {
  ScanMode mode = ScanMode::jumps;
  std::size_t depth = 0;  // approximates to print, 0 = all
  std::optional<std::string> bound;
  bool distance = true;
  bool literal_dev = false;
  std::size_t min_k = 0;
};

struct JobConfig {
  FieldSpec field;
  DeltaConfig delta;
  std::vector<Point> points;
  JobOptions job;
};

/// Strict parser for the sectioned format:
///
///   [field]   p = 7, m = 1, optional modulus = c_0 c_1 ... c_m, primitive
///   [delta]   type = N|C|D|E, sequence = ..., digits, sqrt, steps,
///             choices = z:next z:next ...
///   [points]  one "a b" pair per line; coordinates are integers for prime
///             fields or 0, 1, g, g^k
///   [job]     mode = jumps|full, depth, bound, distance, literal_dev, min_k
///
/// '#' starts a comment. Throws ParseError with the offending line.
JobConfig parse_config(const std::string& text);

/// Parses a coordinate token against a field.
Field::Elem parse_coordinate(const Field& f, const std::string& token);

}  // namespace deltacode

#endif  // DELTACODE_CONFIG_HPP
