#ifndef DELTACODE_RUNNER_HPP
#define DELTACODE_RUNNER_HPP

#include <optional>
#include <string>
#include <string_view>

#include "deltacode/config.hpp"
#include "deltacode/genesis.hpp"
#include "deltacode/semigroup.hpp"

namespace deltacode {

enum class Subcommand { validate, construct, approximates, semigroup, table };

std::optional<Subcommand> parse_subcommand(std::string_view name);

/// The delta-sequence a config describes. Domain errors propagate.
DeltaSequence build_sequence(const DeltaConfig& delta);

/// "(a,b)", "p/q" or "p/q + m*tau" against the semigroup's kind.
SemiValue parse_semivalue(const Semigroup& sg, const std::string& text);

/// Output of a subcommand. Throws Error on domain failures; a failed
/// validation also throws, with the violated condition in the message.
std::string run_job(const JobConfig& cfg, Subcommand cmd);

}  // namespace deltacode

#endif  // DELTACODE_RUNNER_HPP
