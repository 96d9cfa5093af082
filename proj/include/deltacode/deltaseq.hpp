#ifndef DELTACODE_DELTASEQ_HPP
#define DELTACODE_DELTASEQ_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "deltacode/rational.hpp"

namespace deltacode {

/// Numerical semigroup generated by a telescopic integer sequence h_0..h_k
/// (each n_i h_i lies in <h_0..h_{i-1}>, n_i = D_i / D_{i+1} with D_i the gcd
/// of the first i generators). The gcd of all generators may exceed one.
///
/// Membership and the unique representation x = sum c_i h_i with c_0 >= 0 and
/// 0 <= c_i < n_i are found by peeling residues from the last generator down,
/// which is exact and linear in k.
class TelescopicBasis {
 public:
  TelescopicBasis() = default;
  explicit TelescopicBasis(std::vector<std::int64_t> gens);

  const std::vector<std::int64_t>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  /// n_i for i >= 1; n_0 is reported as 0 (unbounded).
  const std::vector<std::int64_t>& bounds() const { return n_; }
  std::int64_t gcd() const { return gens_.empty() ? 0 : d_.back(); }

  std::optional<std::vector<std::int64_t>> represent(std::int64_t x) const;
  bool contains(std::int64_t x) const;

 private:
  std::vector<std::int64_t> gens_;
  std::vector<std::int64_t> d_;    // d_[i] = gcd(h_0..h_i)
  std::vector<std::int64_t> n_;
  std::vector<std::int64_t> inv_;  // inverse of h_i / d_[i] modulo n_i
};

/// Membership in the semigroup spanned by arbitrary positive generators, by
/// dynamic programming. Intended for small arguments.
bool in_semigroup(std::int64_t x, std::span<const std::int64_t> gens);

/// Continued fraction of num/den (both positive) with last digit >= 2 unless
/// the expansion is a single digit.
std::vector<std::int64_t> continued_fraction(std::int64_t num, std::int64_t den);

enum class AmCondition { gcd_chain = 1, semigroup_membership = 2, descent = 3 };

struct Violation {
  AmCondition condition;
  std::size_t index;  // offending position in the sequence
  std::string message;
};

/// Which Newton-pair formulas apply: whether delta_0 - delta_1 divides delta_0.
enum class NewtonBranch { nondividing, dividing };

struct NewtonPair {
  std::int64_t e = 0;
  std::int64_t m = 0;

  friend bool operator==(const NewtonPair&, const NewtonPair&) = default;
};

struct DeltaStructure {
  std::vector<std::int64_t> d;  // d_1..d_{g+1}
  std::vector<std::int64_t> n;  // n_1..n_g
  std::vector<NewtonPair> newton;
  std::vector<std::int64_t> cf;  // expansion of m/e of the last Newton pair
  NewtonBranch branch = NewtonBranch::nondividing;
};

/// A validated delta-sequence in N_{>0}.
class DeltaN {
 public:
  const std::vector<std::int64_t>& values() const { return values_; }
  const DeltaStructure& structure() const { return structure_; }
  /// Index of the last element.
  std::size_t genus() const { return values_.size() - 1; }
  std::int64_t operator[](std::size_t i) const { return values_[i]; }

  friend bool operator==(const DeltaN& a, const DeltaN& b) { return a.values_ == b.values_; }

 private:
  friend std::variant<DeltaN, Violation> validate_n(std::span<const std::int64_t>);
  std::vector<std::int64_t> values_;
  DeltaStructure structure_;
};

using ValidationResult = std::variant<DeltaN, Violation>;

/// Checks the Abhyankar-Moh conditions in order (1), (2), (3) and reports the
/// first failure. Throws Error(invalid_argument) on an empty list or a
/// non-positive entry.
ValidationResult validate_n(std::span<const std::int64_t> seq);
/// validate_n that throws Error(not_a_delta_sequence) naming the condition.
DeltaN make_delta_n(std::span<const std::int64_t> seq);
std::string describe(const Violation& v);

/// gcd chain, n_i, Newton pairs and the continued fraction of the final
/// quotient m/e. Precondition: `seq` satisfies the Abhyankar-Moh conditions.
DeltaStructure structure_of(std::span<const std::int64_t> seq);

std::vector<Rational> normalize(const DeltaN& seq);
/// Inverse of normalize: clear denominators with their lcm and revalidate.
DeltaN denormalize(std::span<const Rational> normalized);

}  // namespace deltacode

#endif  // DELTACODE_DELTASEQ_HPP
