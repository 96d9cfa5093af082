#ifndef DELTACODE_SEMIGROUP_HPP
#define DELTACODE_SEMIGROUP_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "deltacode/deltaseq.hpp"
#include "deltacode/genesis.hpp"
#include "deltacode/rational.hpp"

namespace deltacode {

struct LexPair {
  std::int64_t a = 0;
  std::int64_t b = 0;

  friend bool operator==(const LexPair&, const LexPair&) = default;
};

/// r + m * tau for the irrational tail tau of a real sequence.
struct QuadValue {
  Rational r{0};
  std::int64_t m = 0;
  QuadExt tau;

  QuadExt real() const { return QuadExt(r) + QuadExt(make_rational(m)) * tau; }
};

using SemiValue = std::variant<LexPair, Rational, QuadValue>;

/// -1, 0 or 1. Pairs only compare with pairs; rationals and quadratic values
/// compare by real value. Throws Error(order_mismatch) otherwise.
int compare(const SemiValue& u, const SemiValue& v);
bool operator==(const SemiValue& u, const SemiValue& v);
SemiValue add(const SemiValue& u, const SemiValue& v);
/// "(a,b)", "p/q", or "p/q + m*tau".
std::string to_string(const SemiValue& v);

enum class SeqKind { n, c, d, e };

/// Admissible exponent ranges: 0 marks an unbounded position.
struct Representation {
  std::vector<std::int64_t> exponents;
  std::vector<std::int64_t> bounds;
};

struct Member {
  SemiValue value;
  std::int64_t x = 0;  // head coordinate
  std::int64_t m = 0;  // multiplicity of the off-line or irrational generator
  std::vector<std::int64_t> exponents;
};

/// The value semigroup of a delta-sequence. Every element is x * u + m * t with
/// x in a telescopic integer semigroup H (the head), u the unit of the line
/// carrying the head and t the distinguished last generator (types C and D
/// only).
class Semigroup {
 public:
  explicit Semigroup(DeltaSequence seq);

  SeqKind kind() const { return kind_; }
  const DeltaSequence& sequence() const { return seq_; }
  const TelescopicBasis& head() const { return head_; }
  bool has_tail() const { return kind_ == SeqKind::c || kind_ == SeqKind::d; }
  std::size_t generator_count() const { return head_.size() + (has_tail() ? 1 : 0); }
  std::vector<SemiValue> generators() const;
  /// Exponent ranges of the unique representation.
  std::vector<std::int64_t> bounds() const;
  /// Denominator of head values (types D, E, N).
  std::int64_t scale() const { return scale_; }
  LexPair line_unit() const { return unit_; }
  LexPair tail_pair() const { return tail_pair_; }
  const QuadExt& tau() const { return tau_; }

  SemiValue zero() const;
  SemiValue value_of(std::int64_t x, std::int64_t m) const;
  /// Lattice coordinates (x, m), or nullopt when v is not of the form x u + m t
  /// with integer x and m.
  std::optional<std::pair<std::int64_t, std::int64_t>> coords(const SemiValue& v) const;
  int compare_coords(std::int64_t x1, std::int64_t m1, std::int64_t x2, std::int64_t m2) const;
  bool contains_coords(std::int64_t x, std::int64_t m) const;

  bool contains(const SemiValue& v) const;
  /// Throws Error(below_zero) for negative v and Error(not_a_member) when v is
  /// not in the semigroup. Type E sequences are extended as needed.
  Representation represent(const SemiValue& v) const;

  /// True when every generator not held yet exceeds `bound` (always true for
  /// finite sequences).
  bool covers(const SemiValue& bound) const;
  /// This semigroup, or for type E one built from a long enough prefix.
  Semigroup covering(const SemiValue& bound) const;

  /// Members <= bound in increasing order. Type E sequences are extended
  /// first, so members then carry coordinates of covering(bound).
  std::vector<Member> enumerate(const SemiValue& bound) const;
  /// A bound growing with `level` whose enumerations are prefixes of the order.
  SemiValue level_bound(std::int64_t level) const;

  SemiValue successor(const SemiValue& v) const;
  /// Ordered pairs of members summing to v.
  std::int64_t omega(const SemiValue& v) const;

 private:
  std::optional<std::int64_t> max_head(std::int64_t m, const SemiValue& bound) const;

  DeltaSequence seq_;
  SeqKind kind_ = SeqKind::n;
  TelescopicBasis head_;
  std::int64_t scale_ = 1;
  LexPair unit_;
  LexPair tail_pair_;
  QuadExt tau_;
};

/// Number of elements of a numerical semigroup below x (x itself excluded).
std::int64_t rank_below(std::int64_t x, const TelescopicBasis& basis);
/// Gap count of a numerical semigroup with gcd 1, by exhaustive marking up to
/// a bound past the conductor.
std::int64_t gap_count(const TelescopicBasis& basis);
/// (sum_{i>=1} (n_i - 1) h_i - h_0 + 1) / 2 for telescopic generators.
Rational telescopic_genus(const TelescopicBasis& basis);

}  // namespace deltacode

#endif  // DELTACODE_SEMIGROUP_HPP
