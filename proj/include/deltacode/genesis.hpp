#ifndef DELTACODE_GENESIS_HPP
#define DELTACODE_GENESIS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "deltacode/deltaseq.hpp"
#include "deltacode/rational.hpp"

namespace deltacode {

struct Convergent {
  BigInt h;
  BigInt k;
};

/// Convergents h_n/k_n of <a_1; a_2, ...>.
std::vector<Convergent> convergents(std::span<const std::int64_t> digits);

/// Exact fold a_1 + 1/(a_2 + 1/(... + 1/tail)). Without a tail the last digit
/// closes the expansion.
QuadExt cf_eval(std::span<const std::int64_t> digits, const std::optional<QuadExt>& tail = std::nullopt);

/// First `count` continued-fraction digits of a positive quadratic number
/// (fewer if the expansion terminates).
std::vector<std::int64_t> cf_digits(const QuadExt& value, std::size_t count);

struct ExtendChoice {
  std::int64_t z = 0;
  std::int64_t next = 0;  // the appended element
};

/// Appends one element: {z d_0, ..., z d_g, next}. Without a choice, the
/// smallest z >= 2 admitting a member `next` of the semigroup with
/// next < z^2 d_g and gcd(z, next) = 1 is used (smallest such `next`).
DeltaN extend_n(const DeltaN& seq, const std::optional<ExtendChoice>& choice = std::nullopt);

/// Default increasing rule: smallest z >= 2 coprime to d_g, next = (z+1) d_g.
ExtendChoice increasing_choice(const DeltaN& seq);

using IntPair = std::pair<std::int64_t, std::int64_t>;

struct TypeCWitness {
  DeltaN dstar;
  std::vector<std::int64_t> digits;  // a_1..a_t
  IntPair ab;                        // (A, B) = y_{t-2}
  IntPair ab_prev;                   // (A', B') = y_{t-3}
  std::vector<IntPair> y;            // y_{-1}..y_{t-1}
};

class DeltaZ2 {
 public:
  const std::vector<IntPair>& values() const { return values_; }
  const TypeCWitness& witness() const { return witness_; }
  std::size_t genus() const { return values_.size() - 1; }

  friend bool operator==(const DeltaZ2& a, const DeltaZ2& b) { return a.values_ == b.values_; }

 private:
  friend DeltaZ2 build_type_c(const DeltaN&);
  std::vector<IntPair> values_;
  TypeCWitness witness_;
};

/// Throws Error(inconsistent_witness) when a division is not exact and
/// Error(unsupported) for the shapes the construction does not cover.
DeltaZ2 build_type_c(const DeltaN& dstar);

struct TypeDWitness {
  DeltaN dstar;
  std::vector<std::int64_t> digits;
  QuadExt b;
  QuadExt a;  // the fold of <digits, b>
};

class DeltaR {
 public:
  const std::vector<Rational>& head() const { return head_; }
  const QuadExt& tail() const { return tail_; }
  const TypeDWitness& witness() const { return witness_; }
  std::size_t genus() const { return head_.size(); }

  friend bool operator==(const DeltaR& a, const DeltaR& b) {
    return a.head_ == b.head_ && a.tail_ == b.tail_;
  }

 private:
  friend DeltaR build_type_d(const DeltaN&, std::span<const std::int64_t>, const QuadExt&);
  std::vector<Rational> head_;
  QuadExt tail_;
  TypeDWitness witness_;
};

DeltaR build_type_d(const DeltaN& dstar, std::span<const std::int64_t> digits, const QuadExt& b);

/// Increasing delta-sequence in Q, held as the chain of integer sequences
/// that produced its prefixes.
class DeltaQ {
 public:
  const std::vector<DeltaN>& prefixes() const { return prefixes_; }
  const DeltaN& last() const { return prefixes_.back(); }
  const std::vector<ExtendChoice>& choices() const { return choices_; }
  /// Normalized values of the longest prefix.
  std::vector<Rational> normalized() const { return normalize(last()); }
  /// A copy with `steps` more elements appended by the default rule.
  DeltaQ extended(std::size_t steps) const;
  /// A copy extended until the last normalized element is >= bound.
  DeltaQ covering(const Rational& bound) const;

  friend bool operator==(const DeltaQ& a, const DeltaQ& b) { return a.last() == b.last(); }

 private:
  friend DeltaQ build_type_e(const DeltaN&, std::size_t, std::span<const ExtendChoice>);
  std::vector<DeltaN> prefixes_;
  std::vector<ExtendChoice> choices_;
};

/// Applies the given choices first, then default steps up to `steps` in total.
/// Throws Error(not_a_delta_sequence) when a choice breaks monotonicity.
DeltaQ build_type_e(const DeltaN& start, std::size_t steps, std::span<const ExtendChoice> choices = {});

using DeltaSequence = std::variant<DeltaN, DeltaZ2, DeltaR, DeltaQ>;

/// Rebuilds the sequence from its stored witness.
DeltaSequence rebuild(const DeltaSequence& seq);

}  // namespace deltacode

#endif  // DELTACODE_GENESIS_HPP
