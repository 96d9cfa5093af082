#ifndef DELTACODE_APPROXIMANTS_HPP
#define DELTACODE_APPROXIMANTS_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "deltacode/gf.hpp"
#include "deltacode/semigroup.hpp"

namespace deltacode {

/// (x-exponent, y-exponent)
using Monomial = std::pair<std::uint32_t, std::uint32_t>;

/// Sparse polynomial in k[x, y]; zero coefficients are never stored.
struct BivarPoly {
  std::map<Monomial, Field::Elem> terms;

  static BivarPoly constant(Field::Elem c);
  static BivarPoly x();
  static BivarPoly y();
  bool is_zero() const { return terms.empty(); }
  std::uint32_t degree_y() const;

  friend bool operator==(const BivarPoly&, const BivarPoly&) = default;
};

BivarPoly poly_add(const Field& f, const BivarPoly& a, const BivarPoly& b);
BivarPoly poly_sub(const Field& f, const BivarPoly& a, const BivarPoly& b);
BivarPoly poly_mul(const Field& f, const BivarPoly& a, const BivarPoly& b);
BivarPoly poly_pow(const Field& f, const BivarPoly& a, std::uint64_t e);
Field::Elem poly_eval(const Field& f, const BivarPoly& p, Field::Elem px, Field::Elem py);
/// Terms by decreasing total degree, then y-degree. Coefficients print as
/// integers over prime fields and as powers g^k of the generator otherwise.
std::string render(const Field& f, const BivarPoly& p);

/// q_0 = x, q_1 = y and q_{i+1} = q_i^{n_i} - prod_j q_j^{a_ij}.
class ApproximateFamily {
 public:
  ApproximateFamily() = default;
  ApproximateFamily(std::vector<SemiValue> weights, std::vector<std::int64_t> n,
                    std::vector<std::vector<std::int64_t>> rows);

  std::size_t size() const { return weights_.size(); }
  const std::vector<SemiValue>& weights() const { return weights_; }
  /// n_i for i >= 1 (entry 0 unused).
  const std::vector<std::int64_t>& n() const { return n_; }
  /// rows[i] = (a_i0, ..., a_i,i-1) for 1 <= i < size()-1.
  const std::vector<std::vector<std::int64_t>>& rows() const { return rows_; }

  /// Values of q_0..q_{size-1} at a point.
  std::vector<Field::Elem> eval_all(const Field& f, Field::Elem px, Field::Elem py) const;
  /// Expanded q_i. Expansions are cached per field.
  BivarPoly expand(const Field& f, std::size_t i) const;

 private:
  std::vector<SemiValue> weights_;
  std::vector<std::int64_t> n_;
  std::vector<std::vector<std::int64_t>> rows_;

  struct Cache {
    std::mutex mu;
    FieldSpec spec;
    std::vector<BivarPoly> polys;
  };
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// Approximates for every generator of the semigroup, or the first `depth`.
/// Rows come from the unique representation of n_i delta_i in the prefix.
ApproximateFamily build_approximates(const Semigroup& sg, std::size_t depth = 0);

struct BasisElement {
  std::vector<std::int64_t> exponents;
  SemiValue weight;
};

/// One element per semigroup member <= alpha, by increasing weight. Throws
/// Error(extend_prefix) when the family is too short for the members needed.
std::vector<BasisElement> basis_for(const Semigroup& sg, const ApproximateFamily& fam, const SemiValue& alpha);
BivarPoly expand_basis(const Field& f, const ApproximateFamily& fam, const std::vector<std::int64_t>& exponents);

}  // namespace deltacode

#endif  // DELTACODE_APPROXIMANTS_HPP
