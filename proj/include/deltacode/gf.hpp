#ifndef DELTACODE_GF_HPP
#define DELTACODE_GF_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace deltacode {

/// GF(p^m) description. `modulus` holds the m+1 coefficients of a monic
/// polynomial over Z_p, lowest degree first; it is ignored when m == 1.
struct FieldSpec {
  std::uint32_t p = 2;
  std::uint32_t m = 1;
  std::vector<std::uint32_t> modulus;
  bool primitive = true;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// Coefficient vector of an element in powers of the generator class,
/// little-endian, each entry in [0, p).
struct FieldElement {
  std::vector<std::uint32_t> coeffs;

  friend bool operator==(const FieldElement&, const FieldElement&) = default;
};

/// Modulus used when a config names only p and m. x^5+x^2+1 for GF(2^5);
/// otherwise the lexicographically smallest primitive polynomial.
FieldSpec default_field_spec(std::uint32_t p, std::uint32_t m);

bool is_prime(std::uint64_t n);

/// Table-driven arithmetic on packed elements. An element is packed as the
/// integer sum c_i p^i of its coefficient vector, so the prime field GF(p)
/// is just {0..p-1}. Immutable after construction.
class Field {
 public:
  using Elem = std::uint32_t;

  explicit Field(FieldSpec spec);

  const FieldSpec& spec() const { return spec_; }
  std::uint32_t p() const { return spec_.p; }
  std::uint32_t m() const { return spec_.m; }
  std::uint32_t size() const { return q_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  /// The element xi whose powers enumerate the multiplicative group.
  Elem generator() const { return exp_[1]; }
  Elem generator_pow(std::int64_t k) const;
  /// Image of an integer under Z -> Z_p -> GF(p^m).
  Elem from_int(std::int64_t v) const;
  /// Discrete log base generator(); undefined for zero.
  std::uint32_t log(Elem a) const { return log_[a]; }

  bool contains(Elem a) const { return a < q_; }

  Elem add(Elem a, Elem b) const {
    if (!add_table_.empty()) return add_table_[std::size_t(a) * q_ + b];
    return add_slow(a, b);
  }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg_[b]); }
  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;

  FieldElement unpack(Elem a) const;
  /// Throws Error(field_mismatch) when the vector does not belong to this field.
  Elem pack(const FieldElement& e) const;

 private:
  Elem add_slow(Elem a, Elem b) const;

  FieldSpec spec_;
  std::uint32_t q_ = 0;
  std::vector<Elem> exp_;            // length 2(q-1)
  std::vector<std::uint32_t> log_;   // log_[0] unused
  std::vector<Elem> neg_;
  std::vector<Elem> add_table_;      // q*q, only for small fields
};

enum class ArithOp { add, sub, mul, inv, pow };

/// Checked arithmetic on coefficient vectors. `b` is ignored for inv and pow.
FieldElement field_arith(const Field& field, ArithOp op, const FieldElement& a,
                         const FieldElement& b = {}, std::uint64_t exponent = 0);

/// Dense row-major matrix of packed field elements.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Field::Elem> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}

  Field::Elem& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  Field::Elem at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
  std::span<const Field::Elem> row(std::size_t r) const {
    return {data.data() + r * cols, cols};
  }
  void append_row(std::span<const Field::Elem> values);
};

struct RankKernel {
  std::size_t rank = 0;
  /// Rows span { v : M v^T = 0 }.
  Matrix kernel;
};

RankKernel mat_rank_kernel(const Field& field, const Matrix& m);
std::size_t mat_rank(const Field& field, const Matrix& m);
/// Independent rows spanning the same space as `m`, in reduced echelon form.
Matrix row_basis(const Field& field, const Matrix& m);
Matrix mat_mul_transpose(const Field& field, const Matrix& a, const Matrix& b);
bool same_row_space(const Field& field, const Matrix& a, const Matrix& b);

}  // namespace deltacode

#endif  // DELTACODE_GF_HPP
