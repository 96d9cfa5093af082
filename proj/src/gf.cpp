#include "deltacode/gf.hpp"

#include <algorithm>
#include <string>

#include "deltacode/error.hpp"

namespace deltacode {
namespace {

constexpr std::uint32_t kMaxFieldSize = 1u << 20;

using Poly = std::vector<std::uint32_t>;  // low degree first, over Z_p

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of f modulo monic g.
Poly poly_mod(Poly f, const Poly& g, std::uint32_t p) {
  trim(f);
  const std::size_t dg = g.size() - 1;
  while (f.size() > dg) {
    std::uint32_t lead = f.back();
    std::size_t shift = f.size() - 1 - dg;
    for (std::size_t i = 0; i <= dg; ++i) {
      f[shift + i] = static_cast<std::uint32_t>((f[shift + i] + std::uint64_t(p - lead) * g[i]) % p);
    }
    trim(f);
  }
  return f;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& g, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t(a[i]) * b[j]) % p);
    }
  }
  return poly_mod(std::move(r), g, p);
}

Poly digits_of(std::uint32_t packed, std::uint32_t p, std::uint32_t m) {
  Poly f(m, 0);
  for (std::uint32_t i = 0; i < m; ++i) {
    f[i] = packed % p;
    packed /= p;
  }
  trim(f);
  return f;
}

std::uint32_t pack_digits(const Poly& f, std::uint32_t p) {
  std::uint32_t v = 0;
  for (std::size_t i = f.size(); i-- > 0;) v = v * p + f[i];
  return v;
}

std::uint32_t ipow(std::uint32_t p, std::uint32_t m) {
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    q *= p;
    if (q > kMaxFieldSize) {
      throw Error(Errc::unsupported, "field of size " + std::to_string(p) + "^" +
                                         std::to_string(m) + " is too large");
    }
  }
  return static_cast<std::uint32_t>(q);
}

bool is_irreducible(const Poly& f, std::uint32_t p) {
  const std::uint32_t m = static_cast<std::uint32_t>(f.size() - 1);
  for (std::uint32_t k = 1; 2 * k <= m; ++k) {
    const std::uint32_t count = ipow(p, k);
    for (std::uint32_t low = 0; low < count; ++low) {
      Poly g = digits_of(low, p, k);
      g.resize(k + 1, 0);
      g[k] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

// Multiplicative order of the class of `g` (packed), or 0 when g is zero.
std::uint32_t order_of(std::uint32_t g, const FieldSpec& spec, std::uint32_t q) {
  if (g == 0) return 0;
  std::uint32_t e = 1;
  for (std::uint32_t k = 1; k < q; ++k) {
    if (spec.m == 1) {
      e = static_cast<std::uint32_t>(std::uint64_t(e) * g % spec.p);
    } else {
      e = pack_digits(poly_mulmod(digits_of(e, spec.p, spec.m), digits_of(g, spec.p, spec.m),
                                  spec.modulus, spec.p),
                      spec.p);
    }
    if (e == 1) return k;
  }
  return 0;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) return false;
  }
  return true;
}

FieldSpec default_field_spec(std::uint32_t p, std::uint32_t m) {
  if (!is_prime(p)) throw Error(Errc::invalid_argument, "characteristic " + std::to_string(p) + " is not prime");
  if (m == 0) throw Error(Errc::invalid_argument, "extension degree must be >= 1");
  FieldSpec spec{p, m, {}, true};
  if (m == 1) return spec;
  if (p == 2 && m == 5) {
    spec.modulus = {1, 0, 1, 0, 0, 1};
    return spec;
  }
  const std::uint32_t q = ipow(p, m);
  for (std::uint32_t low = 0; low < q; ++low) {
    Poly f = digits_of(low, p, m);
    f.resize(m + 1, 0);
    f[m] = 1;
    if (f[0] == 0 || !is_irreducible(f, p)) continue;
    spec.modulus = f;
    if (order_of(p, spec, q) == q - 1) return spec;
  }
  throw Error(Errc::unsupported, "no primitive polynomial found");
}

Field::Field(FieldSpec spec) : spec_(std::move(spec)) {
  if (!is_prime(spec_.p)) {
    throw Error(Errc::invalid_argument, "characteristic " + std::to_string(spec_.p) + " is not prime");
  }
  if (spec_.m == 0) throw Error(Errc::invalid_argument, "extension degree must be >= 1");
  q_ = ipow(spec_.p, spec_.m);

  if (spec_.m > 1) {
    const Poly& f = spec_.modulus;
    if (f.size() != spec_.m + 1 || f.back() != 1) {
      throw Error(Errc::invalid_argument, "modulus must be monic of degree " + std::to_string(spec_.m));
    }
    for (auto c : f) {
      if (c >= spec_.p) throw Error(Errc::invalid_argument, "modulus coefficient out of range");
    }
    if (!is_irreducible(f, spec_.p)) {
      throw Error(Errc::invalid_argument, "modulus is reducible over Z_" + std::to_string(spec_.p));
    }
  } else {
    spec_.modulus.clear();
  }

  std::uint32_t gen = 0;
  if (spec_.m > 1 && spec_.primitive) {
    gen = spec_.p;  // the class of x
    if (order_of(gen, spec_, q_) != q_ - 1) {
      throw Error(Errc::invalid_argument, "modulus is not primitive: x does not generate the multiplicative group");
    }
  } else {
    for (std::uint32_t c = 1; c < q_; ++c) {
      if (order_of(c, spec_, q_) == q_ - 1 || q_ == 2) {
        gen = c;
        break;
      }
    }
  }

  exp_.assign(2 * std::size_t(q_ - 1), 0);
  log_.assign(q_, 0);
  std::uint32_t e = 1;
  for (std::uint32_t k = 0; k < q_ - 1; ++k) {
    exp_[k] = e;
    log_[e] = k;
    if (spec_.m == 1) {
      e = static_cast<std::uint32_t>(std::uint64_t(e) * gen % spec_.p);
    } else {
      e = pack_digits(poly_mulmod(digits_of(e, spec_.p, spec_.m), digits_of(gen, spec_.p, spec_.m),
                                  spec_.modulus, spec_.p),
                      spec_.p);
    }
  }
  for (std::uint32_t k = q_ - 1; k < exp_.size(); ++k) exp_[k] = exp_[k - (q_ - 1)];

  neg_.assign(q_, 0);
  for (std::uint32_t a = 0; a < q_; ++a) {
    std::uint32_t r = 0, scale = 1, v = a;
    for (std::uint32_t i = 0; i < spec_.m; ++i) {
      std::uint32_t c = v % spec_.p;
      v /= spec_.p;
      r += ((spec_.p - c) % spec_.p) * scale;
      scale *= spec_.p;
    }
    neg_[a] = r;
  }
  if (q_ <= 1024) {
    add_table_.resize(std::size_t(q_) * q_);
    for (std::uint32_t a = 0; a < q_; ++a) {
      for (std::uint32_t b = 0; b < q_; ++b) add_table_[std::size_t(a) * q_ + b] = add_slow(a, b);
    }
  }
}

Field::Elem Field::add_slow(Elem a, Elem b) const {
  if (spec_.p == 2) return a ^ b;
  Elem r = 0, scale = 1;
  for (std::uint32_t i = 0; i < spec_.m; ++i) {
    std::uint32_t c = (a % spec_.p + b % spec_.p) % spec_.p;
    a /= spec_.p;
    b /= spec_.p;
    r += c * scale;
    scale *= spec_.p;
  }
  return r;
}

Field::Elem Field::generator_pow(std::int64_t k) const {
  const std::int64_t order = q_ - 1;
  std::int64_t r = k % order;
  if (r < 0) r += order;
  return exp_[static_cast<std::size_t>(r)];
}

Field::Elem Field::from_int(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(spec_.p);
  if (r < 0) r += spec_.p;
  return static_cast<Elem>(r);
}

Field::Elem Field::inv(Elem a) const {
  if (a == 0) throw Error(Errc::division_by_zero, "division by zero");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

Field::Elem Field::pow(Elem a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  return exp_[static_cast<std::size_t>((std::uint64_t(log_[a]) * (e % (q_ - 1))) % (q_ - 1))];
}

FieldElement Field::unpack(Elem a) const {
  FieldElement r;
  r.coeffs.resize(spec_.m);
  for (std::uint32_t i = 0; i < spec_.m; ++i) {
    r.coeffs[i] = a % spec_.p;
    a /= spec_.p;
  }
  return r;
}

Field::Elem Field::pack(const FieldElement& e) const {
  if (e.coeffs.size() != spec_.m) throw Error(Errc::field_mismatch, "field mismatch");
  Elem v = 0;
  for (std::size_t i = e.coeffs.size(); i-- > 0;) {
    if (e.coeffs[i] >= spec_.p) throw Error(Errc::field_mismatch, "field mismatch");
    v = v * spec_.p + e.coeffs[i];
  }
  return v;
}

FieldElement field_arith(const Field& field, ArithOp op, const FieldElement& a,
                         const FieldElement& b, std::uint64_t exponent) {
  const auto x = field.pack(a);
  switch (op) {
    case ArithOp::add: return field.unpack(field.add(x, field.pack(b)));
    case ArithOp::sub: return field.unpack(field.sub(x, field.pack(b)));
    case ArithOp::mul: return field.unpack(field.mul(x, field.pack(b)));
    case ArithOp::inv: return field.unpack(field.inv(x));
    case ArithOp::pow: return field.unpack(field.pow(x, exponent));
  }
  throw Error(Errc::invalid_argument, "unknown field operation");
}

void Matrix::append_row(std::span<const Field::Elem> values) {
  if (rows == 0 && cols == 0) cols = values.size();
  if (values.size() != cols) throw Error(Errc::invalid_argument, "row length mismatch");
  data.insert(data.end(), values.begin(), values.end());
  ++rows;
}

namespace {

// In-place reduced row echelon form; returns the pivot column of each
// nonzero row, in order.
std::vector<std::size_t> rref(const Field& f, Matrix& a) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols && r < a.rows; ++c) {
    std::size_t sel = r;
    while (sel < a.rows && a.at(sel, c) == 0) ++sel;
    if (sel == a.rows) continue;
    if (sel != r) {
      for (std::size_t j = 0; j < a.cols; ++j) std::swap(a.at(sel, j), a.at(r, j));
    }
    const auto inv = f.inv(a.at(r, c));
    for (std::size_t j = 0; j < a.cols; ++j) a.at(r, j) = f.mul(a.at(r, j), inv);
    for (std::size_t i = 0; i < a.rows; ++i) {
      if (i == r || a.at(i, c) == 0) continue;
      const auto factor = a.at(i, c);
      for (std::size_t j = 0; j < a.cols; ++j) {
        a.at(i, j) = f.sub(a.at(i, j), f.mul(factor, a.at(r, j)));
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

void check_shape(const Matrix& m) {
  if (m.data.size() != m.rows * m.cols) throw Error(Errc::invalid_argument, "malformed matrix");
}

}  // namespace

RankKernel mat_rank_kernel(const Field& field, const Matrix& m) {
  check_shape(m);
  Matrix a = m;
  auto pivots = rref(field, a);
  RankKernel out;
  out.rank = pivots.size();
  std::vector<bool> is_pivot(m.cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  out.kernel = Matrix(0, m.cols);
  for (std::size_t free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Field::Elem> v(m.cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = field.neg(a.at(i, free));
    out.kernel.append_row(v);
  }
  return out;
}

std::size_t mat_rank(const Field& field, const Matrix& m) {
  check_shape(m);
  Matrix a = m;
  return rref(field, a).size();
}

Matrix row_basis(const Field& field, const Matrix& m) {
  check_shape(m);
  Matrix a = m;
  auto pivots = rref(field, a);
  Matrix out(0, m.cols);
  for (std::size_t i = 0; i < pivots.size(); ++i) out.append_row(a.row(i));
  return out;
}

Matrix mat_mul_transpose(const Field& field, const Matrix& a, const Matrix& b) {
  if (a.cols != b.cols) throw Error(Errc::invalid_argument, "dimension mismatch");
  Matrix r(a.rows, b.rows);
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (std::size_t j = 0; j < b.rows; ++j) {
      Field::Elem s = 0;
      for (std::size_t k = 0; k < a.cols; ++k) s = field.add(s, field.mul(a.at(i, k), b.at(j, k)));
      r.at(i, j) = s;
    }
  }
  return r;
}

bool same_row_space(const Field& field, const Matrix& a, const Matrix& b) {
  if (a.cols != b.cols) return false;
  const auto ra = mat_rank(field, a);
  if (ra != mat_rank(field, b)) return false;
  Matrix both = a;
  both.data.insert(both.data.end(), b.data.begin(), b.data.end());
  both.rows += b.rows;
  return mat_rank(field, both) == ra;
}

}  // namespace deltacode
