#include "deltacode/rational.hpp"

#include <cmath>
#include <limits>

#include "deltacode/error.hpp"

namespace deltacode {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_argument: return "invalid_argument";
    case Errc::division_by_zero: return "division_by_zero";
    case Errc::field_mismatch: return "field_mismatch";
    case Errc::not_a_delta_sequence: return "not_a_delta_sequence";
    case Errc::inconsistent_witness: return "inconsistent_witness";
    case Errc::order_mismatch: return "order_mismatch";
    case Errc::not_a_member: return "not_a_member";
    case Errc::below_zero: return "below_zero";
    case Errc::extend_prefix: return "extend_prefix";
    case Errc::rank_ceiling: return "rank_ceiling";
    case Errc::dual_code_zero: return "dual_code_zero";
    case Errc::zero_code: return "zero_code";
    case Errc::unsupported: return "unsupported";
    case Errc::overflow: return "overflow";
    case Errc::parse_error: return "parse_error";
  }
  return "unknown";
}

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(Errc::division_by_zero, "division by zero");
  Rational r(BigInt(std::to_string(num)), BigInt(std::to_string(den)));
  r.canonicalize();
  return r;
}

std::string to_string(const BigInt& v) { return v.get_str(); }

std::string to_string(const Rational& v) {
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  auto parse_int = [&](const std::string& s) {
    if (s.empty()) throw Error(Errc::parse_error, "malformed number '" + text + "'");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) throw Error(Errc::parse_error, "malformed number '" + text + "'");
    for (std::size_t i = start; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') {
        throw Error(Errc::parse_error, "malformed number '" + text + "'");
      }
    }
    return BigInt(s[0] == '+' ? s.substr(1) : s);
  };
  if (slash == std::string::npos) return Rational(parse_int(text));
  BigInt num = parse_int(text.substr(0, slash));
  BigInt den = parse_int(text.substr(slash + 1));
  if (den == 0) throw Error(Errc::division_by_zero, "division by zero in '" + text + "'");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

BigInt floor_of(const Rational& v) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
  return q;
}

std::int64_t to_int64(const BigInt& v) {
  if (!v.fits_slong_p()) throw Error(Errc::overflow, "integer " + v.get_str() + " exceeds 64 bits");
  return v.get_si();
}

BigInt isqrt(const BigInt& v) {
  if (v < 0) throw Error(Errc::invalid_argument, "square root of a negative number");
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
  return r;
}

bool is_square_free(std::int64_t d) {
  if (d < 1) return false;
  for (std::int64_t f = 2; f * f <= d; ++f) {
    if (d % (f * f) == 0) return false;
  }
  return true;
}

QuadExt::QuadExt(const Rational& a, const Rational& b, std::int64_t d) : a_(a), b_(b), d_(d) {
  if (b_ != 0) {
    if (d < 2 || !is_square_free(d)) {
      throw Error(Errc::invalid_argument,
                  "radicand " + std::to_string(d) + " must be square free and >= 2");
    }
  }
  normalize();
}

QuadExt QuadExt::sqrt_of(std::int64_t d) {
  if (d < 1) throw Error(Errc::invalid_argument, "radicand must be positive");
  // Pull square factors out so that sqrt(12) becomes 2*sqrt(3).
  std::int64_t outside = 1;
  std::int64_t inside = d;
  for (std::int64_t f = 2; f * f <= inside; ++f) {
    while (inside % (f * f) == 0) {
      inside /= f * f;
      outside *= f;
    }
  }
  if (inside == 1) return QuadExt(make_rational(outside));
  return QuadExt(Rational(0), make_rational(outside), inside);
}

void QuadExt::normalize() {
  if (b_ == 0) d_ = 0;
}

std::int64_t QuadExt::merged_radicand(const QuadExt& o) const {
  if (d_ == 0) return o.d_;
  if (o.d_ == 0 || o.d_ == d_) return d_;
  throw Error(Errc::field_mismatch, "quadratic values with different radicands " +
                                        std::to_string(d_) + " and " + std::to_string(o.d_));
}

QuadExt QuadExt::conjugate() const {
  QuadExt r = *this;
  r.b_ = -r.b_;
  return r;
}

int QuadExt::sign() const {
  int sa = sgn(a_);
  int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: the larger of a^2 and b^2 d wins; equality is impossible
  // for a square-free radicand.
  Rational lhs = a_ * a_;
  Rational rhs = b_ * b_ * d_;
  return lhs > rhs ? sa : sb;
}

BigInt QuadExt::floor() const {
  if (b_ == 0) return floor_of(a_);
  double approx = to_double();
  BigInt n(std::floor(approx));
  while ((*this - QuadExt(Rational(n))).sign() < 0) --n;
  while ((*this - QuadExt(Rational(n + 1))).sign() >= 0) ++n;
  return n;
}

double QuadExt::to_double() const {
  if (b_ == 0) return a_.get_d();
  return a_.get_d() + b_.get_d() * std::sqrt(static_cast<double>(d_));
}

QuadExt QuadExt::operator-() const {
  QuadExt r = *this;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

QuadExt& QuadExt::operator+=(const QuadExt& o) {
  d_ = merged_radicand(o);
  a_ += o.a_;
  b_ += o.b_;
  normalize();
  return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) {
  d_ = merged_radicand(o);
  a_ -= o.a_;
  b_ -= o.b_;
  normalize();
  return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
  std::int64_t d = merged_radicand(o);
  Rational a = a_ * o.a_ + b_ * o.b_ * d;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = a;
  b_ = b;
  d_ = d;
  normalize();
  return *this;
}

QuadExt& QuadExt::operator/=(const QuadExt& o) {
  if (o.a_ == 0 && o.b_ == 0) throw Error(Errc::division_by_zero, "division by zero");
  std::int64_t d = merged_radicand(o);
  Rational norm = o.a_ * o.a_ - o.b_ * o.b_ * d;
  QuadExt num = *this * o.conjugate();
  a_ = num.a_ / norm;
  b_ = num.b_ / norm;
  d_ = d;
  normalize();
  return *this;
}

bool operator==(const QuadExt& l, const QuadExt& r) {
  if (l.b_ == 0 && r.b_ == 0) return l.a_ == r.a_;
  return l.a_ == r.a_ && l.b_ == r.b_ && l.d_ == r.d_;
}

std::string to_string(const QuadExt& v) {
  const Rational& a = v.rational_part();
  const Rational& b = v.radical_coeff();
  if (b == 0) return to_string(a);
  std::string rad = "sqrt(" + std::to_string(v.radicand()) + ")";
  std::string bpart;
  Rational babs = abs(b);
  bpart = babs == 1 ? rad : to_string(babs) + "*" + rad;
  if (a == 0) return (b < 0 ? "-" : "") + bpart;
  return to_string(a) + (b < 0 ? " - " : " + ") + bpart;
}

}  // namespace deltacode
