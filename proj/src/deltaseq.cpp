#include "deltacode/deltaseq.hpp"

#include <numeric>

#include "deltacode/error.hpp"

namespace deltacode {
namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(Errc::overflow, "integer overflow");
  return r;
}

// Inverse of a modulo n (n >= 1, gcd(a, n) = 1).
std::int64_t mod_inverse(std::int64_t a, std::int64_t n) {
  if (n == 1) return 0;
  std::int64_t t = 0, new_t = 1, r = n, new_r = a % n;
  if (new_r < 0) new_r += n;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) throw Error(Errc::invalid_argument, "generators are not telescopic");
  return t < 0 ? t + n : t;
}

}  // namespace

TelescopicBasis::TelescopicBasis(std::vector<std::int64_t> gens) : gens_(std::move(gens)) {
  if (gens_.empty()) throw Error(Errc::invalid_argument, "empty generator list");
  d_.resize(gens_.size());
  n_.assign(gens_.size(), 0);
  inv_.assign(gens_.size(), 0);
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (gens_[i] <= 0) throw Error(Errc::invalid_argument, "generators must be positive");
    d_[i] = i == 0 ? gens_[0] : std::gcd(d_[i - 1], gens_[i]);
    if (i > 0) {
      n_[i] = d_[i - 1] / d_[i];
      inv_[i] = mod_inverse((gens_[i] / d_[i]) % n_[i], n_[i]);
    }
  }
}

std::optional<std::vector<std::int64_t>> TelescopicBasis::represent(std::int64_t x) const {
  if (gens_.empty() || x < 0 || x % d_.back() != 0) return std::nullopt;
  std::vector<std::int64_t> c(gens_.size(), 0);
  for (std::size_t i = gens_.size(); i-- > 1;) {
    const __int128 reduced = static_cast<__int128>(x / d_[i]) * inv_[i];
    std::int64_t ci = static_cast<std::int64_t>(reduced % n_[i]);
    if (ci < 0) ci += n_[i];
    c[i] = ci;
    x -= checked_mul(ci, gens_[i]);
    if (x < 0) return std::nullopt;
  }
  c[0] = x / gens_[0];
  return c;
}

bool TelescopicBasis::contains(std::int64_t x) const { return represent(x).has_value(); }

bool in_semigroup(std::int64_t x, std::span<const std::int64_t> gens) {
  if (x < 0) return false;
  if (x == 0) return true;
  if (x > 50'000'000) throw Error(Errc::unsupported, "membership test argument too large");
  std::vector<char> reach(static_cast<std::size_t>(x) + 1, 0);
  reach[0] = 1;
  for (std::int64_t v = 1; v <= x; ++v) {
    for (auto g : gens) {
      if (g > 0 && g <= v && reach[static_cast<std::size_t>(v - g)]) {
        reach[static_cast<std::size_t>(v)] = 1;
        break;
      }
    }
  }
  return reach[static_cast<std::size_t>(x)] != 0;
}

std::vector<std::int64_t> continued_fraction(std::int64_t num, std::int64_t den) {
  if (num <= 0 || den <= 0) throw Error(Errc::invalid_argument, "continued fraction needs positive terms");
  std::vector<std::int64_t> digits;
  while (den != 0) {
    digits.push_back(num / den);
    num = std::exchange(den, num % den);
  }
  if (digits.size() > 1 && digits.back() == 1) {
    digits.pop_back();
    digits.back() += 1;
  }
  return digits;
}

std::string describe(const Violation& v) {
  return "condition (" + std::to_string(static_cast<int>(v.condition)) + ") at index " +
         std::to_string(v.index) + ": " + v.message;
}

ValidationResult validate_n(std::span<const std::int64_t> seq) {
  if (seq.empty()) throw Error(Errc::invalid_argument, "empty sequence");
  for (auto v : seq) {
    if (v <= 0) throw Error(Errc::invalid_argument, "sequence entries must be positive");
  }
  const std::size_t g = seq.size() - 1;
  std::vector<std::int64_t> d(g + 2, 0);  // d[i] for 1 <= i <= g+1
  d[1] = seq[0];
  for (std::size_t i = 2; i <= g + 1; ++i) d[i] = std::gcd(d[i - 1], seq[i - 1]);
  std::vector<std::int64_t> n(g + 1, 0);  // n[i] for 1 <= i <= g
  for (std::size_t i = 1; i <= g; ++i) n[i] = d[i] / d[i + 1];

  if (d[g + 1] != 1) {
    return Violation{AmCondition::gcd_chain, g,
                     "d_" + std::to_string(g + 1) + " = " + std::to_string(d[g + 1]) + " != 1"};
  }
  for (std::size_t i = 1; i <= g; ++i) {
    if (n[i] <= 1) {
      return Violation{AmCondition::gcd_chain, i, "n_" + std::to_string(i) + " = " + std::to_string(n[i]) + " is not > 1"};
    }
  }
  for (std::size_t i = 1; i <= g; ++i) {
    TelescopicBasis prefix(std::vector<std::int64_t>(seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(i)));
    const std::int64_t target = checked_mul(n[i], seq[i]);
    if (!prefix.contains(target)) {
      return Violation{AmCondition::semigroup_membership, i,
                       "n_" + std::to_string(i) + " delta_" + std::to_string(i) + " = " +
                           std::to_string(target) + " is not in the semigroup of the preceding terms"};
    }
  }
  if (g >= 1 && !(seq[0] > seq[1])) {
    return Violation{AmCondition::descent, 1, "delta_0 > delta_1 fails"};
  }
  for (std::size_t i = 2; i <= g; ++i) {
    if (!(seq[i] < checked_mul(seq[i - 1], n[i - 1]))) {
      return Violation{AmCondition::descent, i,
                       "delta_" + std::to_string(i) + " < delta_" + std::to_string(i - 1) + " n_" +
                           std::to_string(i - 1) + " fails"};
    }
  }

  DeltaN out;
  out.values_.assign(seq.begin(), seq.end());
  out.structure_ = structure_of(seq);
  return out;
}

DeltaN make_delta_n(std::span<const std::int64_t> seq) {
  auto result = validate_n(seq);
  if (auto* v = std::get_if<Violation>(&result)) {
    throw Error(Errc::not_a_delta_sequence, "not a delta-sequence: " + describe(*v));
  }
  return std::get<DeltaN>(std::move(result));
}

DeltaStructure structure_of(std::span<const std::int64_t> seq) {
  DeltaStructure s;
  const std::size_t g = seq.size() - 1;
  s.d.resize(g + 1);
  s.d[0] = seq[0];
  for (std::size_t i = 1; i <= g; ++i) s.d[i] = std::gcd(s.d[i - 1], seq[i]);
  s.n.resize(g);
  for (std::size_t i = 0; i < g; ++i) s.n[i] = s.d[i] / s.d[i + 1];
  if (g == 0) return s;

  // Local accessors using the 1-based names of the formulas.
  auto d = [&](std::size_t i) { return s.d[i - 1]; };
  auto n = [&](std::size_t i) { return s.n[i - 1]; };
  const std::int64_t diff = seq[0] - seq[1];
  s.branch = (diff > 0 && seq[0] % diff == 0) ? NewtonBranch::dividing : NewtonBranch::nondividing;

  if (s.branch == NewtonBranch::nondividing) {
    s.newton.push_back({diff, seq[0]});
    for (std::size_t i = 1; i + 1 <= g; ++i) {
      s.newton.push_back({d(i + 1), checked_mul(n(i), seq[i]) - seq[i + 1]});
    }
  } else if (g >= 2) {
    s.newton.push_back({d(2), seq[0] + checked_mul(n(1), seq[1]) - seq[2]});
    for (std::size_t i = 1; i + 2 <= g; ++i) {
      s.newton.push_back({d(i + 2), checked_mul(n(i + 1), seq[i + 1]) - seq[i + 2]});
    }
  }
  if (!s.newton.empty()) {
    const auto& last = s.newton.back();
    s.cf = continued_fraction(last.m, last.e);
  }
  return s;
}

std::vector<Rational> normalize(const DeltaN& seq) {
  const auto& v = seq.values();
  if (v.size() == 1) return {make_rational(v[0])};
  std::vector<Rational> out;
  out.reserve(v.size());
  for (auto x : v) out.push_back(make_rational(x, v[1]));
  return out;
}

DeltaN denormalize(std::span<const Rational> normalized) {
  BigInt l = 1;
  for (const auto& r : normalized) {
    if (r <= 0) throw Error(Errc::invalid_argument, "normalized values must be positive");
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), r.get_den_mpz_t());
  }
  std::vector<std::int64_t> out;
  for (const auto& r : normalized) {
    Rational scaled = r * Rational(l);
    out.push_back(to_int64(scaled.get_num()));
  }
  return make_delta_n(out);
}

}  // namespace deltacode
