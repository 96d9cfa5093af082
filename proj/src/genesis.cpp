#include "deltacode/genesis.hpp"

#include <numeric>

#include "deltacode/error.hpp"

namespace deltacode {
namespace {

IntPair operator*(std::int64_t s, const IntPair& v) { return {s * v.first, s * v.second}; }
IntPair operator+(const IntPair& a, const IntPair& b) { return {a.first + b.first, a.second + b.second}; }
IntPair operator-(const IntPair& a, const IntPair& b) { return {a.first - b.first, a.second - b.second}; }

bool lex_positive(const IntPair& v) { return v.first > 0 || (v.first == 0 && v.second > 0); }

std::string pair_str(const IntPair& v) {
  return "(" + std::to_string(v.first) + "," + std::to_string(v.second) + ")";
}

}  // namespace

std::vector<Convergent> convergents(std::span<const std::int64_t> digits) {
  std::vector<Convergent> out;
  BigInt h_prev = 1, h_prev2 = 0, k_prev = 0, k_prev2 = 1;
  for (auto a : digits) {
    BigInt h = BigInt(std::to_string(a)) * h_prev + h_prev2;
    BigInt k = BigInt(std::to_string(a)) * k_prev + k_prev2;
    out.push_back({h, k});
    h_prev2 = h_prev;
    h_prev = h;
    k_prev2 = k_prev;
    k_prev = k;
  }
  return out;
}

QuadExt cf_eval(std::span<const std::int64_t> digits, const std::optional<QuadExt>& tail) {
  if (digits.empty()) throw Error(Errc::invalid_argument, "continued fraction needs at least one digit");
  for (auto a : digits) {
    if (a <= 0) throw Error(Errc::invalid_argument, "continued fraction digits must be positive");
  }
  if (tail && tail->sign() <= 0) throw Error(Errc::invalid_argument, "continued fraction tail must be positive");
  std::size_t i = digits.size();
  QuadExt value = tail ? *tail : QuadExt(make_rational(digits[--i]));
  while (i-- > 0) value = QuadExt(make_rational(digits[i])) + QuadExt(Rational(1)) / value;
  return value;
}

std::vector<std::int64_t> cf_digits(const QuadExt& value, std::size_t count) {
  if (value.sign() <= 0) throw Error(Errc::invalid_argument, "expansion needs a positive value");
  std::vector<std::int64_t> out;
  QuadExt rest = value;
  while (out.size() < count) {
    BigInt a = rest.floor();
    out.push_back(to_int64(a));
    rest -= QuadExt(Rational(a));
    if (rest.sign() == 0) break;
    rest = QuadExt(Rational(1)) / rest;
  }
  return out;
}

DeltaN extend_n(const DeltaN& seq, const std::optional<ExtendChoice>& choice) {
  auto build = [&](std::int64_t z, std::int64_t next) {
    std::vector<std::int64_t> v;
    for (auto d : seq.values()) v.push_back(z * d);
    v.push_back(next);
    return v;
  };
  if (choice) {
    if (choice->z < 2) throw Error(Errc::invalid_argument, "z must be at least 2");
    return make_delta_n(build(choice->z, choice->next));
  }
  const std::int64_t last = seq.values().back();
  for (std::int64_t z = 2; z < 1'000'000; ++z) {
    for (std::int64_t next = 1; next < z * z * last; ++next) {
      if (std::gcd(z, next) != 1 || !in_semigroup(next, seq.values())) continue;
      auto v = build(z, next);
      if (std::holds_alternative<DeltaN>(validate_n(v))) return make_delta_n(v);
    }
  }
  throw Error(Errc::unsupported, "no extension found");
}

ExtendChoice increasing_choice(const DeltaN& seq) {
  const std::int64_t last = seq.values().back();
  for (std::int64_t z = 2;; ++z) {
    if (std::gcd(z, last) != 1) continue;
    ExtendChoice c{z, (z + 1) * last};
    std::vector<std::int64_t> v;
    for (auto d : seq.values()) v.push_back(z * d);
    v.push_back(c.next);
    if (std::holds_alternative<DeltaN>(validate_n(v))) return c;
  }
}

DeltaZ2 build_type_c(const DeltaN& dstar) {
  const auto& s = dstar.structure();
  const std::size_t g = dstar.genus();
  const auto& ds = dstar.values();
  if (g == 0) throw Error(Errc::unsupported, "type C needs at least two elements");
  if (s.branch == NewtonBranch::dividing && g == 1) {
    throw Error(Errc::unsupported, "type C needs at least three elements when delta_0 - delta_1 divides delta_0");
  }
  const auto& cf = s.cf;
  const std::size_t t = cf.size();
  if (t < 2) throw Error(Errc::inconsistent_witness, "continued fraction too short for the recurrence");

  // y[k + 1] holds y_k for k = -1..t-1.
  std::vector<IntPair> y{{0, 1}, {1, 0}};
  for (std::size_t i = 1; i + 1 <= t; ++i) {
    y.push_back(cf[t - i - 1] * y[i] + y[i - 1]);
  }
  auto yk = [&](std::ptrdiff_t k) { return y[static_cast<std::size_t>(k + 1)]; };
  const auto ti = static_cast<std::ptrdiff_t>(t);

  DeltaZ2 out;
  out.witness_ = {dstar, cf, yk(ti - 2), yk(ti - 3), y};
  auto& v = out.values_;
  if (s.branch == NewtonBranch::nondividing && g == 1) {
    v.push_back(yk(ti - 1));
    v.push_back(yk(ti - 1) - yk(ti - 2));
  } else if (s.branch == NewtonBranch::dividing && g == 2) {
    const std::int64_t j = ds[0] / (ds[0] - ds[1]);
    const std::int64_t n1 = ds[0] / std::gcd(ds[0], ds[1]);
    const IntPair base = yk(ti - 2);
    v.push_back(j * base);
    v.push_back(v[0] - base);
    v.push_back(v[0] + n1 * v[1] - yk(ti - 1));
  } else {
    const auto [A, B] = out.witness_.ab;
    const auto [Ap, Bp] = out.witness_.ab_prev;
    const std::int64_t at = cf.back();
    const std::int64_t D = A * at + B;
    for (std::size_t i = 0; i < g; ++i) {
      if (ds[i] % D != 0) {
        throw Error(Errc::inconsistent_witness, "delta*_" + std::to_string(i) + " = " + std::to_string(ds[i]) +
                                                    " is not divisible by A a_t + B = " + std::to_string(D));
      }
      v.push_back((ds[i] / D) * out.witness_.ab);
    }
    const std::int64_t num = ds[g] + Ap * at + Bp;
    if (num % D != 0) {
      throw Error(Errc::inconsistent_witness, "delta*_g + A' a_t + B' = " + std::to_string(num) +
                                                  " is not divisible by A a_t + B = " + std::to_string(D));
    }
    v.push_back((num / D) * out.witness_.ab - out.witness_.ab_prev);
  }
  for (const auto& e : v) {
    if (!lex_positive(e)) {
      throw Error(Errc::inconsistent_witness, "generator " + pair_str(e) + " is not lexicographically positive");
    }
  }
  return out;
}

DeltaR build_type_d(const DeltaN& dstar, std::span<const std::int64_t> digits, const QuadExt& b) {
  if (dstar.values().size() < 2) throw Error(Errc::invalid_argument, "type D needs at least two elements");
  if (digits.size() < 3) throw Error(Errc::invalid_argument, "type D needs at least three digits");
  if (b.is_rational()) throw Error(Errc::invalid_argument, "tail must be irrational");
  if (b.sign() <= 0) throw Error(Errc::invalid_argument, "tail must be positive");

  const auto& ds = dstar.values();
  const std::int64_t n = dstar.structure().n.back();
  const Rational nd = make_rational(n) * make_rational(ds.back());
  const QuadExt a = cf_eval(digits, b);
  if (!(a < QuadExt(nd))) {
    throw Error(Errc::not_a_delta_sequence, "a = " + to_string(a) + " is not below n delta = " + to_string(nd));
  }

  // The membership conditions are stated for the digits of a itself; they
  // differ from the given ones when b < 1.
  const auto true_digits = cf_digits(a, 3);
  const auto conv = convergents(true_digits);
  TelescopicBasis basis(ds);
  for (std::size_t j = 2; j <= 3 && j <= conv.size(); ++j) {
    const BigInt bar = BigInt(std::to_string(n * ds.back())) * conv[j - 1].k - conv[j - 1].h;
    if (bar <= 0 || !bar.fits_slong_p() || !basis.contains(bar.get_si())) {
      throw Error(Errc::not_a_delta_sequence,
                  "e" + std::to_string(j) + "(n delta - <a_1..a_" + std::to_string(j) + ">) = " + to_string(bar) +
                      " is not in the semigroup");
    }
  }

  DeltaR out;
  for (std::size_t i = 0; i < ds.size(); ++i) out.head_.push_back(make_rational(ds[i], ds[1]));
  out.tail_ = (QuadExt(nd) - a) / QuadExt(make_rational(ds[1]));
  out.witness_ = {dstar, std::vector<std::int64_t>(digits.begin(), digits.end()), b, a};
  return out;
}

DeltaQ DeltaQ::extended(std::size_t steps) const {
  DeltaQ out = *this;
  for (std::size_t i = 0; i < steps; ++i) {
    auto c = increasing_choice(out.last());
    out.prefixes_.push_back(extend_n(out.last(), c));
    out.choices_.push_back(c);
  }
  return out;
}

DeltaQ DeltaQ::covering(const Rational& bound) const {
  DeltaQ out = *this;
  while (true) {
    const auto& v = out.last().values();
    if (v.size() >= 2 && make_rational(v.back(), v[1]) >= bound) return out;
    out = out.extended(1);
  }
}

DeltaQ build_type_e(const DeltaN& start, std::size_t steps, std::span<const ExtendChoice> choices) {
  DeltaQ out;
  out.prefixes_.push_back(start);
  for (const auto& c : choices) {
    const auto& last = out.last();
    if (!(c.z * last.values().back() < c.next)) {
      throw Error(Errc::not_a_delta_sequence,
                  "normalized sequence not increasing: z delta_g = " + std::to_string(c.z * last.values().back()) +
                      " is not below " + std::to_string(c.next));
    }
    out.prefixes_.push_back(extend_n(last, c));
    out.choices_.push_back(c);
  }
  if (steps > choices.size()) out = out.extended(steps - choices.size());
  return out;
}

DeltaSequence rebuild(const DeltaSequence& seq) {
  return std::visit(
      [](const auto& s) -> DeltaSequence {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, DeltaN>) {
          return make_delta_n(s.values());
        } else if constexpr (std::is_same_v<T, DeltaZ2>) {
          return build_type_c(make_delta_n(s.witness().dstar.values()));
        } else if constexpr (std::is_same_v<T, DeltaR>) {
          const auto& w = s.witness();
          return build_type_d(make_delta_n(w.dstar.values()), w.digits, w.b);
        } else {
          return build_type_e(make_delta_n(s.prefixes().front().values()), s.choices().size(), s.choices());
        }
      },
      seq);
}

}  // namespace deltacode
