#include "deltacode/semigroup.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>

#include "deltacode/error.hpp"

namespace deltacode {
namespace {

int sgn128(__int128 v) { return v < 0 ? -1 : (v > 0 ? 1 : 0); }

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

bool is_real(const SemiValue& v) { return !std::holds_alternative<LexPair>(v); }

QuadExt real_of(const SemiValue& v) {
  if (const auto* r = std::get_if<Rational>(&v)) return QuadExt(*r);
  if (const auto* q = std::get_if<QuadValue>(&v)) return q->real();
  throw Error(Errc::order_mismatch, "a pair has no real value");
}

}  // namespace

int compare(const SemiValue& u, const SemiValue& v) {
  if (const auto* p = std::get_if<LexPair>(&u)) {
    const auto* q = std::get_if<LexPair>(&v);
    if (!q) throw Error(Errc::order_mismatch, "cannot compare a pair with a real value");
    if (p->a != q->a) return p->a < q->a ? -1 : 1;
    if (p->b != q->b) return p->b < q->b ? -1 : 1;
    return 0;
  }
  if (!is_real(v)) throw Error(Errc::order_mismatch, "cannot compare a real value with a pair");
  const auto* ru = std::get_if<Rational>(&u);
  const auto* rv = std::get_if<Rational>(&v);
  if (ru && rv) return cmp(*ru, *rv) < 0 ? -1 : (*ru == *rv ? 0 : 1);
  const auto* qu = std::get_if<QuadValue>(&u);
  const auto* qv = std::get_if<QuadValue>(&v);
  if (qu && qv && qu->m == qv->m) return cmp(qu->r, qv->r) < 0 ? -1 : (qu->r == qv->r ? 0 : 1);
  return (real_of(u) - real_of(v)).sign();
}

bool operator==(const SemiValue& u, const SemiValue& v) {
  if (is_real(u) != is_real(v)) return false;
  return compare(u, v) == 0;
}

SemiValue add(const SemiValue& u, const SemiValue& v) {
  if (const auto* p = std::get_if<LexPair>(&u)) {
    const auto* q = std::get_if<LexPair>(&v);
    if (!q) throw Error(Errc::order_mismatch, "cannot add a pair and a real value");
    return LexPair{p->a + q->a, p->b + q->b};
  }
  if (!is_real(v)) throw Error(Errc::order_mismatch, "cannot add a real value and a pair");
  const auto* qu = std::get_if<QuadValue>(&u);
  const auto* qv = std::get_if<QuadValue>(&v);
  if (!qu && !qv) return Rational(std::get<Rational>(u) + std::get<Rational>(v));
  QuadValue out;
  out.tau = qu ? qu->tau : qv->tau;
  if (qu && qv && qu->m != 0 && qv->m != 0 && !(qu->tau == qv->tau)) {
    throw Error(Errc::order_mismatch, "values from different irrational tails");
  }
  out.r = (qu ? qu->r : std::get<Rational>(u)) + (qv ? qv->r : std::get<Rational>(v));
  out.m = (qu ? qu->m : 0) + (qv ? qv->m : 0);
  if (qv && qv->m != 0) out.tau = qv->tau;
  return out;
}

std::string to_string(const SemiValue& v) {
  if (const auto* p = std::get_if<LexPair>(&v)) {
    return "(" + std::to_string(p->a) + "," + std::to_string(p->b) + ")";
  }
  if (const auto* r = std::get_if<Rational>(&v)) return to_string(*r);
  const auto& q = std::get<QuadValue>(v);
  if (q.m == 0) return to_string(q.r);
  std::string t = q.m == 1 ? "tau" : std::to_string(q.m) + "*tau";
  if (q.r == 0) return t;
  return to_string(q.r) + " + " + t;
}

Semigroup::Semigroup(DeltaSequence seq) : seq_(std::move(seq)) {
  std::visit(
      [this](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, DeltaN>) {
          kind_ = SeqKind::n;
          head_ = TelescopicBasis(s.values());
        } else if constexpr (std::is_same_v<T, DeltaZ2>) {
          kind_ = SeqKind::c;
          const auto& v = s.values();
          const std::size_t g = v.size() - 1;
          const std::int64_t gd = std::gcd(v[0].first, v[0].second);
          unit_ = {v[0].first / gd, v[0].second / gd};
          std::vector<std::int64_t> h;
          for (std::size_t i = 0; i < g; ++i) {
            const std::int64_t k = unit_.a != 0 ? v[i].first / unit_.a : v[i].second / unit_.b;
            if (v[i].first != k * unit_.a || v[i].second != k * unit_.b || k <= 0) {
              throw Error(Errc::inconsistent_witness, "head generators are not on one line");
            }
            h.push_back(k);
          }
          head_ = TelescopicBasis(h);
          tail_pair_ = {v[g].first, v[g].second};
          if (tail_pair_.a * unit_.b - tail_pair_.b * unit_.a == 0) {
            throw Error(Errc::inconsistent_witness, "last generator lies on the head line");
          }
        } else if constexpr (std::is_same_v<T, DeltaR>) {
          kind_ = SeqKind::d;
          const auto& ds = s.witness().dstar.values();
          head_ = TelescopicBasis(ds);
          scale_ = ds[1];
          tau_ = s.tail();
        } else {
          kind_ = SeqKind::e;
          const auto& v = s.last().values();
          if (v.size() < 2) throw Error(Errc::invalid_argument, "type E needs at least two elements");
          head_ = TelescopicBasis(v);
          scale_ = v[1];
        }
      },
      seq_);
}

std::vector<SemiValue> Semigroup::generators() const {
  std::vector<SemiValue> out;
  for (auto h : head_.generators()) out.push_back(value_of(h, 0));
  if (has_tail()) out.push_back(value_of(0, 1));
  return out;
}

std::vector<std::int64_t> Semigroup::bounds() const {
  auto b = head_.bounds();
  if (has_tail()) b.push_back(0);
  return b;
}

SemiValue Semigroup::zero() const { return value_of(0, 0); }

SemiValue Semigroup::value_of(std::int64_t x, std::int64_t m) const {
  switch (kind_) {
    case SeqKind::c:
      return LexPair{x * unit_.a + m * tail_pair_.a, x * unit_.b + m * tail_pair_.b};
    case SeqKind::d:
      return QuadValue{make_rational(x, scale_), m, tau_};
    default:
      return make_rational(x, scale_);
  }
}

std::optional<std::pair<std::int64_t, std::int64_t>> Semigroup::coords(const SemiValue& v) const {
  if (kind_ == SeqKind::c) {
    const auto* p = std::get_if<LexPair>(&v);
    if (!p) throw Error(Errc::order_mismatch, "type C values are pairs");
    const __int128 cr = static_cast<__int128>(p->a) * unit_.b - static_cast<__int128>(p->b) * unit_.a;
    const __int128 ct = static_cast<__int128>(tail_pair_.a) * unit_.b - static_cast<__int128>(tail_pair_.b) * unit_.a;
    if (cr % ct != 0) return std::nullopt;
    const auto m = static_cast<std::int64_t>(cr / ct);
    const std::int64_t ra = p->a - m * tail_pair_.a;
    const std::int64_t rb = p->b - m * tail_pair_.b;
    std::int64_t x;
    if (unit_.a != 0) {
      if (ra % unit_.a != 0) return std::nullopt;
      x = ra / unit_.a;
    } else {
      if (rb % unit_.b != 0) return std::nullopt;
      x = rb / unit_.b;
    }
    if (ra != x * unit_.a || rb != x * unit_.b) return std::nullopt;
    return std::pair{x, m};
  }
  if (!is_real(v)) throw Error(Errc::order_mismatch, "expected a real value");
  Rational r;
  std::int64_t m = 0;
  if (const auto* q = std::get_if<QuadValue>(&v)) {
    r = q->r;
    m = q->m;
    if (m != 0 && !(q->tau == tau_)) {
      if (kind_ != SeqKind::d) return std::nullopt;
      throw Error(Errc::order_mismatch, "value built on a different irrational tail");
    }
  } else {
    r = std::get<Rational>(v);
  }
  if (m != 0 && kind_ != SeqKind::d) return std::nullopt;
  Rational scaled = r * make_rational(scale_);
  if (scaled.get_den() != 1) return std::nullopt;
  return std::pair{to_int64(scaled.get_num()), m};
}

int Semigroup::compare_coords(std::int64_t x1, std::int64_t m1, std::int64_t x2, std::int64_t m2) const {
  const std::int64_t dx = x1 - x2;
  const std::int64_t dm = m1 - m2;
  switch (kind_) {
    case SeqKind::c: {
      const __int128 a = static_cast<__int128>(dx) * unit_.a + static_cast<__int128>(dm) * tail_pair_.a;
      if (a != 0) return sgn128(a);
      return sgn128(static_cast<__int128>(dx) * unit_.b + static_cast<__int128>(dm) * tail_pair_.b);
    }
    case SeqKind::d: {
      if (dm == 0) return dx < 0 ? -1 : (dx > 0 ? 1 : 0);
      if (dx == 0) return dm < 0 ? -1 : 1;
      if ((dx > 0) == (dm > 0)) return dx > 0 ? 1 : -1;
      const double a = static_cast<double>(dx) / static_cast<double>(scale_);
      const double b = static_cast<double>(dm) * tau_.to_double();
      const double sum = a + b;
      if (std::fabs(sum) > 1e-9 * (std::fabs(a) + std::fabs(b))) return sum > 0 ? 1 : -1;
      QuadExt exact = QuadExt(make_rational(dx, scale_)) + QuadExt(make_rational(dm)) * tau_;
      return exact.sign();
    }
    default:
      return dx < 0 ? -1 : (dx > 0 ? 1 : 0);
  }
}

bool Semigroup::contains_coords(std::int64_t x, std::int64_t m) const {
  if (x < 0 || m < 0) return false;
  if (m != 0 && !has_tail()) return false;
  return head_.contains(x);
}

bool Semigroup::contains(const SemiValue& v) const {
  if (compare(v, zero()) < 0) return false;
  if (!covers(v)) return covering(v).contains(v);
  auto c = coords(v);
  return c && contains_coords(c->first, c->second);
}

Representation Semigroup::represent(const SemiValue& v) const {
  if (compare(v, zero()) < 0) throw Error(Errc::below_zero, to_string(v) + " is below zero");
  if (!covers(v)) return covering(v).represent(v);
  auto c = coords(v);
  if (!c || c->second < 0) throw Error(Errc::not_a_member, to_string(v) + " is not in the semigroup");
  auto rep = head_.represent(c->first);
  if (!rep) throw Error(Errc::not_a_member, to_string(v) + " is not in the semigroup");
  Representation out;
  out.exponents = std::move(*rep);
  if (has_tail()) out.exponents.push_back(c->second);
  out.bounds = bounds();
  return out;
}

bool Semigroup::covers(const SemiValue& bound) const {
  if (kind_ != SeqKind::e) return true;
  const auto& v = std::get<DeltaQ>(seq_).last().values();
  return !(real_of(bound) > QuadExt(make_rational(v.back(), v[1])));
}

Semigroup Semigroup::covering(const SemiValue& bound) const {
  if (covers(bound)) return *this;
  const QuadExt r = real_of(bound);
  // The next rational at or above the bound is enough.
  const Rational target = r.is_rational() ? r.rational_part() : Rational(r.floor() + 1);
  return Semigroup(std::get<DeltaQ>(seq_).covering(target));
}

std::optional<std::int64_t> Semigroup::max_head(std::int64_t m, const SemiValue& bound) const {
  std::int64_t x;
  switch (kind_) {
    case SeqKind::c: {
      const auto& b = std::get<LexPair>(bound);
      const std::int64_t ba = m * tail_pair_.a;
      const std::int64_t bb = m * tail_pair_.b;
      if (unit_.a > 0) {
        x = floor_div(b.a - ba, unit_.a);
        if (x * unit_.a + ba == b.a && x * unit_.b + bb > b.b) --x;
      } else {
        if (ba < b.a) throw Error(Errc::unsupported, "infinitely many members below the bound");
        if (ba > b.a) return std::nullopt;
        x = floor_div(b.b - bb, unit_.b);
      }
      break;
    }
    case SeqKind::d: {
      const QuadExt lim = (real_of(bound) - QuadExt(make_rational(m)) * tau_) * QuadExt(make_rational(scale_));
      x = to_int64(lim.floor());
      break;
    }
    default:
      if (m != 0) return std::nullopt;
      x = to_int64((real_of(bound) * QuadExt(make_rational(scale_))).floor());
      break;
  }
  if (x < 0) return std::nullopt;
  return x;
}

std::vector<Member> Semigroup::enumerate(const SemiValue& bound) const {
  if (!covers(bound)) return covering(bound).enumerate(bound);
  std::vector<Member> out;
  if (compare(bound, zero()) < 0) return out;
  if (kind_ == SeqKind::c && (tail_pair_.a == 0 || unit_.a == 0)) {
    const auto& b = std::get<LexPair>(bound);
    if (b.a > 0) throw Error(Errc::unsupported, "a generator with first coordinate 0 makes the enumeration infinite");
  }
  const auto& h = head_.generators();
  const auto& n = head_.bounds();
  const std::size_t k = h.size();
  std::vector<std::int64_t> c(k, 0);
  for (std::int64_t m = 0;; ++m) {
    if (m > 0 && !has_tail()) break;
    auto limit = max_head(m, bound);
    if (!limit) break;
    const std::int64_t X = *limit;
    std::function<void(std::size_t, std::int64_t)> walk = [&](std::size_t i, std::int64_t s) {
      if (i == 0) {
        for (std::int64_t c0 = 0; s + c0 * h[0] <= X; ++c0) {
          c[0] = c0;
          Member mem;
          mem.x = s + c0 * h[0];
          mem.m = m;
          mem.exponents = c;
          if (has_tail()) mem.exponents.push_back(m);
          out.push_back(std::move(mem));
        }
        return;
      }
      for (std::int64_t ci = 0; ci < n[i] && s + ci * h[i] <= X; ++ci) {
        c[i] = ci;
        walk(i - 1, s + ci * h[i]);
      }
      c[i] = 0;
    };
    walk(k - 1, 0);
  }
  std::sort(out.begin(), out.end(), [this](const Member& a, const Member& b) {
    return compare_coords(a.x, a.m, b.x, b.m) < 0;
  });
  for (auto& mem : out) mem.value = value_of(mem.x, mem.m);
  return out;
}

SemiValue Semigroup::level_bound(std::int64_t level) const {
  switch (kind_) {
    case SeqKind::c:
      return LexPair{level * std::max<std::int64_t>(1, unit_.a), std::numeric_limits<std::int64_t>::max() / 4};
    case SeqKind::d:
      return QuadValue{make_rational(level), 0, tau_};
    default:
      return make_rational(level);
  }
}

SemiValue Semigroup::successor(const SemiValue& v) const {
  if (!contains(v)) throw Error(Errc::not_a_member, to_string(v) + " is not in the semigroup");
  const auto gens = generators();
  SemiValue step = gens[0];
  for (const auto& g : gens) {
    if (compare(g, step) < 0) step = g;
  }
  for (const auto& mem : enumerate(add(v, step))) {
    if (compare(mem.value, v) > 0) return mem.value;
  }
  throw Error(Errc::inconsistent_witness, "no successor found");
}

std::int64_t Semigroup::omega(const SemiValue& v) const {
  if (!contains(v)) throw Error(Errc::not_a_member, to_string(v) + " is not in the semigroup");
  const Semigroup sg = covering(v);
  const auto c = *sg.coords(v);
  std::int64_t count = 0;
  for (const auto& mem : sg.enumerate(v)) {
    if (sg.contains_coords(c.first - mem.x, c.second - mem.m)) ++count;
  }
  return count;
}

std::int64_t rank_below(std::int64_t x, const TelescopicBasis& basis) {
  std::int64_t count = 0;
  for (std::int64_t y = 0; y < x; ++y) {
    if (basis.contains(y)) ++count;
  }
  return count;
}

std::int64_t gap_count(const TelescopicBasis& basis) {
  if (basis.gcd() != 1) throw Error(Errc::invalid_argument, "gap count needs coprime generators");
  const auto& gens = basis.generators();
  const std::int64_t smallest = *std::min_element(gens.begin(), gens.end());
  // Mark members upward; a run of `smallest` consecutive members means every
  // later integer is a member too.
  std::vector<char> member{1};
  std::int64_t gaps = 0;
  std::int64_t run = 1;
  for (std::int64_t v = 1; run < smallest; ++v) {
    char in = 0;
    for (auto g : gens) {
      if (g <= v && member[static_cast<std::size_t>(v - g)]) {
        in = 1;
        break;
      }
    }
    member.push_back(in);
    if (in) {
      ++run;
    } else {
      ++gaps;
      run = 0;
    }
  }
  return gaps;
}

Rational telescopic_genus(const TelescopicBasis& basis) {
  const auto& h = basis.generators();
  const auto& n = basis.bounds();
  Rational sum = make_rational(1 - h[0]);
  for (std::size_t i = 1; i < h.size(); ++i) sum += make_rational((n[i] - 1) * h[i]);
  return sum / 2;
}

}  // namespace deltacode
