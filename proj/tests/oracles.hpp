// Brute-force reference computations shared by the unit tests and the
// acceptance runner. Nothing here calls into the algorithms under test beyond
// field arithmetic and semigroup value addition.
#ifndef DELTACODE_TESTS_ORACLES_HPP
#define DELTACODE_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "deltacode/codes.hpp"
#include "deltacode/gf.hpp"
#include "deltacode/semigroup.hpp"

namespace oracle {

using deltacode::Field;
using deltacode::Matrix;

inline Matrix multiply_transpose(const Field& f, const Matrix& a, const Matrix& b) {
  Matrix out(a.rows, b.rows);
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (std::size_t j = 0; j < b.rows; ++j) {
      Field::Elem acc = 0;
      for (std::size_t c = 0; c < a.cols; ++c) acc = f.add(acc, f.mul(a.at(i, c), b.at(j, c)));
      out.at(i, j) = acc;
    }
  }
  return out;
}

inline bool all_zero(const Matrix& m) {
  return std::all_of(m.data.begin(), m.data.end(), [](auto e) { return e == 0; });
}

// Least weight over every nonzero combination of the rows of `gen`.
inline std::int64_t min_weight(const Field& f, const Matrix& gen) {
  const std::size_t k = gen.rows;
  std::vector<Field::Elem> coeff(k, 0);
  std::int64_t best = static_cast<std::int64_t>(gen.cols) + 1;
  while (true) {
    std::size_t i = 0;
    while (i < k && coeff[i] == f.size() - 1) coeff[i++] = 0;
    if (i == k) break;
    ++coeff[i];
    std::int64_t w = 0;
    for (std::size_t c = 0; c < gen.cols; ++c) {
      Field::Elem v = 0;
      for (std::size_t r = 0; r < k; ++r) v = f.add(v, f.mul(coeff[r], gen.at(r, c)));
      if (v != 0) ++w;
    }
    if (w > 0) best = std::min(best, w);
  }
  return best;
}

// Codewords orthogonal to every row of `parity`, by running over all of F^n.
inline std::int64_t min_weight_of_dual(const Field& f, const Matrix& parity) {
  const std::size_t n = parity.cols;
  std::vector<Field::Elem> word(n, 0);
  std::int64_t best = static_cast<std::int64_t>(n) + 1;
  while (true) {
    std::size_t i = 0;
    while (i < n && word[i] == f.size() - 1) word[i++] = 0;
    if (i == n) break;
    ++word[i];
    bool ok = true;
    for (std::size_t r = 0; r < parity.rows && ok; ++r) {
      Field::Elem v = 0;
      for (std::size_t c = 0; c < n; ++c) v = f.add(v, f.mul(parity.at(r, c), word[c]));
      ok = v == 0;
    }
    if (ok) {
      best = std::min(best, static_cast<std::int64_t>(std::count_if(word.begin(), word.end(), [](auto e) { return e != 0; })));
    }
  }
  return best;
}

// Gaps of <gens> (gcd 1), by marking every member below a bound past the
// Frobenius number.
inline std::int64_t gap_count(const std::vector<std::int64_t>& gens) {
  std::int64_t bound = 1;
  for (auto g : gens) bound *= g;
  std::vector<char> member(static_cast<std::size_t>(bound) + 1, 0);
  member[0] = 1;
  for (std::int64_t x = 1; x <= bound; ++x) {
    for (auto g : gens) {
      if (x >= g && member[static_cast<std::size_t>(x - g)]) {
        member[static_cast<std::size_t>(x)] = 1;
        break;
      }
    }
  }
  return std::count(member.begin(), member.end(), 0);
}

// For every semigroup value <= bound reachable by an exponent tuple inside
// the admissible ranges, how many tuples reach it. Unbounded positions are
// capped by the bound itself.
inline std::vector<std::pair<deltacode::SemiValue, int>> tuple_hits(const deltacode::Semigroup& sg,
                                                                     const deltacode::SemiValue& bound) {
  using deltacode::SemiValue;
  const auto gens = sg.generators();
  const auto bounds = sg.bounds();
  std::vector<std::pair<SemiValue, int>> hits;
  std::function<void(std::size_t, const SemiValue&)> walk = [&](std::size_t i, const SemiValue& acc) {
    if (i == gens.size()) {
      for (auto& [v, n] : hits) {
        if (deltacode::compare(v, acc) == 0) {
          ++n;
          return;
        }
      }
      hits.emplace_back(acc, 1);
      return;
    }
    SemiValue cur = acc;
    for (std::int64_t c = 0; bounds[i] == 0 || c < bounds[i]; ++c) {
      if (deltacode::compare(cur, bound) > 0) break;
      walk(i + 1, cur);
      cur = deltacode::add(cur, gens[i]);
    }
  };
  walk(0, sg.zero());
  return hits;
}

}  // namespace oracle

#endif  // DELTACODE_TESTS_ORACLES_HPP
