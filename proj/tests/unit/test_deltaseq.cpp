#include <doctest.h>

#include "deltacode/deltaseq.hpp"
#include "deltacode/error.hpp"
#include "deltacode/genesis.hpp"

using namespace deltacode;

namespace {

std::vector<std::int64_t> v(std::initializer_list<std::int64_t> xs) { return xs; }

int failed_condition(const std::vector<std::int64_t>& seq) {
  auto r = validate_n(seq);
  if (std::holds_alternative<DeltaN>(r)) return 0;
  return static_cast<int>(std::get<Violation>(r).condition);
}

}  // namespace

TEST_CASE("Abhyankar-Moh conditions") {
  CHECK(failed_condition(v({11, 9})) == 0);
  CHECK(failed_condition(v({36, 24, 8, 18, 13})) == 0);
  CHECK(failed_condition(v({40, 12, 97})) == 0);
  CHECK(failed_condition(v({9, 11})) == 3);
  CHECK(failed_condition(v({6, 4})) == 1);
  CHECK_THROWS_AS(validate_n(v({})), Error);
  CHECK_THROWS_AS(validate_n(v({3, 0})), Error);
  CHECK_THROWS_AS(make_delta_n(v({9, 11})), Error);
}

TEST_CASE("sequences with each term dividing the previous one are accepted") {
  for (const auto& seq : {v({8, 4, 2, 1}), v({12, 6, 3, 1}), v({9, 3, 1}), v({30, 15, 5, 1})}) {
    CHECK(failed_condition(seq) == 0);
  }
}

TEST_CASE("gcd chain, Newton pairs and continued fraction") {
  SUBCASE("{40,12,97}") {
    const auto s = structure_of(v({40, 12, 97}));
    CHECK(s.newton.back() == NewtonPair{4, 23});
    CHECK(s.cf == v({5, 1, 3}));
  }
  SUBCASE("{36,24,8,18,13}") {
    const auto s = structure_of(v({36, 24, 8, 18, 13}));
    CHECK(s.d == v({36, 12, 4, 2, 1}));
    CHECK(s.n == v({3, 3, 2, 2}));
    CHECK(s.newton.back() == NewtonPair{2, 23});
    CHECK(s.cf == v({11, 2}));
  }
  SUBCASE("{11,9}") {
    const auto s = structure_of(v({11, 9}));
    CHECK(s.newton.front() == NewtonPair{2, 11});
    CHECK(s.cf == v({5, 2}));
  }
}

TEST_CASE("continued fractions end in a digit of at least two") {
  CHECK(continued_fraction(23, 4) == v({5, 1, 3}));
  CHECK(continued_fraction(11, 2) == v({5, 2}));
  CHECK(continued_fraction(7, 1) == v({7}));
  CHECK(continued_fraction(3, 2) == v({1, 2}));
}

TEST_CASE("folded digits give back m/e") {
  for (const auto& seq : {v({40, 12, 97}), v({36, 24, 8, 18, 13}), v({11, 9}), v({7, 5}), v({42, 30, 70, 77}), v({15, 6, 22})}) {
    const auto s = structure_of(seq);
    const auto& last = s.newton.back();
    CHECK(cf_eval(s.cf) == QuadExt(make_rational(last.m, last.e)));
  }
}

TEST_CASE("normalization") {
  CHECK(normalize(make_delta_n(v({11, 9}))) == std::vector<Rational>{make_rational(11, 9), make_rational(1)});
  CHECK(normalize(make_delta_n(v({22, 18, 27}))) ==
        std::vector<Rational>{make_rational(11, 9), make_rational(1), make_rational(3, 2)});
  for (const auto& seq : {v({11, 9}), v({36, 24, 8, 18, 13}), v({40, 12, 97}), v({44, 36, 54, 81}), v({12, 4, 10, 19})}) {
    const auto n = make_delta_n(seq);
    const auto norm = normalize(n);
    CHECK(denormalize(norm).values() == seq);
  }
}

TEST_CASE("telescopic representation") {
  const TelescopicBasis b(v({11, 9}));
  CHECK(b.contains(20));
  CHECK(!b.contains(21));
  CHECK(b.represent(29) == v({1, 2}));
  CHECK(!b.represent(10));
  CHECK(in_semigroup(108, v({44, 36})));
  CHECK(in_semigroup(10, v({4, 6})));
  CHECK(!in_semigroup(7, v({4, 6})));
}
