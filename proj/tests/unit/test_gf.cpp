#include <doctest.h>

#include <random>
#include <set>

#include "../oracles.hpp"
#include "deltacode/error.hpp"
#include "deltacode/gf.hpp"

using namespace deltacode;

namespace {

std::vector<FieldSpec> specs() {
  return {default_field_spec(7, 1), default_field_spec(2, 5), default_field_spec(3, 2), default_field_spec(2, 1),
          default_field_spec(5, 3)};
}

}  // namespace

TEST_CASE("prime field products") {
  const Field f(default_field_spec(7, 1));
  CHECK(f.mul(3, 5) == 1);
  CHECK(f.add(4, 5) == 2);
  CHECK(f.sub(2, 5) == 4);
  CHECK(f.inv(3) == 5);
}

TEST_CASE("GF(32) generator reduces by x^5+x^2+1") {
  const Field f(default_field_spec(2, 5));
  CHECK(f.spec().modulus == std::vector<std::uint32_t>{1, 0, 1, 0, 0, 1});
  CHECK(f.unpack(f.generator_pow(5)).coeffs == std::vector<std::uint32_t>{1, 0, 1, 0, 0});
  CHECK(f.generator_pow(31) == f.one());
}

TEST_CASE("explicit modulus must be irreducible and, when flagged, primitive") {
  CHECK_THROWS_AS(Field(FieldSpec{2, 5, {1, 1, 0, 0, 0, 1}, true}), Error);  // x^5+x+1 = (x^2+x+1)(x^3+x^2+1)
  CHECK_NOTHROW(Field(FieldSpec{2, 5, {1, 0, 1, 1, 1, 1}, true}));
  CHECK_THROWS_AS(Field(FieldSpec{4, 1, {}, true}), Error);
  CHECK_THROWS_AS(Field(FieldSpec{2, 4, {1, 1, 1, 1, 1}, true}), Error);  // irreducible, order 5
  CHECK_NOTHROW(Field(FieldSpec{2, 4, {1, 1, 1, 1, 1}, false}));
}

TEST_CASE("field axioms on random triples") {
  std::mt19937 rng(7);
  for (const auto& spec : specs()) {
    const Field f(spec);
    std::uniform_int_distribution<Field::Elem> pick(0, f.size() - 1);
    for (int i = 0; i < 200; ++i) {
      const auto a = pick(rng), b = pick(rng), c = pick(rng);
      CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
      CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
      CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      CHECK(f.add(a, f.neg(a)) == 0);
    }
    for (int i = 0; i < 100; ++i) {
      Field::Elem a = 0;
      while (a == 0) a = pick(rng);
      CHECK(f.mul(f.inv(a), a) == 1);
    }
  }
}

TEST_CASE("powers of the generator are distinct") {
  for (const auto& spec : specs()) {
    const Field f(spec);
    std::set<Field::Elem> seen;
    for (std::uint32_t k = 0; k + 1 < f.size(); ++k) seen.insert(f.generator_pow(k));
    CHECK(seen.size() == f.size() - 1);
    CHECK(!seen.contains(0));
  }
}

TEST_CASE("pack and unpack are inverse") {
  const Field f(default_field_spec(3, 2));
  for (Field::Elem a = 0; a < f.size(); ++a) CHECK(f.pack(f.unpack(a)) == a);
  CHECK_THROWS_AS(f.pack(FieldElement{{3, 0}}), Error);
  CHECK_THROWS_AS(f.pack(FieldElement{{1}}), Error);
}

TEST_CASE("rank and kernel") {
  const Field f(default_field_spec(7, 1));
  SUBCASE("identity") {
    Matrix id(4, 4);
    for (std::size_t i = 0; i < 4; ++i) id.at(i, i) = 1;
    const auto rk = mat_rank_kernel(f, id);
    CHECK(rk.rank == 4);
    CHECK(rk.kernel.rows == 0);
  }
  SUBCASE("duplicated row") {
    Matrix m(2, 3);
    m.data = {1, 2, 3, 0, 1, 4};
    Matrix dup = m;
    dup.append_row(m.row(0));
    CHECK(mat_rank(f, dup) == mat_rank(f, m));
  }
  SUBCASE("random 5x8") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<Field::Elem> pick(0, 6);
    for (int trial = 0; trial < 20; ++trial) {
      Matrix m(5, 8);
      for (auto& e : m.data) e = pick(rng);
      const auto rk = mat_rank_kernel(f, m);
      CHECK(rk.rank + rk.kernel.rows == 8);
      CHECK(oracle::all_zero(oracle::multiply_transpose(f, m, rk.kernel)));
    }
  }
}
