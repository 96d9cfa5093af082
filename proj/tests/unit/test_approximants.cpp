#include <doctest.h>

#include <random>

#include "deltacode/approximants.hpp"
#include "deltacode/codes.hpp"
#include "deltacode/error.hpp"

using namespace deltacode;

namespace {

std::vector<std::int64_t> v(std::initializer_list<std::int64_t> xs) { return xs; }

// Builds a polynomial from (coefficient, x-exp, y-exp) triples, reducing
// integer coefficients into the prime field.
BivarPoly poly(const Field& f, std::initializer_list<std::tuple<std::int64_t, std::uint32_t, std::uint32_t>> terms) {
  BivarPoly p;
  for (const auto& [c, i, j] : terms) {
    BivarPoly t;
    t.terms[{i, j}] = f.from_int(c);
    p = poly_add(f, p, t);
  }
  return p;
}

const Field f7(default_field_spec(7, 1));
const Field f32(default_field_spec(2, 5));

}  // namespace

TEST_CASE("reference approximates") {
  SUBCASE("F_7 off the line") {
    const Semigroup sg(make_delta_n(v({36, 24, 8, 18, 13})));
    const auto fam = build_approximates(sg);
    CHECK(fam.expand(f7, 0) == BivarPoly::x());
    CHECK(fam.expand(f7, 1) == BivarPoly::y());
    CHECK(fam.expand(f7, 2) == poly(f7, {{1, 0, 3}, {-1, 2, 0}}));
    CHECK(fam.expand(f7, 3) == poly(f7, {{1, 0, 9}, {-3, 2, 6}, {3, 4, 3}, {-1, 6, 0}, {-1, 0, 1}}));
    // The same family serves the type C sequence built on it.
    const auto famc = build_approximates(Semigroup(build_type_c(make_delta_n(v({36, 24, 8, 18, 13})))));
    CHECK(famc.expand(f7, 3) == fam.expand(f7, 3));
  }
  SUBCASE("types D and E over {11,9}") {
    const auto d = build_approximates(Semigroup(build_type_d(make_delta_n(v({11, 9})), v({80, 1, 2}), QuadExt::sqrt_of(3))));
    CHECK(d.expand(f7, 2) == poly(f7, {{1, 0, 11}, {-1, 9, 0}}));
    const auto e = build_approximates(Semigroup(build_type_e(make_delta_n(v({11, 9})), 2)));
    CHECK(e.expand(f7, 2) == poly(f7, {{1, 0, 11}, {-1, 9, 0}}));
  }
  SUBCASE("F_32") {
    const auto fam = build_approximates(Semigroup(build_type_c(make_delta_n(v({42, 30, 70, 77})))));
    CHECK(fam.n()[1] == 7);
    CHECK(fam.expand(f32, 2) == poly(f32, {{1, 0, 7}, {1, 5, 0}}));
    // (y^7 + x^5)^3 + x^5 in characteristic 2.
    const auto q3 = fam.expand(f32, 3);
    CHECK(q3 == poly(f32, {{1, 0, 21}, {1, 5, 14}, {1, 10, 7}, {1, 15, 0}, {1, 5, 0}}));
    CHECK(q3.terms.count({5, 14}) == 1);
    CHECK(q3.terms.count({15, 14}) == 0);
  }
}

TEST_CASE("approximates never collapse") {
  for (const auto& seq : {v({11, 9}), v({36, 24, 8, 18, 13}), v({42, 30, 70, 77}), v({40, 12, 97})}) {
    const Semigroup sg(make_delta_n(seq));
    const auto fam = build_approximates(sg);
    for (std::size_t i = 2; i < fam.size(); ++i) {
      const auto q = fam.expand(f7, i);
      CHECK(!q.is_zero());
      CHECK(q.degree_y() <= fam.n()[i - 1] * fam.expand(f7, i - 1).degree_y());
    }
  }
}

TEST_CASE("basis") {
  const Semigroup sg(build_type_c(make_delta_n(v({11, 9}))));
  const auto fam = build_approximates(sg);
  auto column = [&](const SemiValue& alpha) {
    std::vector<std::string> out;
    for (const auto& b : basis_for(sg, fam, alpha)) out.push_back(render_exponents(b.exponents));
    return out;
  };
  CHECK(column(LexPair{8, 2}) == std::vector<std::string>{"00", "01", "10", "02"});
  CHECK(column(LexPair{0, 0}) == std::vector<std::string>{"00"});
  const auto upto = column(LexPair{13, 3});
  CHECK(upto.size() == 8);  // the constant plus the seven nonzero members
  CHECK(upto.back() == "12");

  for (const auto& alpha : {SemiValue(LexPair{30, 6}), SemiValue(LexPair{41, 9})}) {
    const auto basis = basis_for(sg, fam, alpha);
    CHECK(basis.size() == sg.enumerate(alpha).size());
    for (std::size_t i = 1; i < basis.size(); ++i) CHECK(compare(basis[i - 1].weight, basis[i].weight) < 0);
    for (const auto& b : basis) {
      SemiValue w = sg.zero();
      const auto gens = sg.generators();
      for (std::size_t i = 0; i < b.exponents.size(); ++i) {
        for (std::int64_t c = 0; c < b.exponents[i]; ++c) w = add(w, gens[i]);
      }
      CHECK(compare(w, b.weight) == 0);
    }
  }
}

TEST_CASE("evaluation") {
  CHECK(poly_eval(f7, BivarPoly::constant(1), 3, 5) == 1);
  CHECK(poly_eval(f7, poly(f7, {{1, 0, 3}, {-1, 2, 0}}), 2, 2) == 4);
  const Field f2(default_field_spec(2, 1));
  const auto s = poly_add(f2, BivarPoly::x(), BivarPoly::y());
  CHECK(poly_pow(f2, s, 2) == poly(f2, {{1, 2, 0}, {1, 0, 2}}));

  // Evaluating the recursion directly agrees with evaluating the expansion.
  const auto fam = build_approximates(Semigroup(make_delta_n(v({36, 24, 8, 18, 13}))));
  std::mt19937 rng(7);
  for (int t = 0; t < 50; ++t) {
    const Field::Elem x = rng() % 7;
    const Field::Elem y = rng() % 7;
    const auto vals = fam.eval_all(f7, x, y);
    for (std::size_t i = 0; i < fam.size(); ++i) CHECK(vals[i] == poly_eval(f7, fam.expand(f7, i), x, y));
  }
}

TEST_CASE("rendering") {
  CHECK(render(f7, poly(f7, {{1, 0, 3}, {-1, 2, 0}})) == "y^3 + 6*x^2");
}
