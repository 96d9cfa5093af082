#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "../oracles.hpp"
#include "deltacode/config.hpp"
#include "deltacode/error.hpp"
#include "deltacode/runner.hpp"

using namespace deltacode;

namespace {

std::vector<std::int64_t> v(std::initializer_list<std::int64_t> xs) { return xs; }

JobConfig load(const std::string& name) {
  std::ifstream in(std::string(DELTACODE_CONFIG_DIR) + "/" + name + ".cfg");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

struct Setting {
  JobConfig cfg;
  Field field;
  Semigroup sg;
  ApproximateFamily fam;
  EvalMap ev;

  explicit Setting(const std::string& name)
      : cfg(load(name)),
        field(cfg.field),
        sg(build_sequence(cfg.delta)),
        fam(build_approximates(sg)),
        ev(field, cfg.points) {}
};

Matrix from_rows(const std::vector<std::vector<Field::Elem>>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

}  // namespace

TEST_CASE("evaluation matrix") {
  Setting s("table2");
  const std::vector<BasisElement> constant{{v({0, 0}), s.sg.zero()}};
  const auto one = evaluation_matrix(s.ev, s.fam, constant);
  for (std::size_t j = 0; j < 12; ++j) CHECK(one.at(0, j) == 1);

  // q_1 = y at the twelve listed points.
  const auto ys = s.ev.row(s.fam, v({0, 1}));
  CHECK(ys == std::vector<Field::Elem>{1, 2, 3, 4, 5, 6, 2, 3, 4, 5, 6, 1});
  CHECK(evaluation_matrix(s.ev, s.fam, {}).rows == 0);
}

TEST_CASE("codes and duality") {
  Setting s("table2");
  CHECK(code_at(s.sg, s.fam, s.ev, LexPair{4, 1}).k == 10);
  CHECK(code_at(s.sg, s.fam, s.ev, LexPair{20, 5}).k == 1);
  const auto c0 = code_at(s.sg, s.fam, s.ev, s.sg.zero());
  CHECK(c0.dim_e == 1);
  CHECK(c0.k == 11);
  CHECK_THROWS_AS(code_at(s.sg, s.fam, s.ev, LexPair{7, 2}), Error);

  std::size_t prev = 0;
  for (const auto& m : s.sg.enumerate(LexPair{24, 6})) {
    const auto code = code_at(s.sg, s.fam, s.ev, m.value);
    CHECK(code.dim_e + code.k == 12);
    CHECK(code.dim_e >= prev);
    prev = code.dim_e;
    CHECK(mat_rank(s.field, code.gen_e) == code.dim_e);
    if (code.k > 0) {
      CHECK(mat_rank(s.field, code.gen_c) == code.k);
      CHECK(oracle::all_zero(oracle::multiply_transpose(s.field, code.gen_e, code.gen_c)));
    }
  }
}

TEST_CASE("distances on the twelve F_7 points") {
  Setting s("table2");
  const auto rows = scan_table(s.sg, s.ev);
  std::vector<std::int64_t> d, dev;
  for (const auto& r : rows) {
    d.push_back(*r.d);
    dev.push_back(r.d_ev);
  }
  CHECK(d == v({2, 3, 4, 4, 4, 5, 5, 6, 6, 10}));
  CHECK(dev == v({2, 3, 3, 3, 4, 5, 5, 6, 6, 10}));

  const Scan scan = scan_members(s.sg, s.ev);
  CHECK(feng_rao(scan, LexPair{4, 1}).d_ev == 2);
  CHECK(feng_rao(scan, LexPair{12, 3}).d_ev == 5);
  CHECK(feng_rao(scan, LexPair{20, 5}).d_ev == 10);
  // Rank 12 is first reached right after (20,5).
  CHECK(compare(omega_n_bound(s.sg, s.ev), LexPair{21, 5}) == 0);

  // Small duals checked against every codeword.
  for (const auto& r : rows) {
    if (r.k > 6) continue;
    const auto code = code_at(s.sg, s.fam, s.ev, r.alpha);
    CHECK(*r.d == oracle::min_weight(s.field, code.gen_c));
  }
}

TEST_CASE("distance search matches enumeration") {
  std::mt19937 rng(2024);
  const std::vector<FieldSpec> specs{default_field_spec(7, 1), default_field_spec(2, 3), default_field_spec(5, 1)};
  int checked = 0;
  for (int t = 0; t < 20; ++t) {
    const Field f(specs[t % specs.size()]);
    const std::size_t n = 8 + rng() % 5;
    const std::size_t dual = f.size() == 7 ? 6 : (f.size() == 8 ? 6 : 7);
    const std::size_t r = n - dual;
    Matrix gen(r, n);
    for (auto& e : gen.data) e = rng() % f.size();
    if (mat_rank(f, gen) != r) continue;
    const auto kernel = mat_rank_kernel(f, gen).kernel;
    REQUIRE(kernel.rows == dual);
    REQUIRE(oracle::all_zero(oracle::multiply_transpose(f, gen, kernel)));
    const auto expected = oracle::min_weight(f, kernel);
    CHECK(min_distance(f, gen, DistanceMethod::dependency) == expected);
    CHECK(min_distance(f, gen, DistanceMethod::enumeration) == expected);
    CHECK(min_distance(f, gen) == expected);
    ++checked;
  }
  CHECK(checked >= 18);
}

TEST_CASE("Reed-Solomon codes on a line") {
  const Field f(default_field_spec(7, 1));
  std::vector<Point> pts;
  for (Field::Elem x = 0; x < 6; ++x) pts.push_back({x, f.add(x, 1)});
  const EvalMap ev(f, pts);
  const Semigroup sg(build_type_c(make_delta_n(v({11, 9}))));
  const auto fam = build_approximates(sg);
  for (std::int64_t l = 0; l <= 5; ++l) {
    const auto code = code_at(sg, fam, ev, LexPair{4 * l, l});
    std::vector<std::vector<Field::Elem>> vander;
    for (std::int64_t j = 0; j <= l; ++j) {
      std::vector<Field::Elem> row;
      for (const auto& p : pts) row.push_back(f.pow(p.x, static_cast<std::uint64_t>(j)));
      vander.push_back(row);
    }
    CAPTURE(l);
    CHECK(code.dim_e == static_cast<std::size_t>(l + 1));
    CHECK(same_row_space(f, code.gen_e, from_rows(vander, pts.size())));
  }
}

TEST_CASE("row invariants across settings") {
  for (const char* name : {"table2", "table3_d2", "table3_e", "tress_c", "tress_d", "table4", "table6_c"}) {
    CAPTURE(name);
    Setting s(name);
    TableOptions opts;
    opts.min_k = s.cfg.job.min_k;
    const auto rows = scan_table(s.sg, s.ev, opts);
    REQUIRE(!rows.empty());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto& r = rows[i];
      if (i > 0) CHECK(r.k < rows[i - 1].k);
      CHECK(r.d_fr <= r.d_ev);
      CHECK(r.d_ev <= *r.d);
      CHECK(*r.d <= static_cast<std::int64_t>(s.ev.n() - r.k + 1));
    }
  }
}

TEST_CASE("full rank is reached") {
  Setting s("table4");
  const Scan scan = scan_members(s.sg, s.ev);
  CHECK(scan.omega_n().rank == 31);
  CHECK(scan.entries[scan.entries.size() - 2].rank == 30);

  const Field f(default_field_spec(7, 1));
  const EvalMap single(f, {{Point{3, 4}}});
  const Semigroup sg(build_type_c(make_delta_n(v({11, 9}))));
  CHECK(compare(omega_n_bound(sg, single), sg.zero()) == 0);
  CHECK(scan_table(sg, single).empty());
}

TEST_CASE("goppa distance") {
  const Semigroup line(make_delta_n(v({1})));
  for (std::int64_t a = 0; a < 10; ++a) CHECK(goppa_distance(line, make_rational(a)) == a + 1);
  Setting s("table2");
  CHECK(goppa_distance(s.sg, LexPair{9, 2}) == 3);
  CHECK_THROWS_AS(goppa_distance(s.sg, LexPair{7, 2}), Error);
  const Scan scan = scan_members(s.sg, s.ev);
  for (const auto& r : scan_table(s.sg, s.ev)) CHECK(r.goppa <= feng_rao(scan, r.alpha).d_fr);
}
