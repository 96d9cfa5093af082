#include <doctest.h>

#include <fstream>
#include <sstream>

#include "deltacode/config.hpp"
#include "deltacode/error.hpp"
#include "deltacode/runner.hpp"

using namespace deltacode;

namespace {

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(DELTACODE_CONFIG_DIR) + "/" + name + ".cfg");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::size_t error_line(const std::string& text) {
  try {
    parse_config(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 999;
}

std::string error_text(const std::string& text) {
  try {
    parse_config(text);
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

const std::string base = "[field]\np = 7\n\n[delta]\ntype = C\nsequence = 11 9\n";

}  // namespace

TEST_CASE("fixtures") {
  const auto cfg = parse_config(slurp("table2"));
  CHECK(cfg.field.p == 7);
  CHECK(cfg.field.m == 1);
  CHECK(cfg.delta.type == 'C');
  CHECK(cfg.delta.sequence == std::vector<std::int64_t>{11, 9});
  CHECK(cfg.points.size() == 12);
  CHECK(cfg.points[11] == Point{2, 1});

  const auto f32 = parse_config(slurp("table4"));
  CHECK(f32.field.modulus == std::vector<std::uint32_t>{1, 0, 1, 0, 0, 1});
  CHECK(f32.points.size() == 31);
  const Field f(f32.field);
  CHECK(f32.points[0] == Point{f.generator(), f.generator()});

  const auto d = parse_config(slurp("table3_d2"));
  CHECK(d.delta.digits == std::vector<std::int64_t>{80, 1, 2});
  CHECK(d.delta.radicand == 3);
}

TEST_CASE("optional sections and keys") {
  const auto cfg = parse_config(base +
                                "[job]\nmode = full\ndepth = 3\nbound = (12,3)\ndistance = false\nmin_k = 4\n");
  CHECK(cfg.job.mode == ScanMode::full);
  CHECK(cfg.job.depth == 3);
  CHECK(cfg.job.bound == std::optional<std::string>("(12,3)"));
  CHECK(!cfg.job.distance);
  CHECK(cfg.job.min_k == 4);

  const auto e = parse_config("[field]\np = 7\n[delta]\ntype = E\nsequence = 3 1\nsteps = 1\nchoices = 2:3\n");
  REQUIRE(e.delta.choices.size() == 1);
  CHECK(e.delta.choices[0].z == 2);
  CHECK(e.delta.choices[0].next == 3);

  const auto compact = parse_config("[field]\np = 2\nm = 5\nmodulus = 101001\n[delta]\ntype = N\nsequence = 11 9\n");
  CHECK(compact.field.modulus == std::vector<std::uint32_t>{1, 0, 1, 0, 0, 1});
}

TEST_CASE("errors carry line numbers") {
  CHECK(error_line(base + "[points]\n1 1\n2 2\n1 1\n") == 10);
  CHECK(error_text(base + "[points]\n1 1\n2 2\n1 1\n") == "duplicate point at line 10");
  CHECK(error_text("") == "missing [field] section");
  CHECK(error_text("# only a comment\n") == "missing [field] section");
  CHECK(error_line("[field]\np = 8\n[delta]\ntype = C\nsequence = 11 9\n") == 2);
  CHECK(error_text("[field]\np = 8\n").find("not prime") != std::string::npos);
  CHECK(error_text("[field]\np = 7\n") == "missing [delta] section");
  CHECK(error_line("[field]\np = 2\nm = 5\n[delta]\ntype = C\nsequence = 11 9\n[points]\ng^ g^2\n") == 8);
  CHECK(error_line("[field]\np = 2\nm = 5\n[delta]\ntype = C\nsequence = 11 9\n[points]\ng^x g^2\n") == 8);
  CHECK(error_line("[field]\np = 7\n[delta]\ntype = Q\nsequence = 11 9\n") == 4);
  CHECK(error_line(base + "colour = red\n") == 7);
  CHECK(error_line(base + "[extra]\n") == 7);
  CHECK(error_line(base + "sequence = 1\n") == 7);
  CHECK(error_line(base + "[field]\n") == 7);
  CHECK(error_line(base + "[points]\n1 2 3\n") == 8);
  CHECK(error_line(base + "[points]\n1 9\n") == 8);
  CHECK(error_line("p = 7\n") == 1);
  CHECK(error_line(base + "[job]\nmode = sideways\n") == 8);
  CHECK_THROWS_AS(parse_config("[field]\np = 7\n[delta]\ntype = C\nsequence = 11 x\n"), ParseError);
}

TEST_CASE("subcommands and values") {
  CHECK(parse_subcommand("table") == Subcommand::table);
  CHECK(!parse_subcommand("tables"));
  const Semigroup c(build_sequence(parse_config(base).delta));
  CHECK(parse_semivalue(c, " (12,3) ") == SemiValue(LexPair{12, 3}));
  CHECK_THROWS_AS(parse_semivalue(c, "12"), Error);
  const Semigroup d(build_sequence(parse_config(slurp("table3_d2")).delta));
  CHECK(compare(parse_semivalue(d, "11/9 + tau"), QuadValue{make_rational(11, 9), 1, d.tau()}) == 0);
  CHECK(compare(parse_semivalue(d, "2*tau"), QuadValue{make_rational(0), 2, d.tau()}) == 0);
}

TEST_CASE("jobs are deterministic") {
  const auto cfg = parse_config(slurp("table2"));
  const auto first = run_job(cfg, Subcommand::table);
  CHECK(first == run_job(cfg, Subcommand::table));
  CHECK(first.rfind("alpha,exp,k,d,d_ev,d_fr,fr_bound,goppa\n", 0) == 0);
  CHECK_THROWS_AS(run_job(parse_config("[field]\np = 7\n[delta]\ntype = N\nsequence = 9 11\n"), Subcommand::validate),
                  Error);
}
