#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "deltacode.h"

namespace {

int report(dc_status status) {
  std::cerr << "error [" << dc_last_error_code() << "]: " << dc_last_error() << "\n";
  return static_cast<int>(status);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Codes from delta-sequences: validation, construction and Feng-Rao tables"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_path;
  std::string mode;
  for (const char* name : {"validate", "construct", "approximates", "semigroup", "table"}) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("--config", config_path, "job configuration file")->required();
    sub->add_option("--out", out_path, "write the result here instead of stdout");
    sub->add_option("--mode", mode, "table rows: jumps or full")->check(CLI::IsMember({"jumps", "full"}));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  const std::string subcommand = app.get_subcommands().front()->get_name();

  std::ifstream in(config_path, std::ios::binary);
  if (!in) {
    std::cerr << "error [parse_error]: cannot read " << config_path << "\n";
    return 2;
  }
  std::ostringstream text;
  text << in.rdbuf();

  dc_job* job = nullptr;
  if (const auto st = dc_job_parse(text.str().c_str(), &job); st != DC_OK) return report(st);

  char* output = nullptr;
  const auto st = dc_job_run(job, subcommand.c_str(), mode.empty() ? nullptr : mode.c_str(), &output);
  dc_job_free(job);
  if (st != DC_OK) return report(st);

  int rc = 0;
  if (out_path.empty()) {
    std::fputs(output, stdout);
  } else {
    std::ofstream out(out_path, std::ios::binary);
    out << output;
    if (!out) {
      std::cerr << "error [io]: cannot write " << out_path << "\n";
      rc = 1;
    }
  }
  dc_string_free(output);
  return rc;
}
