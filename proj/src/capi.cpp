#include "deltacode.h"

#include <cstring>
#include <new>
#include <string>

#include "deltacode/config.hpp"
#include "deltacode/error.hpp"
#include "deltacode/runner.hpp"

struct dc_job {
  deltacode::JobConfig cfg;
};

namespace {

thread_local std::string last_message;
thread_local std::string last_code;
thread_local unsigned long last_line = 0;

void clear_error() {
  last_message.clear();
  last_code.clear();
  last_line = 0;
}

dc_status fail(dc_status status, std::string_view code, const std::string& message, unsigned long line = 0) {
  last_code = std::string(code);
  last_message = message;
  last_line = line;
  return status;
}

template <class F>
dc_status guarded(F&& body) {
  clear_error();
  try {
    return body();
  } catch (const deltacode::ParseError& e) {
    return fail(DC_PARSE_ERROR, "parse_error", e.what(), static_cast<unsigned long>(e.line()));
  } catch (const deltacode::Error& e) {
    const auto status = e.code() == deltacode::Errc::parse_error ? DC_PARSE_ERROR : DC_DOMAIN_ERROR;
    return fail(status, deltacode::errc_name(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(DC_DOMAIN_ERROR, "out_of_memory", "out of memory");
  } catch (const std::exception& e) {
    return fail(DC_DOMAIN_ERROR, "internal", e.what());
  }
}

}  // namespace

extern "C" {

dc_status dc_job_parse(const char* text, dc_job** out) {
  if (out == nullptr) return fail(DC_PARSE_ERROR, "invalid_argument", "null output handle");
  *out = nullptr;
  if (text == nullptr) return fail(DC_PARSE_ERROR, "invalid_argument", "null config text");
  return guarded([&] {
    auto job = new dc_job{deltacode::parse_config(text)};
    *out = job;
    return DC_OK;
  });
}

void dc_job_free(dc_job* job) { delete job; }

dc_status dc_job_run(const dc_job* job, const char* subcommand, const char* mode, char** output) {
  if (output == nullptr) return fail(DC_DOMAIN_ERROR, "invalid_argument", "null output pointer");
  *output = nullptr;
  if (job == nullptr || subcommand == nullptr) return fail(DC_DOMAIN_ERROR, "invalid_argument", "null argument");
  return guarded([&] {
    const auto cmd = deltacode::parse_subcommand(subcommand);
    if (!cmd) return fail(DC_PARSE_ERROR, "parse_error", std::string("unknown subcommand '") + subcommand + "'");
    deltacode::JobConfig cfg = job->cfg;
    if (mode != nullptr) {
      if (std::strcmp(mode, "jumps") == 0) {
        cfg.job.mode = deltacode::ScanMode::jumps;
      } else if (std::strcmp(mode, "full") == 0) {
        cfg.job.mode = deltacode::ScanMode::full;
      } else {
        return fail(DC_PARSE_ERROR, "parse_error", std::string("unknown mode '") + mode + "'");
      }
    }
    const std::string text = deltacode::run_job(cfg, *cmd);
    char* buf = new char[text.size() + 1];
    std::memcpy(buf, text.c_str(), text.size() + 1);
    *output = buf;
    return DC_OK;
  });
}

void dc_string_free(char* s) { delete[] s; }

const char* dc_last_error(void) { return last_message.c_str(); }
const char* dc_last_error_code(void) { return last_code.c_str(); }
unsigned long dc_last_error_line(void) { return last_line; }

const char* dc_version(void) { return "1.0.0"; }

}  // extern "C"
