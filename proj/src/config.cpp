#include "deltacode/config.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>
#include <sstream>

#include "deltacode/error.hpp"

namespace deltacode {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

std::int64_t parse_int(const std::string& tok, std::size_t line, const std::string& what) {
  std::int64_t v = 0;
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  if (!tok.empty() && tok[0] == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || first == last) {
    throw ParseError(line, "line " + std::to_string(line) + ": " + what + " is not an integer: '" + tok + "'");
  }
  return v;
}

std::int64_t parse_nonneg(const std::string& tok, std::size_t line, const std::string& what) {
  const auto v = parse_int(tok, line, what);
  if (v < 0) throw ParseError(line, "line " + std::to_string(line) + ": " + what + " must be non-negative");
  return v;
}

bool parse_bool(const std::string& tok, std::size_t line, const std::string& what) {
  if (tok == "true" || tok == "yes" || tok == "1") return true;
  if (tok == "false" || tok == "no" || tok == "0") return false;
  throw ParseError(line, "line " + std::to_string(line) + ": " + what + " must be true or false");
}

std::vector<std::int64_t> parse_int_list(const std::string& value, std::size_t line, const std::string& what) {
  std::string cleaned = value;
  std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
  std::replace(cleaned.begin(), cleaned.end(), '{', ' ');
  std::replace(cleaned.begin(), cleaned.end(), '}', ' ');
  std::vector<std::int64_t> out;
  for (const auto& tok : split_ws(cleaned)) out.push_back(parse_int(tok, line, what));
  if (out.empty()) throw ParseError(line, "line " + std::to_string(line) + ": " + what + " is empty");
  return out;
}

struct Entry {
  std::string value;
  std::size_t line = 0;
};

struct RawPoint {
  std::string a, b;
  std::size_t line = 0;
};

const std::map<std::string, std::set<std::string>>& allowed_keys() {
  static const std::map<std::string, std::set<std::string>> keys = {
      {"field", {"p", "m", "modulus", "primitive"}},
      {"delta", {"type", "sequence", "digits", "sqrt", "steps", "choices"}},
      {"points", {}},
      {"job", {"mode", "depth", "bound", "distance", "literal_dev", "min_k"}},
  };
  return keys;
}

}  // namespace

Field::Elem parse_coordinate(const Field& f, const std::string& token) {
  if (token.empty()) throw Error(Errc::parse_error, "empty coordinate");
  if (token[0] == 'g') {
    if (token == "g") return f.generator();
    if (token.size() < 3 || token[1] != '^') throw Error(Errc::parse_error, "malformed power of g: '" + token + "'");
    const std::string e = token.substr(2);
    std::int64_t k = 0;
    auto [ptr, ec] = std::from_chars(e.data(), e.data() + e.size(), k);
    if (ec != std::errc() || ptr != e.data() + e.size() || k < 0) {
      throw Error(Errc::parse_error, "malformed power of g: '" + token + "'");
    }
    return f.generator_pow(k);
  }
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw Error(Errc::parse_error, "malformed coordinate: '" + token + "'");
  }
  if (v < 0 || v >= static_cast<std::int64_t>(f.p())) {
    throw Error(Errc::parse_error, "coordinate " + token + " outside 0.." + std::to_string(f.p() - 1));
  }
  if (f.m() > 1 && v > 1) throw Error(Errc::parse_error, "coordinate " + token + " must be written as a power of g");
  return f.from_int(v);
}

JobConfig parse_config(const std::string& text) {
  std::map<std::string, std::map<std::string, Entry>> sections;
  std::map<std::string, std::size_t> section_line;
  std::vector<RawPoint> raw_points;

  std::string current;
  std::istringstream in(text);
  std::size_t lineno = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++lineno;
    const auto hash = raw.find('#');
    const std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty()) continue;
    const std::string at = "line " + std::to_string(lineno) + ": ";
    if (line.front() == '[') {
      if (line.back() != ']') throw ParseError(lineno, at + "malformed section header");
      current = trim(line.substr(1, line.size() - 2));
      if (!allowed_keys().contains(current)) throw ParseError(lineno, at + "unknown section [" + current + "]");
      if (section_line.contains(current)) throw ParseError(lineno, at + "repeated section [" + current + "]");
      section_line[current] = lineno;
      sections[current];
      continue;
    }
    if (current.empty()) throw ParseError(lineno, at + "content before the first section");
    if (current == "points") {
      const auto toks = split_ws(line);
      if (toks.size() != 2) throw ParseError(lineno, at + "a point needs exactly two coordinates");
      raw_points.push_back({toks[0], toks[1], lineno});
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError(lineno, at + "expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (!allowed_keys().at(current).contains(key)) {
      throw ParseError(lineno, at + "unknown key '" + key + "' in [" + current + "]");
    }
    if (value.empty()) throw ParseError(lineno, at + "empty value for '" + key + "'");
    auto [it, fresh] = sections[current].try_emplace(key, Entry{value, lineno});
    if (!fresh) throw ParseError(lineno, at + "repeated key '" + key + "'");
  }

  if (!sections.contains("field")) throw ParseError(0, "missing [field] section");

  JobConfig cfg;

  // [field]
  const auto& field = sections["field"];
  if (!field.contains("p")) throw ParseError(section_line["field"], "missing key 'p' in [field]");
  const auto& pe = field.at("p");
  const auto p = parse_int(pe.value, pe.line, "p");
  if (p < 2 || p > 65521 || !is_prime(static_cast<std::uint64_t>(p))) {
    throw ParseError(pe.line, "line " + std::to_string(pe.line) + ": p = " + pe.value + " is not prime");
  }
  std::int64_t m = 1;
  if (field.contains("m")) {
    const auto& me = field.at("m");
    m = parse_int(me.value, me.line, "m");
    if (m < 1 || m > 32) throw ParseError(me.line, "line " + std::to_string(me.line) + ": m must be between 1 and 32");
  }
  try {
    cfg.field = default_field_spec(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(m));
  } catch (const Error& e) {
    throw ParseError(pe.line, "line " + std::to_string(pe.line) + ": " + e.what());
  }
  if (field.contains("primitive")) {
    const auto& e = field.at("primitive");
    cfg.field.primitive = parse_bool(e.value, e.line, "primitive");
  }
  if (field.contains("modulus")) {
    const auto& e = field.at("modulus");
    auto toks = split_ws(e.value);
    if (toks.size() == 1 && p < 10) {  // compact form "101001"
      std::vector<std::string> chars;
      for (char c : toks[0]) chars.emplace_back(1, c);
      toks = chars;
    }
    std::vector<std::uint32_t> coeffs;
    for (const auto& t : toks) {
      const auto c = parse_int(t, e.line, "modulus coefficient");
      if (c < 0 || c >= p) throw ParseError(e.line, "line " + std::to_string(e.line) + ": modulus coefficient out of range");
      coeffs.push_back(static_cast<std::uint32_t>(c));
    }
    if (m > 1) cfg.field.modulus = coeffs;
  }
  std::optional<Field> f;
  try {
    f.emplace(cfg.field);
  } catch (const Error& e) {
    const auto line = field.contains("modulus") ? field.at("modulus").line : pe.line;
    throw ParseError(line, "line " + std::to_string(line) + ": " + e.what());
  }

  // [delta]
  if (!sections.contains("delta")) throw ParseError(0, "missing [delta] section");
  const auto& delta = sections["delta"];
  const auto need = [&](const char* key) -> const Entry& {
    if (!delta.contains(key)) throw ParseError(section_line["delta"], std::string("missing key '") + key + "' in [delta]");
    return delta.at(key);
  };
  const auto& te = need("type");
  if (te.value.size() != 1 || std::string("NCDE").find(te.value[0]) == std::string::npos) {
    throw ParseError(te.line, "line " + std::to_string(te.line) + ": unknown delta type '" + te.value + "' (expected N, C, D or E)");
  }
  cfg.delta.type = te.value[0];
  const auto& se = need("sequence");
  cfg.delta.sequence = parse_int_list(se.value, se.line, "sequence");
  const auto forbid = [&](const char* key, const char* types) {
    if (delta.contains(key) && std::string(types).find(cfg.delta.type) == std::string::npos) {
      const auto& e = delta.at(key);
      throw ParseError(e.line, "line " + std::to_string(e.line) + ": key '" + key + "' does not apply to type " + te.value);
    }
  };
  forbid("digits", "D");
  forbid("sqrt", "D");
  forbid("steps", "E");
  forbid("choices", "E");
  if (cfg.delta.type == 'D') {
    const auto& de = need("digits");
    cfg.delta.digits = parse_int_list(de.value, de.line, "digits");
    const auto& re = need("sqrt");
    cfg.delta.radicand = parse_int(re.value, re.line, "sqrt");
    if (cfg.delta.radicand < 2) throw ParseError(re.line, "line " + std::to_string(re.line) + ": sqrt must be at least 2");
  }
  if (cfg.delta.type == 'E') {
    if (delta.contains("steps")) {
      const auto& e = delta.at("steps");
      cfg.delta.steps = static_cast<std::size_t>(parse_nonneg(e.value, e.line, "steps"));
    }
    if (delta.contains("choices")) {
      const auto& e = delta.at("choices");
      for (const auto& tok : split_ws(e.value)) {
        const auto colon = tok.find(':');
        if (colon == std::string::npos) {
          throw ParseError(e.line, "line " + std::to_string(e.line) + ": choice '" + tok + "' is not z:next");
        }
        cfg.delta.choices.push_back({parse_int(tok.substr(0, colon), e.line, "z"),
                                     parse_int(tok.substr(colon + 1), e.line, "next")});
      }
      cfg.delta.steps = std::max(cfg.delta.steps, cfg.delta.choices.size());
    }
  }

  // [points]
  for (const auto& rp : raw_points) {
    Point pt;
    try {
      pt.x = parse_coordinate(*f, rp.a);
      pt.y = parse_coordinate(*f, rp.b);
    } catch (const Error& e) {
      throw ParseError(rp.line, "line " + std::to_string(rp.line) + ": " + e.what());
    }
    if (std::find(cfg.points.begin(), cfg.points.end(), pt) != cfg.points.end()) {
      throw ParseError(rp.line, "duplicate point at line " + std::to_string(rp.line));
    }
    cfg.points.push_back(pt);
  }

  // [job]
  if (sections.contains("job")) {
    const auto& job = sections["job"];
    if (job.contains("mode")) {
      const auto& e = job.at("mode");
      if (e.value == "jumps") {
        cfg.job.mode = ScanMode::jumps;
      } else if (e.value == "full") {
        cfg.job.mode = ScanMode::full;
      } else {
        throw ParseError(e.line, "line " + std::to_string(e.line) + ": mode must be jumps or full");
      }
    }
    if (job.contains("depth")) {
      const auto& e = job.at("depth");
      cfg.job.depth = static_cast<std::size_t>(parse_nonneg(e.value, e.line, "depth"));
    }
    if (job.contains("bound")) cfg.job.bound = job.at("bound").value;
    if (job.contains("distance")) {
      const auto& e = job.at("distance");
      cfg.job.distance = parse_bool(e.value, e.line, "distance");
    }
    if (job.contains("min_k")) {
      const auto& e = job.at("min_k");
      cfg.job.min_k = static_cast<std::size_t>(parse_nonneg(e.value, e.line, "min_k"));
    }
    if (job.contains("literal_dev")) {
      const auto& e = job.at("literal_dev");
      cfg.job.literal_dev = parse_bool(e.value, e.line, "literal_dev");
    }
  }
  return cfg;
}

}  // namespace deltacode
