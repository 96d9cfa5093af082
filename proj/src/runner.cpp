#include "deltacode/runner.hpp"

#include <sstream>

#include "deltacode/approximants.hpp"
#include "deltacode/codes.hpp"
#include "deltacode/error.hpp"

namespace deltacode {

namespace {

template <class T, class F>
std::string join(const std::vector<T>& xs, F&& fmt, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + fmt(xs[i]);
  return out;
}

std::string int_set(const std::vector<std::int64_t>& xs) {
  return "{" + join(xs, [](std::int64_t v) { return std::to_string(v); }) + "}";
}

std::string pair_str(const IntPair& p) {
  return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")";
}

std::string cf_str(const std::vector<std::int64_t>& digits) {
  std::string out = "<";
  for (std::size_t i = 0; i < digits.size(); ++i) {
    out += (i == 0 ? "" : (i == 1 ? ";" : ",")) + std::to_string(digits[i]);
  }
  return out + ">";
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

std::string validate_report(const std::vector<std::int64_t>& seq) {
  auto result = validate_n(seq);
  if (const auto* v = std::get_if<Violation>(&result)) {
    throw Error(Errc::not_a_delta_sequence, int_set(seq) + " violates " + describe(*v));
  }
  const auto& s = std::get<DeltaN>(result).structure();
  std::ostringstream out;
  out << "sequence: " << int_set(seq) << "\n";
  out << "delta-sequence: yes\n";
  out << "d: " << join(s.d, [](std::int64_t v) { return std::to_string(v); }, " ") << "\n";
  out << "n: " << join(s.n, [](std::int64_t v) { return std::to_string(v); }, " ") << "\n";
  out << "newton pairs: "
      << join(s.newton, [](const NewtonPair& p) { return "(" + std::to_string(p.e) + "," + std::to_string(p.m) + ")"; }, " ")
      << "\n";
  out << "continued fraction: " << cf_str(s.cf) << "\n";
  out << "branch: " << (s.branch == NewtonBranch::dividing ? "dividing" : "nondividing") << "\n";
  return out.str();
}

std::string construct_report(const DeltaSequence& seq) {
  std::ostringstream out;
  if (const auto* n = std::get_if<DeltaN>(&seq)) {
    out << int_set(n->values()) << "\n";
  } else if (const auto* c = std::get_if<DeltaZ2>(&seq)) {
    const auto& w = c->witness();
    out << "{" << join(c->values(), pair_str) << "}\n";
    out << "underlying: " << int_set(w.dstar.values()) << "\n";
    out << "continued fraction: " << cf_str(w.digits) << "\n";
    out << "(A,B) = " << pair_str(w.ab) << "\n";
    out << "(A',B') = " << pair_str(w.ab_prev) << "\n";
  } else if (const auto* d = std::get_if<DeltaR>(&seq)) {
    const auto& w = d->witness();
    std::vector<std::string> items;
    for (const auto& h : d->head()) items.push_back(to_string(h));
    items.push_back(to_string(d->tail()));
    out << "{" << join(items, [](const std::string& s) { return s; }) << "}\n";
    out << "underlying: " << int_set(w.dstar.values()) << "\n";
    out << "a = " << to_string(w.a) << " = " << cf_str(w.digits) << " with tail " << to_string(w.b) << "\n";
  } else {
    const auto& q = std::get<DeltaQ>(seq);
    out << "{" << join(q.normalized(), [](const Rational& r) { return to_string(r); }) << "}\n";
    for (std::size_t i = 0; i < q.prefixes().size(); ++i) {
      out << "prefix " << i << ": " << int_set(q.prefixes()[i].values());
      if (i > 0) {
        const auto& ch = q.choices()[i - 1];
        out << " (z = " << ch.z << ", next = " << ch.next << ")";
      }
      out << "\n";
    }
  }
  return out.str();
}

std::string approximates_report(const Semigroup& sg, const Field& f, std::size_t depth) {
  const auto fam = build_approximates(sg, depth);
  std::ostringstream out;
  for (std::size_t i = 0; i < fam.size(); ++i) {
    out << "q_" << i << " = " << render(f, fam.expand(f, i)) << "  [weight " << to_string(fam.weights()[i]) << "]\n";
  }
  return out.str();
}

std::string semigroup_report(const Semigroup& sg, const std::optional<std::string>& bound_text) {
  const SemiValue bound = bound_text ? parse_semivalue(sg, *bound_text) : sg.level_bound(4);
  std::ostringstream out;
  out << "generators: " << join(sg.generators(), [](const SemiValue& v) { return to_string(v); }) << "\n";
  for (const auto& mem : sg.enumerate(bound)) {
    out << to_string(mem.value) << "  " << render_exponents(mem.exponents) << "\n";
  }
  return out.str();
}

}  // namespace

std::optional<Subcommand> parse_subcommand(std::string_view name) {
  if (name == "validate") return Subcommand::validate;
  if (name == "construct") return Subcommand::construct;
  if (name == "approximates") return Subcommand::approximates;
  if (name == "semigroup") return Subcommand::semigroup;
  if (name == "table") return Subcommand::table;
  return std::nullopt;
}

DeltaSequence build_sequence(const DeltaConfig& delta) {
  const DeltaN base = make_delta_n(delta.sequence);
  switch (delta.type) {
    case 'C':
      return build_type_c(base);
    case 'D':
      return build_type_d(base, delta.digits, QuadExt::sqrt_of(delta.radicand));
    case 'E':
      return build_type_e(base, delta.steps, delta.choices);
    default:
      return base;
  }
}

SemiValue parse_semivalue(const Semigroup& sg, const std::string& raw) {
  const std::string text = trim(raw);
  if (sg.kind() == SeqKind::c) {
    if (text.size() < 5 || text.front() != '(' || text.back() != ')') {
      throw Error(Errc::parse_error, "expected a pair (a,b), got '" + text + "'");
    }
    const auto comma = text.find(',');
    if (comma == std::string::npos) throw Error(Errc::parse_error, "expected a pair (a,b), got '" + text + "'");
    const auto a = parse_rational(trim(text.substr(1, comma - 1)));
    const auto b = parse_rational(trim(text.substr(comma + 1, text.size() - comma - 2)));
    if (a.get_den() != 1 || b.get_den() != 1) throw Error(Errc::parse_error, "pair entries must be integers");
    return LexPair{to_int64(a.get_num()), to_int64(b.get_num())};
  }
  if (sg.kind() == SeqKind::d) {
    QuadValue v{Rational(0), 0, sg.tau()};
    const auto plus = text.find('+');
    std::string rpart = text;
    if (text.find("tau") != std::string::npos) {
      std::string tpart = plus == std::string::npos ? text : trim(text.substr(plus + 1));
      rpart = plus == std::string::npos ? "0" : trim(text.substr(0, plus));
      const auto star = tpart.find('*');
      const std::string coeff = star == std::string::npos ? "1" : trim(tpart.substr(0, star));
      const std::string sym = trim(star == std::string::npos ? tpart : tpart.substr(star + 1));
      if (sym != "tau") throw Error(Errc::parse_error, "malformed value '" + text + "'");
      const auto m = parse_rational(coeff);
      if (m.get_den() != 1) throw Error(Errc::parse_error, "tau coefficient must be an integer");
      v.m = to_int64(m.get_num());
    }
    v.r = parse_rational(rpart);
    return v;
  }
  return parse_rational(text);
}

std::string run_job(const JobConfig& cfg, Subcommand cmd) {
  if (cmd == Subcommand::validate) return validate_report(cfg.delta.sequence);
  const DeltaSequence seq = build_sequence(cfg.delta);
  if (cmd == Subcommand::construct) return construct_report(seq);
  const Semigroup sg(seq);
  const Field f(cfg.field);
  if (cmd == Subcommand::approximates) return approximates_report(sg, f, cfg.job.depth);
  if (cmd == Subcommand::semigroup) return semigroup_report(sg, cfg.job.bound);
  if (cfg.points.empty()) throw Error(Errc::invalid_argument, "table job needs a [points] section");
  const EvalMap ev(f, cfg.points);
  TableOptions opts;
  opts.mode = cfg.job.mode;
  opts.compute_d = cfg.job.distance;
  opts.literal_dev = cfg.job.literal_dev;
  opts.min_k = cfg.job.min_k;
  return table_csv(scan_table(sg, ev, opts));
}

}  // namespace deltacode
