#include "deltacode/codes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>

#include "deltacode/error.hpp"

namespace deltacode {
namespace {

// Incremental row echelon form; insert() reports whether the rank grew.
class Echelon {
 public:
  Echelon(const Field& f, std::size_t cols) : f_(f), cols_(cols) {}

  bool insert(std::vector<Field::Elem> v) {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const auto c = v[pivots_[r]];
      if (c == 0) continue;
      for (std::size_t j = pivots_[r]; j < cols_; ++j) v[j] = f_.sub(v[j], f_.mul(c, rows_[r][j]));
    }
    std::size_t p = 0;
    while (p < cols_ && v[p] == 0) ++p;
    if (p == cols_) return false;
    const auto inv = f_.inv(v[p]);
    for (std::size_t j = p; j < cols_; ++j) v[j] = f_.mul(v[j], inv);
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
  }
  std::size_t rank() const { return rows_.size(); }

 private:
  const Field& f_;
  std::size_t cols_;
  std::vector<std::vector<Field::Elem>> rows_;
  std::vector<std::size_t> pivots_;
};

ApproximateFamily family_for(const Semigroup& sg, const ApproximateFamily& fam, const SemiValue& alpha) {
  const Semigroup cover = sg.covering(alpha);
  if (cover.generator_count() <= fam.size()) return fam;
  return build_approximates(cover);
}

// Smallest w such that some w columns are dependent, searching independent
// column sets of size w-1 and keeping the remaining columns reduced modulo
// their span.
class DependencySearch {
 public:
  DependencySearch(const Field& f, const Matrix& m) : f_(f), rows_(m.rows), cols_(m.cols) {
    residual_.resize(cols_, std::vector<Field::Elem>(rows_));
    for (std::size_t j = 0; j < cols_; ++j) {
      for (std::size_t i = 0; i < rows_; ++i) residual_[j][i] = m.at(i, j);
    }
  }

  std::int64_t run() {
    for (std::size_t w = 1; w <= rows_ + 1; ++w) {
      if (search(w - 1, 0, residual_)) return static_cast<std::int64_t>(w);
    }
    return static_cast<std::int64_t>(rows_ + 1);
  }

 private:
  bool is_zero(const std::vector<Field::Elem>& v) const {
    return std::all_of(v.begin(), v.end(), [](auto e) { return e == 0; });
  }

  // `remaining` more independent columns to choose from index `start` on.
  bool search(std::size_t remaining, std::size_t start, const std::vector<std::vector<Field::Elem>>& res) {
    if (remaining == 0) {
      for (std::size_t j = start; j < cols_; ++j) {
        if (is_zero(res[j])) return true;
      }
      return false;
    }
    // Leave at least one column after the chosen ones to close the set.
    for (std::size_t c = start; c + remaining < cols_; ++c) {
      const auto& col = res[c];
      std::size_t p = 0;
      while (p < rows_ && col[p] == 0) ++p;
      if (p == rows_) continue;
      const auto inv = f_.inv(col[p]);
      std::vector<std::vector<Field::Elem>> next(cols_);
      for (std::size_t j = c + 1; j < cols_; ++j) {
        next[j] = res[j];
        const auto factor = f_.mul(res[j][p], inv);
        if (factor == 0) continue;
        for (std::size_t i = 0; i < rows_; ++i) next[j][i] = f_.sub(next[j][i], f_.mul(factor, col[i]));
      }
      if (search(remaining - 1, c + 1, next)) return true;
    }
    return false;
  }

  const Field& f_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::vector<Field::Elem>> residual_;
};

// Minimum weight over the nonzero codewords spanned by `gen`, one per
// projective point (leading coefficient 1).
std::int64_t min_weight_by_enumeration(const Field& f, const Matrix& gen) {
  const std::size_t k = gen.rows;
  const std::size_t n = gen.cols;
  std::int64_t best = static_cast<std::int64_t>(n);
  std::vector<std::vector<Field::Elem>> acc(k + 1, std::vector<Field::Elem>(n, 0));
  auto weight = [](const std::vector<Field::Elem>& v) {
    return static_cast<std::int64_t>(std::count_if(v.begin(), v.end(), [](auto e) { return e != 0; }));
  };
  // acc[i] is the partial sum over rows below i; row i takes any coefficient.
  auto fill = [&](auto&& self, std::size_t i) -> void {
    if (i == k) {
      best = std::min(best, weight(acc[k]));
      return;
    }
    for (Field::Elem c = 0; c < f.size(); ++c) {
      for (std::size_t j = 0; j < n; ++j) acc[i + 1][j] = f.add(acc[i][j], f.mul(c, gen.at(i, j)));
      self(self, i + 1);
    }
  };
  for (std::size_t lead = 0; lead < k; ++lead) {
    acc[lead + 1].assign(gen.row(lead).begin(), gen.row(lead).end());
    fill(fill, lead + 1);
  }
  return best;
}

// Projective codeword count above which the dependency search is used.
constexpr double kEnumerationLimit = 4e6;

}  // namespace

EvalMap::EvalMap(Field field, std::vector<Point> points) : field_(std::move(field)), points_(std::move(points)) {
  if (points_.empty()) throw Error(Errc::invalid_argument, "at least one point is needed");
  std::set<std::pair<Field::Elem, Field::Elem>> seen;
  for (const auto& p : points_) {
    if (!field_.contains(p.x) || !field_.contains(p.y)) throw Error(Errc::field_mismatch, "point outside the field");
    if (!seen.insert({p.x, p.y}).second) throw Error(Errc::invalid_argument, "duplicate point");
  }
}

std::vector<Field::Elem> EvalMap::row(const ApproximateFamily& fam, const std::vector<std::int64_t>& exponents) const {
  std::vector<Field::Elem> out(points_.size());
  for (std::size_t k = 0; k < points_.size(); ++k) {
    const auto q = fam.eval_all(field_, points_[k].x, points_[k].y);
    Field::Elem v = 1;
    for (std::size_t i = 0; i < exponents.size(); ++i) {
      if (exponents[i] == 0) continue;
      if (i >= q.size()) throw Error(Errc::extend_prefix, "exponent beyond the approximate family");
      v = field_.mul(v, field_.pow(q[i], static_cast<std::uint64_t>(exponents[i])));
    }
    out[k] = v;
  }
  return out;
}

Matrix evaluation_matrix(const EvalMap& ev, const ApproximateFamily& fam, const std::vector<BasisElement>& basis) {
  Matrix m(0, ev.n());
  for (const auto& b : basis) m.append_row(ev.row(fam, b.exponents));
  return m;
}

CodePair code_at(const Semigroup& sg, const ApproximateFamily& fam, const EvalMap& ev, const SemiValue& alpha) {
  if (!sg.contains(alpha)) throw Error(Errc::not_a_member, to_string(alpha) + " is not in the semigroup");
  const auto family = family_for(sg, fam, alpha);
  const auto basis = basis_for(sg, family, alpha);
  CodePair out;
  out.alpha = alpha;
  out.gen_e = row_basis(ev.field(), evaluation_matrix(ev, family, basis));
  out.dim_e = out.gen_e.rows;
  out.gen_c = mat_rank_kernel(ev.field(), out.gen_e).kernel;
  out.k = ev.n() - out.dim_e;
  return out;
}

std::size_t Scan::index_of(const SemiValue& alpha) const {
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (compare(entries[i].member.value, alpha) == 0) return i;
  }
  throw Error(Errc::not_a_member, to_string(alpha) + " is not a scanned member");
}

Scan scan_members(const Semigroup& sg, const EvalMap& ev, std::int64_t horizon) {
  for (std::int64_t level = 4; level <= horizon; level *= 2) {
    const SemiValue bound = sg.level_bound(level);
    Semigroup cover = sg.covering(bound);
    auto members = cover.enumerate(bound);
    auto fam = build_approximates(cover);
    Echelon ech(ev.field(), ev.n());
    std::vector<Scan::Entry> entries;
    for (auto& mem : members) {
      Scan::Entry e;
      e.row = ev.row(fam, mem.exponents);
      e.jump = ech.insert(e.row);
      e.rank = ech.rank();
      e.member = std::move(mem);
      entries.push_back(std::move(e));
      if (ech.rank() == ev.n()) break;
    }
    if (ech.rank() < ev.n()) continue;
    for (std::size_t i = 0; i < entries.size(); ++i) {
      std::int64_t count = 0;
      for (std::size_t j = 0; j <= i; ++j) {
        if (cover.contains_coords(entries[i].member.x - entries[j].member.x,
                                  entries[i].member.m - entries[j].member.m)) {
          ++count;
        }
      }
      entries[i].omega = count;
    }
    Scan scan{std::move(cover), std::move(fam), std::move(entries), 0};
    scan.exponent_width = scan.sg.generator_count();
    return scan;
  }
  throw Error(Errc::rank_ceiling, "evaluation rank stays below " + std::to_string(ev.n()) + " up to the horizon");
}

SemiValue omega_n_bound(const Semigroup& sg, const EvalMap& ev) { return scan_members(sg, ev).omega_n().member.value; }

FengRao feng_rao(const Scan& scan, const SemiValue& alpha, bool literal_dev) {
  const std::size_t a = scan.index_of(alpha);
  const std::size_t last = scan.entries.size() - 1;
  if (a >= last) throw Error(Errc::dual_code_zero, "dual code is zero at " + to_string(alpha));
  constexpr auto inf = std::numeric_limits<std::int64_t>::max();
  FengRao out{inf, inf, inf};
  for (std::size_t i = a + 1; i <= last; ++i) {
    const auto& e = scan.entries[i];
    out.d_fr = std::min(out.d_fr, e.omega);
    const bool counted = literal_dev ? (i < last && scan.entries[i + 1].jump) : e.jump;
    if (counted) out.d_ev = std::min(out.d_ev, e.omega);
  }
  for (std::size_t i = a; i < last; ++i) {
    std::int64_t prod = 1;
    for (auto x : scan.entries[i].member.exponents) prod *= x + 1;
    out.fr_bound = std::min(out.fr_bound, prod - 2);
  }
  if (out.d_ev == inf) out.d_ev = 0;
  return out;
}

std::int64_t min_distance(const Field& f, const Matrix& gen_e, DistanceMethod method) {
  const Matrix basis = row_basis(f, gen_e);
  if (basis.rows >= basis.cols) throw Error(Errc::zero_code, "the dual code is zero");
  if (basis.rows == 0) return 1;
  const std::size_t k = basis.cols - basis.rows;
  const bool enumerate =
      method == DistanceMethod::enumeration ||
      (method == DistanceMethod::automatic &&
       std::pow(static_cast<double>(f.size()), static_cast<double>(k - 1)) <= kEnumerationLimit);
  if (enumerate) {
    return min_weight_by_enumeration(f, mat_rank_kernel(f, basis).kernel);
  }
  return DependencySearch(f, basis).run();
}

std::int64_t min_distance(const Field& f, const CodePair& code) {
  if (code.k == 0) throw Error(Errc::zero_code, "the dual code is zero");
  return min_distance(f, code.gen_e);
}

std::int64_t goppa_distance(const Semigroup& sg, const SemiValue& alpha) {
  if (!sg.contains(alpha)) throw Error(Errc::not_a_member, to_string(alpha) + " is not in the semigroup");
  auto classical = [](const TelescopicBasis& star, std::int64_t a) {
    return rank_below(a, star) + 1 - gap_count(star);
  };
  if (sg.has_tail()) {
    const auto [xa, ma] = *sg.coords(alpha);
    const auto& head = sg.head();
    const std::int64_t G = head.gcd();
    std::vector<std::int64_t> reduced;
    for (auto h : head.generators()) reduced.push_back(h / G);
    const TelescopicBasis star(reduced);
    std::int64_t B = 1;
    while (sg.compare_coords(0, B, xa, ma) <= 0) ++B;
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (std::int64_t j = 0; j <= B; ++j) {
      std::int64_t x = 0;
      while (!(head.contains(x) && sg.compare_coords(x, j, xa, ma) > 0)) x += G;
      best = std::min(best, classical(star, x / G) * (j + 1));
    }
    return best;
  }
  const Semigroup cover = sg.covering(alpha);
  const auto rep = cover.represent(alpha);
  const auto& h = cover.head().generators();
  std::size_t s = 0;
  for (std::size_t i = 0; i < rep.exponents.size(); ++i) {
    if (rep.exponents[i] != 0) s = i;
  }
  s = std::max<std::size_t>(s, std::min<std::size_t>(1, h.size() - 1));
  std::vector<std::int64_t> prefix(h.begin(), h.begin() + static_cast<std::ptrdiff_t>(s + 1));
  const std::int64_t G = std::reduce(prefix.begin(), prefix.end(), std::int64_t{0},
                                     [](std::int64_t a, std::int64_t b) { return std::gcd(a, b); });
  std::int64_t star_alpha = 0;
  for (std::size_t i = 0; i <= s; ++i) {
    prefix[i] /= G;
    star_alpha += rep.exponents[i] * prefix[i];
  }
  return classical(TelescopicBasis(prefix), star_alpha);
}

std::vector<TableRow> scan_table(const Semigroup& sg, const EvalMap& ev, const TableOptions& opts) {
  const Scan scan = scan_members(sg, ev);
  const std::size_t last = scan.entries.size() - 1;
  std::vector<TableRow> rows;
  for (std::size_t i = 0; i < last; ++i) {
    const auto& e = scan.entries[i];
    if (opts.mode == ScanMode::jumps && (!e.jump || i == 0)) continue;
    TableRow row;
    row.alpha = e.member.value;
    row.exponents = e.member.exponents;
    row.exponents.resize(scan.exponent_width, 0);
    row.k = ev.n() - e.rank;
    if (row.k < opts.min_k) break;
    const auto fr = feng_rao(scan, e.member.value, opts.literal_dev);
    row.d_ev = fr.d_ev;
    row.d_fr = fr.d_fr;
    row.fr_bound = fr.fr_bound;
    if (opts.compute_d) {
      Matrix m(0, ev.n());
      for (std::size_t j = 0; j <= i; ++j) {
        if (scan.entries[j].jump) m.append_row(scan.entries[j].row);
      }
      row.d = min_distance(ev.field(), m);
    }
    row.goppa = goppa_distance(scan.sg, e.member.value);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string render_exponents(const std::vector<std::int64_t>& exponents) {
  const bool compact = std::all_of(exponents.begin(), exponents.end(), [](auto e) { return e >= 0 && e <= 9; });
  std::string out;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (!compact && i > 0) out += ' ';
    out += std::to_string(exponents[i]);
  }
  return out;
}

std::string table_csv(const std::vector<TableRow>& rows) {
  auto field = [](const std::string& s) {
    return s.find_first_of(", \"") == std::string::npos ? s : "\"" + s + "\"";
  };
  std::string out = "alpha,exp,k,d,d_ev,d_fr,fr_bound,goppa\n";
  for (const auto& r : rows) {
    out += field(to_string(r.alpha)) + "," + field(render_exponents(r.exponents)) + "," + std::to_string(r.k) + "," +
           (r.d ? std::to_string(*r.d) : "") + "," + std::to_string(r.d_ev) + "," + std::to_string(r.d_fr) + "," +
           std::to_string(r.fr_bound) + "," + std::to_string(r.goppa) + "\n";
  }
  return out;
}

}  // namespace deltacode
