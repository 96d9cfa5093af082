#ifndef DELTACODE_CODES_HPP
#define DELTACODE_CODES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "deltacode/approximants.hpp"
#include "deltacode/gf.hpp"
#include "deltacode/semigroup.hpp"

namespace deltacode {

struct Point {
  Field::Elem x = 0;
  Field::Elem y = 0;

  friend bool operator==(const Point&, const Point&) = default;
};

/// Evaluation at a fixed list of distinct points.
class EvalMap {
 public:
  EvalMap(Field field, std::vector<Point> points);

  const Field& field() const { return field_; }
  const std::vector<Point>& points() const { return points_; }
  std::size_t n() const { return points_.size(); }

  /// Evaluation of prod q_i^{e_i} at every point.
  std::vector<Field::Elem> row(const ApproximateFamily& fam, const std::vector<std::int64_t>& exponents) const;

 private:
  Field field_;
  std::vector<Point> points_;
};

Matrix evaluation_matrix(const EvalMap& ev, const ApproximateFamily& fam, const std::vector<BasisElement>& basis);

struct CodePair {
  SemiValue alpha;
  Matrix gen_e;
  std::size_t dim_e = 0;
  Matrix gen_c;
  std::size_t k = 0;
};

/// Throws Error(not_a_member) when alpha is not in the semigroup.
CodePair code_at(const Semigroup& sg, const ApproximateFamily& fam, const EvalMap& ev, const SemiValue& alpha);

/// Members in order up to the first one at which the evaluation rank is n,
/// with the rank after each and the pair counts omega.
struct Scan {
  struct Entry {
    Member member;
    std::size_t rank = 0;
    bool jump = false;  // rank increased here
    std::int64_t omega = 0;
    std::vector<Field::Elem> row;  // evaluation of the basis product
  };
  Semigroup sg;
  ApproximateFamily fam;
  std::vector<Entry> entries;  // the last entry is Omega_n
  std::size_t exponent_width = 0;

  const Entry& omega_n() const { return entries.back(); }
  /// Index of alpha in entries; throws when alpha is not listed.
  std::size_t index_of(const SemiValue& alpha) const;
};

/// `horizon` caps the level (see Semigroup::level_bound) before reporting
/// Error(rank_ceiling).
Scan scan_members(const Semigroup& sg, const EvalMap& ev, std::int64_t horizon = 1 << 16);

SemiValue omega_n_bound(const Semigroup& sg, const EvalMap& ev);

struct FengRao {
  std::int64_t d_fr = 0;
  std::int64_t d_ev = 0;
  std::int64_t fr_bound = 0;
};

/// d_ev counts jumps (rank increases at beta); with `literal_dev` it counts
/// beta whose successor raises the rank instead.
FengRao feng_rao(const Scan& scan, const SemiValue& alpha, bool literal_dev = false);

enum class DistanceMethod { automatic, dependency, enumeration };

/// Exact minimum distance of the dual of the row space of gen_e: either the
/// size of the smallest linearly dependent set of columns, or the least weight
/// over all codewords of the dual. `automatic` enumerates codewords when the
/// dual has at most a few million of them up to scalars.
std::int64_t min_distance(const Field& f, const Matrix& gen_e, DistanceMethod method = DistanceMethod::automatic);
std::int64_t min_distance(const Field& f, const CodePair& code);

std::int64_t goppa_distance(const Semigroup& sg, const SemiValue& alpha);

struct TableRow {
  SemiValue alpha;
  std::vector<std::int64_t> exponents;
  std::size_t k = 0;
  std::optional<std::int64_t> d;
  std::int64_t d_ev = 0;
  std::int64_t d_fr = 0;
  std::int64_t fr_bound = 0;
  std::int64_t goppa = 0;
};

enum class ScanMode { jumps, full };

struct TableOptions {
  ScanMode mode = ScanMode::jumps;
  bool compute_d = true;
  bool literal_dev = false;
  std::size_t min_k = 0;  // rows of smaller dimension are not listed
};

std::vector<TableRow> scan_table(const Semigroup& sg, const EvalMap& ev, const TableOptions& opts = {});

std::string render_exponents(const std::vector<std::int64_t>& exponents);
/// Header alpha,exp,k,d,d_ev,d_fr,fr_bound,goppa.
std::string table_csv(const std::vector<TableRow>& rows);

}  // namespace deltacode

#endif  // DELTACODE_CODES_HPP
