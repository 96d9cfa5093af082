#include "deltacode/approximants.hpp"

#include <algorithm>

#include "deltacode/error.hpp"

namespace deltacode {

BivarPoly BivarPoly::constant(Field::Elem c) {
  BivarPoly p;
  if (c != 0) p.terms[{0, 0}] = c;
  return p;
}

BivarPoly BivarPoly::x() {
  BivarPoly p;
  p.terms[{1, 0}] = 1;
  return p;
}

BivarPoly BivarPoly::y() {
  BivarPoly p;
  p.terms[{0, 1}] = 1;
  return p;
}

std::uint32_t BivarPoly::degree_y() const {
  std::uint32_t d = 0;
  for (const auto& [mono, c] : terms) d = std::max(d, mono.second);
  return d;
}

BivarPoly poly_add(const Field& f, const BivarPoly& a, const BivarPoly& b) {
  BivarPoly out = a;
  for (const auto& [mono, c] : b.terms) {
    auto [it, fresh] = out.terms.try_emplace(mono, c);
    if (!fresh) {
      it->second = f.add(it->second, c);
      if (it->second == 0) out.terms.erase(it);
    }
  }
  return out;
}

BivarPoly poly_sub(const Field& f, const BivarPoly& a, const BivarPoly& b) {
  BivarPoly neg;
  for (const auto& [mono, c] : b.terms) neg.terms[mono] = f.neg(c);
  return poly_add(f, a, neg);
}

BivarPoly poly_mul(const Field& f, const BivarPoly& a, const BivarPoly& b) {
  BivarPoly out;
  for (const auto& [ma, ca] : a.terms) {
    for (const auto& [mb, cb] : b.terms) {
      const Monomial mono{ma.first + mb.first, ma.second + mb.second};
      const Field::Elem c = f.mul(ca, cb);
      auto [it, fresh] = out.terms.try_emplace(mono, c);
      if (!fresh) it->second = f.add(it->second, c);
    }
  }
  std::erase_if(out.terms, [](const auto& t) { return t.second == 0; });
  return out;
}

BivarPoly poly_pow(const Field& f, const BivarPoly& a, std::uint64_t e) {
  BivarPoly result = BivarPoly::constant(1);
  BivarPoly base = a;
  while (e > 0) {
    if (e & 1) result = poly_mul(f, result, base);
    e >>= 1;
    if (e > 0) base = poly_mul(f, base, base);
  }
  return result;
}

Field::Elem poly_eval(const Field& f, const BivarPoly& p, Field::Elem px, Field::Elem py) {
  if (!f.contains(px) || !f.contains(py)) throw Error(Errc::field_mismatch, "point outside the field");
  Field::Elem acc = 0;
  for (const auto& [mono, c] : p.terms) {
    acc = f.add(acc, f.mul(c, f.mul(f.pow(px, mono.first), f.pow(py, mono.second))));
  }
  return acc;
}

std::string render(const Field& f, const BivarPoly& p) {
  if (p.is_zero()) return "0";
  std::vector<std::pair<Monomial, Field::Elem>> terms(p.terms.begin(), p.terms.end());
  std::sort(terms.begin(), terms.end(), [](const auto& l, const auto& r) {
    const auto dl = l.first.first + l.first.second;
    const auto dr = r.first.first + r.first.second;
    if (dl != dr) return dl > dr;
    return l.first.second > r.first.second;
  });
  auto power = [](const char* var, std::uint32_t e) {
    return e == 1 ? std::string(var) : std::string(var) + "^" + std::to_string(e);
  };
  std::string out;
  for (const auto& [mono, c] : terms) {
    std::string mono_str;
    if (mono.first > 0) mono_str = power("x", mono.first);
    if (mono.second > 0) mono_str += (mono_str.empty() ? "" : "*") + power("y", mono.second);
    std::string coeff;
    if (f.m() == 1) {
      coeff = std::to_string(c);
    } else {
      const auto k = f.log(c);
      coeff = k == 0 ? "1" : (k == 1 ? "g" : "g^" + std::to_string(k));
    }
    std::string term;
    if (mono_str.empty()) {
      term = coeff;
    } else if (coeff == "1") {
      term = mono_str;
    } else {
      term = coeff + "*" + mono_str;
    }
    out += (out.empty() ? "" : " + ") + term;
  }
  return out;
}

ApproximateFamily::ApproximateFamily(std::vector<SemiValue> weights, std::vector<std::int64_t> n,
                                     std::vector<std::vector<std::int64_t>> rows)
    : weights_(std::move(weights)), n_(std::move(n)), rows_(std::move(rows)) {}

std::vector<Field::Elem> ApproximateFamily::eval_all(const Field& f, Field::Elem px, Field::Elem py) const {
  std::vector<Field::Elem> v;
  v.reserve(size());
  v.push_back(px);
  if (size() > 1) v.push_back(py);
  for (std::size_t i = 1; i + 1 < size(); ++i) {
    Field::Elem prod = 1;
    for (std::size_t j = 0; j < rows_[i].size(); ++j) {
      if (rows_[i][j] != 0) prod = f.mul(prod, f.pow(v[j], static_cast<std::uint64_t>(rows_[i][j])));
    }
    v.push_back(f.sub(f.pow(v[i], static_cast<std::uint64_t>(n_[i])), prod));
  }
  v.resize(size());
  return v;
}

BivarPoly ApproximateFamily::expand(const Field& f, std::size_t i) const {
  if (i >= size()) throw Error(Errc::extend_prefix, "approximate q_" + std::to_string(i) + " is not in the family");
  std::lock_guard lock(cache_->mu);
  auto& polys = cache_->polys;
  if (!(cache_->spec == f.spec())) {
    cache_->spec = f.spec();
    polys.clear();
  }
  if (polys.empty()) polys.push_back(BivarPoly::x());
  if (polys.size() == 1 && size() > 1) polys.push_back(BivarPoly::y());
  while (polys.size() <= i) {
    const std::size_t k = polys.size() - 1;  // build q_{k+1}
    BivarPoly prod = BivarPoly::constant(1);
    for (std::size_t j = 0; j < rows_[k].size(); ++j) {
      if (rows_[k][j] != 0) prod = poly_mul(f, prod, poly_pow(f, polys[j], static_cast<std::uint64_t>(rows_[k][j])));
    }
    polys.push_back(poly_sub(f, poly_pow(f, polys[k], static_cast<std::uint64_t>(n_[k])), prod));
  }
  return polys[i];
}

ApproximateFamily build_approximates(const Semigroup& sg, std::size_t depth) {
  auto weights = sg.generators();
  if (depth != 0) {
    if (depth > weights.size()) {
      throw Error(Errc::extend_prefix, "only " + std::to_string(weights.size()) + " generators available");
    }
    weights.resize(depth);
  }
  const auto& h = sg.head().generators();
  const auto& bounds = sg.head().bounds();
  std::vector<std::int64_t> n(weights.size(), 0);
  std::vector<std::vector<std::int64_t>> rows(weights.size());
  for (std::size_t i = 1; i + 1 < weights.size(); ++i) {
    n[i] = bounds[i];
    TelescopicBasis prefix(std::vector<std::int64_t>(h.begin(), h.begin() + static_cast<std::ptrdiff_t>(i)));
    auto rep = prefix.represent(n[i] * h[i]);
    if (!rep) throw Error(Errc::inconsistent_witness, "inconsistent delta-sequence: n_i delta_i has no representation");
    rows[i] = std::move(*rep);
  }
  return ApproximateFamily(std::move(weights), std::move(n), std::move(rows));
}

std::vector<BasisElement> basis_for(const Semigroup& sg, const ApproximateFamily& fam, const SemiValue& alpha) {
  std::vector<BasisElement> out;
  for (auto& mem : sg.enumerate(alpha)) {
    while (mem.exponents.size() > fam.size() && mem.exponents.back() == 0) mem.exponents.pop_back();
    if (mem.exponents.size() > fam.size()) {
      throw Error(Errc::extend_prefix, "extend prefix: " + to_string(mem.value) + " needs more approximates");
    }
    mem.exponents.resize(fam.size(), 0);
    out.push_back({std::move(mem.exponents), std::move(mem.value)});
  }
  return out;
}

BivarPoly expand_basis(const Field& f, const ApproximateFamily& fam, const std::vector<std::int64_t>& exponents) {
  BivarPoly out = BivarPoly::constant(1);
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] != 0) out = poly_mul(f, out, poly_pow(f, fam.expand(f, i), static_cast<std::uint64_t>(exponents[i])));
  }
  return out;
}

}  // namespace deltacode
