#include "toricd/affine.hpp"

#include <algorithm>

#include "toricd/errors.hpp"
#include "toricd/lattice.hpp"

namespace toricd {

AffineFlat::AffineFlat(const RatVector& base, const std::vector<RatVector>& directions) : base_(base) {
  for (const auto& v : directions)
    if (v.size() != base.size()) throw ToricError(ErrorKind::InvalidInput, "direction has wrong length");
  RowEchelon e = rref(directions, base.size());
  directions_ = std::move(e.rows);
  pivots_ = std::move(e.pivots);
  for (std::size_t i = 0; i < directions_.size(); ++i) {
    Rational c = base_[pivots_[i]];
    if (c == 0) continue;
    for (std::size_t j = 0; j < base_.size(); ++j) base_[j] -= c * directions_[i][j];
  }
}

AffineFlat AffineFlat::point(const RatVector& p) { return AffineFlat(p, {}); }

AffineFlat AffineFlat::whole_space(std::size_t d) {
  std::vector<RatVector> dirs;
  for (std::size_t i = 0; i < d; ++i) {
    RatVector e(d, Rational(0));
    e[i] = 1;
    dirs.push_back(e);
  }
  return AffineFlat(RatVector(d, Rational(0)), dirs);
}

std::optional<AffineFlat> AffineFlat::from_equations(const std::vector<IntVector>& normals,
                                                     const std::vector<Rational>& values, std::size_t d) {
  std::vector<RatVector> rows;
  for (const auto& n : normals) rows.push_back(to_rational(n));
  auto p = solve_rational(rows, values, d);
  if (!p) return std::nullopt;
  return AffineFlat(*p, rational_kernel(rows, d));
}

bool AffineFlat::contains(const RatVector& x) const {
  RatVector r = sub(x, base_);
  for (std::size_t i = 0; i < directions_.size(); ++i) {
    Rational c = r[pivots_[i]];
    if (c == 0) continue;
    for (std::size_t j = 0; j < r.size(); ++j) r[j] -= c * directions_[i][j];
  }
  return is_zero(r);
}

bool AffineFlat::contains(const AffineFlat& other) const {
  if (other.dim() > dim() || !contains(other.base_)) return false;
  for (const auto& v : other.directions_)
    if (!contains(add(base_, v))) return false;
  return true;
}

std::vector<std::pair<IntVector, Rational>> AffineFlat::equations() const {
  std::vector<std::pair<IntVector, Rational>> out;
  for (const auto& n : rational_kernel(directions_, base_.size())) {
    IntVector p = primitive_integer(n);
    for (const auto& x : p) {
      if (x == 0) continue;
      if (x < 0) p = scale(Integer(-1), p);
      break;
    }
    out.emplace_back(p, dot(p, base_));
  }
  return out;
}

std::string AffineFlat::to_string() const {
  auto eqs = equations();
  if (eqs.empty()) return "all";
  std::string s;
  for (std::size_t k = 0; k < eqs.size(); ++k) {
    if (k) s += ", ";
    std::string lhs;
    const IntVector& n = eqs[k].first;
    for (std::size_t i = 0; i < n.size(); ++i) {
      if (n[i] == 0) continue;
      Integer a = abs_of(n[i]);
      if (n[i] < 0) {
        lhs += "-";
      } else if (!lhs.empty()) {
        lhs += "+";
      }
      if (a != 1) lhs += a.get_str();
      lhs += "s" + std::to_string(i + 1);
    }
    s += lhs + "=" + format_rational(eqs[k].second);
  }
  return s;
}

bool AffineFlat::operator<(const AffineFlat& other) const {
  if (dim() != other.dim()) return dim() > other.dim();
  if (directions_ != other.directions_) return directions_ < other.directions_;
  return base_ < other.base_;
}

std::vector<AffineFlat> maximal_flats(std::vector<AffineFlat> flats) {
  std::sort(flats.begin(), flats.end());
  flats.erase(std::unique(flats.begin(), flats.end()), flats.end());
  std::vector<AffineFlat> out;
  for (std::size_t i = 0; i < flats.size(); ++i) {
    bool covered = false;
    for (std::size_t j = 0; j < flats.size() && !covered; ++j)
      if (i != j && flats[j].dim() > flats[i].dim() && flats[j].contains(flats[i])) covered = true;
    if (!covered) out.push_back(flats[i]);
  }
  return out;
}

}  // namespace toricd
