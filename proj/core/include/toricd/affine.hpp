#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "toricd/arith.hpp"

namespace toricd {

// Affine subspace base + span(directions) of Q^d in canonical form:
// directions in reduced row echelon form, base zero on the pivot columns.
class AffineFlat {
 public:
  AffineFlat() = default;
  AffineFlat(const RatVector& base, const std::vector<RatVector>& directions);

  static AffineFlat point(const RatVector& p);
  static AffineFlat whole_space(std::size_t d);
  // {x : normals[i] . x = values[i]}; nothing when inconsistent.
  static std::optional<AffineFlat> from_equations(const std::vector<IntVector>& normals,
                                                  const std::vector<Rational>& values, std::size_t d);

  std::size_t ambient_dim() const { return base_.size(); }
  std::size_t dim() const { return directions_.size(); }
  const RatVector& base() const { return base_; }
  const std::vector<RatVector>& directions() const { return directions_; }

  bool contains(const RatVector& x) const;
  bool contains(const AffineFlat& other) const;
  // Primitive integer normals with right-hand sides, canonical order.
  std::vector<std::pair<IntVector, Rational>> equations() const;
  // "s2=0", "2s1-s2=1, s3=0" or "all".
  std::string to_string() const;

  bool operator==(const AffineFlat& other) const = default;
  bool operator<(const AffineFlat& other) const;

 private:
  RatVector base_;
  std::vector<RatVector> directions_;
  std::vector<std::size_t> pivots_;
};

// Drops flats contained in another one; result sorted and deduplicated.
std::vector<AffineFlat> maximal_flats(std::vector<AffineFlat> flats);

}  // namespace toricd
