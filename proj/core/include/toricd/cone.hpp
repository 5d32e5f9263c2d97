#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "toricd/arith.hpp"
#include "toricd/lattice.hpp"

namespace toricd {

struct Facet {
  std::size_t id = 0;
  std::string name;
  IntVector normal;                  // primitive, nonnegative on every column
  std::vector<std::size_t> columns;  // 0-based columns on the facet
};

struct Face {
  std::size_t id = 0;
  std::string name;
  std::vector<std::size_t> columns;
  std::vector<std::size_t> containing_facets;
  std::size_t dim = 0;
};

class ToricData {
 public:
  const IntMatrix& matrix() const { return A_; }
  std::size_t dim() const { return A_.rows(); }
  std::size_t num_columns() const { return A_.cols(); }
  const IntVector& column(std::size_t j) const { return columns_[j]; }
  const std::vector<IntVector>& columns() const { return columns_; }

  const std::vector<Facet>& facets() const { return facets_; }
  const std::vector<Face>& faces() const { return faces_; }
  bool pointed() const { return true; }
  bool simplicial() const { return facets_.size() == dim(); }

  std::size_t full_face() const { return full_face_; }
  std::size_t origin_face() const { return origin_face_; }
  std::size_t facet_face(std::size_t facet) const { return facet_face_[facet]; }
  std::optional<std::size_t> face_by_name(std::string_view name) const;
  std::optional<std::size_t> facet_by_name(std::string_view name) const;
  std::optional<std::size_t> face_by_columns(const std::vector<std::size_t>& columns) const;

  // F_sigma(a_j), indexed [facet][column].
  const Integer& column_value(std::size_t facet, std::size_t j) const { return column_values_[facet][j]; }
  Integer facet_value(std::size_t facet, const IntVector& x) const;
  Rational facet_value(std::size_t facet, const RatVector& x) const;
  IntVector facet_values(const IntVector& x) const;
  RatVector facet_values(const RatVector& x) const;
  // max over columns and facets of F_sigma(a_j).
  const Integer& max_column_value() const { return max_column_value_; }

 private:
  friend ToricData build_toric(const IntMatrix& A);

  IntMatrix A_;
  std::vector<IntVector> columns_;
  std::vector<Facet> facets_;
  std::vector<Face> faces_;
  std::vector<std::vector<Integer>> column_values_;
  std::vector<std::size_t> facet_face_;
  std::size_t full_face_ = 0;
  std::size_t origin_face_ = 0;
  Integer max_column_value_ = 0;
};

// Throws ToricError(NotFullDimensional | NotFullLattice | NotPointed | InvalidInput).
ToricData build_toric(const IntMatrix& A);

// Facets on which F_sigma(alpha) is an integer.
std::vector<std::size_t> integral_facets(const ToricData& T, const RatVector& alpha);
// Integral basis of the intersection of the kernels of the given facet functionals.
std::vector<IntVector> stratum_subspace(const ToricData& T, const std::vector<std::size_t>& facets);
// Basis of the integer relations sum c_sigma F_sigma = 0, in Hermite normal form.
std::vector<IntVector> linear_relations(const ToricData& T);

// Integer points x with lower[s] <= F_s(offset + x) <= upper[s]; returns offset + x,
// sorted by (sum of facet values, lexicographic).
std::vector<RatVector> region_points(const ToricData& T, const RatVector& offset,
                                     const std::vector<Rational>& lower,
                                     const std::vector<Rational>& upper);
// {a in Z^d : 0 <= F_s(a) <= M for all s}.
std::vector<IntVector> saturation_window(const ToricData& T, const Integer& M);
// {beta in alpha + Z^d : |F_s(beta)| <= M for all s}.
std::vector<RatVector> parameter_window(const ToricData& T, const RatVector& alpha, const Integer& M);

std::string facet_name(const std::vector<std::size_t>& columns, std::size_t num_columns);

}  // namespace toricd
