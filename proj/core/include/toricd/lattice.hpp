#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "toricd/arith.hpp"

namespace toricd {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);
  static IntMatrix from_columns(const std::vector<IntVector>& columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntVector row(std::size_t r) const;
  IntVector column(std::size_t c) const;
  std::vector<IntVector> row_list() const;
  std::vector<IntVector> column_list() const;
  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix& other) const;
  IntVector operator*(const IntVector& x) const;
  // Row vector times matrix.
  RatVector left_multiply(const RatVector& x) const;
  IntVector left_multiply(const IntVector& x) const;
  bool operator==(const IntMatrix& other) const = default;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  // row dst += f * row src
  void add_row(std::size_t dst, std::size_t src, const Integer& f);
  void add_col(std::size_t dst, std::size_t src, const Integer& f);
  void negate_row(std::size_t r);
  void negate_col(std::size_t c);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

// U * M = H, H in row Hermite normal form, U unimodular.
struct HermiteForm {
  IntMatrix H;
  IntMatrix U;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};
HermiteForm hnf(const IntMatrix& M);

// U * M * V = S diagonal with d_1 | d_2 | ..., U and V unimodular.
struct SmithForm {
  IntMatrix S;
  IntMatrix U;
  IntMatrix V;
  std::size_t rank = 0;
  std::vector<Integer> divisors;
};
SmithForm snf(const IntMatrix& M);

Integer determinant(const IntMatrix& M);
IntMatrix inverse_unimodular(const IntMatrix& M);
std::size_t rank_of(const IntMatrix& M);
std::size_t rank_of(const std::vector<IntVector>& rows, std::size_t cols);

struct IntegerSolution {
  IntVector particular;
  std::vector<IntVector> kernel;
};
// Solves M x = b over the integers.
std::optional<IntegerSolution> solve_integer(const IntMatrix& M, const IntVector& b);
// Basis of {x in Z^cols : M x = 0}.
std::vector<IntVector> integer_kernel(const IntMatrix& M);

// Reduced row echelon form over Q; returns nonzero rows and the pivot columns.
struct RowEchelon {
  std::vector<RatVector> rows;
  std::vector<std::size_t> pivots;
};
RowEchelon rref(std::vector<RatVector> rows, std::size_t cols);
// Basis of {x : r . x = 0 for every row r}, in reduced echelon form.
std::vector<RatVector> rational_kernel(const std::vector<RatVector>& rows, std::size_t cols);
// Some x with rows[i] . x = rhs[i], or nothing when inconsistent.
std::optional<RatVector> solve_rational(const std::vector<RatVector>& rows, const RatVector& rhs,
                                        std::size_t cols);

class Lattice {
 public:
  explicit Lattice(std::size_t ambient_dim);
  // The given vectors must be linearly independent.
  Lattice(std::size_t ambient_dim, const std::vector<IntVector>& basis);

  static Lattice generated_by(std::size_t ambient_dim, const std::vector<IntVector>& generators);
  static Lattice full(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return dim_; }
  std::size_t rank() const { return basis_.size(); }
  // Rows in Hermite normal form, so equal lattices have equal bases.
  const std::vector<IntVector>& basis() const { return basis_; }
  IntMatrix basis_matrix() const;

  bool contains(const IntVector& x) const;
  std::optional<IntVector> coordinates(const IntVector& x) const;
  // Canonical representative of x modulo the lattice (pivot reduction).
  RatVector reduce(const RatVector& x) const;
  IntVector reduce(const IntVector& x) const;

  bool operator==(const Lattice& other) const = default;

 private:
  std::size_t dim_ = 0;
  std::vector<IntVector> basis_;
  std::vector<std::size_t> pivots_;
};

struct LatticeIndex {
  bool infinite = false;
  Integer value = 0;
};
LatticeIndex lattice_index(const Lattice& sub, const Lattice& sup);
Lattice saturate(const Lattice& L);
std::vector<IntVector> coset_reps(const Lattice& sub, const Lattice& sup);
// True iff the columns of A generate Z^rows.
bool check_full_lattice(const IntMatrix& A);

// Unimodular frame adapted to the rational span of a lattice L of rank r:
// the first r rows of Vinv are a basis of the saturation of L, and
// the coordinates of x in the rows of Vinv are x * V.
struct SaturationFrame {
  std::size_t rank = 0;
  IntMatrix V;
  IntMatrix Vinv;
};
SaturationFrame saturation_frame(const Lattice& L);

// sup / sub for sublattices sub of sup.
class QuotientGroup {
 public:
  QuotientGroup(const Lattice& sub, const Lattice& sup);

  std::size_t free_rank() const { return free_rank_; }
  const std::vector<Integer>& torsion_invariants() const { return torsion_; }
  bool finite() const { return free_rank_ == 0; }
  Integer order() const;

  struct Projection {
    IntVector torsion;
    IntVector free;
    bool operator==(const Projection& other) const = default;
  };
  // x must lie in sup.
  Projection project(const IntVector& x) const;
  bool is_trivial(const IntVector& x) const;
  IntVector canonical_rep(const IntVector& x) const;
  // Canonical representatives of the torsion part, zero first.
  std::vector<IntVector> torsion_reps() const;

 private:
  IntVector sup_coords(const IntVector& x) const;
  IntVector to_ambient(const IntVector& w) const;

  std::size_t dim_ = 0;
  bool standard_ = false;  // sup is Z^d with the unit basis
  IntMatrix sup_basis_;  // rows
  IntMatrix sup_solver_;  // transpose, used for coordinates
  IntMatrix V_;
  IntMatrix Vinv_;
  std::size_t sub_rank_ = 0;
  std::vector<Integer> divisors_;  // all sub_rank_ diagonal entries
  std::vector<Integer> torsion_;
  std::size_t free_rank_ = 0;
};

}  // namespace toricd
