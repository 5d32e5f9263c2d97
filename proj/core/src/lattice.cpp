#include "toricd/lattice.hpp"

#include <algorithm>
#include <utility>

#include "toricd/errors.hpp"

namespace toricd {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw ToricError(ErrorKind::InvalidInput, "ragged matrix rows");
    for (long x : r) data_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw ToricError(ErrorKind::InvalidInput, "row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVector>& columns, std::size_t rows) {
  IntMatrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw ToricError(ErrorKind::InvalidInput, "column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

IntVector IntMatrix::row(std::size_t r) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

IntVector IntMatrix::column(std::size_t c) const {
  IntVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
  return v;
}

std::vector<IntVector> IntMatrix::row_list() const {
  std::vector<IntVector> out;
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

std::vector<IntVector> IntMatrix::column_list() const {
  std::vector<IntVector> out;
  for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  IntMatrix p(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Integer& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) p(i, j) += a * o(k, j);
    }
  return p;
}

IntVector IntMatrix::operator*(const IntVector& x) const {
  IntVector y(rows_, Integer(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) y[i] += (*this)(i, j) * x[j];
  return y;
}

RatVector IntMatrix::left_multiply(const RatVector& x) const {
  RatVector y(cols_, Rational(0));
  for (std::size_t i = 0; i < rows_; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < cols_; ++j) y[j] += x[i] * Rational((*this)(i, j));
  }
  return y;
}

IntVector IntMatrix::left_multiply(const IntVector& x) const {
  IntVector y(cols_, Integer(0));
  for (std::size_t i = 0; i < rows_; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < cols_; ++j) y[j] += x[i] * (*this)(i, j);
  }
  return y;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row(std::size_t dst, std::size_t src, const Integer& f) {
  if (f == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += f * (*this)(src, j);
}

void IntMatrix::add_col(std::size_t dst, std::size_t src, const Integer& f) {
  if (f == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += f * (*this)(i, src);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
}

void IntMatrix::negate_col(std::size_t c) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, c) = -(*this)(i, c);
}

HermiteForm hnf(const IntMatrix& M) {
  HermiteForm out{M, IntMatrix::identity(M.rows()), 0, {}};
  IntMatrix& H = out.H;
  IntMatrix& U = out.U;
  std::size_t r = 0;
  for (std::size_t c = 0; c < H.cols() && r < H.rows(); ++c) {
    bool has_pivot = false;
    while (true) {
      std::size_t best = H.rows();
      for (std::size_t i = r; i < H.rows(); ++i) {
        if (H(i, c) == 0) continue;
        if (best == H.rows() || abs(H(i, c)) < abs(H(best, c))) best = i;
      }
      if (best == H.rows()) break;
      has_pivot = true;
      H.swap_rows(r, best);
      U.swap_rows(r, best);
      bool clean = true;
      for (std::size_t i = r + 1; i < H.rows(); ++i) {
        if (H(i, c) == 0) continue;
        Integer q = floor_div(H(i, c), H(r, c));
        H.add_row(i, r, -q);
        U.add_row(i, r, -q);
        if (H(i, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (!has_pivot) continue;
    if (H(r, c) < 0) {
      H.negate_row(r);
      U.negate_row(r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Integer q = floor_div(H(i, c), H(r, c));
      H.add_row(i, r, -q);
      U.add_row(i, r, -q);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  return out;
}

SmithForm snf(const IntMatrix& M) {
  SmithForm out{M, IntMatrix::identity(M.rows()), IntMatrix::identity(M.cols()), 0, {}};
  IntMatrix& S = out.S;
  IntMatrix& U = out.U;
  IntMatrix& V = out.V;
  const std::size_t m = S.rows(), n = S.cols();
  std::size_t t = 0;
  for (; t < std::min(m, n); ++t) {
    bool found = false;
    while (true) {
      std::size_t bi = m, bj = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j) {
          if (S(i, j) == 0) continue;
          if (bi == m || abs(S(i, j)) < abs(S(bi, bj))) {
            bi = i;
            bj = j;
          }
        }
      if (bi == m) break;
      found = true;
      S.swap_rows(t, bi);
      U.swap_rows(t, bi);
      S.swap_cols(t, bj);
      V.swap_cols(t, bj);
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (S(i, t) == 0) continue;
        Integer q = S(i, t) / S(t, t);
        S.add_row(i, t, -q);
        U.add_row(i, t, -q);
        if (S(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (S(t, j) == 0) continue;
        Integer q = S(t, j) / S(t, t);
        S.add_col(j, t, -q);
        V.add_col(j, t, -q);
        if (S(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      bool divisible = true;
      for (std::size_t i = t + 1; i < m && divisible; ++i)
        for (std::size_t j = t + 1; j < n; ++j) {
          Integer rem = S(i, j) % S(t, t);
          if (rem != 0) {
            S.add_row(t, i, 1);
            U.add_row(t, i, 1);
            divisible = false;
            break;
          }
        }
      if (divisible) break;
    }
    if (!found) break;
    if (S(t, t) < 0) {
      S.negate_row(t);
      U.negate_row(t);
    }
    out.divisors.push_back(S(t, t));
  }
  out.rank = t;
  return out;
}

Integer determinant(const IntMatrix& M) {
  if (M.rows() != M.cols()) throw ToricError(ErrorKind::InvalidInput, "determinant of a non-square matrix");
  const std::size_t n = M.rows();
  if (n == 0) return 1;
  IntMatrix A = M;
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (A(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && A(p, k) == 0) ++p;
      if (p == n) return 0;
      A.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        A(i, j) = A(i, j) * A(k, k) - A(i, k) * A(k, j);
        mpz_divexact(A(i, j).get_mpz_t(), A(i, j).get_mpz_t(), prev.get_mpz_t());
      }
    prev = A(k, k);
  }
  return sign * A(n - 1, n - 1);
}

IntMatrix inverse_unimodular(const IntMatrix& M) {
  HermiteForm h = hnf(M);
  if (M.rows() != M.cols() || !(h.H == IntMatrix::identity(M.rows())))
    throw ToricError(ErrorKind::PreconditionViolated, "matrix is not unimodular");
  return h.U;
}

std::size_t rank_of(const IntMatrix& M) { return hnf(M).rank; }

std::size_t rank_of(const std::vector<IntVector>& rows, std::size_t cols) {
  if (rows.empty()) return 0;
  return rank_of(IntMatrix::from_rows(rows, cols));
}

std::optional<IntegerSolution> solve_integer(const IntMatrix& M, const IntVector& b) {
  if (b.size() != M.rows()) throw ToricError(ErrorKind::InvalidInput, "right-hand side length mismatch");
  SmithForm s = snf(M);
  IntVector c = s.U * b;
  IntVector y(M.cols(), Integer(0));
  for (std::size_t i = 0; i < M.rows(); ++i) {
    if (i < s.rank) {
      if (c[i] % s.divisors[i] != 0) return std::nullopt;
      y[i] = c[i] / s.divisors[i];
    } else if (c[i] != 0) {
      return std::nullopt;
    }
  }
  IntegerSolution sol;
  sol.particular = s.V * y;
  for (std::size_t j = s.rank; j < M.cols(); ++j) sol.kernel.push_back(s.V.column(j));
  return sol;
}

std::vector<IntVector> integer_kernel(const IntMatrix& M) {
  return solve_integer(M, IntVector(M.rows(), Integer(0)))->kernel;
}

RowEchelon rref(std::vector<RatVector> rows, std::size_t cols) {
  RowEchelon out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    Rational inv = 1 / rows[r][c];
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Rational f = rows[i][c];
      for (std::size_t j = 0; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    out.pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  out.rows = std::move(rows);
  return out;
}

std::vector<RatVector> rational_kernel(const std::vector<RatVector>& rows, std::size_t cols) {
  RowEchelon e = rref(rows, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<RatVector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RatVector v(cols, Rational(0));
    v[f] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.rows[i][f];
    basis.push_back(std::move(v));
  }
  return rref(std::move(basis), cols).rows;
}

std::optional<RatVector> solve_rational(const std::vector<RatVector>& rows, const RatVector& rhs,
                                        std::size_t cols) {
  std::vector<RatVector> aug;
  aug.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    RatVector r = rows[i];
    r.push_back(rhs[i]);
    aug.push_back(std::move(r));
  }
  RowEchelon e = rref(std::move(aug), cols + 1);
  RatVector x(cols, Rational(0));
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    if (e.pivots[i] == cols) return std::nullopt;
    x[e.pivots[i]] = e.rows[i][cols];
  }
  return x;
}

Lattice::Lattice(std::size_t ambient_dim) : dim_(ambient_dim) {}

Lattice::Lattice(std::size_t ambient_dim, const std::vector<IntVector>& basis) : dim_(ambient_dim) {
  if (basis.empty()) return;
  HermiteForm h = hnf(IntMatrix::from_rows(basis, ambient_dim));
  if (h.rank != basis.size()) throw ToricError(ErrorKind::InvalidInput, "lattice basis is linearly dependent");
  for (std::size_t i = 0; i < h.rank; ++i) basis_.push_back(h.H.row(i));
  pivots_ = h.pivots;
}

Lattice Lattice::generated_by(std::size_t ambient_dim, const std::vector<IntVector>& generators) {
  Lattice L(ambient_dim);
  if (generators.empty()) return L;
  HermiteForm h = hnf(IntMatrix::from_rows(generators, ambient_dim));
  for (std::size_t i = 0; i < h.rank; ++i) L.basis_.push_back(h.H.row(i));
  L.pivots_ = h.pivots;
  return L;
}

Lattice Lattice::full(std::size_t ambient_dim) {
  std::vector<IntVector> rows = IntMatrix::identity(ambient_dim).row_list();
  return Lattice(ambient_dim, rows);
}

IntMatrix Lattice::basis_matrix() const { return IntMatrix::from_rows(basis_, dim_); }

RatVector Lattice::reduce(const RatVector& x) const {
  RatVector r = x;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const std::size_t p = pivots_[i];
    Integer q = floor_of(r[p] / Rational(basis_[i][p]));
    if (q == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) r[j] -= Rational(q * basis_[i][j]);
  }
  return r;
}

IntVector Lattice::reduce(const IntVector& x) const {
  IntVector r = x;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const std::size_t p = pivots_[i];
    Integer q = floor_div(r[p], basis_[i][p]);
    if (q == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) r[j] -= q * basis_[i][j];
  }
  return r;
}

bool Lattice::contains(const IntVector& x) const { return is_zero(reduce(x)); }

std::optional<IntVector> Lattice::coordinates(const IntVector& x) const {
  if (basis_.empty()) {
    if (is_zero(x)) return IntVector{};
    return std::nullopt;
  }
  auto sol = solve_integer(basis_matrix().transpose(), x);
  if (!sol) return std::nullopt;
  return sol->particular;
}

namespace {

IntMatrix coordinates_in(const Lattice& sub, const Lattice& sup) {
  IntMatrix C(sub.rank(), sup.rank());
  for (std::size_t i = 0; i < sub.rank(); ++i) {
    auto c = sup.coordinates(sub.basis()[i]);
    if (!c) throw ToricError(ErrorKind::NotSublattice, "lattice is not contained in the ambient lattice");
    for (std::size_t j = 0; j < sup.rank(); ++j) C(i, j) = (*c)[j];
  }
  return C;
}

}  // namespace

LatticeIndex lattice_index(const Lattice& sub, const Lattice& sup) {
  if (sub.ambient_dim() != sup.ambient_dim()) throw ToricError(ErrorKind::InvalidInput, "ambient dimension mismatch");
  IntMatrix C = coordinates_in(sub, sup);
  if (sub.rank() != sup.rank()) return {true, 0};
  return {false, abs_of(determinant(C))};
}

SaturationFrame saturation_frame(const Lattice& L) {
  const std::size_t d = L.ambient_dim();
  SaturationFrame f;
  f.rank = L.rank();
  if (L.rank() == 0) {
    f.V = IntMatrix::identity(d);
    f.Vinv = IntMatrix::identity(d);
    return f;
  }
  SmithForm s = snf(L.basis_matrix());
  f.V = s.V;
  f.Vinv = inverse_unimodular(s.V);
  return f;
}

Lattice saturate(const Lattice& L) {
  SaturationFrame f = saturation_frame(L);
  std::vector<IntVector> rows;
  for (std::size_t i = 0; i < f.rank; ++i) rows.push_back(f.Vinv.row(i));
  return Lattice(L.ambient_dim(), rows);
}

std::vector<IntVector> coset_reps(const Lattice& sub, const Lattice& sup) {
  QuotientGroup q(sub, sup);
  if (!q.finite()) throw ToricError(ErrorKind::InfiniteIndex, "sublattice has infinite index");
  return q.torsion_reps();
}

bool check_full_lattice(const IntMatrix& A) {
  SmithForm s = snf(A);
  if (s.rank != A.rows()) return false;
  return std::all_of(s.divisors.begin(), s.divisors.end(), [](const Integer& x) { return x == 1; });
}

QuotientGroup::QuotientGroup(const Lattice& sub, const Lattice& sup) : dim_(sup.ambient_dim()) {
  if (sub.ambient_dim() != sup.ambient_dim()) throw ToricError(ErrorKind::InvalidInput, "ambient dimension mismatch");
  sup_basis_ = sup.basis_matrix();
  standard_ = sup_basis_ == IntMatrix::identity(dim_);
  sup_solver_ = sup_basis_.transpose();
  IntMatrix C = coordinates_in(sub, sup);
  sub_rank_ = sub.rank();
  if (sub_rank_ == 0) {
    V_ = IntMatrix::identity(sup.rank());
  } else {
    SmithForm s = snf(C);
    V_ = s.V;
    divisors_ = s.divisors;
  }
  Vinv_ = inverse_unimodular(V_);
  for (const auto& dv : divisors_)
    if (dv != 1) torsion_.push_back(dv);
  free_rank_ = sup.rank() - sub_rank_;
}

Integer QuotientGroup::order() const {
  if (!finite()) throw ToricError(ErrorKind::InfiniteIndex, "quotient is infinite");
  Integer o = 1;
  for (const auto& t : torsion_) o *= t;
  return o;
}

IntVector QuotientGroup::sup_coords(const IntVector& x) const {
  if (x.size() != dim_) throw ToricError(ErrorKind::InvalidInput, "vector length mismatch");
  if (standard_) return x;
  if (sup_basis_.rows() == 0) {
    if (!is_zero(x)) throw ToricError(ErrorKind::PreconditionViolated, "vector outside the ambient lattice");
    return {};
  }
  auto sol = solve_integer(sup_solver_, x);
  if (!sol) throw ToricError(ErrorKind::PreconditionViolated, "vector outside the ambient lattice");
  return sol->particular;
}

IntVector QuotientGroup::to_ambient(const IntVector& w) const {
  IntVector z = Vinv_.left_multiply(w);
  if (standard_) return z;
  if (sup_basis_.rows() == 0) return IntVector(dim_, Integer(0));
  return sup_basis_.left_multiply(z);
}

QuotientGroup::Projection QuotientGroup::project(const IntVector& x) const {
  IntVector w = V_.left_multiply(sup_coords(x));
  Projection p;
  for (std::size_t i = 0; i < sub_rank_; ++i) {
    if (divisors_[i] == 1) continue;
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), w[i].get_mpz_t(), divisors_[i].get_mpz_t());
    p.torsion.push_back(r);
  }
  for (std::size_t i = sub_rank_; i < w.size(); ++i) p.free.push_back(w[i]);
  return p;
}

bool QuotientGroup::is_trivial(const IntVector& x) const {
  Projection p = project(x);
  return is_zero(p.torsion) && is_zero(p.free);
}

IntVector QuotientGroup::canonical_rep(const IntVector& x) const {
  IntVector w = V_.left_multiply(sup_coords(x));
  for (std::size_t i = 0; i < sub_rank_; ++i) mpz_fdiv_r(w[i].get_mpz_t(), w[i].get_mpz_t(), divisors_[i].get_mpz_t());
  return to_ambient(w);
}

std::vector<IntVector> QuotientGroup::torsion_reps() const {
  const std::size_t n = V_.rows();
  std::vector<IntVector> out;
  IntVector w(n, Integer(0));
  while (true) {
    out.push_back(to_ambient(w));
    std::size_t i = sub_rank_;
    while (i > 0) {
      --i;
      w[i] += 1;
      if (w[i] < divisors_[i]) break;
      w[i] = 0;
      if (i == 0) return out;
    }
    if (sub_rank_ == 0) return out;
  }
}

}  // namespace toricd
