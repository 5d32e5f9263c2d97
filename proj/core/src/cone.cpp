#include "toricd/cone.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "toricd/errors.hpp"

namespace toricd {

std::string facet_name(const std::vector<std::size_t>& columns, std::size_t num_columns) {
  std::string s;
  const bool sep = num_columns >= 10;
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (sep && i) s += "_";
    s += std::to_string(columns[i] + 1);
  }
  return s;
}

std::optional<std::size_t> ToricData::face_by_name(std::string_view name) const {
  for (const auto& f : faces_)
    if (f.name == name) return f.id;
  return std::nullopt;
}

std::optional<std::size_t> ToricData::facet_by_name(std::string_view name) const {
  for (const auto& f : facets_)
    if (f.name == name) return f.id;
  return std::nullopt;
}

std::optional<std::size_t> ToricData::face_by_columns(const std::vector<std::size_t>& columns) const {
  for (const auto& f : faces_)
    if (f.columns == columns) return f.id;
  return std::nullopt;
}

Integer ToricData::facet_value(std::size_t facet, const IntVector& x) const { return dot(facets_[facet].normal, x); }

Rational ToricData::facet_value(std::size_t facet, const RatVector& x) const { return dot(facets_[facet].normal, x); }

IntVector ToricData::facet_values(const IntVector& x) const {
  IntVector v;
  v.reserve(facets_.size());
  for (std::size_t s = 0; s < facets_.size(); ++s) v.push_back(facet_value(s, x));
  return v;
}

RatVector ToricData::facet_values(const RatVector& x) const {
  RatVector v;
  v.reserve(facets_.size());
  for (std::size_t s = 0; s < facets_.size(); ++s) v.push_back(facet_value(s, x));
  return v;
}

namespace {

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<IntVector> find_facet_normals(const std::vector<IntVector>& cols, std::size_t d) {
  std::vector<std::size_t> nonzero;
  for (std::size_t j = 0; j < cols.size(); ++j)
    if (!is_zero(cols[j])) nonzero.push_back(j);
  std::set<IntVector> normals;
  const std::size_t k = d - 1;
  if (nonzero.size() < k) return {};
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  do {
    std::vector<RatVector> rows;
    for (std::size_t i : idx) rows.push_back(to_rational(cols[nonzero[i]]));
    std::vector<RatVector> ker = rational_kernel(rows, d);
    if (ker.size() != 1) continue;
    IntVector n = primitive_integer(ker[0]);
    bool pos = false, neg = false;
    for (const auto& c : cols) {
      Integer v = dot(n, c);
      if (v > 0) pos = true;
      if (v < 0) neg = true;
    }
    if (pos && neg) continue;
    if (neg) n = scale(Integer(-1), n);
    normals.insert(n);
  } while (k > 0 && next_combination(idx, nonzero.size()));
  return {normals.begin(), normals.end()};
}

}  // namespace

ToricData build_toric(const IntMatrix& A) {
  if (A.rows() == 0 || A.cols() == 0) throw ToricError(ErrorKind::InvalidInput, "matrix must have positive dimensions");
  const std::size_t d = A.rows(), n = A.cols();
  if (rank_of(A) != d) throw ToricError(ErrorKind::NotFullDimensional, "columns do not span Q^d");
  if (!check_full_lattice(A)) throw ToricError(ErrorKind::NotFullLattice, "columns do not generate Z^d");

  ToricData T;
  T.A_ = A;
  T.columns_ = A.column_list();

  std::vector<IntVector> normals = find_facet_normals(T.columns_, d);
  if (rank_of(normals, d) != d) throw ToricError(ErrorKind::NotPointed, "cone is not pointed");

  std::vector<Facet> facets;
  for (auto& nrm : normals) {
    Facet f;
    f.normal = nrm;
    for (std::size_t j = 0; j < n; ++j)
      if (dot(nrm, T.columns_[j]) == 0) f.columns.push_back(j);
    facets.push_back(std::move(f));
  }
  std::sort(facets.begin(), facets.end(), [](const Facet& a, const Facet& b) { return a.columns < b.columns; });
  for (std::size_t i = 0; i < facets.size(); ++i) {
    facets[i].id = i;
    facets[i].name = "sigma" + facet_name(facets[i].columns, n);
  }
  T.facets_ = std::move(facets);

  T.column_values_.assign(T.facets_.size(), std::vector<Integer>(n));
  for (std::size_t s = 0; s < T.facets_.size(); ++s)
    for (std::size_t j = 0; j < n; ++j) {
      T.column_values_[s][j] = dot(T.facets_[s].normal, T.columns_[j]);
      if (T.column_values_[s][j] > T.max_column_value_) T.max_column_value_ = T.column_values_[s][j];
    }

  // Faces: closure of the facet column sets under intersection.
  std::vector<std::size_t> all(n);
  for (std::size_t j = 0; j < n; ++j) all[j] = j;
  std::set<std::vector<std::size_t>> sets;
  sets.insert(all);
  std::vector<std::vector<std::size_t>> frontier;
  for (const auto& f : T.facets_)
    if (sets.insert(f.columns).second) frontier.push_back(f.columns);
  while (!frontier.empty()) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& s : frontier)
      for (const auto& f : T.facets_) {
        std::vector<std::size_t> meet;
        std::set_intersection(s.begin(), s.end(), f.columns.begin(), f.columns.end(), std::back_inserter(meet));
        if (sets.insert(meet).second) next.push_back(meet);
      }
    frontier = std::move(next);
  }

  std::vector<Face> faces;
  for (const auto& s : sets) {
    Face f;
    f.columns = s;
    std::vector<IntVector> cols;
    for (auto j : s) cols.push_back(T.columns_[j]);
    f.dim = rank_of(cols, d);
    for (const auto& fc : T.facets_)
      if (std::includes(fc.columns.begin(), fc.columns.end(), s.begin(), s.end())) f.containing_facets.push_back(fc.id);
    faces.push_back(std::move(f));
  }
  std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
    if (a.dim != b.dim) return a.dim > b.dim;
    return a.columns < b.columns;
  });
  T.facet_face_.assign(T.facets_.size(), 0);
  for (std::size_t i = 0; i < faces.size(); ++i) {
    Face& f = faces[i];
    f.id = i;
    if (f.dim == d) {
      f.name = "cone";
      T.full_face_ = i;
    } else if (f.dim == 0) {
      f.name = "origin";
      T.origin_face_ = i;
    } else if (f.dim + 1 == d) {
      f.name = "sigma" + facet_name(f.columns, n);
      for (const auto& fc : T.facets_)
        if (fc.columns == f.columns) T.facet_face_[fc.id] = i;
    } else {
      f.name = "tau" + facet_name(f.columns, n);
    }
  }
  T.faces_ = std::move(faces);
  return T;
}

std::vector<std::size_t> integral_facets(const ToricData& T, const RatVector& alpha) {
  if (alpha.size() != T.dim()) throw ToricError(ErrorKind::InvalidInput, "parameter has wrong length");
  std::vector<std::size_t> out;
  for (std::size_t s = 0; s < T.facets().size(); ++s)
    if (is_integral(T.facet_value(s, alpha))) out.push_back(s);
  return out;
}

std::vector<IntVector> stratum_subspace(const ToricData& T, const std::vector<std::size_t>& facets) {
  if (facets.empty()) return IntMatrix::identity(T.dim()).row_list();
  std::vector<IntVector> rows;
  for (auto s : facets) rows.push_back(T.facets().at(s).normal);
  std::vector<IntVector> ker = integer_kernel(IntMatrix::from_rows(rows, T.dim()));
  return Lattice::generated_by(T.dim(), ker).basis();
}

std::vector<IntVector> linear_relations(const ToricData& T) {
  const std::size_t m = T.facets().size();
  IntMatrix Nt(T.dim(), m);
  for (std::size_t s = 0; s < m; ++s)
    for (std::size_t i = 0; i < T.dim(); ++i) Nt(i, s) = T.facets()[s].normal[i];
  return Lattice::generated_by(m, integer_kernel(Nt)).basis();
}

std::vector<RatVector> region_points(const ToricData& T, const RatVector& offset,
                                     const std::vector<Rational>& lower,
                                     const std::vector<Rational>& upper) {
  const std::size_t d = T.dim(), m = T.facets().size();
  if (offset.size() != d || lower.size() != m || upper.size() != m)
    throw ToricError(ErrorKind::InvalidInput, "region bounds have wrong length");

  // d independent facets give coordinates y = N_B x; x = adj(N_B) y / det.
  std::vector<std::size_t> B;
  std::vector<IntVector> rows;
  for (std::size_t s = 0; s < m && B.size() < d; ++s) {
    rows.push_back(T.facets()[s].normal);
    if (rank_of(rows, d) == rows.size()) {
      B.push_back(s);
    } else {
      rows.pop_back();
    }
  }
  IntMatrix NB = IntMatrix::from_rows(rows, d);
  Integer det = determinant(NB);
  // adj = det * NB^{-1}
  IntMatrix adj(d, d);
  for (std::size_t k = 0; k < d; ++k) {
    std::vector<RatVector> r;
    for (auto& row : rows) r.push_back(to_rational(row));
    RatVector e(d, Rational(0));
    e[k] = 1;
    RatVector col = *solve_rational(r, e, d);
    for (std::size_t i = 0; i < d; ++i) adj(i, k) = Rational(col[i] * Rational(det)).get_num();
  }

  std::vector<Integer> lo(d), hi(d);
  for (std::size_t k = 0; k < d; ++k) {
    Rational f = T.facet_value(B[k], offset);
    lo[k] = ceil_of(lower[B[k]] - f);
    hi[k] = floor_of(upper[B[k]] - f);
    if (lo[k] > hi[k]) return {};
  }

  std::vector<std::size_t> others;
  for (std::size_t s = 0; s < m; ++s)
    if (std::find(B.begin(), B.end(), s) == B.end()) others.push_back(s);

  std::vector<std::pair<Rational, RatVector>> found;
  IntVector y = lo;
  IntVector num = adj * y;
  IntVector x(d);
  while (true) {
    bool integral = true;
    for (std::size_t i = 0; i < d && integral; ++i)
      if (!mpz_divisible_p(num[i].get_mpz_t(), det.get_mpz_t())) integral = false;
    if (integral) {
      for (std::size_t i = 0; i < d; ++i) mpz_divexact(x[i].get_mpz_t(), num[i].get_mpz_t(), det.get_mpz_t());
      RatVector p = add(offset, x);
      bool ok = true;
      for (auto s : others) {
        Rational f = T.facet_value(s, p);
        if (f < lower[s] || f > upper[s]) {
          ok = false;
          break;
        }
      }
      if (ok) {
        Rational key = 0;
        for (std::size_t s = 0; s < m; ++s) key += T.facet_value(s, p);
        found.emplace_back(key, std::move(p));
      }
    }
    bool done = true;
    for (std::size_t k = d; k-- > 0;) {
      if (y[k] < hi[k]) {
        y[k] += 1;
        for (std::size_t i = 0; i < d; ++i) num[i] += adj(i, k);
        done = false;
        break;
      }
      Integer span = y[k] - lo[k];
      for (std::size_t i = 0; i < d; ++i) num[i] -= span * adj(i, k);
      y[k] = lo[k];
    }
    if (done) break;
  }
  std::sort(found.begin(), found.end());
  std::vector<RatVector> out;
  out.reserve(found.size());
  for (auto& f : found) out.push_back(std::move(f.second));
  return out;
}

std::vector<IntVector> saturation_window(const ToricData& T, const Integer& M) {
  const std::size_t m = T.facets().size();
  std::vector<RatVector> pts = region_points(T, RatVector(T.dim(), Rational(0)), std::vector<Rational>(m, Rational(0)),
                                             std::vector<Rational>(m, Rational(M)));
  std::vector<IntVector> out;
  out.reserve(pts.size());
  for (auto& p : pts) out.push_back(to_integer(p));
  return out;
}

std::vector<RatVector> parameter_window(const ToricData& T, const RatVector& alpha, const Integer& M) {
  const std::size_t m = T.facets().size();
  return region_points(T, alpha, std::vector<Rational>(m, Rational(-M)), std::vector<Rational>(m, Rational(M)));
}

}  // namespace toricd
