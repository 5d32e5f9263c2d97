#include "toricd/semigroup.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <unordered_set>

#include "toricd/errors.hpp"

namespace toricd {

Window default_window(const ToricData& T) { return Window{Integer(4) * T.max_column_value()}; }

const char* obstruction_name(Obstruction o) {
  switch (o) {
    case Obstruction::None: return "none";
    case Obstruction::NegativeFacetValue: return "negative facet value";
    case Obstruction::FacetGap: return "facet gap";
    case Obstruction::NoRepresentation: return "no representation";
  }
  return "unknown";
}

NumericalSemigroup facet_value_semigroup(const ToricData& T, std::size_t facet) {
  std::vector<Integer> gens;
  for (std::size_t j = 0; j < T.num_columns(); ++j) gens.push_back(T.column_value(facet, j));
  return NumericalSemigroup(std::move(gens));
}

namespace {

FaceLattices make_face_lattices(const ToricData& T, const Face& face) {
  std::vector<IntVector> gens;
  for (auto j : face.columns) gens.push_back(T.column(j));
  Lattice sub = Lattice::generated_by(T.dim(), gens);
  Lattice sat = saturate(sub);
  SaturationFrame frame = saturation_frame(sub);
  QuotientGroup label_group(sub, sat);
  QuotientGroup residue_group(sub, Lattice::full(T.dim()));
  Integer capacity = label_group.order();
  std::vector<IntVector> reps = label_group.torsion_reps();
  return FaceLattices{std::move(sub), std::move(sat), std::move(frame), std::move(label_group),
                      std::move(residue_group), std::move(capacity), std::move(reps)};
}

}  // namespace

SemigroupEngine::SemigroupEngine(ToricData T) : T_(std::move(T)) {
  for (std::size_t s = 0; s < T_.facets().size(); ++s) semigroups_.push_back(facet_value_semigroup(T_, s));
  const std::size_t n = T_.num_columns();
  for (const auto& face : T_.faces()) {
    lattices_.push_back(make_face_lattices(T_, face));
    Plan p;
    p.facets = face.containing_facets;
    for (std::size_t j = 0; j < n; ++j)
      if (!std::binary_search(face.columns.begin(), face.columns.end(), j)) p.columns.push_back(j);
    std::vector<Integer> weight(n, Integer(0));
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t s = 0; s < T_.facets().size(); ++s) weight[j] += T_.column_value(s, j);
    std::stable_sort(p.columns.begin(), p.columns.end(),
                     [&](std::size_t a, std::size_t b) { return weight[a] > weight[b]; });
    const std::size_t K = p.columns.size(), m = p.facets.size();
    p.values.assign(K, std::vector<Integer>(m));
    for (std::size_t k = 0; k < K; ++k)
      for (std::size_t i = 0; i < m; ++i) p.values[k][i] = T_.column_value(p.facets[i], p.columns[k]);
    p.suffix_gcd.assign(K + 1, std::vector<Integer>(m, Integer(0)));
    for (std::size_t k = K; k-- > 0;)
      for (std::size_t i = 0; i < m; ++i)
        mpz_gcd(p.suffix_gcd[k][i].get_mpz_t(), p.suffix_gcd[k + 1][i].get_mpz_t(), p.values[k][i].get_mpz_t());
    plans_.push_back(std::move(p));
  }
  cache_.resize(T_.faces().size());
}

bool SemigroupEngine::search(const IntVector& b, std::size_t face, IntVector* u) const {
  if (b.size() != T_.dim()) throw ToricError(ErrorKind::InvalidInput, "vector has wrong length");
  if (u) u->assign(T_.num_columns(), Integer(0));
  if (face == T_.full_face()) return true;
  const Plan& P = plans_[face];
  const FaceLattices& L = lattices_[face];
  const std::size_t K = P.columns.size(), m = P.facets.size();
  std::vector<Integer> budget(m);
  for (std::size_t i = 0; i < m; ++i) {
    budget[i] = T_.facet_value(P.facets[i], b);
    if (budget[i] < 0) return false;
  }
  const bool check_lattice = L.sub.rank() > 0;
  IntVector r = b;
  std::vector<Integer> coef(K, Integer(0));
  std::unordered_set<IntVector, IntVectorHash> dead;
  std::uint64_t nodes = 0;

  std::function<bool(std::size_t)> dfs = [&](std::size_t k) -> bool {
    if (++nodes > node_limit_) throw ToricError(ErrorKind::LimitExceeded, "membership search exceeded its node limit");
    for (std::size_t i = 0; i < m; ++i)
      if (!mpz_divisible_p(budget[i].get_mpz_t(), P.suffix_gcd[k][i].get_mpz_t())) return false;
    if (k == K) return !check_lattice || L.residue_group.is_trivial(r);
    IntVector key = r;
    key.emplace_back(static_cast<unsigned long>(k));
    if (dead.count(key)) return false;
    const std::size_t j = P.columns[k];
    Integer maxu = -1;
    for (std::size_t i = 0; i < m; ++i) {
      if (P.values[k][i] <= 0) continue;
      Integer q = budget[i] / P.values[k][i];
      if (maxu < 0 || q < maxu) maxu = q;
    }
    if (maxu < 0) maxu = 0;
    const IntVector& a = T_.column(j);
    for (std::size_t i = 0; i < m; ++i) budget[i] -= maxu * P.values[k][i];
    for (std::size_t t = 0; t < r.size(); ++t) r[t] -= maxu * a[t];
    for (Integer uu = maxu;; --uu) {
      coef[k] = uu;
      if (dfs(k + 1)) return true;
      if (uu == 0) break;
      for (std::size_t i = 0; i < m; ++i) budget[i] += P.values[k][i];
      for (std::size_t t = 0; t < r.size(); ++t) r[t] += a[t];
    }
    coef[k] = 0;
    dead.insert(std::move(key));
    return false;
  };
  if (!dfs(0)) return false;
  if (u)
    for (std::size_t k = 0; k < K; ++k) (*u)[P.columns[k]] = coef[k];
  return true;
}

bool SemigroupEngine::cached(const IntVector& b, std::size_t face) const {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = cache_[face].find(b);
    if (it != cache_[face].end()) return it->second;
  }
  bool v = search(b, face, nullptr);
  std::lock_guard<std::mutex> lock(mutex_);
  cache_[face].emplace(b, v);
  return v;
}

bool SemigroupEngine::in_semigroup(const IntVector& b) const { return cached(b, T_.origin_face()); }

bool SemigroupEngine::in_semigroup_mod_face(const IntVector& b, std::size_t face) const {
  if (face >= T_.faces().size()) throw ToricError(ErrorKind::InvalidInput, "face index out of range");
  return cached(b, face);
}

MembershipCertificate SemigroupEngine::member_mod_face(const IntVector& b, std::size_t face) const {
  if (b.size() != T_.dim()) throw ToricError(ErrorKind::InvalidInput, "vector has wrong length");
  if (face >= T_.faces().size()) throw ToricError(ErrorKind::InvalidInput, "face index out of range");
  MembershipCertificate cert;
  const Face& F = T_.faces()[face];
  for (auto s : F.containing_facets)
    if (T_.facet_value(s, b) < 0) {
      cert.obstruction = Obstruction::NegativeFacetValue;
      cert.facet = s;
      return cert;
    }
  for (auto s : F.containing_facets)
    if (!semigroups_[s].contains(T_.facet_value(s, b))) {
      cert.obstruction = Obstruction::FacetGap;
      cert.facet = s;
      return cert;
    }
  IntVector u;
  if (!search(b, face, &u)) {
    cert.obstruction = Obstruction::NoRepresentation;
    return cert;
  }
  cert.member = true;
  cert.u = u;
  cert.c.assign(T_.num_columns(), Integer(0));
  IntVector r = b;
  for (std::size_t j = 0; j < T_.num_columns(); ++j)
    if (u[j] != 0) r = sub(r, scale(u[j], T_.column(j)));
  if (!F.columns.empty()) {
    std::vector<IntVector> cols;
    for (auto j : F.columns) cols.push_back(T_.column(j));
    auto sol = solve_integer(IntMatrix::from_columns(cols, T_.dim()), r);
    if (!sol) throw ToricError(ErrorKind::PreconditionViolated, "internal: face residual not in the face lattice");
    for (std::size_t i = 0; i < F.columns.size(); ++i) cert.c[F.columns[i]] = sol->particular[i];
  }
  return cert;
}

MembershipCertificate SemigroupEngine::member(const IntVector& b) const {
  MembershipCertificate cert = member_mod_face(b, T_.origin_face());
  cert.c.clear();
  return cert;
}

FacetSplit fplus_fminus(const SemigroupEngine& S, const RatVector& alpha) {
  const ToricData& T = S.toric();
  if (alpha.size() != T.dim()) throw ToricError(ErrorKind::InvalidInput, "parameter has wrong length");
  FacetSplit split;
  for (std::size_t s = 0; s < T.facets().size(); ++s) {
    Rational v = T.facet_value(s, alpha);
    if (!is_integral(v)) continue;
    if (S.facet_semigroup(s).contains(v)) {
      split.plus.push_back(s);
    } else {
      split.minus.push_back(s);
    }
  }
  return split;
}

std::vector<IntVector> omega(const SemigroupEngine& S, const IntVector& a, const Window& W) {
  if (a.size() != S.toric().dim()) throw ToricError(ErrorKind::InvalidInput, "degree has wrong length");
  std::vector<IntVector> out;
  for (const auto& b : saturation_window(S.toric(), W.bound))
    if (S.in_semigroup(b) && !S.in_semigroup(add(b, a))) out.push_back(b);
  return out;
}

namespace {

IntVector projection_key(const QuotientGroup& q, const IntVector& x) {
  QuotientGroup::Projection p = q.project(x);
  IntVector key = p.torsion;
  key.insert(key.end(), p.free.begin(), p.free.end());
  return key;
}

}  // namespace

HoleReport holes(const SemigroupEngine& S, const Window& W) {
  const ToricData& T = S.toric();
  HoleReport rep;
  rep.window = W.bound;
  std::vector<IntVector> window = saturation_window(T, W.bound);
  std::unordered_set<IntVector, IntVectorHash> window_set(window.begin(), window.end());
  std::unordered_set<IntVector, IntVectorHash> hole_set;
  for (const auto& p : window)
    if (!S.in_semigroup(p)) {
      rep.points.push_back(p);
      hole_set.insert(p);
    }
  std::vector<bool> assigned(rep.points.size(), false);
  std::unordered_map<IntVector, std::size_t, IntVectorHash> hole_index;
  for (std::size_t i = 0; i < rep.points.size(); ++i) hole_index[rep.points[i]] = i;

  for (const auto& face : T.faces()) {
    if (face.id == T.full_face()) continue;
    if (std::all_of(assigned.begin(), assigned.end(), [](bool b) { return b; })) break;
    if (face.id == T.origin_face()) {
      for (std::size_t i = 0; i < rep.points.size(); ++i) {
        if (assigned[i]) continue;
        assigned[i] = true;
        rep.components.push_back(HoleComponent{rep.points[i], face.id, W.bound, {}, {rep.points[i]}});
      }
      continue;
    }
    const FaceLattices& L = S.face_lattices(face.id);
    std::map<IntVector, std::vector<IntVector>> classes;
    for (const auto& p : window) classes[projection_key(L.residue_group, p)].push_back(p);
    std::vector<IntVector> periods;
    for (auto j : face.columns)
      if (!is_zero(T.column(j)) && std::find(periods.begin(), periods.end(), T.column(j)) == periods.end())
        periods.push_back(T.column(j));
    for (std::size_t i = 0; i < rep.points.size(); ++i) {
      if (assigned[i]) continue;
      const auto& cls = classes[projection_key(L.residue_group, rep.points[i])];
      bool all_holes = std::all_of(cls.begin(), cls.end(), [&](const IntVector& p) { return hole_set.count(p) > 0; });
      if (!all_holes) continue;
      bool confirmed = true;
      for (const auto& a : periods) {
        bool seen = std::any_of(cls.begin(), cls.end(), [&](const IntVector& p) { return window_set.count(add(p, a)) > 0; });
        if (!seen) {
          confirmed = false;
          break;
        }
      }
      if (!confirmed) continue;
      HoleComponent comp{L.sub.reduce(rep.points[i]), face.id, W.bound, periods, cls};
      for (const auto& p : cls) assigned[hole_index[p]] = true;
      rep.components.push_back(std::move(comp));
    }
  }
  return rep;
}

ScoredResult is_scored(const SemigroupEngine& S, const Window& W) {
  const ToricData& T = S.toric();
  ScoredResult r;
  r.window = W.bound;
  for (const auto& p : saturation_window(T, W.bound)) {
    bool facet_ok = true;
    for (std::size_t s = 0; s < T.facets().size() && facet_ok; ++s)
      facet_ok = S.facet_semigroup(s).contains(T.facet_value(s, p));
    if (facet_ok && !S.in_semigroup(p)) {
      r.witness = p;
      return r;
    }
  }
  r.scored_on_window = true;
  return r;
}

S2Result satisfies_S2(const SemigroupEngine& S, const Window& W) {
  const ToricData& T = S.toric();
  S2Result r;
  r.window = W.bound;
  HoleReport h = holes(S, W);
  for (const auto& p : h.points) {
    bool everywhere = true;
    for (std::size_t s = 0; s < T.facets().size() && everywhere; ++s)
      everywhere = S.in_semigroup_mod_face(p, T.facet_face(s));
    if (!everywhere) continue;
    r.witness = p;
    for (const auto& c : h.components)
      if (std::find(c.points.begin(), c.points.end(), p) != c.points.end()) r.component = c;
    return r;
  }
  r.holds_on_window = true;
  return r;
}

C0Result check_C0(const SemigroupEngine& S) {
  C0Result r;
  for (const auto& f : S.toric().faces()) {
    const Integer& idx = S.face_lattices(f.id).capacity;
    if (idx != 1) {
      r.holds = false;
      r.face = f.id;
      r.index = idx;
      return r;
    }
  }
  return r;
}

std::vector<ClosureComponent> normalize_components(std::vector<ClosureComponent> comps) {
  std::sort(comps.begin(), comps.end(), [](const ClosureComponent& a, const ClosureComponent& b) {
    if (a.flat == b.flat) return a.kind < b.kind;
    return a.flat < b.flat;
  });
  std::vector<ClosureComponent> uniq;
  for (auto& c : comps)
    if (uniq.empty() || !(uniq.back().flat == c.flat)) uniq.push_back(std::move(c));
  std::vector<ClosureComponent> out;
  for (std::size_t i = 0; i < uniq.size(); ++i) {
    bool covered = false;
    for (std::size_t j = 0; j < uniq.size() && !covered; ++j)
      if (i != j && uniq[j].flat.dim() > uniq[i].flat.dim() && uniq[j].flat.contains(uniq[i].flat)) covered = true;
    if (!covered) out.push_back(uniq[i]);
  }
  return out;
}

std::vector<ClosureComponent> omega_closure(const SemigroupEngine& S, const IntVector& a, const Window& W) {
  const ToricData& T = S.toric();
  if (a.size() != T.dim()) throw ToricError(ErrorKind::InvalidInput, "degree has wrong length");
  std::vector<ClosureComponent> comps;
  Integer reach = 0;
  for (std::size_t s = 0; s < T.facets().size(); ++s) {
    Integer fa = T.facet_value(s, a);
    if (abs_of(fa) > reach) reach = abs_of(fa);
    if (fa >= 0) continue;
    for (Integer m = 0; m < -fa; ++m) {
      if (!S.facet_semigroup(s).contains(m)) continue;
      auto flat = AffineFlat::from_equations({T.facets()[s].normal}, {Rational(m)}, T.dim());
      comps.push_back({*flat, "slab"});
    }
  }
  HoleReport h = holes(S, Window{W.bound + reach});
  for (const auto& c : h.components) {
    IntVector x = sub(c.base, a);
    if (!S.in_semigroup_mod_face(x, c.face)) continue;
    std::vector<RatVector> dirs;
    for (const auto& v : S.face_lattices(c.face).sat.basis()) dirs.push_back(to_rational(v));
    comps.push_back({AffineFlat(to_rational(x), dirs), "hole"});
  }
  return normalize_components(std::move(comps));
}

}  // namespace toricd
