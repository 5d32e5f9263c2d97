#include "toricd/primitive.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <unordered_set>

#include "toricd/errors.hpp"
#include "toricd/feasibility.hpp"

namespace toricd {

std::optional<RatVector> rpos_witness(const SemigroupEngine& S, const RatVector& alpha) {
  FacetSplit split = fplus_fminus(S, alpha);
  return sign_pattern_witness(S.toric(), split.plus, split.minus);
}

bool rpos_nonempty(const SemigroupEngine& S, const RatVector& alpha) { return rpos_witness(S, alpha).has_value(); }

bool ann_is_zero(const ParameterClassifier& C, const RatVector& alpha) {
  return C.is_extreme(alpha) && rpos_nonempty(C.engine(), alpha);
}

namespace {

constexpr std::size_t kGridAnchors = 64;
constexpr std::size_t kGridNeighbours = 256;
constexpr std::size_t kGridVectors = 24;

std::size_t affine_hull_dim(const std::vector<RatVector>& pts) {
  if (pts.size() < 2) return 0;
  std::vector<RatVector> diffs;
  for (std::size_t i = 1; i < pts.size(); ++i) diffs.push_back(sub(pts[i], pts[0]));
  return rref(diffs, pts[0].size()).rows.size();
}

// Does the sample contain q + sum e_i v_i for all e in {0,1,2}^k, v_i independent?
bool has_grid(const std::vector<RatVector>& pts, std::size_t k) {
  std::unordered_set<RatVector, RatVectorHash> set(pts.begin(), pts.end());
  const std::size_t anchors = std::min(pts.size(), kGridAnchors);
  for (std::size_t qi = 0; qi < anchors; ++qi) {
    const RatVector& q = pts[qi];
    std::vector<std::pair<Rational, std::size_t>> near;
    for (std::size_t i = 0; i < pts.size(); ++i)
      if (i != qi) near.emplace_back(l1_norm(sub(pts[i], q)), i);
    std::sort(near.begin(), near.end());
    if (near.size() > kGridNeighbours) near.resize(kGridNeighbours);
    std::vector<RatVector> good;
    for (const auto& [dist, i] : near) {
      RatVector v = sub(pts[i], q);
      if (set.count(add(pts[i], v))) good.push_back(std::move(v));
      if (good.size() >= kGridVectors) break;
    }
    if (good.empty()) continue;
    if (k == 1) return true;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    if (good.size() < k) continue;
    while (true) {
      std::vector<RatVector> vs;
      for (auto i : idx) vs.push_back(good[i]);
      if (rref(vs, q.size()).rows.size() == k) {
        bool all = true;
        std::vector<int> e(k, 0);
        while (all) {
          RatVector p = q;
          for (std::size_t i = 0; i < k; ++i)
            if (e[i]) p = add(p, scale(Rational(e[i]), vs[i]));
          if (!set.count(p)) all = false;
          std::size_t t = 0;
          while (t < k && e[t] == 2) e[t++] = 0;
          if (t == k) break;
          ++e[t];
        }
        if (all) return true;
      }
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == good.size() - k + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return false;
}

}  // namespace

std::vector<AffineFlat> infer_flats(const ToricData& T, const std::vector<RatVector>& points) {
  const std::size_t m = T.facets().size(), d = T.dim();
  if (m > 16) throw ToricError(ErrorKind::LimitExceeded, "too many facets for flat inference");
  std::vector<std::size_t> masks;
  for (std::size_t mask = 1; mask < (std::size_t(1) << m); ++mask) masks.push_back(mask);
  std::stable_sort(masks.begin(), masks.end(),
                   [](std::size_t a, std::size_t b) { return std::popcount(a) < std::popcount(b); });
  std::vector<RatVector> pts = points;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  std::vector<AffineFlat> accepted;
  for (const auto& p : pts) {
    if (std::any_of(accepted.begin(), accepted.end(), [&](const AffineFlat& f) { return f.contains(p); })) continue;
    std::set<AffineFlat> tried;
    for (auto mask : masks) {
      std::vector<IntVector> normals;
      std::vector<Rational> values;
      for (std::size_t s = 0; s < m; ++s)
        if ((mask >> s) & 1) {
          normals.push_back(T.facets()[s].normal);
          values.push_back(T.facet_value(s, p));
        }
      AffineFlat flat = *AffineFlat::from_equations(normals, values, d);
      if (!tried.insert(flat).second) continue;
      const std::size_t k = flat.dim();
      if (k == 0) {
        accepted.push_back(flat);
        break;
      }
      std::vector<RatVector> inside;
      for (const auto& q : pts)
        if (flat.contains(q)) inside.push_back(q);
      if (affine_hull_dim(inside) < k) continue;
      if (has_grid(inside, k)) {
        accepted.push_back(flat);
        break;
      }
    }
  }
  return maximal_flats(std::move(accepted));
}

namespace {

std::vector<ClosureComponent> ann_components(const ParameterClassifier& C, const RatVector& alpha,
                                             const IntVector& a, const Window& W,
                                             const std::vector<ClosureComponent>& omega_part,
                                             std::size_t* lambda_points) {
  std::vector<RatVector> lam = C.lambda_set(alpha, a, W);
  if (lambda_points) *lambda_points = lam.size();
  std::vector<ClosureComponent> comps = omega_part;
  for (auto& f : infer_flats(C.toric(), lam)) comps.push_back({std::move(f), "lambda"});
  return normalize_components(std::move(comps));
}

}  // namespace

AnnReport ann_graded_component(const ParameterClassifier& C, const RatVector& alpha, const IntVector& a,
                               const Window& W) {
  const ToricData& T = C.toric();
  if (alpha.size() != T.dim() || a.size() != T.dim())
    throw ToricError(ErrorKind::InvalidInput, "parameter or degree has wrong length");
  AnnReport r;
  r.alpha = alpha;
  r.degree = a;
  r.window = W.bound;
  if (ann_is_zero(C, alpha)) {
    r.zero = true;
    r.components.push_back({AffineFlat::whole_space(T.dim()), "space"});
    r.certification = "exact";
    return r;
  }
  r.components = ann_components(C, alpha, a, W, omega_closure(C.engine(), a, W), &r.lambda_points);
  r.certification = "window";
  return r;
}

std::optional<RatVector> realize_stratum(const ToricData& T, const std::vector<std::size_t>& facets,
                                         const std::vector<Rational>& values) {
  const std::size_t d = T.dim(), m = T.facets().size();
  if (facets.size() != values.size()) throw ToricError(ErrorKind::InvalidInput, "stratum values have wrong length");
  std::vector<RatVector> rows;
  for (auto s : facets) rows.push_back(to_rational(T.facets().at(s).normal));
  std::optional<RatVector> base = rows.empty() ? std::optional<RatVector>(RatVector(d, Rational(0)))
                                               : solve_rational(rows, values, d);
  if (!base) return std::nullopt;
  std::vector<IntVector> ker;
  for (const auto& v : rational_kernel(rows, d)) ker.push_back(primitive_integer(v));

  std::vector<std::size_t> moving;
  for (std::size_t s = 0; s < m; ++s) {
    if (std::find(facets.begin(), facets.end(), s) != facets.end()) continue;
    bool constant = std::all_of(ker.begin(), ker.end(),
                                [&](const IntVector& k) { return T.facet_value(s, k) == 0; });
    if (constant) {
      if (is_integral(T.facet_value(s, *base))) return std::nullopt;
    } else {
      moving.push_back(s);
    }
  }
  if (moving.empty()) return base;

  IntVector w;
  for (long c = 1;; ++c) {
    w.assign(d, Integer(0));
    Integer coef = 1;
    for (const auto& k : ker) {
      w = add(w, scale(coef, k));
      coef *= c;
    }
    if (std::all_of(moving.begin(), moving.end(), [&](std::size_t s) { return T.facet_value(s, w) != 0; })) break;
  }
  for (long q = 2;; ++q) {
    RatVector alpha = add(*base, scale(Rational(1, q), to_rational(w)));
    if (std::none_of(moving.begin(), moving.end(),
                     [&](std::size_t s) { return is_integral(T.facet_value(s, alpha)); }))
      return alpha;
  }
}

std::vector<StratumRep> stratum_representatives(const ToricData& T, const std::vector<std::size_t>& stratum) {
  const std::size_t k = stratum.size();
  std::vector<IntVector> reps;
  if (k == 0) {
    reps.push_back({});
  } else {
    std::vector<IntVector> images;
    for (std::size_t i = 0; i < T.dim(); ++i) {
      IntVector col(k);
      for (std::size_t j = 0; j < k; ++j) col[j] = T.facets().at(stratum[j]).normal[i];
      images.push_back(col);
    }
    Lattice image = Lattice::generated_by(k, images);
    reps = coset_reps(image, saturate(image));
  }
  std::vector<StratumRep> out;
  for (auto& v : reps) {
    auto alpha = realize_stratum(T, stratum, to_rational(v));
    if (!alpha) continue;
    out.push_back({stratum, v, *alpha});
  }
  return out;
}

StrataClassification classify_strata(const ParameterClassifier& C, const Window& W) {
  const ToricData& T = C.toric();
  const std::size_t m = T.facets().size();
  if (m > 16) throw ToricError(ErrorKind::LimitExceeded, "too many facets to enumerate strata");
  StrataClassification out;
  out.window = W.bound;
  for (std::size_t mask = 0; mask < (std::size_t(1) << m); ++mask) {
    std::vector<std::size_t> stratum;
    for (std::size_t s = 0; s < m; ++s)
      if ((mask >> s) & 1) stratum.push_back(s);
    for (auto& rep : stratum_representatives(T, stratum)) {
      out.cosets.push_back(C.classify_coset(rep.alpha, W));
      out.reps.push_back(std::move(rep));
    }
  }
  return out;
}

PrimResult enumerate_prim(const ParameterClassifier& C, const Window& W) {
  return enumerate_prim(C, classify_strata(C, W));
}

PrimResult enumerate_prim(const ParameterClassifier& C, const StrataClassification& strata) {
  const ToricData& T = C.toric();
  const Window W{strata.window};
  PrimResult out;
  out.window = strata.window;
  out.cosets = strata.reps.size();
  std::set<std::vector<std::size_t>> seen_strata;
  for (const auto& r : strata.reps) seen_strata.insert(r.stratum);
  out.strata = seen_strata.size();

  std::vector<IntVector> degrees{IntVector(T.dim(), Integer(0))};
  for (const auto& a : T.columns()) {
    degrees.push_back(a);
    degrees.push_back(scale(Integer(-1), a));
  }
  std::sort(degrees.begin(), degrees.end());
  degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());
  std::map<IntVector, std::vector<ClosureComponent>> omega_parts;

  std::optional<PrimEntry> zero;
  std::map<std::string, PrimEntry> nonzero;
  for (std::size_t i = 0; i < strata.reps.size(); ++i)
    for (const auto& cls : strata.cosets[i].classes) {
      ++out.classes;
      const RatVector& rep = cls.representative;
      if (cls.extreme && rpos_nonempty(C.engine(), rep)) {
        if (!zero) {
          zero = PrimEntry{rep, strata.reps[i].stratum, true, true, "exact", {}, "zero"};
        } else if (norm_lex_less(rep, zero->representative)) {
          zero->representative = rep;
          zero->stratum = strata.reps[i].stratum;
        }
        zero->merged.push_back(rep);
        continue;
      }
      std::string key;
      for (const auto& a : degrees) {
        auto it = omega_parts.find(a);
        if (it == omega_parts.end()) it = omega_parts.emplace(a, omega_closure(C.engine(), a, W)).first;
        key += format_tuple(a) + ":";
        for (const auto& c : ann_components(C, rep, a, W, it->second, nullptr)) key += "[" + c.flat.to_string() + "]";
        key += ";";
      }
      auto it = nonzero.find(key);
      if (it == nonzero.end()) {
        nonzero.emplace(key, PrimEntry{rep, strata.reps[i].stratum, false, cls.extreme, "single", {rep}, key});
      } else {
        PrimEntry& e = it->second;
        e.merged.push_back(rep);
        e.merge = "window-merged";
        if (norm_lex_less(rep, e.representative)) {
          e.representative = rep;
          e.stratum = strata.reps[i].stratum;
          e.extreme = cls.extreme;
        }
      }
    }
  if (zero) {
    std::sort(zero->merged.begin(), zero->merged.end(), [](const RatVector& a, const RatVector& b) { return norm_lex_less(a, b); });
    out.entries.push_back(*zero);
  }
  std::vector<PrimEntry> rest;
  for (auto& [key, e] : nonzero) {
    std::sort(e.merged.begin(), e.merged.end(), [](const RatVector& a, const RatVector& b) { return norm_lex_less(a, b); });
    rest.push_back(std::move(e));
  }
  std::sort(rest.begin(), rest.end(),
            [](const PrimEntry& a, const PrimEntry& b) { return norm_lex_less(a.representative, b.representative); });
  for (auto& e : rest) out.entries.push_back(std::move(e));
  return out;
}

C1Result check_C1(const ParameterClassifier& C, const Window& W) { return check_C1(C, classify_strata(C, W)); }

C1Result check_C1(const ParameterClassifier&, const StrataClassification& strata) {
  C1Result r;
  r.window = strata.window;
  for (const auto& coset : strata.cosets)
    for (const auto& cls : coset.classes) {
      if (cls.extreme) continue;
      if (!r.counterexample || norm_lex_less(cls.representative, *r.counterexample)) r.counterexample = cls.representative;
    }
  r.holds = !r.counterexample;
  return r;
}

const char* c2_status_name(C2Status s) {
  switch (s) {
    case C2Status::Holds: return "holds";
    case C2Status::HoldsWithinBound: return "holds_within_bound";
    case C2Status::Fails: return "fails";
  }
  return "unknown";
}

namespace {

constexpr std::uint64_t kC2SearchLimit = 5'000'000;

// Values in F(NA) are >= 0 and values outside it are <= the Frobenius number,
// so an infeasible relaxation rules the pattern out for every bound.
bool pattern_excluded(const SemigroupEngine& S, const FacetSplit& pat) {
  const ToricData& T = S.toric();
  std::vector<LinearConstraint> sys;
  for (auto s : pat.plus) sys.push_back({to_rational(T.facets()[s].normal), Rational(0), false});
  for (auto s : pat.minus) {
    RatVector c = to_rational(T.facets()[s].normal);
    for (auto& x : c) x = -x;
    sys.push_back({c, Rational(S.facet_semigroup(s).frobenius()), false});
  }
  return !fourier_motzkin(sys, T.dim());
}

std::optional<RatVector> realize_pattern(const SemigroupEngine& S, const FacetSplit& pat, const Integer& B,
                                         std::uint64_t& budget) {
  const ToricData& T = S.toric();
  std::vector<std::size_t> U = pat.plus;
  U.insert(U.end(), pat.minus.begin(), pat.minus.end());
  std::sort(U.begin(), U.end());
  auto is_plus = [&](std::size_t s) { return std::binary_search(pat.plus.begin(), pat.plus.end(), s); };

  std::vector<std::size_t> K;
  std::vector<IntVector> rows;
  for (auto s : U) {
    rows.push_back(T.facets()[s].normal);
    if (rank_of(rows, T.dim()) == rows.size()) {
      K.push_back(s);
    } else {
      rows.pop_back();
    }
  }
  std::vector<std::vector<Integer>> lists;
  for (auto s : K) {
    const NumericalSemigroup& sg = S.facet_semigroup(s);
    std::vector<Integer> vals;
    if (is_plus(s)) {
      for (Integer v = 0; v <= sg.frobenius() + B; ++v)
        if (sg.contains(v)) vals.push_back(v);
    } else {
      for (Integer v = -B; v < 0; ++v) vals.push_back(v);
      for (const auto& g : sg.gaps()) vals.push_back(g);
    }
    std::sort(vals.begin(), vals.end(), [](const Integer& a, const Integer& b) {
      if (abs_of(a) != abs_of(b)) return abs_of(a) < abs_of(b);
      return a < b;
    });
    if (vals.empty()) return std::nullopt;
    lists.push_back(std::move(vals));
  }
  std::vector<RatVector> rat_rows;
  for (const auto& r : rows) rat_rows.push_back(to_rational(r));
  std::vector<std::size_t> idx(K.size(), 0);
  while (true) {
    if (budget-- == 0) throw ToricError(ErrorKind::LimitExceeded, "condition search exceeded its limit");
    RatVector vk;
    for (std::size_t i = 0; i < K.size(); ++i) vk.emplace_back(lists[i][idx[i]]);
    RatVector base = *solve_rational(rat_rows, vk, T.dim());
    std::vector<Rational> values;
    bool ok = true;
    for (auto s : U) {
      Rational v = T.facet_value(s, base);
      if (!is_integral(v) || S.facet_semigroup(s).contains(v) != is_plus(s)) {
        ok = false;
        break;
      }
      values.push_back(v);
    }
    if (ok) {
      auto alpha = realize_stratum(T, U, values);
      if (alpha) {
        FacetSplit got = fplus_fminus(S, *alpha);
        if (got.plus == pat.plus && got.minus == pat.minus) return alpha;
      }
    }
    std::size_t i = 0;
    while (i < K.size() && idx[i] + 1 == lists[i].size()) idx[i++] = 0;
    if (i == K.size()) return std::nullopt;
    ++idx[i];
  }
}

}  // namespace

C2Result check_C2(const SemigroupEngine& S, std::optional<Integer> bound) {
  const ToricData& T = S.toric();
  const std::size_t m = T.facets().size();
  if (m > 12) throw ToricError(ErrorKind::LimitExceeded, "too many facets to enumerate sign patterns");
  C2Result r;
  Integer maxfrob = 0;
  for (const auto& sg : S.facet_semigroups())
    if (sg.frobenius() > maxfrob) maxfrob = sg.frobenius();
  r.bound = bound ? *bound : Integer(2 * maxfrob + 2);
  std::uint64_t budget = kC2SearchLimit;

  std::size_t total = 1;
  for (std::size_t s = 0; s < m; ++s) total *= 3;
  for (std::size_t code = 1; code < total; ++code) {
    FacetSplit pat;
    std::size_t c = code;
    for (std::size_t s = 0; s < m; ++s, c /= 3) {
      if (c % 3 == 1) pat.plus.push_back(s);
      if (c % 3 == 2) pat.minus.push_back(s);
    }
    if (sign_pattern_witness(T, pat.plus, pat.minus)) continue;
    ++r.infeasible_patterns;
    if (pattern_excluded(S, pat)) continue;
    auto alpha = realize_pattern(S, pat, r.bound, budget);
    if (alpha) {
      r.status = C2Status::Fails;
      r.pattern = pat;
      r.witness = alpha;
      return r;
    }
    ++r.unresolved_patterns;
  }
  r.status = r.unresolved_patterns ? C2Status::HoldsWithinBound : C2Status::Holds;
  return r;
}

SimplicityResult is_simple(const SemigroupEngine& S, const Window& W, std::optional<Integer> c2_bound) {
  SimplicityResult r;
  r.window = W.bound;
  ScoredResult sc = is_scored(S, W);
  if (!sc.scored_on_window) {
    r.reason = SimplicityReason::NotScored;
    r.scored_witness = sc.witness;
    r.certification = "exact";
    return r;
  }
  C2Result c2;
  if (!S.toric().simplicial()) c2 = check_C2(S, c2_bound);
  r.c2 = c2;
  if (c2.status == C2Status::Fails) {
    r.reason = SimplicityReason::C2Fails;
    r.certification = "exact";
    return r;
  }
  r.simple = true;
  r.certification = "window";
  return r;
}

}  // namespace toricd
