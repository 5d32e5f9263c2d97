#include "toricd/classifier.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "toricd/errors.hpp"
#include "toricd/feasibility.hpp"

namespace toricd {

namespace {

constexpr std::size_t kMaxProbeFacets = 12;

bool esets_equal(const ESet& a, const ESet& b) { return a.defined == b.defined && a.members == b.members; }

}  // namespace

bool Signature::operator==(const Signature& other) const {
  if (sets.size() != other.sets.size()) return false;
  for (std::size_t i = 0; i < sets.size(); ++i)
    if (!esets_equal(sets[i], other.sets[i])) return false;
  return true;
}

bool Signature::operator<(const Signature& other) const {
  if (sets.size() != other.sets.size()) return sets.size() < other.sets.size();
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (sets[i].defined != other.sets[i].defined) return sets[i].defined < other.sets[i].defined;
    if (sets[i].members != other.sets[i].members) return sets[i].members < other.sets[i].members;
  }
  return false;
}

std::optional<RatVector> sign_pattern_witness(const ToricData& T, const std::vector<std::size_t>& plus,
                                              const std::vector<std::size_t>& minus) {
  std::vector<LinearConstraint> sys;
  for (auto s : plus) sys.push_back({to_rational(T.facets()[s].normal), 0, true});
  for (auto s : minus) sys.push_back({scale(Rational(-1), to_rational(T.facets()[s].normal)), 0, true});
  return fourier_motzkin(sys, T.dim());
}

ParameterClassifier::ParameterClassifier(const SemigroupEngine& S) : S_(S) {}

void ParameterClassifier::check_length(const RatVector& v) const {
  if (v.size() != toric().dim()) throw ToricError(ErrorKind::InvalidInput, "parameter has wrong length");
}

std::optional<RatVector> ParameterClassifier::base_label(std::size_t face, const RatVector& alpha) const {
  const SaturationFrame& f = S_.face_lattices(face).frame;
  RatVector x = f.V.left_multiply(alpha);
  for (std::size_t i = f.rank; i < x.size(); ++i)
    if (!is_integral(x[i])) return std::nullopt;
  RatVector y(x.size(), Rational(0));
  for (std::size_t i = 0; i < f.rank; ++i) y[i] = frac_of(x[i]);
  return f.Vinv.left_multiply(y);
}

RatVector ParameterClassifier::canonical_label(std::size_t face, const RatVector& lambda) const {
  check_length(lambda);
  if (face >= toric().faces().size()) throw ToricError(ErrorKind::InvalidInput, "face index out of range");
  const FaceLattices& L = S_.face_lattices(face);
  RatVector x = L.frame.V.left_multiply(lambda);
  for (std::size_t i = L.frame.rank; i < x.size(); ++i)
    if (x[i] != 0) throw ToricError(ErrorKind::PreconditionViolated, "label does not lie in the span of the face");
  RatVector base = *base_label(face, lambda);
  IntVector rho = to_integer(sub(lambda, base));
  return add(base, L.label_group.canonical_rep(rho));
}

ESet ParameterClassifier::e_tau(const RatVector& alpha, std::size_t face) const {
  check_length(alpha);
  if (face >= toric().faces().size()) throw ToricError(ErrorKind::InvalidInput, "face index out of range");
  const FaceLattices& L = S_.face_lattices(face);
  ESet e;
  e.face = face;
  e.capacity = L.capacity;
  auto base = base_label(face, alpha);
  if (!base) return e;
  e.defined = true;
  for (const auto& rho : L.label_reps) {
    RatVector lambda = add(*base, rho);
    IntVector b = to_integer(sub(alpha, lambda));
    if (S_.in_semigroup_mod_face(b, face)) e.members.push_back(std::move(lambda));
  }
  std::sort(e.members.begin(), e.members.end());
  return e;
}

Signature ParameterClassifier::signature(const RatVector& alpha) const {
  check_length(alpha);
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = cache_.find(alpha);
    if (it != cache_.end()) return it->second;
  }
  Signature sig;
  for (const auto& f : toric().faces()) sig.sets.push_back(e_tau(alpha, f.id));
  std::lock_guard<std::mutex> lock(mutex_);
  cache_.emplace(alpha, sig);
  return sig;
}

bool ParameterClassifier::preceq(const RatVector& alpha, const RatVector& beta) const {
  if (!is_integral(sub(alpha, beta))) return false;
  Signature a = signature(alpha), b = signature(beta);
  for (std::size_t i = 0; i < a.sets.size(); ++i)
    for (const auto& l : a.sets[i].members)
      if (!std::binary_search(b.sets[i].members.begin(), b.sets[i].members.end(), l)) return false;
  return true;
}

bool ParameterClassifier::equivalent(const RatVector& alpha, const RatVector& beta) const {
  if (!is_integral(sub(alpha, beta))) return false;
  return signature(alpha) == signature(beta);
}

std::vector<std::size_t> ParameterClassifier::face_set(const RatVector& alpha) const {
  check_length(alpha);
  FacetSplit split = fplus_fminus(S_, alpha);
  std::vector<std::size_t> out;
  for (const auto& f : toric().faces()) {
    if (!base_label(f.id, alpha)) continue;
    bool all_plus = std::all_of(f.containing_facets.begin(), f.containing_facets.end(), [&](std::size_t s) {
      return std::binary_search(split.plus.begin(), split.plus.end(), s);
    });
    if (all_plus) out.push_back(f.id);
  }
  return out;
}

bool ParameterClassifier::is_extreme(const RatVector& alpha) const {
  std::vector<std::size_t> faces = face_set(alpha);
  Signature sig = signature(alpha);
  for (const auto& e : sig.sets) {
    bool in_face_set = std::binary_search(faces.begin(), faces.end(), e.face);
    if (in_face_set ? !e.full() : !e.empty()) return false;
  }
  return true;
}

namespace {

Integer radius_of(const ToricData& T, const RatVector& beta) {
  Integer r = 0;
  for (std::size_t s = 0; s < T.facets().size(); ++s) {
    Integer c = ceil_of(abs(T.facet_value(s, beta)));
    if (c > r) r = c;
  }
  return r;
}

}  // namespace

CosetClassification ParameterClassifier::classify_coset(const RatVector& alpha, const Window& W) const {
  check_length(alpha);
  const ToricData& T = toric();
  const std::size_t m = T.facets().size();
  CosetClassification out;
  out.alpha = alpha;
  out.window = W.bound;

  struct Found {
    Signature sig;
    Integer radius;
    RatVector rep;
    std::vector<RatVector> members;
    bool probe = false;
  };
  std::vector<Found> found;
  std::map<Signature, std::size_t> index;

  Integer R = W.bound < 1 ? Integer(1) : W.bound;
  const Integer cap = 4 * R;
  while (true) {
    found.clear();
    index.clear();
    std::vector<std::pair<Integer, RatVector>> pts;
    for (auto& b : parameter_window(T, alpha, R)) {
      Integer r = radius_of(T, b);
      pts.emplace_back(r, std::move(b));
    }
    std::sort(pts.begin(), pts.end());
    Integer last_new = -1;
    for (const auto& [r, beta] : pts) {
      Signature sig = signature(beta);
      auto it = index.find(sig);
      std::size_t k;
      if (it == index.end()) {
        k = found.size();
        index.emplace(sig, k);
        found.push_back({std::move(sig), r, beta, {}, false});
        last_new = r;
      } else {
        k = it->second;
      }
      if (r <= W.bound) found[k].members.push_back(beta);
    }

    bool probe_new = false;
    out.probes = 0;
    if (m <= kMaxProbeFacets) {
      for (std::size_t mask = 0; mask < (std::size_t(1) << m); ++mask) {
        std::vector<std::size_t> plus, minus;
        for (std::size_t s = 0; s < m; ++s) ((mask >> s) & 1 ? minus : plus).push_back(s);
        auto g = sign_pattern_witness(T, plus, minus);
        if (!g) continue;
        IntVector dir = primitive_integer(*g);
        Integer t = 1;
        for (std::size_t s = 0; s < m; ++s) {
          Rational need = (Rational(R + 1) + abs(T.facet_value(s, alpha))) / abs(Rational(T.facet_value(s, dir)));
          Integer c = ceil_of(need);
          if (c > t) t = c;
        }
        RatVector beta = add(alpha, scale(t, dir));
        ++out.probes;
        Signature sig = signature(beta);
        if (index.count(sig)) continue;
        index.emplace(sig, found.size());
        found.push_back({std::move(sig), radius_of(T, beta), beta, {}, true});
        probe_new = true;
      }
    }
    out.radius = R;
    out.stable = last_new < R && !probe_new;
    if (out.stable || R >= cap) break;
    R = std::min(Integer(2 * R), cap);
  }

  for (auto& f : found) {
    EquivClass c;
    c.representative = f.rep;
    c.signature = f.sig;
    c.found_by_probe = f.probe;
    c.face_set = face_set(f.rep);
    c.extreme = is_extreme(f.rep);
    std::sort(f.members.begin(), f.members.end());
    c.members = f.members;
    const std::vector<RatVector>& sample = c.members.empty() ? std::vector<RatVector>{f.rep} : c.members;
    for (std::size_t s = 0; s < m; ++s) {
      FacetObservation o;
      o.min = o.max = T.facet_value(s, sample.front());
      Integer g = 0;
      for (const auto& b : sample) {
        Rational v = T.facet_value(s, b);
        o.min = std::min(o.min, v);
        o.max = std::max(o.max, v);
        Integer diff = Rational(v - T.facet_value(s, sample.front())).get_num();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), diff.get_mpz_t());
      }
      o.modulus = g;
      if (g != 0) {
        Rational q = o.min / Rational(g);
        o.residue = o.min - Rational(floor_of(q) * g);
      } else {
        o.residue = o.min;
      }
      o.reaches_lower_edge = !c.members.empty() && o.min - 1 < Rational(-W.bound);
      o.reaches_upper_edge = !c.members.empty() && o.max + 1 > Rational(W.bound);
      c.observed.push_back(o);
    }
    out.classes.push_back(std::move(c));
  }
  std::sort(out.classes.begin(), out.classes.end(),
            [](const EquivClass& a, const EquivClass& b) { return a.representative < b.representative; });
  return out;
}

std::vector<RatVector> ParameterClassifier::lambda_set(const RatVector& alpha, const IntVector& a,
                                                       const Window& W) const {
  check_length(alpha);
  if (a.size() != toric().dim()) throw ToricError(ErrorKind::InvalidInput, "degree has wrong length");
  std::vector<RatVector> out;
  Signature target = signature(alpha);
  for (const auto& beta : parameter_window(toric(), alpha, W.bound))
    if (signature(beta) == target && signature(add(beta, a)) == target) out.push_back(beta);
  std::sort(out.begin(), out.end());
  return out;
}

bool ParameterClassifier::translate_check(const RatVector& alpha, const RatVector& mu) const {
  check_length(alpha);
  check_length(mu);
  const ToricData& T = toric();
  std::vector<std::size_t> strat = integral_facets(T, alpha);
  for (auto s : strat)
    if (T.facet_value(s, mu) != 0)
      throw ToricError(ErrorKind::PreconditionViolated, "translation leaves the stratum direction");
  RatVector shifted = add(alpha, mu);
  if (integral_facets(T, shifted) != strat)
    throw ToricError(ErrorKind::PreconditionViolated, "translation changes the set of integral facets");
  for (const auto& f : T.faces()) {
    ESet a = e_tau(alpha, f.id), b = e_tau(shifted, f.id);
    if (a.empty() != b.empty()) return false;
    if (a.empty()) continue;
    std::vector<RatVector> moved;
    for (const auto& l : a.members) moved.push_back(canonical_label(f.id, add(l, mu)));
    std::sort(moved.begin(), moved.end());
    if (moved != b.members) return false;
  }
  return true;
}

}  // namespace toricd
