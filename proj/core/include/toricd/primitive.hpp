#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "toricd/arith.hpp"
#include "toricd/classifier.hpp"
#include "toricd/semigroup.hpp"

namespace toricd {

// A point of R_{>0}(alpha), or nothing when it is empty.
std::optional<RatVector> rpos_witness(const SemigroupEngine& S, const RatVector& alpha);
bool rpos_nonempty(const SemigroupEngine& S, const RatVector& alpha);
// Exact: extreme and R_{>0}(alpha) nonempty.
bool ann_is_zero(const ParameterClassifier& C, const RatVector& alpha);

struct AnnReport {
  RatVector alpha;
  IntVector degree;
  bool zero = false;
  Integer window = 0;
  std::size_t lambda_points = 0;
  // Components of the zero set of the degree-a part; empty means the unit ideal.
  std::vector<ClosureComponent> components;
  std::string certification;  // "exact" or "window"
};
AnnReport ann_graded_component(const ParameterClassifier& C, const RatVector& alpha, const IntVector& a,
                               const Window& W);

// Flats {F_s = F_s(p) : s in S} (S nonempty) inferred from a finite sample of a set.
std::vector<AffineFlat> infer_flats(const ToricData& T, const std::vector<RatVector>& points);

// alpha with F_s(alpha) = values[i] for s = facets[i] and every other F_s non-integral.
std::optional<RatVector> realize_stratum(const ToricData& T, const std::vector<std::size_t>& facets,
                                         const std::vector<Rational>& values);

struct StratumRep {
  std::vector<std::size_t> stratum;
  IntVector values;
  RatVector alpha;
};
// One parameter per coset of N' Z^d in its saturation that can be realised with F(alpha) = stratum.
std::vector<StratumRep> stratum_representatives(const ToricData& T, const std::vector<std::size_t>& stratum);

struct StrataClassification {
  Integer window = 0;
  std::vector<StratumRep> reps;
  std::vector<CosetClassification> cosets;  // parallel to reps
};
StrataClassification classify_strata(const ParameterClassifier& C, const Window& W);

struct PrimEntry {
  RatVector representative;
  std::vector<std::size_t> stratum;
  bool zero = false;
  bool extreme = false;
  std::string merge;  // "exact" (zero ideal), "single" or "window-merged"
  std::vector<RatVector> merged;
  std::string signature_key;
};

struct PrimResult {
  Integer window = 0;
  std::size_t strata = 0;
  std::size_t cosets = 0;
  std::size_t classes = 0;
  std::vector<PrimEntry> entries;
};
PrimResult enumerate_prim(const ParameterClassifier& C, const Window& W);
PrimResult enumerate_prim(const ParameterClassifier& C, const StrataClassification& strata);

struct C1Result {
  bool holds = true;
  std::optional<RatVector> counterexample;
  Integer window = 0;
};
C1Result check_C1(const ParameterClassifier& C, const Window& W);
C1Result check_C1(const ParameterClassifier& C, const StrataClassification& strata);

enum class C2Status { Holds, HoldsWithinBound, Fails };
const char* c2_status_name(C2Status s);

struct C2Result {
  C2Status status = C2Status::Holds;
  FacetSplit pattern;  // failing pattern
  std::optional<RatVector> witness;
  Integer bound = 0;
  std::size_t infeasible_patterns = 0;
  std::size_t unresolved_patterns = 0;
};
// bound defaults to 2 * max Frobenius number + 2.
C2Result check_C2(const SemigroupEngine& S, std::optional<Integer> bound = std::nullopt);

enum class SimplicityReason { None, NotScored, C2Fails };

struct SimplicityResult {
  bool simple = false;
  SimplicityReason reason = SimplicityReason::None;
  std::optional<IntVector> scored_witness;
  std::optional<C2Result> c2;
  Integer window = 0;
  std::string certification;  // "exact" or "window"
};
SimplicityResult is_simple(const SemigroupEngine& S, const Window& W, std::optional<Integer> c2_bound = std::nullopt);

}  // namespace toricd
