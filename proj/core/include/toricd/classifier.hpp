#pragma once

#include <cstddef>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "toricd/arith.hpp"
#include "toricd/semigroup.hpp"

namespace toricd {

// E_tau(alpha): labels lambda in (alpha + Z^d) cap Q tau, modulo Z(A cap tau),
// with alpha - lambda in N A + Z(A cap tau).
struct ESet {
  std::size_t face = 0;
  bool defined = false;  // (alpha + Z^d) meets Q tau
  Integer capacity = 0;  // [Q tau cap Z^d : Z(A cap tau)]
  std::vector<RatVector> members;

  bool full() const { return defined && Integer(static_cast<unsigned long>(members.size())) == capacity; }
  bool empty() const { return members.empty(); }
  bool operator==(const ESet& other) const = default;
};

struct Signature {
  std::vector<ESet> sets;  // indexed by face id

  bool operator==(const Signature& other) const;
  bool operator<(const Signature& other) const;
};

struct FacetObservation {
  Rational min = 0;
  Rational max = 0;
  bool reaches_lower_edge = false;
  bool reaches_upper_edge = false;
  Integer modulus = 0;  // gcd of differences; 0 when constant
  Rational residue = 0;
};

struct EquivClass {
  RatVector representative;  // first member in (radius, lexicographic) order
  Signature signature;
  bool extreme = false;
  std::vector<std::size_t> face_set;
  std::vector<RatVector> members;  // members inside the requested window, sorted
  std::vector<FacetObservation> observed;
  bool found_by_probe = false;
};

struct CosetClassification {
  RatVector alpha;
  Integer window = 0;  // requested window
  Integer radius = 0;  // largest window actually scanned
  bool stable = false;
  std::size_t probes = 0;
  std::vector<EquivClass> classes;  // sorted by representative
};

class ParameterClassifier {
 public:
  explicit ParameterClassifier(const SemigroupEngine& S);

  const SemigroupEngine& engine() const { return S_; }
  const ToricData& toric() const { return S_.toric(); }

  ESet e_tau(const RatVector& alpha, std::size_t face) const;
  // Canonical label of lambda in Q tau modulo Z(A cap tau).
  RatVector canonical_label(std::size_t face, const RatVector& lambda) const;
  Signature signature(const RatVector& alpha) const;

  bool preceq(const RatVector& alpha, const RatVector& beta) const;
  bool equivalent(const RatVector& alpha, const RatVector& beta) const;
  std::vector<std::size_t> face_set(const RatVector& alpha) const;
  bool is_extreme(const RatVector& alpha) const;

  CosetClassification classify_coset(const RatVector& alpha, const Window& W) const;
  // beta in the parameter window of alpha with beta ~ alpha and beta + a ~ alpha.
  std::vector<RatVector> lambda_set(const RatVector& alpha, const IntVector& a, const Window& W) const;
  // Throws PreconditionViolated unless mu lies in the stratum direction of alpha
  // and F(alpha + mu) = F(alpha).
  bool translate_check(const RatVector& alpha, const RatVector& mu) const;

 private:
  std::optional<RatVector> base_label(std::size_t face, const RatVector& alpha) const;
  void check_length(const RatVector& v) const;

  const SemigroupEngine& S_;
  mutable std::mutex mutex_;
  mutable std::unordered_map<RatVector, Signature, RatVectorHash> cache_;
};

// The sign system {F_s > 0 : s in plus} and {F_s < 0 : s in minus}.
std::optional<RatVector> sign_pattern_witness(const ToricData& T, const std::vector<std::size_t>& plus,
                                              const std::vector<std::size_t>& minus);

}  // namespace toricd
