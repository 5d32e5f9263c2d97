#pragma once

#include <cstddef>
#include <cstdint>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "toricd/affine.hpp"
#include "toricd/arith.hpp"
#include "toricd/cone.hpp"
#include "toricd/lattice.hpp"
#include "toricd/numerical_semigroup.hpp"

namespace toricd {

// Finite window {a : 0 <= F_sigma(a) <= bound}; for parameters {|F_sigma| <= bound}.
struct Window {
  Integer bound = 0;
};
Window default_window(const ToricData& T);

enum class Obstruction { None, NegativeFacetValue, FacetGap, NoRepresentation };
const char* obstruction_name(Obstruction o);

struct MembershipCertificate {
  bool member = false;
  IntVector u;  // column coefficients, zero on the face columns
  IntVector c;  // integer coefficients on the face columns (mod-face queries)
  Obstruction obstruction = Obstruction::None;
  std::optional<std::size_t> facet;
};

struct FaceLattices {
  Lattice sub;                  // Z(A cap tau)
  Lattice sat;                  // Q tau cap Z^d
  SaturationFrame frame;        // adapted to sat
  QuotientGroup label_group;    // sat / sub
  QuotientGroup residue_group;  // Z^d / sub
  Integer capacity;             // [sat : sub]
  std::vector<IntVector> label_reps;
};

struct FacetSplit {
  std::vector<std::size_t> plus;
  std::vector<std::size_t> minus;
};

class SemigroupEngine {
 public:
  explicit SemigroupEngine(ToricData T);

  const ToricData& toric() const { return T_; }
  const NumericalSemigroup& facet_semigroup(std::size_t facet) const { return semigroups_[facet]; }
  const std::vector<NumericalSemigroup>& facet_semigroups() const { return semigroups_; }
  const FaceLattices& face_lattices(std::size_t face) const { return lattices_[face]; }

  // Verdict only, memoised.
  bool in_semigroup(const IntVector& b) const;
  bool in_semigroup_mod_face(const IntVector& b, std::size_t face) const;

  MembershipCertificate member(const IntVector& b) const;
  MembershipCertificate member_mod_face(const IntVector& b, std::size_t face) const;

  // Abort a single search after this many nodes with ToricError(LimitExceeded).
  void set_node_limit(std::uint64_t limit) { node_limit_ = limit; }

 private:
  struct Plan {
    std::vector<std::size_t> columns;            // search order
    std::vector<std::size_t> facets;             // facets containing the face
    std::vector<std::vector<Integer>> values;    // [k][facet index]
    std::vector<std::vector<Integer>> suffix_gcd;  // [k][facet index], over columns k..
  };
  bool search(const IntVector& b, std::size_t face, IntVector* u) const;
  bool cached(const IntVector& b, std::size_t face) const;

  ToricData T_;
  std::vector<NumericalSemigroup> semigroups_;
  std::vector<FaceLattices> lattices_;
  std::vector<Plan> plans_;
  std::uint64_t node_limit_ = 200'000'000;
  mutable std::mutex mutex_;
  mutable std::vector<std::unordered_map<IntVector, bool, IntVectorHash>> cache_;
};

NumericalSemigroup facet_value_semigroup(const ToricData& T, std::size_t facet);
FacetSplit fplus_fminus(const SemigroupEngine& S, const RatVector& alpha);

// b in N A with b + a not in N A, over the window.
std::vector<IntVector> omega(const SemigroupEngine& S, const IntVector& a, const Window& W);

struct HoleComponent {
  IntVector base;  // canonical representative modulo Z(A cap face)
  std::size_t face = 0;
  Integer window = 0;
  std::vector<IntVector> certified_periods;
  std::vector<IntVector> points;
};

struct HoleReport {
  Integer window = 0;
  std::vector<IntVector> points;
  std::vector<HoleComponent> components;
};
HoleReport holes(const SemigroupEngine& S, const Window& W);

struct ScoredResult {
  bool scored_on_window = false;
  std::optional<IntVector> witness;
  Integer window = 0;
};
ScoredResult is_scored(const SemigroupEngine& S, const Window& W);

struct S2Result {
  bool holds_on_window = false;
  std::optional<IntVector> witness;
  std::optional<HoleComponent> component;
  Integer window = 0;
};
S2Result satisfies_S2(const SemigroupEngine& S, const Window& W);

struct C0Result {
  bool holds = true;
  std::optional<std::size_t> face;  // first face with nontrivial index
  Integer index = 1;
};
C0Result check_C0(const SemigroupEngine& S);

struct ClosureComponent {
  AffineFlat flat;
  std::string kind;  // "slab", "hole", "lambda" or "space"
  bool operator==(const ClosureComponent& other) const = default;
};
// Maximal components, sorted, duplicates and contained flats removed.
std::vector<ClosureComponent> normalize_components(std::vector<ClosureComponent> comps);
std::vector<ClosureComponent> omega_closure(const SemigroupEngine& S, const IntVector& a, const Window& W);

}  // namespace toricd
