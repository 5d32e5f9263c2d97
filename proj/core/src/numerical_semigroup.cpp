#include "toricd/numerical_semigroup.hpp"

#include <algorithm>

#include "toricd/errors.hpp"

namespace toricd {

namespace {
constexpr long kSieveLimit = 50'000'000;
}

NumericalSemigroup::NumericalSemigroup(std::vector<Integer> generators) {
  for (auto& g : generators) {
    if (g < 0) throw ToricError(ErrorKind::InvalidInput, "negative semigroup generator");
    if (g > 0) generators_.push_back(g);
  }
  std::sort(generators_.begin(), generators_.end());
  generators_.erase(std::unique(generators_.begin(), generators_.end()), generators_.end());
  if (generators_.empty() || gcd_of(generators_) != 1)
    throw ToricError(ErrorKind::PreconditionViolated, "semigroup generators do not have gcd 1");
  if (generators_.front() == 1) return;

  // The Frobenius number is below (min - 1) * (max - 1).
  Integer bound = (generators_.front() - 1) * (generators_.back() - 1) + 1;
  if (bound > kSieveLimit) throw ToricError(ErrorKind::LimitExceeded, "facet semigroup too large to sieve");
  const long n = bound.get_si();
  std::vector<long> gens;
  for (const auto& g : generators_) gens.push_back(g.get_si());
  std::vector<char> in(static_cast<std::size_t>(n) + 1, 0);
  in[0] = 1;
  for (long v = 1; v <= n; ++v)
    for (long g : gens) {
      if (g > v) break;
      if (in[static_cast<std::size_t>(v - g)]) {
        in[static_cast<std::size_t>(v)] = 1;
        break;
      }
    }
  for (long v = 1; v <= n; ++v)
    if (!in[static_cast<std::size_t>(v)]) gaps_.emplace_back(v);
  if (!gaps_.empty()) frobenius_ = gaps_.back();
}

bool NumericalSemigroup::contains(const Integer& v) const {
  if (v < 0) return false;
  if (v > frobenius_) return true;
  return !std::binary_search(gaps_.begin(), gaps_.end(), v);
}

bool NumericalSemigroup::contains(const Rational& v) const {
  return is_integral(v) && contains(Integer(v.get_num()));
}

}  // namespace toricd
