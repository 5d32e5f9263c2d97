#pragma once

#include <vector>

#include "toricd/arith.hpp"

namespace toricd {

// Submonoid of N generated by finitely many naturals with gcd 1.
class NumericalSemigroup {
 public:
  NumericalSemigroup() = default;
  explicit NumericalSemigroup(std::vector<Integer> generators);

  const std::vector<Integer>& generators() const { return generators_; }
  const std::vector<Integer>& gaps() const { return gaps_; }
  // -1 when there are no gaps.
  const Integer& frobenius() const { return frobenius_; }
  bool contains(const Integer& v) const;
  bool contains(const Rational& v) const;

 private:
  std::vector<Integer> generators_;
  std::vector<Integer> gaps_;
  Integer frobenius_ = -1;
};

}  // namespace toricd
