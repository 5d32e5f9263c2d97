#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "toricd/arith.hpp"

namespace toricd {

// coeffs . x + constant > 0 (strict) or >= 0.
struct LinearConstraint {
  RatVector coeffs;
  Rational constant = 0;
  bool strict = false;
};

bool satisfies(const LinearConstraint& c, const RatVector& x);

// Exact Fourier-Motzkin elimination. Returns a rational point satisfying every
// constraint, or nothing when the system is infeasible.
std::optional<RatVector> fourier_motzkin(const std::vector<LinearConstraint>& system, std::size_t vars);

}  // namespace toricd
