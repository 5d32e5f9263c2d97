#pragma once

// Breadth-first closure of the semigroup from 0 by adding columns, cut off
// where some facet value exceeds the bound. Facet values only grow along a
// path, so every semigroup point inside the box is reached.

#include <deque>
#include <unordered_set>

#include "toricd/cone.hpp"

namespace toricd::oracle {

inline std::unordered_set<IntVector, IntVectorHash> semigroup_box(const ToricData& T, const Integer& bound) {
  std::unordered_set<IntVector, IntVectorHash> seen;
  IntVector zero(T.dim(), Integer(0));
  std::deque<IntVector> queue{zero};
  seen.insert(zero);
  while (!queue.empty()) {
    IntVector p = queue.front();
    queue.pop_front();
    for (const auto& col : T.columns()) {
      IntVector q = add(p, col);
      bool inside = true;
      for (std::size_t s = 0; s < T.facets().size() && inside; ++s) inside = T.facet_value(s, q) <= bound;
      if (inside && seen.insert(q).second) queue.push_back(q);
    }
  }
  return seen;
}

}  // namespace toricd::oracle
