#pragma once

#include <optional>
#include <random>
#include <string>

#include "toricd/cone.hpp"
#include "toricd/errors.hpp"
#include "toricd/lattice.hpp"

namespace toricd::testing {

// 2 x 4, simplicial, one hole line.
inline IntMatrix plane_fixture() { return IntMatrix{{1, 1, 2, 2}, {1, 2, 0, 1}}; }

// 3 x 6, four facets, scored but not Cohen-Macaulay.
inline IntMatrix prism_fixture() {
  return IntMatrix{{1, 1, 1, 1, 1, 1}, {0, 2, 3, 0, 2, 3}, {0, 0, 0, 1, 1, 1}};
}

// 3 x 4 normal cone over a square.
inline IntMatrix square_fixture() { return IntMatrix{{1, 0, 0, 1}, {0, 1, 0, 1}, {0, 0, 1, -1}}; }

inline std::string fixture_dir() { return TORICD_FIXTURE_DIR; }

// Uniform matrix with entries in [lo, hi], retried until build_toric accepts it.
inline std::optional<ToricData> random_toric(std::mt19937& rng, std::size_t d, std::size_t n, long lo, long hi,
                                             int attempts = 200) {
  std::uniform_int_distribution<long> dist(lo, hi);
  for (int a = 0; a < attempts; ++a) {
    IntMatrix A(d, n);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < n; ++j) A(i, j) = dist(rng);
    try {
      return build_toric(A);
    } catch (const ToricError&) {
    }
  }
  return std::nullopt;
}

inline RatVector random_rational(std::mt19937& rng, std::size_t d, long num, long den) {
  std::uniform_int_distribution<long> nd(-num, num);
  std::uniform_int_distribution<long> dd(1, den);
  RatVector v(d);
  for (auto& x : v) {
    x = Rational(nd(rng), dd(rng));
    x.canonicalize();
  }
  return v;
}

}  // namespace toricd::testing
