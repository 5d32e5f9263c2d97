#include "toricd/feasibility.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "toricd/errors.hpp"

namespace toricd {

bool satisfies(const LinearConstraint& c, const RatVector& x) {
  Rational v = dot(c.coeffs, x) + c.constant;
  return c.strict ? v > 0 : v >= 0;
}

namespace {

constexpr std::size_t kMaxConstraints = 200'000;

// Scale by a positive factor so the first nonzero coefficient is +-1.
LinearConstraint normalized(LinearConstraint c) {
  for (const auto& x : c.coeffs) {
    if (x == 0) continue;
    Rational f = abs(x);
    for (auto& y : c.coeffs) y /= f;
    c.constant /= f;
    break;
  }
  return c;
}

using Key = std::tuple<RatVector, Rational, bool>;

// Adds c unless it is trivially true; returns false if it is trivially false.
bool push_constraint(std::vector<LinearConstraint>& out, std::set<Key>& seen, LinearConstraint c) {
  if (is_zero(c.coeffs)) return c.strict ? c.constant > 0 : c.constant >= 0;
  c = normalized(std::move(c));
  if (seen.insert({c.coeffs, c.constant, c.strict}).second) {
    if (seen.size() > kMaxConstraints)
      throw ToricError(ErrorKind::LimitExceeded, "Fourier-Motzkin elimination produced too many constraints");
    out.push_back(std::move(c));
  }
  return true;
}

}  // namespace

std::optional<RatVector> fourier_motzkin(const std::vector<LinearConstraint>& system, std::size_t vars) {
  std::vector<std::vector<LinearConstraint>> levels(vars + 1);
  {
    std::set<Key> seen;
    for (const auto& c : system) {
      if (c.coeffs.size() != vars) throw ToricError(ErrorKind::InvalidInput, "constraint has wrong length");
      if (!push_constraint(levels[vars], seen, c)) return std::nullopt;
    }
  }
  for (std::size_t k = vars; k > 0; --k) {
    const std::size_t v = k - 1;
    std::vector<const LinearConstraint*> pos, neg;
    std::set<Key> seen;
    for (const auto& c : levels[k]) {
      if (c.coeffs[v] > 0) {
        pos.push_back(&c);
      } else if (c.coeffs[v] < 0) {
        neg.push_back(&c);
      } else if (!push_constraint(levels[v], seen, c)) {
        return std::nullopt;
      }
    }
    for (const auto* p : pos)
      for (const auto* q : neg) {
        Rational a = p->coeffs[v], b = -q->coeffs[v];
        LinearConstraint c;
        c.coeffs.resize(vars);
        for (std::size_t i = 0; i < vars; ++i) c.coeffs[i] = b * p->coeffs[i] + a * q->coeffs[i];
        c.coeffs[v] = 0;
        c.constant = b * p->constant + a * q->constant;
        c.strict = p->strict || q->strict;
        if (!push_constraint(levels[v], seen, std::move(c))) return std::nullopt;
      }
  }
  // levels[0] holds only nontrivial constraints, which cannot exist without variables.
  if (!levels[0].empty()) return std::nullopt;

  RatVector x(vars, Rational(0));
  for (std::size_t v = 0; v < vars; ++v) {
    bool has_lo = false, has_hi = false, lo_strict = false, hi_strict = false;
    Rational lo, hi;
    for (const auto& c : levels[v + 1]) {
      if (c.coeffs[v] == 0) continue;
      Rational rest = c.constant;
      for (std::size_t i = 0; i < v; ++i) rest += c.coeffs[i] * x[i];
      Rational bound = -rest / c.coeffs[v];
      if (c.coeffs[v] > 0) {
        if (!has_lo || bound > lo || (bound == lo && c.strict)) {
          lo_strict = (has_lo && bound == lo) ? (lo_strict || c.strict) : c.strict;
          lo = bound;
          has_lo = true;
        }
      } else {
        if (!has_hi || bound < hi || (bound == hi && c.strict)) {
          hi_strict = (has_hi && bound == hi) ? (hi_strict || c.strict) : c.strict;
          hi = bound;
          has_hi = true;
        }
      }
    }
    auto ok = [&](const Rational& t) {
      if (has_lo && (lo_strict ? !(t > lo) : !(t >= lo))) return false;
      if (has_hi && (hi_strict ? !(t < hi) : !(t <= hi))) return false;
      return true;
    };
    Rational t = 0;
    if (!ok(t)) {
      if (has_lo && has_hi) {
        t = (lo == hi) ? lo : (lo + hi) / 2;
        Rational f = floor_of(lo) + 1;
        if (ok(Rational(floor_of(lo)))) f = floor_of(lo);
        if (ok(f)) t = f;
      } else if (has_lo) {
        t = lo_strict ? Rational(floor_of(lo) + 1) : Rational(ceil_of(lo));
      } else {
        t = hi_strict ? Rational(ceil_of(hi) - 1) : Rational(floor_of(hi));
      }
    }
    if (!ok(t)) throw ToricError(ErrorKind::PreconditionViolated, "internal: Fourier-Motzkin back substitution failed");
    x[v] = t;
  }
  for (const auto& c : system)
    if (!satisfies(c, x)) throw ToricError(ErrorKind::PreconditionViolated, "internal: Fourier-Motzkin witness invalid");
  return x;
}

}  // namespace toricd
