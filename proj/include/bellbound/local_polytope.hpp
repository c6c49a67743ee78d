#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bellbound/behavior.hpp"
#include "bellbound/rational.hpp"
#include "bellbound/strategies.hpp"

namespace bellbound {

inline constexpr std::uint64_t kDefaultLpColumnBudget = 100'000;

/// Linear functional over behavior coordinates certifying nonlocality:
/// coeffs.b = gap > 0 while coeffs.v <= 0 for every deterministic vertex v
/// (the witness is normalized so its maximum over vertices is exactly 0).
struct SeparatingWitness {
  std::vector<Rational> coeffs;
  Rational gap;
};

struct LocalityVerdict {
  std::optional<LocalModel> model;          // exact decomposition when local
  std::optional<SeparatingWitness> witness; // Farkas certificate when not
  long lp_pivots = 0;

  bool feasible() const { return model.has_value(); }
};

/// Exact membership test in the local polytope: finds rational weights over
/// deterministic-strategy vertices reproducing b, or a separating functional
/// from LP duality. Both certificates are exact; the caller can replay them.
LocalityVerdict is_local(const Behavior& b,
                         std::uint64_t column_budget = kDefaultLpColumnBudget);

struct CriticalEta {
  Rational lower;   // certified local
  Rational upper;   // certified nonlocal (equal to lower only in the [1,1] case)
  Rational width;
  std::optional<LocalModel> lower_model;
  std::optional<SeparatingWitness> upper_witness;
};

/// Bisection for the critical detection efficiency of an ideal no-signaling
/// behavior: the set of efficiencies at which the lossy behavior stays local
/// is an interval starting at 0 (losing efficiency never creates
/// nonlocality), so bisection over [0,1] is sound. Exact rational midpoints;
/// stops once upper - lower <= tol. Reports [1,1] when the behavior is local
/// even with perfect detectors.
CriticalEta critical_eta(const Behavior& b, const Rational& tol,
                         std::uint64_t column_budget = kDefaultLpColumnBudget);

}  // namespace bellbound
