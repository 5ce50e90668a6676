#pragma once
#include <cstddef>
#include <cstdint>

#include "tinnots/constellation.hpp"

namespace tinnots {

enum class SumsetMode { NonOverlapExact, OutageBound };

// Cardinality and minimum-distance certificate for hx*X + hy*Y.
// NonOverlapExact: both values exact. OutageBound: cardinality holds almost
// everywhere and dmin_lower = kappa * min(|hx|d_X, |hy|d_Y, upsilon) holds
// outside a gain set of measure <= gamma.
struct SumsetBound {
  long long cardinality = 0;
  double dmin_lower = 0;
  SumsetMode mode = SumsetMode::NonOverlapExact;
  double gamma = 0;    // OutageBound only
  double kappa = 0;    // OutageBound only
  double upsilon = 0;  // OutageBound only
};

// True iff one scaled constellation fits between two points of the other:
// |Y|*|hy|*d_Y <= |hx|*d_X or |X|*|hx|*d_X <= |hy|*d_Y.
// Singleton X or Y => true (a shifted copy, trivially exact); a zero gain on
// a non-singleton side => false (the sum-set collapses).
bool nonoverlap_condition(double hx, const DiscreteConstellation& x,
                          double hy, const DiscreteConstellation& y);

// Exact cardinality |X||Y| and dmin = min(|hx|d_X, |hy|d_Y) under the
// non-overlap condition; errors (directing to outage_bound) otherwise.
SumsetBound nonoverlap_bound(double hx, const DiscreteConstellation& x,
                             double hy, const DiscreteConstellation& y);

// Measure-theoretic lower bound valid for all gains outside an outage set of
// measure <= gamma: kappa = (gamma/2)/(1+ln(max(|X|,|Y|))),
// upsilon = max(|hx|d_X/|Y|, |hy|d_Y/|X|). Requires PAM inputs.
SumsetBound outage_bound(double hx, const DiscreteConstellation& x,
                         double hy, const DiscreteConstellation& y,
                         double gamma);

// Lower bound on min |a*zx - b*zy| over integer grids zx in [-nx:nx],
// zy in [-ny:ny] (not both zero), valid outside an outage set of measure
// <= gamma: gamma * max(b/(2*nx*(1+ln ny)), a/(2*ny*(1+ln nx))).
double integer_gap_floor(double a, double b, int nx, int ny, double gamma);

struct OutageSampleSpec {
  double hx_min = 0, hx_max = 1;
  double hy_min = 1, hy_max = 1;  // equal bounds pin the gain
  std::size_t samples = 10000;
};

// Fraction of uniformly sampled gain pairs where the exact sum-set minimum
// distance falls below outage_bound's certificate. Contract: <= gamma plus
// sampling slack.
double empirical_outage_fraction(const DiscreteConstellation& x,
                                 const DiscreteConstellation& y, double gamma,
                                 const OutageSampleSpec& spec,
                                 std::uint64_t rng_seed);

// Fraction of random gain pairs (uniform on [0.5,2]^2) whose exact sum-set,
// merged only at tolerance zero, has fewer than |X||Y| points. Expected 0:
// the coincidence set has measure zero.
double zero_measure_overlap_check(const DiscreteConstellation& x,
                                  const DiscreteConstellation& y,
                                  std::size_t trials, std::uint64_t rng_seed);

}  // namespace tinnots
