#pragma once
#include <array>
#include <string>
#include <utility>
#include <vector>

#include "tinnots/constellation.hpp"

namespace tinnots {

// Squared channel gains, unit noise variance, unit power constraint.
struct ChannelGains {
  double h11_sq = 0, h12_sq = 0, h21_sq = 0, h22_sq = 0;
  static ChannelGains symmetric(double snr, double inr) {
    return {snr, inr, inr, snr};
  }
  bool is_symmetric(double rel_tol = 1e-9) const;
  double snr() const { return h11_sq; }  // symmetric shorthand
  double inr() const { return h12_sq; }
};

// Per-user input: N-point discrete layer plus a Gaussian layer with power
// share delta, combined as sqrt(1-delta)*X_D + sqrt(delta)*X_G.
struct MixedInputParams {
  int n1 = 1, n2 = 1;
  double delta1 = 0, delta2 = 0;
};

enum class Regime {
  VeryWeak,
  Weak1,
  Weak2,
  Strong,
  VeryStrong,
  TdmaBand,
  AsymVeryStrong,
  AsymStrong,
  AsymMixed,
  AsymVeryWeak,
  AsymExcluded,
};
std::string regime_name(Regime r);

struct Halfspace {
  double a1 = 0, a2 = 0, b = 0;  // a1*R1 + a2*R2 <= b
};

// Rate polygon. Outer bounds carry both the halfspaces and their boundary
// corners; achieved (inner) regions carry the Pareto corner staircase only.
struct RateRegion {
  std::vector<std::pair<double, double>> corners;
  std::vector<Halfspace> halfspaces;
};

// How the discrete-part minimum distance at each receiver is obtained:
// Exact enumerates the received sum-set; NonOverlap and Outage use the
// analytic certificates of sumset_geometry.
enum class DminPolicyKind { Exact, NonOverlap, Outage };
struct DminPolicy {
  DminPolicyKind kind = DminPolicyKind::Exact;
  double gamma = 0.5;  // Outage only
  static DminPolicy exact() { return {DminPolicyKind::Exact, 0}; }
  static DminPolicy nonoverlap() { return {DminPolicyKind::NonOverlap, 0}; }
  static DminPolicy outage(double gamma) { return {DminPolicyKind::Outage, gamma}; }
};

// The moderately-weak regime exposes two parameter recipes: LogLog (gap grows
// with log log SNR) and ConstantGap (3/4-power point reduction, no outage).
enum class Weak2Variant { LogLog, ConstantGap };

struct TracePoint {
  double t = 0;
  MixedInputParams params;
  double r1 = 0, r2 = 0;
  bool ok = true;  // false: parameter vector skipped (precondition failed)
};

struct GapReport {
  Regime regime = Regime::AsymExcluded;
  double analytic_gap_bits = 0;
  double numeric_gap_bits = 0;
  double gamma = 0;
  std::vector<TracePoint> params_trace;
};

// Rates treating interference as noise for one mixed-input parameter vector.
std::pair<double, double> inner_rate_pair(const ChannelGains& g,
                                          const MixedInputParams& p,
                                          const DminPolicy& policy);

// The seven-halfspace outer bound (two cut-set, two one-sided sum-rate, one
// two-sided sum-rate, 2R1+R2, R1+2R2) with its boundary corners.
RateRegion outer_region(const ChannelGains& g);

Regime classify_symmetric(double snr, double inr);
Regime classify_general(const ChannelGains& g);

// Per-regime mixed-input parameter vectors at curve position t in [0,1],
// including user-swapped duals where the recipe lists them.
std::vector<MixedInputParams> regime_params(
    Regime regime, double snr, double inr, double t,
    Weak2Variant variant = Weak2Variant::ConstantGap);

// Union over the t-grid of inner_rate_pair results as a Pareto staircase.
// Parameter vectors whose preconditions fail are skipped and recorded in the
// optional trace.
RateRegion achievable_region(const ChannelGains& g, double gamma, int t_grid,
                             const DminPolicy& policy,
                             std::vector<TracePoint>* trace = nullptr,
                             Weak2Variant variant = Weak2Variant::ConstantGap);

// Proven additive gap (bits) between achievable and outer regions.
double analytic_gap(Regime regime, double snr, double inr, double gamma);

// Largest per-component shift needed to move an outer corner into the
// achieved staircase: max over outer corners c of min over inner points p of
// max(c1-p1, c2-p2, 0).
double numeric_gap(const RateRegion& inner, const RateRegion& outer);

// Gap certificate for general (asymmetric) gains.
GapReport asym_gap(const ChannelGains& g, double gamma);

// (S, numeric_gap / ig(S)) along I = S^alpha with the vanishing outage
// schedule gamma(S) = 1/log2(min(S, S^alpha)). Trend contract: decreasing.
std::vector<std::pair<double, double>> gdof_trace(
    double alpha, const std::vector<double>& snr_db_list);

// The four outer-bound corners A, B, C, D in the weak band I <= S <= I(1+I).
std::array<std::pair<double, double>, 4> weak_outer_corners(double snr,
                                                            double inr);

}  // namespace tinnots
