#pragma once
#include <cstddef>
#include <cstdint>

#include "tinnots/constellation.hpp"
#include "tinnots/regions.hpp"

namespace tinnots {

struct McConfig {
  std::size_t samples = 100000;
  std::uint64_t seed = 12345;
  std::uint64_t stream_id = 0;
};

struct McEstimate {
  double value = 0;      // bits
  double std_error = 0;  // bits, delta-method on the per-sample log ratio
};

// I(X_u; Y_u) for the two-user channel with mixed inputs, the other user
// treated as noise. Exact finite Gaussian-mixture conditional densities, so
// sampling error is the only error.
McEstimate mi_mixed_input(const ChannelGains& g, const MixedInputParams& p,
                          int user, const McConfig& cfg);

// I(X; gain*X + Z) for X = D + G, D ~ c, G ~ N(0, gauss_var), Z ~ N(0,1).
McEstimate mi_awgn_mixture(const DiscreteConstellation& c, double gauss_var,
                           double gain, const McConfig& cfg);

struct SerModuloResult {
  double ser = 0;
  double ser_std_error = 0;
  double bound = 0;  // 2*Q(sqrt(S)/2)
  double ser_interference_free = 0;
  double ser_if_std_error = 0;
};

// Folding receiver for PAM(n_points) against a stronger aligned PAM
// interferer: Y = (sqrt(S) n1 + sqrt(I) n2) d + Z folded modulo sqrt(I)*d.
// Admissible when n_points^2 * S <= I.
SerModuloResult ser_modulo_decoder(double snr, double inr, int n_points,
                                   const McConfig& cfg);

struct LayerSwapResult {
  McEstimate mi_discrete_discrete;  // I(Xc+Xp; gain*(Xc+Xp)+Z)
  McEstimate mi_discrete_gauss;     // I(Xc+Xg; gain*(Xc+Xg)+Z), var(Xg)=E[Xp^2]
  double bound_dd_minus_dg = 0;     // 0.5 bits
  double bound_dg_minus_dd = 0;     // 0.5*log2(pi*e/3) + 0.5*log2(1+12/(g*dmin)^2)
};

// Swapping the lower layer between discrete and Gaussian changes the mutual
// information by at most the two directed bounds above.
LayerSwapResult layer_swap_check(const DiscreteConstellation& xc,
                                 const DiscreteConstellation& xp, double gain,
                                 const McConfig& cfg);

}  // namespace tinnots
