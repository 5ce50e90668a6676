#include "tinnots/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "tinnots/common.hpp"
#include "tinnots/mi_bounds.hpp"
#include "tinnots/rng.hpp"

namespace tinnots {

namespace {

constexpr double kLn2 = std::numbers::ln2;
constexpr double kLn2Pi = 1.8378770664093454836;

struct Welford {
  std::size_t n = 0;
  double mean = 0, m2 = 0;
  void add(double x) {
    ++n;
    double d = x - mean;
    mean += d / static_cast<double>(n);
    m2 += d * (x - mean);
  }
  McEstimate estimate() const {
    McEstimate e;
    e.value = mean;
    if (n > 1)
      e.std_error = std::sqrt(m2 / static_cast<double>(n - 1) /
                              static_cast<double>(n));
    return e;
  }
};

// Finite Gaussian mixture with a common variance. logpdf sums only the
// components within 40 sigma of the query point; everything outside is below
// double rounding of the inner sum.
struct GaussMixture {
  std::vector<double> means;  // sorted ascending
  std::vector<double> ln_w;
  double var = 1;
  double window = 0;

  GaussMixture(const DiscreteConstellation& c, double variance) {
    if (!(variance > 0)) throw std::invalid_argument("mixture variance must be > 0");
    means = c.points;
    ln_w.reserve(c.probs.size());
    for (double p : c.probs) ln_w.push_back(std::log(p));
    var = variance;
    window = 40.0 * std::sqrt(variance);
  }

  double logpdf(double y) const {
    const double norm = -0.5 * (kLn2Pi + std::log(var));
    auto lo = std::lower_bound(means.begin(), means.end(), y - window);
    auto hi = std::upper_bound(means.begin(), means.end(), y + window);
    std::size_t i0 = static_cast<std::size_t>(lo - means.begin());
    std::size_t i1 = static_cast<std::size_t>(hi - means.begin());
    if (i0 == i1) {  // all components far out: keep the nearest one
      std::size_t j = std::min(i0, means.size() - 1);
      if (i0 > 0 && (i0 == means.size() ||
                     y - means[i0 - 1] <= means[i0] - y))
        j = i0 - 1;
      double z = y - means[j];
      return ln_w[j] - 0.5 * z * z / var + norm;
    }
    double m = -std::numeric_limits<double>::infinity(), acc = 0;
    for (std::size_t i = i0; i < i1; ++i) {
      double z = y - means[i];
      double t = ln_w[i] - 0.5 * z * z / var;
      if (t <= m) {
        acc += std::exp(t - m);
      } else {
        acc = acc * std::exp(m - t) + 1.0;
        m = t;
      }
    }
    return m + std::log(acc) + norm;
  }
};

std::vector<double> cumulative(const std::vector<double>& probs) {
  std::vector<double> cum(probs.size());
  double s = 0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    s += probs[i];
    cum[i] = s;
  }
  cum.back() = 1.0;
  return cum;
}

std::size_t sample_index(Rng& rng, const std::vector<double>& cum) {
  double u = rng.uniform();
  return static_cast<std::size_t>(
      std::upper_bound(cum.begin(), cum.end(), u) - cum.begin());
}

void check_cfg(const McConfig& cfg) {
  if (cfg.samples == 0) throw std::invalid_argument("samples must be >= 1");
}

void check_params(const MixedInputParams& p) {
  if (p.n1 < 1 || p.n2 < 1)
    throw std::invalid_argument("n1, n2 must be >= 1");
  if (p.delta1 < 0 || p.delta1 > 1 || p.delta2 < 0 || p.delta2 > 1)
    throw std::invalid_argument("delta1, delta2 must be in [0,1]");
}

}  // namespace

McEstimate mi_mixed_input(const ChannelGains& g, const MixedInputParams& p,
                          int user, const McConfig& cfg) {
  check_cfg(cfg);
  check_params(p);
  if (user != 1 && user != 2) throw std::invalid_argument("user must be 1 or 2");

  const double hown_sq = user == 1 ? g.h11_sq : g.h22_sq;
  const double hcross_sq = user == 1 ? g.h12_sq : g.h21_sq;
  const double down = user == 1 ? p.delta1 : p.delta2;
  const double dcross = user == 1 ? p.delta2 : p.delta1;

  DiscreteConstellation pam1 = unit_energy_pam_or_point(p.n1);
  DiscreteConstellation pam2 = unit_energy_pam_or_point(p.n2);
  const DiscreteConstellation& xo = user == 1 ? pam1 : pam2;
  const DiscreteConstellation& xc = user == 1 ? pam2 : pam1;

  const double a = std::sqrt(hown_sq * (1 - down));
  const double b = std::sqrt(hcross_sq * (1 - dcross));
  const double hown = std::sqrt(hown_sq);
  const double var_cond = 1 + hcross_sq * dcross;
  const double var_unc = var_cond + hown_sq * down;

  GaussMixture cond(sum_set(b, xc, 0.0, unit_energy_pam_or_point(1), 0.0),
                    var_cond);
  GaussMixture unc(sum_set(a, xo, b, xc, 0.0), var_unc);

  std::vector<double> cum1 = cumulative(pam1.probs);
  std::vector<double> cum2 = cumulative(pam2.probs);
  const double s1d = std::sqrt(1 - p.delta1), s1g = std::sqrt(p.delta1);
  const double s2d = std::sqrt(1 - p.delta2), s2g = std::sqrt(p.delta2);
  const double g11 = user == 1 ? std::sqrt(g.h11_sq) : std::sqrt(g.h21_sq);
  const double g12 = user == 1 ? std::sqrt(g.h12_sq) : std::sqrt(g.h22_sq);

  Rng rng(cfg.seed, cfg.stream_id);
  Welford w;
  for (std::size_t i = 0; i < cfg.samples; ++i) {
    double u1 = pam1.points[sample_index(rng, cum1)];
    double g1 = rng.gaussian();
    double u2 = pam2.points[sample_index(rng, cum2)];
    double g2 = rng.gaussian();
    double z = rng.gaussian();
    double x1 = s1d * u1 + s1g * g1;
    double x2 = s2d * u2 + s2g * g2;
    double y = g11 * x1 + g12 * x2 + z;
    double xown = user == 1 ? x1 : x2;
    double ln_cond = cond.logpdf(y - hown * xown);
    double ln_unc = unc.logpdf(y);
    w.add((ln_cond - ln_unc) / kLn2);
  }
  return w.estimate();
}

McEstimate mi_awgn_mixture(const DiscreteConstellation& c, double gauss_var,
                           double gain, const McConfig& cfg) {
  check_cfg(cfg);
  validate(c);
  if (gauss_var < 0) throw std::invalid_argument("gauss_var must be >= 0");
  if (!std::isfinite(gain)) throw std::invalid_argument("gain must be finite");

  DiscreteConstellation scaled = c;
  for (double& v : scaled.points) v *= gain;
  if (gain < 0) {
    std::reverse(scaled.points.begin(), scaled.points.end());
    std::reverse(scaled.probs.begin(), scaled.probs.end());
  } else if (gain == 0) {
    scaled.points = {0.0};
    scaled.probs = {1.0};
  }
  GaussMixture unc(scaled, gain * gain * gauss_var + 1.0);
  std::vector<double> cum = cumulative(c.probs);
  const double sg = std::sqrt(gauss_var);

  Rng rng(cfg.seed, cfg.stream_id);
  Welford w;
  for (std::size_t i = 0; i < cfg.samples; ++i) {
    double xd = c.points[sample_index(rng, cum)];
    double xg = rng.gaussian();
    double z = rng.gaussian();
    double x = xd + sg * xg;
    double y = gain * x + z;
    double ln_cond = -0.5 * z * z - 0.5 * kLn2Pi;
    w.add((ln_cond - unc.logpdf(y)) / kLn2);
  }
  return w.estimate();
}

SerModuloResult ser_modulo_decoder(double snr, double inr, int n_points,
                                   const McConfig& cfg) {
  check_cfg(cfg);
  if (n_points < 3 || n_points % 2 == 0)
    throw std::invalid_argument("n_points must be odd and >= 3");
  if (!(snr > 0) || !(inr > 0))
    throw std::invalid_argument("snr and inr must be > 0");
  const double admis = static_cast<double>(n_points) * n_points * snr;
  if (admis > inr)
    throw precondition_error("ser_modulo_decoder: N^2*S = " +
                             std::to_string(admis) + " exceeds I = " +
                             std::to_string(inr) +
                             "; the fold only separates when N^2*S <= I");

  const int q = (n_points - 1) / 2;
  const double d = std::sqrt(12.0 / (static_cast<double>(n_points) * n_points - 1));
  const double rs = std::sqrt(snr), ri = std::sqrt(inr);
  const double period = ri * d;
  const double step = rs * d;

  Rng rng(cfg.seed, cfg.stream_id);
  SerModuloResult res;
  res.bound = 2.0 * q_function(rs / 2.0);

  std::size_t errors = 0;
  for (std::size_t i = 0; i < cfg.samples; ++i) {
    int n1 = static_cast<int>(rng.index(static_cast<std::uint64_t>(n_points))) - q;
    int n2 = static_cast<int>(rng.index(static_cast<std::uint64_t>(n_points))) - q;
    double z = rng.gaussian();
    double y = (rs * n1 + ri * n2) * d + z;
    double folded = std::remainder(y, period);
    int hat = std::clamp(static_cast<int>(std::lround(folded / step)), -q, q);
    if (hat != n1) ++errors;
  }
  res.ser = static_cast<double>(errors) / static_cast<double>(cfg.samples);
  res.ser_std_error =
      std::sqrt(res.ser * (1 - res.ser) / static_cast<double>(cfg.samples));

  std::size_t ref_errors = 0;
  for (std::size_t i = 0; i < cfg.samples; ++i) {
    int n1 = static_cast<int>(rng.index(static_cast<std::uint64_t>(n_points))) - q;
    double z = rng.gaussian();
    double y = rs * n1 * d + z;
    int hat = std::clamp(static_cast<int>(std::lround(y / step)), -q, q);
    if (hat != n1) ++ref_errors;
  }
  res.ser_interference_free =
      static_cast<double>(ref_errors) / static_cast<double>(cfg.samples);
  res.ser_if_std_error = std::sqrt(res.ser_interference_free *
                                   (1 - res.ser_interference_free) /
                                   static_cast<double>(cfg.samples));
  return res;
}

LayerSwapResult layer_swap_check(const DiscreteConstellation& xc,
                                 const DiscreteConstellation& xp, double gain,
                                 const McConfig& cfg) {
  check_cfg(cfg);
  validate(xc);
  validate(xp);
  DiscreteConstellation xd = sum_set(1.0, xc, 1.0, xp, 0.0);
  const long long full = static_cast<long long>(xc.points.size()) *
                         static_cast<long long>(xp.points.size());
  if (static_cast<long long>(xd.points.size()) < full)
    throw precondition_error(
        "layer_swap_check: Xc + Xp has coincident points; perturb the inputs");

  McConfig cfg_dd = cfg, cfg_dg = cfg;
  cfg_dd.stream_id = 2 * cfg.stream_id;
  cfg_dg.stream_id = 2 * cfg.stream_id + 1;

  LayerSwapResult r;
  r.mi_discrete_discrete = mi_awgn_mixture(xd, 0.0, gain, cfg_dd);
  r.mi_discrete_gauss = mi_awgn_mixture(xc, average_energy(xp), gain, cfg_dg);
  r.bound_dd_minus_dg = 0.5;
  double dmin = exact_min_distance(xd);
  r.bound_dg_minus_dd =
      0.5 * std::log2(std::numbers::pi * std::numbers::e / 3.0) +
      0.5 * std::log2(1.0 + 12.0 / (gain * gain * dmin * dmin));
  return r;
}

}  // namespace tinnots
