#include "tinnots/regions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <stdexcept>
#include <tuple>

#include "tinnots/common.hpp"
#include "tinnots/mi_bounds.hpp"
#include "tinnots/sumset_geometry.hpp"

namespace tinnots {

namespace {

constexpr double kBetaPointReduction = 0.8277;
constexpr int kAsymTGrid = 129;
constexpr int kGdofTGrid = 129;

double pos(double x) { return x > 0 ? x : 0.0; }

void check_gains(const ChannelGains& g) {
  for (double h : {g.h11_sq, g.h12_sq, g.h21_sq, g.h22_sq})
    if (!(h >= 0) || !std::isfinite(h))
      throw std::invalid_argument("squared gains must be finite and >= 0");
}

void check_params(const MixedInputParams& p) {
  if (p.n1 < 1 || p.n2 < 1)
    throw std::invalid_argument("n1, n2 must be >= 1");
  if (p.delta1 < 0 || p.delta1 > 1 || p.delta2 < 0 || p.delta2 > 1)
    throw std::invalid_argument("delta1, delta2 must be in [0,1]");
}

void check_gamma(double gamma) {
  if (!(gamma > 0) || gamma > 1)
    throw std::invalid_argument("gamma must be in (0,1]");
}

double id_from(double entropy_bits, double dmin) {
  return pos(entropy_bits - shaping_gap_bits() -
             0.5 * std::log2(1.0 + 12.0 / (dmin * dmin)));
}

// One receiver of the mixed-input TIN rate: the discrete sum-set rate plus
// the own Gaussian layer, minus the cross discrete layer treated as decodable
// interference.
double receiver_rate(double hown_sq, double hcross_sq, double down,
                     double dcross, const DiscreteConstellation& xod,
                     const DiscreteConstellation& xcd, int ncross,
                     const DminPolicy& policy) {
  const double sigma_sq = 1.0 + hown_sq * down + hcross_sq * dcross;
  const double a = std::sqrt(hown_sq * (1 - down) / sigma_sq);
  const double b = std::sqrt(hcross_sq * (1 - dcross) / sigma_sq);

  const bool degenerate =
      xod.points.size() == 1 || xcd.points.size() == 1 || a == 0 || b == 0;
  double id_term;
  if (policy.kind == DminPolicyKind::Exact || degenerate) {
    id_term = id_bits(sum_set(a, xod, b, xcd));
  } else if (policy.kind == DminPolicyKind::NonOverlap) {
    if (!nonoverlap_condition(a, xod, b, xcd))
      throw precondition_error(
          "inner_rate_pair: received sum-set may overlap; use the outage or "
          "exact policy");
    SumsetBound sb = nonoverlap_bound(a, xod, b, xcd);
    id_term = id_from(std::log2(static_cast<double>(sb.cardinality)),
                      sb.dmin_lower);
  } else {
    SumsetBound sb = outage_bound(a, xod, b, xcd, policy.gamma);
    id_term = id_from(std::log2(static_cast<double>(sb.cardinality)),
                      sb.dmin_lower);
  }

  const double gauss_term = ig(hown_sq * down / (1.0 + hcross_sq * dcross));
  const double cross_term =
      std::min(std::log2(static_cast<double>(ncross)),
               ig(hcross_sq * (1 - dcross) / (1.0 + hcross_sq * dcross)));
  return pos(id_term + gauss_term - cross_term);
}

std::vector<std::pair<double, double>> pareto_staircase(
    std::vector<std::pair<double, double>> pts) {
  std::sort(pts.begin(), pts.end(), [](const auto& u, const auto& v) {
    return u.first != v.first ? u.first > v.first : u.second > v.second;
  });
  std::vector<std::pair<double, double>> keep;
  double best_r2 = -1;
  for (const auto& p : pts) {
    if (p.second > best_r2) {
      keep.push_back(p);
      best_r2 = p.second;
    }
  }
  std::reverse(keep.begin(), keep.end());
  return keep;
}

double grid_t(int i, int t_grid) {
  return t_grid == 1 ? 0.0
                     : static_cast<double>(i) / static_cast<double>(t_grid - 1);
}

struct Weak2SValues {
  double s3a, s3b, s4a, s4b;
};

Weak2SValues weak2_s(double snr, double inr, double t) {
  const double sp = snr / (1 + inr);
  const double u = (1 + sp) * (1 + snr) / (1 + inr + sp);
  const double v = std::pow(1 + inr + sp, 3) / ((1 + sp) * (1 + snr));
  Weak2SValues w;
  w.s3a = std::pow(u, (1 - t) / 2) * std::pow(v, t / 2) - 1;
  w.s3b = std::pow(u, t / 2) * std::pow(v, (1 - t) / 2) - 1;
  w.s4a = (1 + snr) /
              (std::pow(1 + sp, t) * std::pow(1 + inr + sp, 1 - t)) -
          1;
  w.s4b = std::pow((1 + inr + sp) * (1 + inr + sp) / (1 + snr), 1 - t) - 1;
  return w;
}

void require_delta(double value, double limit, const char* which,
                   const char* family) {
  if (value > limit * (1 + 1e-12) + 1e-15)
    throw precondition_error(std::string("regime_params: ") + which + " = " +
                             std::to_string(value) + " exceeds its limit " +
                             std::to_string(limit) + " (" + family + ")");
}

// Asymmetric sub-regime tests, in theorem order.
bool in_excluded_band(const ChannelGains& g) {
  const double lo1 = g.h22_sq / (1 + g.h21_sq);
  const double lo2 = g.h11_sq / (1 + g.h12_sq);
  return lo1 < g.h12_sq && g.h12_sq < lo1 * (1 + g.h11_sq) &&
         lo2 < g.h21_sq && g.h21_sq < lo2 * (1 + g.h22_sq);
}

bool asym_very_strong(const ChannelGains& g) {
  return g.h11_sq * (1 + g.h22_sq) <= g.h21_sq &&
         g.h22_sq * (1 + g.h11_sq) <= g.h12_sq;
}

bool asym_strong(const ChannelGains& g) {
  return g.h21_sq >= g.h11_sq && g.h12_sq >= g.h22_sq;
}

bool asym_very_weak(const ChannelGains& g) {
  return g.h12_sq <= g.h22_sq / (1 + g.h21_sq) &&
         g.h21_sq <= g.h11_sq / (1 + g.h12_sq);
}

bool asym_mixed_base(const ChannelGains& g) {
  return g.h21_sq >= g.h11_sq / (1 + g.h12_sq) * (1 + g.h22_sq) &&
         g.h12_sq <= g.h22_sq;
}

bool asym_mixed_swapped(const ChannelGains& g) {
  return g.h12_sq >= g.h22_sq / (1 + g.h21_sq) * (1 + g.h11_sq) &&
         g.h21_sq <= g.h11_sq;
}

Regime classify_asym(const ChannelGains& g) {
  if (in_excluded_band(g)) return Regime::AsymExcluded;
  if (asym_very_strong(g)) return Regime::AsymVeryStrong;
  if (asym_strong(g)) return Regime::AsymStrong;
  if (asym_very_weak(g)) return Regime::AsymVeryWeak;
  if (asym_mixed_base(g) || asym_mixed_swapped(g)) return Regime::AsymMixed;
  return Regime::AsymExcluded;
}

double loglog_gap(double growth, double coeff, double gamma) {
  const double t = 1 + 0.5 * std::log1p(growth);
  return 0.5 * std::log2(2 * std::numbers::pi * std::numbers::e / 3.0) +
         0.5 * std::log2(1 + coeff * t * t / (gamma * gamma));
}

}  // namespace

bool ChannelGains::is_symmetric(double rel_tol) const {
  auto near = [rel_tol](double x, double y) {
    return std::abs(x - y) <= rel_tol * std::max({1.0, std::abs(x), std::abs(y)});
  };
  return near(h11_sq, h22_sq) && near(h12_sq, h21_sq);
}

std::string regime_name(Regime r) {
  switch (r) {
    case Regime::VeryWeak: return "very_weak";
    case Regime::Weak1: return "weak1";
    case Regime::Weak2: return "weak2";
    case Regime::Strong: return "strong";
    case Regime::VeryStrong: return "very_strong";
    case Regime::TdmaBand: return "tdma_band";
    case Regime::AsymVeryStrong: return "asym_very_strong";
    case Regime::AsymStrong: return "asym_strong";
    case Regime::AsymMixed: return "asym_mixed";
    case Regime::AsymVeryWeak: return "asym_very_weak";
    case Regime::AsymExcluded: return "asym_excluded";
  }
  return "unknown";
}

std::pair<double, double> inner_rate_pair(const ChannelGains& g,
                                          const MixedInputParams& p,
                                          const DminPolicy& policy) {
  check_gains(g);
  check_params(p);
  if (policy.kind == DminPolicyKind::Outage) check_gamma(policy.gamma);
  DiscreteConstellation x1 = unit_energy_pam_or_point(p.n1);
  DiscreteConstellation x2 = unit_energy_pam_or_point(p.n2);
  double r1 = receiver_rate(g.h11_sq, g.h12_sq, p.delta1, p.delta2, x1, x2,
                            p.n2, policy);
  double r2 = receiver_rate(g.h22_sq, g.h21_sq, p.delta2, p.delta1, x2, x1,
                            p.n1, policy);
  return {r1, r2};
}

RateRegion outer_region(const ChannelGains& g) {
  check_gains(g);
  const double c1 = ig(g.h11_sq), c2 = ig(g.h22_sq);
  const double z1 = ig(g.h12_sq + g.h11_sq / (1 + g.h21_sq));
  const double z2 = ig(g.h21_sq + g.h22_sq / (1 + g.h12_sq));
  RateRegion region;
  region.halfspaces = {
      {1, 0, c1},
      {0, 1, c2},
      {1, 1, pos(c1 - ig(g.h21_sq)) + ig(g.h21_sq + g.h22_sq)},
      {1, 1, pos(c2 - ig(g.h12_sq)) + ig(g.h11_sq + g.h12_sq)},
      {1, 1, z1 + z2},
      {2, 1, ig(g.h11_sq + g.h12_sq) + z2 + pos(c1 - ig(g.h21_sq))},
      {1, 2, ig(g.h21_sq + g.h22_sq) + z1 + pos(c2 - ig(g.h12_sq))},
  };

  std::vector<Halfspace> lines = region.halfspaces;
  lines.push_back({1, 0, 0});
  lines.push_back({0, 1, 0});
  constexpr double eps = 1e-9;
  std::vector<std::pair<double, double>> pts;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      const double det = lines[i].a1 * lines[j].a2 - lines[j].a1 * lines[i].a2;
      if (std::abs(det) < 1e-12) continue;
      double x = (lines[i].b * lines[j].a2 - lines[j].b * lines[i].a2) / det;
      double y = (lines[i].a1 * lines[j].b - lines[j].a1 * lines[i].b) / det;
      if (x < -eps || y < -eps) continue;
      x = pos(x);
      y = pos(y);
      bool ok = true;
      for (const Halfspace& h : region.halfspaces)
        if (h.a1 * x + h.a2 * y > h.b + eps) { ok = false; break; }
      if (ok) pts.emplace_back(x, y);
    }
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](const auto& u, const auto& v) {
                          return std::abs(u.first - v.first) <= eps &&
                                 std::abs(u.second - v.second) <= eps;
                        }),
            pts.end());
  std::vector<std::pair<double, double>> corners;
  for (const auto& v : pts) {
    bool dominated = false;
    for (const auto& u : pts)
      if (u.first > v.first + eps && u.second > v.second + eps) {
        dominated = true;
        break;
      }
    if (!dominated) corners.push_back(v);
  }
  std::sort(corners.begin(), corners.end(), [](const auto& u, const auto& v) {
    return u.first != v.first ? u.first < v.first : u.second > v.second;
  });
  region.corners = corners;
  return region;
}

Regime classify_symmetric(double snr, double inr) {
  if (!(snr >= 0) || !(inr >= 0))
    throw std::invalid_argument("classify_symmetric: snr, inr must be >= 0");
  if (inr >= snr * (1 + snr)) return Regime::VeryStrong;
  if (inr > snr) return Regime::Strong;
  if (snr >= inr * (1 + inr)) return Regime::VeryWeak;
  if (snr <= 1 + inr) return Regime::TdmaBand;
  const double sp = snr / (1 + inr);
  if ((1 + snr) * (1 + sp) <= (1 + inr + sp) * (1 + inr + sp))
    return Regime::Weak1;
  return Regime::Weak2;
}

Regime classify_general(const ChannelGains& g) {
  check_gains(g);
  if (g.is_symmetric()) return classify_symmetric(g.snr(), g.inr());
  return classify_asym(g);
}

std::vector<MixedInputParams> regime_params(Regime regime, double snr,
                                            double inr, double t,
                                            Weak2Variant variant) {
  if (!(t >= 0) || t > 1)
    throw std::invalid_argument("regime_params: t must be in [0,1]");
  if (!(snr >= 0) || !(inr >= 0))
    throw std::invalid_argument("regime_params: snr, inr must be >= 0");
  const double sp = snr / (1 + inr);

  switch (regime) {
    case Regime::VeryStrong:
      return {{nd(snr), nd(snr), 0, 0}};

    case Regime::Strong: {
      const double base = 1 + inr / (1 + snr);
      const double s0a = std::pow(base, 1 - t) * std::pow(1 + snr, t) - 1;
      const double s0b = std::pow(base, t) * std::pow(1 + snr, 1 - t) - 1;
      return {{nd(s0a), nd(s0b), 0, 0}};
    }

    case Regime::VeryWeak:
      return {{1, 1, t, 1}, {1, 1, 1, t}};

    case Regime::TdmaBand:
      return {{nd(std::pow(1 + snr, t) - 1),
               nd(std::pow(1 + snr, 1 - t) - 1), 0, 0}};

    case Regime::Weak1: {
      const double A = (1 + inr + sp) / (1 + sp);
      const double B = (1 + snr) / (1 + inr + sp);
      const double C = (1 + snr) / (1 + sp);
      const double D = (1 + inr + snr) / (1 + inr + sp);
      const double dg = 1 / (1 + inr);
      const double s1a = std::pow(A, t) * std::pow(B, 1 - t) - 1;
      const double s1b = std::pow(A, 1 - t) * std::pow(B, t) - 1;
      const double s2a = std::pow(A, t) * std::pow(C, 1 - t) - 1;
      const double s2b = std::pow(D, t) - 1;
      const double d2 = (std::pow((1 + snr) / (1 + inr), t) - 1) / snr;
      require_delta(d2, dg, "delta2", "weak1 slanted-face family");
      return {{nd(s1a), nd(s1b), dg, dg},
              {nd(s2a), nd(s2b), dg, d2},
              {nd(s2b), nd(s2a), d2, dg}};
    }

    case Regime::Weak2: {
      const Weak2SValues w = weak2_s(snr, inr, t);
      const double dg = 1 / (1 + inr);
      const double d1f1 = w.s3a / snr;
      const double d2f1 = w.s3b / snr;
      require_delta(std::max(d1f1, d2f1), dg, "max(delta1,delta2)",
                    "weak2 sum-face family");
      if (variant == Weak2Variant::LogLog) {
        const double A = (1 + inr + sp) / (1 + sp);
        const double d2f2 = (std::pow(A, 1 - t) - 1) / snr;
        require_delta(d2f2, dg, "delta2", "weak2 slanted-face family");
        return {{nd(w.s3a), nd(w.s3b), d1f1, d2f1},
                {nd(w.s4a), nd(w.s4b), dg, d2f2},
                {nd(w.s4b), nd(w.s4a), d2f2, dg}};
      }
      const double d1f2 = w.s4a / snr;
      const double d2f2 = (1 + inr + sp) / ((1 + sp) * (1 + snr));
      require_delta(d1f2, inr / snr, "delta1",
                    "weak2 constant-gap slanted-face family");
      require_delta(d2f2, dg, "delta2",
                    "weak2 constant-gap slanted-face family");
      const double n1f2 = 0.75 * (snr - inr) / (1 + inr);
      return {{nd(0.75 * w.s3a), nd(0.75 * w.s3b), d1f1, d2f1},
              {nd(n1f2), nd(0.75 * w.s4b), d1f2, d2f2},
              {nd(0.75 * w.s4b), nd(n1f2), d2f2, d1f2}};
    }

    default:
      throw std::invalid_argument(
          "regime_params: symmetric regimes only; asym_gap derives its own "
          "parameters");
  }
}

RateRegion achievable_region(const ChannelGains& g, double gamma, int t_grid,
                             const DminPolicy& policy,
                             std::vector<TracePoint>* trace,
                             Weak2Variant variant) {
  check_gains(g);
  if (t_grid < 2)
    throw std::invalid_argument("achievable_region: t_grid must be >= 2");
  if (!g.is_symmetric())
    throw std::invalid_argument(
        "achievable_region: symmetric gains only; use asym_gap");
  DminPolicy pol = policy;
  if (pol.kind == DminPolicyKind::Outage) {
    check_gamma(gamma);
    pol.gamma = gamma;
  }
  const double snr = g.snr(), inr = g.inr();
  const Regime regime = classify_symmetric(snr, inr);

  using Key = std::tuple<int, int, double, double>;
  std::map<Key, std::pair<double, double>> cache;
  std::vector<std::pair<double, double>> achieved;

  for (int i = 0; i < t_grid; ++i) {
    const double t = grid_t(i, t_grid);
    std::vector<MixedInputParams> batch;
    try {
      batch = regime_params(regime, snr, inr, t, variant);
    } catch (const precondition_error&) {
      if (trace) trace->push_back({t, MixedInputParams{}, 0, 0, false});
      continue;
    }
    for (const MixedInputParams& p : batch) {
      Key key{p.n1, p.n2, p.delta1, p.delta2};
      auto it = cache.find(key);
      if (it != cache.end()) {
        if (trace)
          trace->push_back({t, p, it->second.first, it->second.second, true});
        achieved.push_back(it->second);
        continue;
      }
      try {
        auto r = inner_rate_pair(g, p, pol);
        cache.emplace(key, r);
        achieved.push_back(r);
        if (trace) trace->push_back({t, p, r.first, r.second, true});
      } catch (const precondition_error&) {
        if (trace) trace->push_back({t, p, 0, 0, false});
      }
    }
  }

  RateRegion region;
  region.corners = pareto_staircase(std::move(achieved));
  return region;
}

double analytic_gap(Regime regime, double snr, double inr, double gamma) {
  check_gamma(gamma);
  const double pi_e = std::numbers::pi * std::numbers::e;
  const double mn = std::min(snr, inr);
  switch (regime) {
    case Regime::VeryWeak:
      return 0.5;
    case Regime::Weak2:
      return 0.5 * std::log2(608.0 * pi_e / 27.0);
    case Regime::Weak1: {
      const double t = 1 + 0.5 * std::log1p(mn);
      return 0.5 * std::log2(16.0 * pi_e / 3.0) +
             0.5 * std::log2(1 + 45.0 * t * t / (gamma * gamma));
    }
    case Regime::Strong:
      return loglog_gap(mn, 8.0, gamma);
    case Regime::VeryStrong:
      return 0.5 * std::log2(2.0 * pi_e / 3.0);
    case Regime::TdmaBand: {
      const double t = 1 + 0.5 * std::log1p(snr);
      return 0.5 * std::log2(4.0 * pi_e / 3.0) +
             0.5 * std::log2(1 + 8.0 * t * t / (gamma * gamma));
    }
    default:
      throw std::invalid_argument(
          "analytic_gap: symmetric regimes only; use asym_gap");
  }
}

double numeric_gap(const RateRegion& inner, const RateRegion& outer) {
  std::vector<std::pair<double, double>> in = inner.corners;
  if (in.empty()) in.emplace_back(0.0, 0.0);
  double worst = 0;
  for (const auto& c : outer.corners) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& p : in)
      best = std::min(best,
                      std::max({c.first - p.first, c.second - p.second, 0.0}));
    worst = std::max(worst, best);
  }
  return worst;
}

GapReport asym_gap(const ChannelGains& g, double gamma) {
  check_gains(g);
  check_gamma(gamma);
  GapReport rep;
  rep.gamma = gamma;
  rep.regime = classify_asym(g);
  const double nan = std::numeric_limits<double>::quiet_NaN();
  if (rep.regime == Regime::AsymExcluded) {
    rep.analytic_gap_bits = nan;
    rep.numeric_gap_bits = nan;
    return rep;
  }

  const double pi_e = std::numbers::pi * std::numbers::e;
  const double hmax = std::max(g.h11_sq, g.h22_sq);
  DminPolicy pol = DminPolicy::exact();
  std::vector<std::pair<double, std::vector<MixedInputParams>>> schedule;

  switch (rep.regime) {
    case Regime::AsymVeryStrong: {
      pol = DminPolicy::nonoverlap();
      rep.analytic_gap_bits =
          0.5 * std::log2(2.0 * pi_e / 3.0 *
                          (1 + kBetaPointReduction) / kBetaPointReduction);
      schedule.push_back(
          {0.0,
           {{nd(kBetaPointReduction * g.h11_sq),
             nd(kBetaPointReduction * g.h22_sq), 0, 0}}});
      break;
    }
    case Regime::AsymStrong: {
      pol = DminPolicy::outage(gamma);
      rep.analytic_gap_bits = loglog_gap(hmax, 8.0, gamma);
      const double smin =
          std::min(g.h11_sq + g.h12_sq, g.h21_sq + g.h22_sq);
      for (int i = 0; i < kAsymTGrid; ++i) {
        const double t = grid_t(i, kAsymTGrid);
        const double s5a = std::pow(1 + g.h11_sq, 1 - t) *
                               std::pow((1 + smin) / (1 + g.h22_sq), t) -
                           1;
        const double s5b = std::pow(1 + g.h22_sq, t) *
                               std::pow((1 + smin) / (1 + g.h11_sq), 1 - t) -
                           1;
        schedule.push_back({t, {{nd(s5a), nd(s5b), 0, 0}}});
      }
      break;
    }
    case Regime::AsymMixed: {
      pol = DminPolicy::outage(gamma);
      rep.analytic_gap_bits = loglog_gap(hmax, 24.0, gamma);
      const bool base = asym_mixed_base(g);
      const double ho = base ? g.h11_sq : g.h22_sq;   // strong-side direct
      const double hc = base ? g.h12_sq : g.h21_sq;   // weak cross gain
      for (int i = 0; i < kAsymTGrid; ++i) {
        const double t = grid_t(i, kAsymTGrid);
        const double s6a =
            std::pow(1 + ho / (1 + hc), t) * std::pow(1 + ho, 1 - t) - 1;
        const double s6b =
            std::pow(1 + hc, t) * std::pow(1 + hc / (1 + ho), 1 - t) - 1;
        MixedInputParams p;
        if (base)
          p = {nd(s6a), nd(s6b), 0, 1 / (1 + hc)};
        else
          p = {nd(s6b), nd(s6a), 1 / (1 + hc), 0};
        schedule.push_back({t, {p}});
      }
      break;
    }
    case Regime::AsymVeryWeak: {
      pol = DminPolicy::exact();
      rep.analytic_gap_bits = 0.5;
      for (int i = 0; i < kAsymTGrid; ++i) {
        const double t = grid_t(i, kAsymTGrid);
        schedule.push_back({t, {{1, 1, t, 1}, {1, 1, 1, t}}});
      }
      break;
    }
    default:
      break;
  }

  std::vector<std::pair<double, double>> achieved;
  for (const auto& [t, batch] : schedule) {
    for (const MixedInputParams& p : batch) {
      try {
        auto r = inner_rate_pair(g, p, pol);
        achieved.push_back(r);
        rep.params_trace.push_back({t, p, r.first, r.second, true});
      } catch (const precondition_error&) {
        rep.params_trace.push_back({t, p, 0, 0, false});
      }
    }
  }
  RateRegion inner;
  inner.corners = pareto_staircase(std::move(achieved));
  rep.numeric_gap_bits = numeric_gap(inner, outer_region(g));
  return rep;
}

std::vector<std::pair<double, double>> gdof_trace(
    double alpha, const std::vector<double>& snr_db_list) {
  if (!(alpha >= 0))
    throw std::invalid_argument("gdof_trace: alpha must be >= 0");
  for (std::size_t i = 1; i < snr_db_list.size(); ++i)
    if (snr_db_list[i] <= snr_db_list[i - 1])
      throw std::invalid_argument("gdof_trace: snr list must be increasing");

  std::vector<std::pair<double, double>> out;
  out.reserve(snr_db_list.size());
  for (double sdb : snr_db_list) {
    const double snr = db_to_linear(sdb);
    const double inr = std::pow(snr, alpha);
    double gamma = 1.0 / std::log2(std::min(snr, inr));
    if (!(gamma > 0) || gamma > 1) gamma = 1.0;
    ChannelGains g = ChannelGains::symmetric(snr, inr);
    // power-control schedules are O(1) per point, so the very-weak regime can
    // afford a much finer grid; it also needs one to resolve the steep
    // low-power end of the curve at high SNR
    const int grid =
        classify_symmetric(snr, inr) == Regime::VeryWeak ? 8193 : kGdofTGrid;
    RateRegion inner = achievable_region(g, gamma, grid,
                                         DminPolicy::exact(), nullptr,
                                         Weak2Variant::ConstantGap);
    const double gap = numeric_gap(inner, outer_region(g));
    out.emplace_back(snr, gap / ig(snr));
  }
  return out;
}

std::array<std::pair<double, double>, 4> weak_outer_corners(double snr,
                                                            double inr) {
  if (!(snr >= 0) || !(inr >= 0))
    throw std::invalid_argument("weak_outer_corners: snr, inr must be >= 0");
  if (snr < inr || snr > inr * (1 + inr))
    throw precondition_error(
        "weak_outer_corners: requires the weak band I <= S <= I(1+I)");
  const double sp = snr / (1 + inr);
  const double kramer = ig(inr + snr) + ig(snr) - ig(inr);
  const double etw = 2 * ig(inr + sp);
  const double a = std::min(kramer, etw);
  const double b = ig(inr + sp) + ig(snr + inr) + ig(snr) - ig(inr);
  const double c = ig(inr / (1 + snr)) + ig(snr / ((1 + inr) * (1 + inr)));
  if (c > 1.0 + 1e-9)
    throw std::logic_error("weak_outer_corners: corner offset exceeded 1 bit");
  return {{{ig(snr), c}, {b - a, 2 * a - b}, {2 * a - b, b - a}, {c, ig(snr)}}};
}

}  // namespace tinnots
