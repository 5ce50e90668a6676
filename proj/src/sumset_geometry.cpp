#include "tinnots/sumset_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "tinnots/common.hpp"
#include "tinnots/rng.hpp"

namespace tinnots {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double dmin_or_inf(const DiscreteConstellation& c) {
  return c.points.size() < 2 ? kInf : exact_min_distance(c);
}

void require_pam(const DiscreteConstellation& c, const char* who) {
  validate(c);
  std::size_t n = c.points.size();
  for (double p : c.probs)
    if (std::abs(p - 1.0 / static_cast<double>(n)) > 1e-9)
      throw std::invalid_argument(std::string(who) + ": requires equiprobable PAM");
  if (n < 3) return;
  double d0 = c.points[1] - c.points[0];
  for (std::size_t i = 2; i < n; ++i)
    if (std::abs((c.points[i] - c.points[i - 1]) - d0) > 1e-9 * std::abs(d0))
      throw std::invalid_argument(std::string(who) + ": requires equally spaced PAM");
}

}  // namespace

bool nonoverlap_condition(double hx, const DiscreteConstellation& x,
                          double hy, const DiscreteConstellation& y) {
  validate(x);
  validate(y);
  if (!std::isfinite(hx) || !std::isfinite(hy))
    throw std::invalid_argument("nonoverlap_condition: gains must be finite");
  std::size_t nx = x.points.size(), ny = y.points.size();
  if (nx == 1 || ny == 1) return true;  // shifted copy, trivially exact
  if (hx == 0 || hy == 0) return false;
  double sx = std::abs(hx) * exact_min_distance(x);
  double sy = std::abs(hy) * exact_min_distance(y);
  return static_cast<double>(ny) * sy <= sx || static_cast<double>(nx) * sx <= sy;
}

SumsetBound nonoverlap_bound(double hx, const DiscreteConstellation& x,
                             double hy, const DiscreteConstellation& y) {
  if (!nonoverlap_condition(hx, x, hy, y))
    throw precondition_error(
        "nonoverlap_bound: non-overlap condition fails; use outage_bound");
  SumsetBound b;
  b.mode = SumsetMode::NonOverlapExact;
  b.cardinality = static_cast<long long>(x.points.size()) *
                  static_cast<long long>(y.points.size());
  b.dmin_lower =
      std::min(std::abs(hx) * dmin_or_inf(x), std::abs(hy) * dmin_or_inf(y));
  return b;
}

SumsetBound outage_bound(double hx, const DiscreteConstellation& x,
                         double hy, const DiscreteConstellation& y,
                         double gamma) {
  if (!(gamma > 0) || gamma > 1)
    throw std::invalid_argument("outage_bound: gamma must be in (0,1]");
  require_pam(x, "outage_bound");
  require_pam(y, "outage_bound");
  std::size_t nx = x.points.size(), ny = y.points.size();
  if (nx == 1 || ny == 1) {
    SumsetBound b = nonoverlap_bound(hx, x, hy, y);  // degenerate: exact
    b.gamma = gamma;
    return b;
  }
  double sx = std::abs(hx) * exact_min_distance(x);
  double sy = std::abs(hy) * exact_min_distance(y);
  SumsetBound b;
  b.mode = SumsetMode::OutageBound;
  b.cardinality = static_cast<long long>(nx) * static_cast<long long>(ny);
  b.gamma = gamma;
  b.kappa = (gamma / 2.0) /
            (1.0 + std::log(static_cast<double>(std::max(nx, ny))));
  b.upsilon = std::max(sx / static_cast<double>(ny), sy / static_cast<double>(nx));
  b.dmin_lower = b.kappa * std::min({sx, sy, b.upsilon});
  return b;
}

double integer_gap_floor(double a, double b, int nx, int ny, double gamma) {
  if (!(a > 0) || !(b > 0)) throw std::invalid_argument("integer_gap_floor: a, b must be > 0");
  if (nx < 1 || ny < 1) throw std::invalid_argument("integer_gap_floor: nx, ny must be >= 1");
  if (!(gamma > 0) || gamma > 1)
    throw std::invalid_argument("integer_gap_floor: gamma must be in (0,1]");
  double tx = b / (2.0 * nx * (1.0 + std::log(static_cast<double>(ny))));
  double ty = a / (2.0 * ny * (1.0 + std::log(static_cast<double>(nx))));
  return gamma * std::max(tx, ty);
}

double empirical_outage_fraction(const DiscreteConstellation& x,
                                 const DiscreteConstellation& y, double gamma,
                                 const OutageSampleSpec& spec,
                                 std::uint64_t rng_seed) {
  if (spec.samples == 0)
    throw std::invalid_argument("empirical_outage_fraction: empty sample grid");
  if (spec.hx_max < spec.hx_min || spec.hy_max < spec.hy_min)
    throw std::invalid_argument("empirical_outage_fraction: inverted gain box");
  Rng rng(rng_seed);
  std::size_t bad = 0;
  for (std::size_t i = 0; i < spec.samples; ++i) {
    double hx = spec.hx_min == spec.hx_max ? spec.hx_min
                                           : rng.uniform(spec.hx_min, spec.hx_max);
    double hy = spec.hy_min == spec.hy_max ? spec.hy_min
                                           : rng.uniform(spec.hy_min, spec.hy_max);
    double bound = outage_bound(hx, x, hy, y, gamma).dmin_lower;
    DiscreteConstellation s = sum_set(hx, x, hy, y);
    if (s.points.size() < 2 || exact_min_distance(s) < bound) ++bad;
  }
  return static_cast<double>(bad) / static_cast<double>(spec.samples);
}

double zero_measure_overlap_check(const DiscreteConstellation& x,
                                  const DiscreteConstellation& y,
                                  std::size_t trials, std::uint64_t rng_seed) {
  if (trials == 0) throw std::invalid_argument("zero_measure_overlap_check: trials must be >= 1");
  validate(x);
  validate(y);
  Rng rng(rng_seed);
  std::size_t collided = 0;
  long long full = static_cast<long long>(x.points.size()) *
                   static_cast<long long>(y.points.size());
  for (std::size_t i = 0; i < trials; ++i) {
    double hx = rng.uniform(0.5, 2.0);
    double hy = rng.uniform(0.5, 2.0);
    DiscreteConstellation s = sum_set(hx, x, hy, y, 0.0);
    if (static_cast<long long>(s.points.size()) < full) ++collided;
  }
  return static_cast<double>(collided) / static_cast<double>(trials);
}

}  // namespace tinnots
