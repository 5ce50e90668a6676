#include "tinnots/mi_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace tinnots {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kE = std::numbers::e;
constexpr double kLn2 = std::numbers::ln2;
}  // namespace

double shaping_gap_bits() { return 0.5 * std::log2(2.0 * kPi * kE / 12.0); }
double pam_capacity_gap_bits() { return 0.5 * std::log2(2.0 * kPi * kE / 3.0); }
double half_log2_2pie() { return 0.5 * std::log2(2.0 * kPi * kE); }
double half_log2_6pie() { return 0.5 * std::log2(6.0 * kPi * kE); }

double ig(double x) {
  if (x < 0) throw std::invalid_argument("ig: negative argument");
  return 0.5 * std::log2(1.0 + x);
}

int nd(double x) {
  x = std::max(x, 0.0);
  int m = static_cast<int>(std::floor(std::sqrt(1.0 + x)));
  while (static_cast<double>(m + 1) * (m + 1) <= 1.0 + x) ++m;
  while (m > 1 && static_cast<double>(m) * m > 1.0 + x) --m;
  return std::max(m, 1);
}

double q_function(double x) { return 0.5 * std::erfc(x / std::numbers::sqrt2); }

double id_bits(const DiscreteConstellation& c) {
  validate(c);
  if (c.points.size() < 2) return 0;
  return ow_b_lower(c).value;
}

BoundValue ow_b_lower(const DiscreteConstellation& c) {
  validate(c);
  if (c.points.size() < 2)
    throw std::invalid_argument("ow_b_lower: needs at least two points");
  double d = exact_min_distance(c);
  double gap = shaping_gap_bits() + 0.5 * std::log2(1.0 + 12.0 / (d * d));
  double h = entropy_bits(c);
  return {std::max(0.0, h - gap), gap};
}

BoundValue ow_a_lower(const DiscreteConstellation& c) {
  validate(c);
  std::size_t n = c.points.size();
  if (n < 2) throw std::invalid_argument("ow_a_lower: needs at least two points");
  double d = exact_min_distance(c);
  double xi = 2.0 * q_function(0.5 * d);
  xi = std::clamp(xi, 1e-300, 1.0 - 1e-12);
  double gap = xi * std::log2(1.0 / xi) + (1.0 - xi) * std::log2(1.0 / (1.0 - xi)) +
               xi * std::log2(static_cast<double>(n - 1));
  double h = entropy_bits(c);
  return {std::max(0.0, h - gap), gap};
}

BoundValue dtd_simple_lower(const DiscreteConstellation& c) {
  validate(c);
  std::size_t n = c.points.size();
  if (n < 2) throw std::invalid_argument("dtd_simple_lower: needs at least two points");
  for (double p : c.probs)
    if (std::abs(p - 1.0 / static_cast<double>(n)) > 1e-9)
      throw std::invalid_argument("dtd_simple_lower: requires an equiprobable constellation");
  double d = exact_min_distance(c);
  double gap = 0.5 * std::log2(kE / 2.0) +
               std::log2(1.0 + (static_cast<double>(n) - 1.0) * std::exp(-d * d / 4.0));
  double h = std::log2(static_cast<double>(n));
  return {std::max(0.0, h - gap), gap};
}

BoundValue dtd_full_lower(const DiscreteConstellation& c) {
  validate(c);
  const auto& s = c.points;
  const auto& p = c.probs;
  std::size_t n = s.size();
  // streaming log-sum-exp over ln(p_i p_j) - (s_i-s_j)^2/4; the support is
  // sorted, so each row stops once the squared-distance term underflows.
  double m = -std::numeric_limits<double>::infinity();
  double acc = 0;
  auto add_term = [&](double t) {
    if (t <= m) {
      acc += std::exp(t - m);
    } else {
      acc = acc * std::exp(m - t) + 1.0;
      m = t;
    }
  };
  for (std::size_t i = 0; i < n; ++i) {
    add_term(2.0 * std::log(p[i]));  // diagonal
    for (std::size_t j = i + 1; j < n; ++j) {
      double diff = s[j] - s[i];
      double q = diff * diff / 4.0;
      if (q > 800.0) break;
      add_term(std::log(2.0 * p[i] * p[j]) - q);  // (i,j) and (j,i)
    }
  }
  double ln_pair_sum = m + std::log(acc) - 0.5 * std::log(4.0 * kPi);
  double raw = -ln_pair_sum / kLn2 - half_log2_2pie();
  return {std::max(0.0, raw), entropy_bits(c) - raw};
}

double mi_upper(const DiscreteConstellation& c) {
  validate(c);
  return std::min(entropy_bits(c), ig(average_energy(c)));
}

BoundValue mi_bound(MiBoundKind kind, const DiscreteConstellation& c) {
  switch (kind) {
    case MiBoundKind::OzarowWynerB: return ow_b_lower(c);
    case MiBoundKind::OzarowWynerA: return ow_a_lower(c);
    case MiBoundKind::DtdSimple: return dtd_simple_lower(c);
    case MiBoundKind::DtdFull: return dtd_full_lower(c);
    case MiBoundKind::UpperMin: {
      double u = mi_upper(c);
      return {u, entropy_bits(c) - u};
    }
  }
  throw std::invalid_argument("mi_bound: unknown kind");
}

double state_channel_rate_lower(double snr, const DiscreteConstellation& t) {
  if (snr < 0) throw std::invalid_argument("state_channel_rate_lower: negative snr");
  double d = exact_min_distance(t);  // rejects singletons
  return ig(snr) - (shaping_gap_bits() + 0.5 * std::log2(1.0 + 12.0 / (d * d)));
}

}  // namespace tinnots
