#include "tinnots/constellation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace tinnots {

namespace {

double kahan_sum(const std::vector<double>& v) {
  double s = 0, c = 0;
  for (double x : v) {
    double y = x - c;
    double t = s + y;
    c = (t - s) - y;
    s = t;
  }
  return s;
}

// sort + chain-merge + renormalize, shared by make_constellation and sum_set
DiscreteConstellation merge_sorted(std::vector<std::pair<double, double>>& pts,
                                   double merge_tol) {
  std::sort(pts.begin(), pts.end());
  DiscreteConstellation out;
  out.points.reserve(pts.size());
  out.probs.reserve(pts.size());
  std::size_t i = 0;
  while (i < pts.size()) {
    double wsum = pts[i].second;
    double vsum = pts[i].first * pts[i].second;
    double last = pts[i].first;
    std::size_t j = i + 1;
    while (j < pts.size() && pts[j].first - last <= merge_tol) {
      wsum += pts[j].second;
      vsum += pts[j].first * pts[j].second;
      last = pts[j].first;
      ++j;
    }
    out.points.push_back(vsum / wsum);
    out.probs.push_back(wsum);
    i = j;
  }
  double total = kahan_sum(out.probs);
  for (double& p : out.probs) p /= total;
  return out;
}

}  // namespace

void validate(const DiscreteConstellation& c) {
  if (c.points.empty() || c.points.size() != c.probs.size())
    throw std::invalid_argument("constellation: empty or mismatched point/prob lists");
  for (double p : c.probs)
    if (!(p > 0)) throw std::invalid_argument("constellation: probabilities must be > 0");
  if (std::abs(kahan_sum(c.probs) - 1.0) > 1e-12)
    throw std::invalid_argument("constellation: probabilities must sum to 1");
  for (std::size_t i = 1; i < c.points.size(); ++i)
    if (!(c.points[i] > c.points[i - 1]))
      throw std::invalid_argument("constellation: points must be strictly increasing");
}

DiscreteConstellation make_constellation(std::vector<double> points,
                                         std::vector<double> probs,
                                         double merge_tol) {
  if (points.size() != probs.size() || points.empty())
    throw std::invalid_argument("make_constellation: empty or mismatched inputs");
  if (merge_tol < 0) throw std::invalid_argument("make_constellation: merge_tol < 0");
  std::vector<std::pair<double, double>> pts(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!(probs[i] > 0))
      throw std::invalid_argument("make_constellation: probabilities must be > 0");
    pts[i] = {points[i], probs[i]};
  }
  DiscreteConstellation out = merge_sorted(pts, merge_tol);
  validate(out);
  return out;
}

DiscreteConstellation make_pam(const PamSpec& spec) {
  if (spec.n_points < 1) throw std::invalid_argument("make_pam: n_points must be >= 1");
  if (!(spec.d_min > 0)) throw std::invalid_argument("make_pam: d_min must be > 0");
  int n = spec.n_points;
  DiscreteConstellation c;
  c.points.resize(n);
  c.probs.assign(n, 1.0 / n);
  double half = 0.5 * (n - 1);
  for (int i = 0; i < n; ++i) c.points[i] = (i - half) * spec.d_min;
  return c;
}

DiscreteConstellation unit_energy_pam(int n_points) {
  if (n_points < 2)
    throw std::invalid_argument("unit_energy_pam: n_points must be >= 2");
  double nsq = static_cast<double>(n_points) * n_points;
  return make_pam({n_points, std::sqrt(12.0 / (nsq - 1.0))});
}

DiscreteConstellation unit_energy_pam_or_point(int n_points) {
  return n_points >= 2 ? unit_energy_pam(n_points) : make_pam({1, 1.0});
}

double entropy_bits(const DiscreteConstellation& c) {
  double h = 0;
  for (double p : c.probs) h -= p * std::log2(p);
  return h;
}

double mean_value(const DiscreteConstellation& c) {
  double m = 0;
  for (std::size_t i = 0; i < c.points.size(); ++i) m += c.probs[i] * c.points[i];
  return m;
}

double average_energy(const DiscreteConstellation& c) {
  double e = 0;
  for (std::size_t i = 0; i < c.points.size(); ++i)
    e += c.probs[i] * c.points[i] * c.points[i];
  return e;
}

DiscreteConstellation sum_set(double hx, const DiscreteConstellation& x,
                              double hy, const DiscreteConstellation& y,
                              double merge_tol) {
  validate(x);
  validate(y);
  std::size_t k = x.points.size() * y.points.size();
  if (k > 50'000'000) throw std::invalid_argument("sum_set: product constellation too large");
  std::vector<std::pair<double, double>> pts;
  pts.reserve(k);
  double vmax = 0;
  for (std::size_t i = 0; i < x.points.size(); ++i)
    for (std::size_t j = 0; j < y.points.size(); ++j) {
      double v = hx * x.points[i] + hy * y.points[j];
      pts.emplace_back(v, x.probs[i] * y.probs[j]);
      vmax = std::max(vmax, std::abs(v));
    }
  if (merge_tol < 0) merge_tol = 1e-9 * vmax;
  return merge_sorted(pts, merge_tol);
}

double exact_min_distance(const DiscreteConstellation& c) {
  if (c.points.size() < 2)
    throw std::invalid_argument("exact_min_distance: singleton has no minimum distance");
  double d = c.points[1] - c.points[0];
  for (std::size_t i = 2; i < c.points.size(); ++i)
    d = std::min(d, c.points[i] - c.points[i - 1]);
  return d;
}

std::vector<std::pair<double, double>> distance_spectrum(
    const DiscreteConstellation& c) {
  validate(c);
  std::vector<std::pair<double, double>> out;
  out.reserve(c.points.size() * c.points.size());
  for (std::size_t i = 0; i < c.points.size(); ++i)
    for (std::size_t j = 0; j < c.points.size(); ++j) {
      double d = c.points[i] - c.points[j];
      out.emplace_back(c.probs[i] * c.probs[j], d * d);
    }
  return out;
}

}  // namespace tinnots
