#pragma once
#include <utility>
#include <vector>

namespace tinnots {

// Finite real constellation: sorted support with strictly positive
// probabilities summing to one.
struct DiscreteConstellation {
  std::vector<double> points;  // strictly increasing
  std::vector<double> probs;   // same length, each > 0, sum 1 within 1e-12
};

struct PamSpec {
  int n_points = 1;    // N >= 1
  double d_min = 1.0;  // spacing, > 0
};

// Sorts, merges points that chain within merge_tol of each other (merged
// point = probability-weighted mean, probabilities added), renormalizes the
// probabilities and validates the result.
DiscreteConstellation make_constellation(std::vector<double> points,
                                         std::vector<double> probs,
                                         double merge_tol = 0.0);

void validate(const DiscreteConstellation& c);

// N equally spaced equiprobable zero-mean points with spacing d_min.
DiscreteConstellation make_pam(const PamSpec& spec);

// PAM with d_min = sqrt(12/(N^2-1)), so average energy is 1. Requires N >= 2.
DiscreteConstellation unit_energy_pam(int n_points);

// unit_energy_pam for N >= 2, the single point {0} for N == 1.
DiscreteConstellation unit_energy_pam_or_point(int n_points);

double entropy_bits(const DiscreteConstellation& c);
double mean_value(const DiscreteConstellation& c);
double average_energy(const DiscreteConstellation& c);

// hx*X + hy*Y, all |X||Y| sums enumerated, then merged and sorted.
// merge_tol < 0 selects the default 1e-9 * max|value|.
DiscreteConstellation sum_set(double hx, const DiscreteConstellation& x,
                              double hy, const DiscreteConstellation& y,
                              double merge_tol = -1.0);

// Minimum adjacent gap of the sorted support. Rejects singletons.
double exact_min_distance(const DiscreteConstellation& c);

// (p_i * p_j, (s_i - s_j)^2) for every ordered pair, i == j included.
std::vector<std::pair<double, double>> distance_spectrum(
    const DiscreteConstellation& c);

}  // namespace tinnots
