#include "doctest.h"

#include "tinnots/common.hpp"
#include "tinnots/constellation.hpp"
#include "tinnots/mi_bounds.hpp"
#include "tinnots/montecarlo.hpp"
#include "tinnots/regions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

using namespace tinnots;
namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kE = std::numbers::e;

bool inside(const RateRegion& outer, double r1, double r2, double tol) {
  for (const auto& h : outer.halfspaces)
    if (h.a1 * r1 + h.a2 * r2 > h.b + tol) return false;
  return true;
}
}  // namespace

TEST_CASE("is_symmetric compares cross pairs with relative tolerance") {
  CHECK(ChannelGains::symmetric(10.0, 2.0).is_symmetric());
  ChannelGains g{10.0, 2.0, 2.0 * (1 + 1e-12), 10.0};
  CHECK(g.is_symmetric());
  ChannelGains h{10.0, 2.0, 3.0, 10.0};
  CHECK_FALSE(h.is_symmetric());
}

TEST_CASE("symmetric classification hits the documented cells") {
  CHECK(classify_symmetric(10.0, 200.0) == Regime::VeryStrong);
  CHECK(classify_symmetric(10.0, 110.0) == Regime::VeryStrong);  // boundary
  CHECK(classify_symmetric(100.0, 5.0) == Regime::VeryWeak);
  CHECK(classify_symmetric(100.0, 300.0) == Regime::Strong);
  CHECK(classify_symmetric(2.0, 1.5) == Regime::TdmaBand);  // S <= 1+I
  const double snr = 1000.0;
  CHECK(classify_symmetric(snr, std::pow(snr, 0.75)) == Regime::Weak1);
  CHECK(classify_symmetric(400.0, std::pow(400.0, 0.61)) == Regime::Weak2);
}

TEST_CASE("classification is a partition over a random grid") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> db(-5.0, 55.0);
  for (int i = 0; i < 3000; ++i) {
    const double snr = db_to_linear(db(rng)), inr = db_to_linear(db(rng));
    Regime r = classify_symmetric(snr, inr);
    const double sp = snr / (1 + inr);
    switch (r) {
      case Regime::VeryStrong:
        CHECK(inr >= snr * (1 + snr) * (1 - 1e-12));
        break;
      case Regime::Strong:
        CHECK(inr > snr);
        CHECK(inr < snr * (1 + snr) * (1 + 1e-12));
        break;
      case Regime::VeryWeak:
        CHECK(snr >= inr * (1 + inr) * (1 - 1e-12));
        break;
      case Regime::TdmaBand:
        CHECK(snr <= 1 + inr + 1e-12);
        CHECK(snr <= inr * (1 + inr));
        break;
      case Regime::Weak1:
        CHECK((1 + snr) * (1 + sp) <= (1 + inr + sp) * (1 + inr + sp) * (1 + 1e-12));
        break;
      case Regime::Weak2:
        CHECK((1 + snr) * (1 + sp) > (1 + inr + sp) * (1 + inr + sp) * (1 - 1e-12));
        break;
      default:
        CHECK(false);
    }
    CHECK(classify_general(ChannelGains::symmetric(snr, inr)) == r);
  }
}

TEST_CASE("outer region collapses to the origin with zero gains") {
  auto r = outer_region(ChannelGains::symmetric(0.0, 0.0));
  REQUIRE(r.corners.size() == 1);
  CHECK(r.corners[0].first == 0.0);
  CHECK(r.corners[0].second == 0.0);
}

TEST_CASE("very strong outer region is the capacity rectangle") {
  auto r = outer_region(ChannelGains::symmetric(10.0, 200.0));
  REQUIRE(r.corners.size() == 3);
  const double c = ig(10.0);
  CHECK(r.corners.front().first == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(r.corners.front().second == doctest::Approx(c).epsilon(1e-12));
  CHECK(r.corners[1].first == doctest::Approx(c).epsilon(1e-12));
  CHECK(r.corners[1].second == doctest::Approx(c).epsilon(1e-12));
  CHECK(r.corners.back().first == doctest::Approx(c).epsilon(1e-12));
  CHECK(r.corners.back().second == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("outer corners sit on the boundary and inside every face") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> db(0.0, 50.0);
  for (int i = 0; i < 200; ++i) {
    auto g = ChannelGains::symmetric(db_to_linear(db(rng)),
                                     db_to_linear(db(rng)));
    auto outer = outer_region(g);
    for (auto& [r1, r2] : outer.corners) {
      CHECK(inside(outer, r1, r2, 1e-9));
      if (r1 > 1e-9 && r2 > 1e-9) {
        bool tight = false;  // interior corners must touch some face
        for (const auto& h : outer.halfspaces)
          if (std::abs(h.a1 * r1 + h.a2 * r2 - h.b) <= 1e-9) tight = true;
        CHECK(tight);
      }
    }
    // corners are sorted by increasing R1, decreasing R2, no dominated pairs
    for (std::size_t k = 1; k < outer.corners.size(); ++k) {
      CHECK(outer.corners[k].first >= outer.corners[k - 1].first - 1e-12);
      CHECK(outer.corners[k].second <= outer.corners[k - 1].second + 1e-12);
    }
  }
}

TEST_CASE("strong-regime outer sum face matches the compound expression") {
  const double snr = 1000.0;
  const double inr = std::pow(snr, 1.49);
  auto outer = outer_region(ChannelGains::symmetric(snr, inr));
  CHECK(ig(snr) == doctest::Approx(4.9836).epsilon(1e-4));
  double best_sum = 1e300;
  for (const auto& h : outer.halfspaces)
    if (h.a1 == 1 && h.a2 == 1) best_sum = std::min(best_sum, h.b);
  CHECK(best_sum == doctest::Approx(ig(snr + inr)).epsilon(1e-12));
}

TEST_CASE("pure Gaussian inputs achieve the closed-form TIN pair") {
  auto g = ChannelGains::symmetric(40.0, 3.0);
  auto [r1, r2] = inner_rate_pair(g, {1, 1, 1.0, 1.0}, DminPolicy::exact());
  CHECK(r1 == doctest::Approx(ig(10.0)).epsilon(1e-12));
  CHECK(r2 == doctest::Approx(ig(10.0)).epsilon(1e-12));
}

TEST_CASE("discrete-only very strong rate matches the chain evaluated by hand") {
  auto g = ChannelGains::symmetric(10.0, 200.0);
  MixedInputParams p{3, 3, 0.0, 0.0};
  const double dmin_sq = 10.0 * 12.0 / 8.0;
  const double expect = std::log2(9.0) - 0.5 * std::log2(2 * kPi * kE / 12) -
                        0.5 * std::log2(1 + 12.0 / dmin_sq) - std::log2(3.0);
  for (auto policy : {DminPolicy::exact(), DminPolicy::nonoverlap()}) {
    auto [r1, r2] = inner_rate_pair(g, p, policy);
    CHECK(r1 == doctest::Approx(expect).epsilon(1e-12));
    CHECK(r2 == doctest::Approx(expect).epsilon(1e-12));
  }
}

TEST_CASE("a silent interferer reduces to the single-user mixed rate") {
  ChannelGains g{100.0, 0.0, 0.0, 50.0};
  MixedInputParams p{4, 1, 0.25, 1.0};
  auto [r1, r2] = inner_rate_pair(g, p, DminPolicy::exact());
  // receiver 1: discrete layer at power 0.75 over Gaussian-layer noise
  const double sigma_sq = 1 + 100.0 * 0.25;
  auto recv = sum_set(std::sqrt(100.0 * 0.75 / sigma_sq), unit_energy_pam(4),
                      0.0, make_pam({1, 1.0}));
  const double expect = id_bits(recv) + ig(100.0 * 0.25);
  CHECK(r1 == doctest::Approx(expect).epsilon(1e-12));
  CHECK(r2 == doctest::Approx(ig(50.0)).epsilon(1e-12));
}

TEST_CASE("non-overlap policy rejects an overlapping configuration") {
  auto g = ChannelGains::symmetric(100.0, 5.0);  // weak interference
  MixedInputParams p{8, 8, 0.0, 0.0};
  CHECK_THROWS_AS(inner_rate_pair(g, p, DminPolicy::nonoverlap()),
                  precondition_error);
  CHECK_NOTHROW(inner_rate_pair(g, p, DminPolicy::exact()));
  CHECK_NOTHROW(inner_rate_pair(g, p, DminPolicy::outage(0.5)));
}

TEST_CASE("regime_params reproduces the documented point counts") {
  auto vs = regime_params(Regime::VeryStrong, 10.0, 200.0, 0.5);
  REQUIRE(vs.size() == 1);
  CHECK(vs[0].n1 == 3);
  CHECK(vs[0].n2 == 3);
  CHECK(vs[0].delta1 == 0.0);
  CHECK(vs[0].delta2 == 0.0);

  auto st = regime_params(Regime::Strong, 100.0, 500.0, 1.0);
  REQUIRE(st.size() >= 1);
  CHECK(st[0].n1 == 10);  // (1+S)^1 - 1 = S, nd(100) = 10

  auto vw = regime_params(Regime::VeryWeak, 100.0, 5.0, 0.3);
  REQUIRE(vw.size() == 2);
  CHECK(vw[0].n1 == 1);
  CHECK(vw[0].n2 == 1);
  CHECK(vw[0].delta1 == doctest::Approx(0.3));
  CHECK(vw[0].delta2 == doctest::Approx(1.0));
  CHECK(vw[1].delta1 == doctest::Approx(1.0));
  CHECK(vw[1].delta2 == doctest::Approx(0.3));

  const double inr = std::pow(1000.0, 0.75);
  auto w1 = regime_params(Regime::Weak1, 1000.0, inr, 0.5);
  for (auto& p : w1) {
    CHECK(p.delta1 <= 1.0 / (1 + inr) * (1 + 1e-9));
    CHECK(p.delta2 <= 1.0 / (1 + inr) * (1 + 1e-9));
  }

  CHECK_THROWS_AS(regime_params(Regime::VeryStrong, 10.0, 200.0, 1.5),
                  std::invalid_argument);
  CHECK_THROWS_AS(regime_params(Regime::VeryStrong, 10.0, 200.0, -0.1),
                  std::invalid_argument);
}

TEST_CASE("achievable region endpoints and nesting under grid refinement") {
  auto g = ChannelGains::symmetric(100.0, 5.0);
  auto coarse = achievable_region(g, 0.5, 17, DminPolicy::exact());
  auto fine = achievable_region(g, 0.5, 65, DminPolicy::exact());
  for (auto& [r1, r2] : coarse.corners) {
    double best = -1e300;
    for (auto& [f1, f2] : fine.corners)
      if (f1 >= r1 - 1e-12) best = std::max(best, f2);
    CHECK(best >= r2 - 1e-12);
  }

  CHECK_THROWS_AS(achievable_region(g, 0.5, 1, DminPolicy::exact()),
                  std::invalid_argument);
  CHECK_THROWS_AS(achievable_region(g, 0.0, 17, DminPolicy::outage(0.5)),
                  std::invalid_argument);
  ChannelGains asym{10.0, 1.0, 2.0, 10.0};
  CHECK_THROWS_AS(achievable_region(asym, 0.5, 17, DminPolicy::exact()),
                  std::invalid_argument);
}

TEST_CASE("very weak achieved region recovers power control") {
  const double snr = 100.0, inr = 5.0;
  auto g = ChannelGains::symmetric(snr, inr);
  auto inner = achievable_region(g, 0.5, 4097, DminPolicy::exact());
  // the t = 1 point of both families is full power on both users
  double best = -1e300;
  for (auto& [r1, r2] : inner.corners)
    if (r1 >= ig(snr / (1 + inr)) - 1e-9) best = std::max(best, r2);
  CHECK(best == doctest::Approx(ig(snr / (1 + inr))).epsilon(1e-9));
  // a mid-curve sample: delta1 = 0.25 exactly on the 4097 grid
  bool found = false;
  for (auto& [r1, r2] : inner.corners) {
    if (std::abs(r1 - ig(snr * 0.25 / (1 + inr))) < 1e-9 &&
        std::abs(r2 - ig(snr / (1 + inr * 0.25))) < 1e-9)
      found = true;
  }
  CHECK(found);
}

TEST_CASE("trace records skipped parameter vectors without aborting") {
  // strong regime under the non-overlap policy: mid-curve point pairs
  // overlap and must be skipped, endpoint singletons survive
  auto g = ChannelGains::symmetric(100.0, 300.0);
  std::vector<TracePoint> trace;
  auto inner =
      achievable_region(g, 0.5, 17, DminPolicy::nonoverlap(), &trace);
  CHECK(!trace.empty());
  bool any_skip = false, any_ok = false;
  for (auto& tp : trace) {
    if (!tp.ok) {
      any_skip = true;
      CHECK(tp.r1 == 0.0);
      CHECK(tp.r2 == 0.0);
    } else {
      any_ok = true;
    }
  }
  CHECK(any_skip);
  CHECK(any_ok);
  CHECK(!inner.corners.empty());
}

TEST_CASE("analytic_gap returns the documented constants") {
  CHECK(analytic_gap(Regime::VeryStrong, 10.0, 200.0, 1.0) ==
        doctest::Approx(0.5 * std::log2(2 * kPi * kE / 3)).epsilon(1e-12));
  CHECK(analytic_gap(Regime::VeryWeak, 100.0, 5.0, 1.0) ==
        doctest::Approx(0.5).epsilon(1e-12));
  const double w2 = 0.5 * std::log2(608 * kPi * kE / 27);
  CHECK(analytic_gap(Regime::Weak2, 400.0, std::pow(400.0, 0.61), 1.0) ==
        doctest::Approx(w2).epsilon(1e-12));
  CHECK(w2 == doctest::Approx(3.7936).epsilon(1e-4));

  const double snr = 1000.0, inr = 3000.0, gamma = 0.5;
  const double growth = std::min(snr, inr);
  const double expect =
      0.5 * std::log2(2 * kPi * kE / 3) +
      0.5 * std::log2(1 + 8 * std::pow(1 + 0.5 * std::log1p(growth), 2) /
                              (gamma * gamma));
  CHECK(analytic_gap(Regime::Strong, snr, inr, gamma) ==
        doctest::Approx(expect).epsilon(1e-12));

  CHECK_THROWS_AS(analytic_gap(Regime::VeryStrong, 10.0, 200.0, 0.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(analytic_gap(Regime::AsymMixed, 10.0, 5.0, 0.5),
                  std::invalid_argument);
}

TEST_CASE("numeric_gap measures the worst per-corner shift") {
  RateRegion outer;
  outer.corners = {{0.0, 2.0}, {1.0, 1.5}, {2.0, 0.0}};
  RateRegion inner;
  inner.corners = outer.corners;
  CHECK(numeric_gap(inner, outer) == doctest::Approx(0.0).epsilon(1e-12));
  RateRegion shifted;
  for (auto& [r1, r2] : outer.corners)
    shifted.corners.emplace_back(std::max(r1 - 0.5, 0.0),
                                 std::max(r2 - 0.5, 0.0));
  CHECK(numeric_gap(shifted, outer) == doctest::Approx(0.5).epsilon(1e-12));
  RateRegion empty;
  CHECK(numeric_gap(empty, outer) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("very strong numeric gap stays below the analytic constant") {
  auto g = ChannelGains::symmetric(10.0, 200.0);
  auto inner = achievable_region(g, 1.0, 2, DminPolicy::nonoverlap());
  const double gap = numeric_gap(inner, outer_region(g));
  CHECK(gap <= analytic_gap(Regime::VeryStrong, 10.0, 200.0, 1.0) + 1e-9);
}

TEST_CASE("constant-gap regimes meet their certificates on random draws") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> db(10.0, 45.0);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  int done_vs = 0, done_vw = 0, done_w2 = 0;
  while (done_vs < 30 || done_vw < 30 || done_w2 < 30) {
    const double snr = db_to_linear(db(rng));
    const double pick = u01(rng);
    double inr;
    if (pick < 0.34) {
      inr = snr * (1 + snr) * (1 + 3 * u01(rng));
    } else if (pick < 0.67) {
      const double imax = (-1 + std::sqrt(1 + 4 * snr)) / 2;
      inr = imax * std::pow(10.0, -2.0 * u01(rng));
    } else {
      inr = std::pow(snr, 0.55 + 0.12 * u01(rng));
    }
    Regime r = classify_symmetric(snr, inr);
    DminPolicy policy = DminPolicy::exact();
    int grid = 65;
    if (r == Regime::VeryStrong) {
      if (done_vs >= 30) continue;
      ++done_vs;
      policy = DminPolicy::nonoverlap();
      grid = 2;
    } else if (r == Regime::VeryWeak) {
      if (done_vw >= 30) continue;
      ++done_vw;
      grid = 4097;
    } else if (r == Regime::Weak2) {
      if (done_w2 >= 30) continue;
      ++done_w2;
    } else {
      continue;
    }
    auto g = ChannelGains::symmetric(snr, inr);
    auto inner = achievable_region(g, 1.0, grid, policy);
    const double gap = numeric_gap(inner, outer_region(g));
    const double budget = analytic_gap(r, snr, inr, 1.0);
    CHECK(gap <= budget + 2e-2);  // grid discretization slack
  }
}

TEST_CASE("achieved staircases stay inside the outer region") {
  std::mt19937_64 rng(37);
  std::uniform_real_distribution<double> db(0.0, 50.0);
  for (int i = 0; i < 60; ++i) {
    const double snr = db_to_linear(db(rng)), inr = db_to_linear(db(rng));
    auto g = ChannelGains::symmetric(snr, inr);
    auto inner = achievable_region(g, 0.5, 33, DminPolicy::exact());
    auto outer = outer_region(g);
    for (auto& [r1, r2] : inner.corners) CHECK(inside(outer, r1, r2, 1e-6));
  }
}

TEST_CASE("achieved rates stay below sampled mutual information") {
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> db(5.0, 40.0);
  McConfig cfg;
  cfg.samples = 20000;
  int checked = 0;
  while (checked < 6) {
    const double snr = db_to_linear(db(rng)), inr = db_to_linear(db(rng));
    auto g = ChannelGains::symmetric(snr, inr);
    std::vector<TracePoint> trace;
    achievable_region(g, 0.5, 5, DminPolicy::exact(), &trace);
    for (auto& tp : trace) {
      if (!tp.ok || tp.params.n1 * tp.params.n2 > 64) continue;
      cfg.stream_id = 1000 + checked;
      auto est1 = mi_mixed_input(g, tp.params, 1, cfg);
      cfg.stream_id = 2000 + checked;
      auto est2 = mi_mixed_input(g, tp.params, 2, cfg);
      CHECK(tp.r1 <= est1.value + 3 * est1.std_error);
      CHECK(tp.r2 <= est2.value + 3 * est2.std_error);
      ++checked;
      break;
    }
  }
}

TEST_CASE("asymmetric gap certificates per regime") {
  // strictly very strong asymmetric gains
  ChannelGains vs{10.0, 500.0, 400.0, 8.0};
  auto rep = asym_gap(vs, 0.5);
  CHECK(rep.regime == Regime::AsymVeryStrong);
  const double beta = 0.8277;
  CHECK(rep.analytic_gap_bits ==
        doctest::Approx(0.5 * std::log2((2 * kPi * kE / 3) * (1 + beta) / beta))
            .epsilon(1e-4));
  CHECK(rep.analytic_gap_bits == doctest::Approx(1.8260).epsilon(1e-3));
  CHECK(rep.numeric_gap_bits >= 0.0);

  // symmetric very strong gains agree with the symmetric classifier
  auto rep2 = asym_gap(ChannelGains::symmetric(10.0, 200.0), 0.5);
  CHECK(rep2.regime == Regime::AsymVeryStrong);

  // inside the excluded band nothing is certified
  ChannelGains ex{100.0, 10.0, 10.0, 90.0};
  auto rep3 = asym_gap(ex, 0.5);
  CHECK(rep3.regime == Regime::AsymExcluded);
  CHECK(std::isnan(rep3.analytic_gap_bits));
  CHECK(std::isnan(rep3.numeric_gap_bits));
  CHECK(rep3.params_trace.empty());

  // very weak asymmetric gains carry the half-bit constant
  ChannelGains vw{100.0, 0.05, 0.04, 90.0};
  auto rep4 = asym_gap(vw, 0.5);
  CHECK(rep4.regime == Regime::AsymVeryWeak);
  CHECK(rep4.analytic_gap_bits == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(rep4.numeric_gap_bits <= 0.5 + 2e-2);

  CHECK_THROWS_AS(asym_gap(vs, 0.0), std::invalid_argument);
}

TEST_CASE("gdof trace trends toward zero and rejects bad input") {
  auto tr = gdof_trace(2.5, {20.0, 40.0, 60.0});
  REQUIRE(tr.size() == 3);
  CHECK(tr[2].second < tr[0].second);
  CHECK(tr[2].second < 0.1);
  // alpha = 0 pins I = 1; the absolute gap saturates so the normalized
  // sequence decays like 1/log S
  auto flat = gdof_trace(0.0, {20.0, 60.0});
  CHECK(flat[1].second < flat[0].second);
  CHECK(flat[1].second < 0.1);
  CHECK_THROWS_AS(gdof_trace(-0.5, {20.0}), std::invalid_argument);
  CHECK_THROWS_AS(gdof_trace(1.0, {20.0, 20.0}), std::invalid_argument);
}

TEST_CASE("weak outer corners lie on the outer boundary") {
  for (auto [snr, inr] : {std::pair{100.0, 20.0}, {1000.0, 31.6},
                          {5000.0, 80.0}}) {
    auto corners = weak_outer_corners(snr, inr);
    auto outer = outer_region(ChannelGains::symmetric(snr, inr));
    const auto [a1, a2] = corners[0];
    const auto [d1, d2] = corners[3];
    // swap symmetry of the outer pair
    CHECK(a1 == doctest::Approx(d2).epsilon(1e-12));
    CHECK(a2 == doctest::Approx(d1).epsilon(1e-12));
    CHECK(corners[1].first == doctest::Approx(corners[2].second).epsilon(1e-12));
    for (auto& [r1, r2] : corners) {
      CHECK(inside(outer, r1, r2, 1e-9));
      bool tight = false;
      for (const auto& h : outer.halfspaces)
        if (std::abs(h.a1 * r1 + h.a2 * r2 - h.b) <= 1e-9) tight = true;
      CHECK(tight);
    }
  }
}

TEST_CASE("weak corner vertical offset peaks around 0.5537 bits") {
  const double inr = std::sqrt(3.0) + 1;
  double cmax = 0;
  for (double snr = inr; snr <= inr * (1 + inr); snr += 0.001) {
    auto corners = weak_outer_corners(snr, inr);
    cmax = std::max(cmax, corners[0].second);
  }
  CHECK(cmax <= 0.5537 + 1e-3);
  CHECK(cmax == doctest::Approx(0.5537).epsilon(2e-3));
  CHECK_THROWS_AS(weak_outer_corners(10.0, 200.0), precondition_error);
}
