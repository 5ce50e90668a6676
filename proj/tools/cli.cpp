#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tinnots/common.hpp"
#include "tinnots/constellation.hpp"
#include "tinnots/mi_bounds.hpp"
#include "tinnots/montecarlo.hpp"
#include "tinnots/regions.hpp"
#include "tinnots/sumset_geometry.hpp"

namespace tinnots {
namespace {

using json = nlohmann::ordered_json;

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();
// Sum-sets larger than this skip the per-point DTD and MC re-evaluations in
// the region command; the analytic family is always emitted.
constexpr long long kMaxDenseSumset = 5000;

std::string fmt_g(double v) {
  if (std::isnan(v)) return "";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string fmt_i(long long v) { return std::to_string(v); }

class Csv {
 public:
  explicit Csv(const std::vector<std::string>& header) { line(header); }
  void line(const std::vector<std::string>& cells) {
    std::string row;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) row += ',';
      row += cells[i];
    }
    row += "\r\n";
    body_ += row;
  }
  const std::string& str() const { return body_; }

 private:
  std::string body_;
};

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output path: " + path);
  f << content;
  f.flush();
  if (!f) throw std::runtime_error("write failed: " + path);
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

double pos(double x) { return x > 0 ? x : 0.0; }

DminPolicy parse_policy(const std::string& name, double gamma) {
  if (name == "exact") return DminPolicy::exact();
  if (name == "prop2" || name == "nonoverlap") return DminPolicy::nonoverlap();
  if (name == "prop3" || name == "outage") return DminPolicy::outage(gamma);
  throw std::invalid_argument("unknown policy: " + name);
}

Weak2Variant parse_variant(const std::string& name) {
  if (name == "constant_gap") return Weak2Variant::ConstantGap;
  if (name == "loglog") return Weak2Variant::LogLog;
  throw std::invalid_argument("unknown weak2 variant: " + name);
}

// 1/log2(min(S, I)) clamped to (0, 1]; the shrinking outage budget used for
// the gDoF trend.
double auto_gamma(double snr, double inr) {
  double g = 1.0 / std::log2(std::min(snr, inr));
  if (!(g > 0) || g > 1) g = 1.0;
  return g;
}

std::vector<double> expand_grid(std::vector<double> list,
                                const std::vector<double>& range,
                                const char* what) {
  if (!range.empty()) {
    if (range.size() != 3 || !(range[2] > 0) || range[1] < range[0])
      throw std::invalid_argument(std::string(what) +
                                  ": range must be MIN MAX STEP with STEP > 0");
    for (double v = range[0]; v <= range[1] + 1e-9; v += range[2])
      list.push_back(v);
  }
  if (list.empty())
    throw std::invalid_argument(std::string(what) + ": empty grid");
  return list;
}

DiscreteConstellation scale_points(const DiscreteConstellation& c,
                                   double gain) {
  return sum_set(gain, c, 0.0, unit_energy_pam_or_point(1), 0.0);
}

// The TIN mixed-input rate of one receiver with the discrete part bounded by
// the full pairwise-distance lower bound instead of the minimum-distance one.
double dtd_receiver_rate(double hown_sq, double hcross_sq, double down,
                         double dcross, const DiscreteConstellation& xo,
                         const DiscreteConstellation& xc, int ncross) {
  const double sigma_sq = 1.0 + hown_sq * down + hcross_sq * dcross;
  const double a = std::sqrt(hown_sq * (1 - down) / sigma_sq);
  const double b = std::sqrt(hcross_sq * (1 - dcross) / sigma_sq);
  DiscreteConstellation s = sum_set(a, xo, b, xc);
  const double id_term = s.points.size() > 1 ? dtd_full_lower(s).value : 0.0;
  const double gauss_term = ig(hown_sq * down / (1.0 + hcross_sq * dcross));
  const double cross_term =
      std::min(std::log2(static_cast<double>(ncross)),
               ig(hcross_sq * (1 - dcross) / (1.0 + hcross_sq * dcross)));
  return pos(id_term + gauss_term - cross_term);
}

std::pair<double, double> dtd_rate_pair(const ChannelGains& g,
                                        const MixedInputParams& p) {
  DiscreteConstellation x1 = unit_energy_pam_or_point(p.n1);
  DiscreteConstellation x2 = unit_energy_pam_or_point(p.n2);
  return {dtd_receiver_rate(g.h11_sq, g.h12_sq, p.delta1, p.delta2, x1, x2,
                            p.n2),
          dtd_receiver_rate(g.h22_sq, g.h21_sq, p.delta2, p.delta1, x2, x1,
                            p.n1)};
}

struct CommonOut {
  std::string format = "csv";
  std::string out = "-";
};

void add_common(CLI::App* cmd, CommonOut& o) {
  cmd->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd->add_option("--out", o.out, "output path ('-' for stdout)")
      ->capture_default_str();
}

// bounds ------------------------------------------------------------------

int cmd_bounds(const std::vector<double>& snr_db, int n_forced,
               long long samples, unsigned long long seed,
               const CommonOut& o) {
  Csv csv({"snr_db", "n_count", "capacity_bits", "owb_bits", "owa_bits",
           "dtd_simple_bits", "dtd_simple_n_count", "dtd_full_bits", "mc_bits",
           "mc_se_bits"});
  json rows = json::array();

  for (std::size_t i = 0; i < snr_db.size(); ++i) {
    const double sdb = snr_db[i];
    const double snr = db_to_linear(sdb);
    const int n = n_forced > 0 ? n_forced : nd(snr);
    const double root = std::sqrt(snr);
    DiscreteConstellation recv =
        scale_points(unit_energy_pam_or_point(n), root);
    const bool single = recv.points.size() == 1;
    const double capacity = ig(snr);
    const double owb = single ? 0.0 : ow_b_lower(recv).value;
    const double owa = single ? 0.0 : ow_a_lower(recv).value;
    const double dtdf = single ? 0.0 : dtd_full_lower(recv).value;

    int n_eps = n;
    if (n_forced <= 0 && std::log(snr) > 6.0)
      n_eps = nd(6.0 * snr / std::log(snr));
    DiscreteConstellation recv_eps =
        n_eps == n ? recv : scale_points(unit_energy_pam_or_point(n_eps), root);
    const double dtds =
        recv_eps.points.size() > 1 ? dtd_simple_lower(recv_eps).value : 0.0;

    double mc = kNan, mc_se = kNan;
    if (samples > 0) {
      McConfig cfg;
      cfg.samples = static_cast<std::size_t>(samples);
      cfg.seed = seed;
      cfg.stream_id = i;
      McEstimate est =
          mi_awgn_mixture(unit_energy_pam_or_point(n), 0.0, root, cfg);
      mc = est.value;
      mc_se = est.std_error;
    }

    csv.line({fmt_g(sdb), fmt_i(n), fmt_g(capacity), fmt_g(owb), fmt_g(owa),
              fmt_g(dtds), fmt_i(n_eps), fmt_g(dtdf), fmt_g(mc),
              fmt_g(mc_se)});
    rows.push_back({{"snr_db", sdb},
                    {"n_count", n},
                    {"capacity_bits", capacity},
                    {"owb_bits", owb},
                    {"owa_bits", owa},
                    {"dtd_simple_bits", dtds},
                    {"dtd_simple_n_count", n_eps},
                    {"dtd_full_bits", dtdf},
                    {"mc_bits", mc},
                    {"mc_se_bits", mc_se}});
  }

  if (o.format == "json") {
    json j{{"schema_version", 1},
           {"command", "bounds"},
           {"params", {{"samples", samples}, {"seed", seed}}},
           {"rows", rows}};
    write_output(o.out, dump_json(j));
  } else {
    write_output(o.out, csv.str());
  }
  return 0;
}

// region ------------------------------------------------------------------

int cmd_region(double snr_db, double inr_db, double alpha, bool has_alpha,
               double gamma, bool gamma_auto, int t_grid,
               const std::string& policy_str, const std::string& variant_str,
               long long samples, unsigned long long seed,
               const CommonOut& o) {
  const double snr = db_to_linear(snr_db);
  const double inr = has_alpha ? std::pow(snr, alpha) : db_to_linear(inr_db);
  const ChannelGains g = ChannelGains::symmetric(snr, inr);
  const double gm = gamma_auto ? auto_gamma(snr, inr) : gamma;
  const DminPolicy policy = parse_policy(policy_str, gm);
  const Weak2Variant variant = parse_variant(variant_str);
  const Regime regime = classify_symmetric(snr, inr);

  std::vector<TracePoint> trace;
  RateRegion inner =
      achievable_region(g, gm, t_grid, policy, &trace, variant);
  RateRegion outer = outer_region(g);
  const double gap_num = numeric_gap(inner, outer);
  const double gap_ana = analytic_gap(regime, snr, inr, gm);

  // DTD and MC re-evaluations, one per distinct parameter vector.
  using Key = std::tuple<int, int, double, double>;
  struct Dense {
    std::pair<double, double> dtd{kNan, kNan};
    std::pair<double, double> mc{kNan, kNan};
    std::pair<double, double> mc_se{kNan, kNan};
  };
  std::map<Key, Dense> dense;
  std::size_t next_stream = 0;
  for (const TracePoint& tp : trace) {
    if (!tp.ok) continue;
    Key key{tp.params.n1, tp.params.n2, tp.params.delta1, tp.params.delta2};
    if (dense.count(key)) continue;
    Dense d;
    const long long card =
        static_cast<long long>(tp.params.n1) * tp.params.n2;
    if (card <= kMaxDenseSumset) {
      d.dtd = dtd_rate_pair(g, tp.params);
      if (samples > 0) {
        McConfig cfg;
        cfg.samples = static_cast<std::size_t>(samples);
        cfg.seed = seed;
        cfg.stream_id = 2 * next_stream;
        McEstimate e1 = mi_mixed_input(g, tp.params, 1, cfg);
        cfg.stream_id = 2 * next_stream + 1;
        McEstimate e2 = mi_mixed_input(g, tp.params, 2, cfg);
        d.mc = {e1.value, e2.value};
        d.mc_se = {e1.std_error, e2.std_error};
      }
    }
    next_stream++;
    dense.emplace(key, d);
  }

  Csv csv({"kind", "family", "t_frac", "n1_count", "n2_count", "delta1_frac",
           "delta2_frac", "a1_coeff", "a2_coeff", "value_bits", "r1_bits",
           "r2_bits", "r1_se_bits", "r2_se_bits", "ok_flag"});
  auto blank = [&](std::size_t k) { return std::vector<std::string>(k, ""); };
  {
    auto row = blank(15);
    row[0] = "regime";
    row[1] = regime_name(regime);
    csv.line(row);
    row = blank(15);
    row[0] = "gap";
    row[1] = "analytic";
    row[9] = fmt_g(gap_ana);
    csv.line(row);
    row[1] = "numeric";
    row[9] = fmt_g(gap_num);
    csv.line(row);
  }
  for (const Halfspace& h : outer.halfspaces) {
    auto row = blank(15);
    row[0] = "halfspace";
    row[7] = fmt_g(h.a1);
    row[8] = fmt_g(h.a2);
    row[9] = fmt_g(h.b);
    csv.line(row);
  }
  for (const auto& c : outer.corners) {
    auto row = blank(15);
    row[0] = "outer_corner";
    row[10] = fmt_g(c.first);
    row[11] = fmt_g(c.second);
    csv.line(row);
  }
  for (const auto& c : inner.corners) {
    auto row = blank(15);
    row[0] = "inner_corner";
    row[1] = "owb";
    row[10] = fmt_g(c.first);
    row[11] = fmt_g(c.second);
    csv.line(row);
  }

  json jtrace = json::array();
  for (const TracePoint& tp : trace) {
    auto row = blank(15);
    row[0] = "trace";
    row[1] = "owb";
    row[2] = fmt_g(tp.t);
    row[3] = fmt_i(tp.params.n1);
    row[4] = fmt_i(tp.params.n2);
    row[5] = fmt_g(tp.params.delta1);
    row[6] = fmt_g(tp.params.delta2);
    row[10] = tp.ok ? fmt_g(tp.r1) : "";
    row[11] = tp.ok ? fmt_g(tp.r2) : "";
    row[14] = tp.ok ? "1" : "0";
    csv.line(row);

    json jt{{"t", tp.t},
            {"n1", tp.params.n1},
            {"n2", tp.params.n2},
            {"delta1", tp.params.delta1},
            {"delta2", tp.params.delta2},
            {"ok", tp.ok},
            {"r1_owb_bits", tp.ok ? json(tp.r1) : json(nullptr)},
            {"r2_owb_bits", tp.ok ? json(tp.r2) : json(nullptr)}};
    if (tp.ok) {
      Key key{tp.params.n1, tp.params.n2, tp.params.delta1, tp.params.delta2};
      const Dense& d = dense.at(key);
      if (!std::isnan(d.dtd.first)) {
        row[1] = "dtd_full";
        row[10] = fmt_g(d.dtd.first);
        row[11] = fmt_g(d.dtd.second);
        row[12] = row[13] = "";
        csv.line(row);
      }
      if (!std::isnan(d.mc.first)) {
        row[1] = "mc";
        row[10] = fmt_g(d.mc.first);
        row[11] = fmt_g(d.mc.second);
        row[12] = fmt_g(d.mc_se.first);
        row[13] = fmt_g(d.mc_se.second);
        csv.line(row);
      }
      jt["r1_dtd_bits"] = std::isnan(d.dtd.first) ? json(nullptr) : json(d.dtd.first);
      jt["r2_dtd_bits"] = std::isnan(d.dtd.second) ? json(nullptr) : json(d.dtd.second);
      jt["r1_mc_bits"] = std::isnan(d.mc.first) ? json(nullptr) : json(d.mc.first);
      jt["r2_mc_bits"] = std::isnan(d.mc.second) ? json(nullptr) : json(d.mc.second);
      jt["r1_mc_se_bits"] = std::isnan(d.mc_se.first) ? json(nullptr) : json(d.mc_se.first);
      jt["r2_mc_se_bits"] = std::isnan(d.mc_se.second) ? json(nullptr) : json(d.mc_se.second);
    }
    jtrace.push_back(jt);
  }

  if (o.format == "json") {
    json jouter{{"halfspaces", json::array()}, {"corners", json::array()}};
    for (const Halfspace& h : outer.halfspaces)
      jouter["halfspaces"].push_back({h.a1, h.a2, h.b});
    for (const auto& c : outer.corners)
      jouter["corners"].push_back({c.first, c.second});
    json jinner{{"corners", json::array()}};
    for (const auto& c : inner.corners)
      jinner["corners"].push_back({c.first, c.second});
    json j{{"schema_version", 1},
           {"command", "region"},
           {"params",
            {{"snr_db", snr_db},
             {"inr_db", linear_to_db(inr)},
             {"alpha", has_alpha ? json(alpha) : json(nullptr)},
             {"gamma", gm},
             {"t_grid", t_grid},
             {"policy", policy_str},
             {"weak2_variant", variant_str},
             {"samples", samples},
             {"seed", seed}}},
           {"regime", regime_name(regime)},
           {"analytic_gap_bits", gap_ana},
           {"numeric_gap_bits", gap_num},
           {"outer", jouter},
           {"inner", jinner},
           {"trace", jtrace}};
    write_output(o.out, dump_json(j));
  } else {
    write_output(o.out, csv.str());
  }
  return 0;
}

// gap-sweep ---------------------------------------------------------------

int cmd_gap_sweep(const std::vector<double>& snr_db,
                  const std::vector<double>& alphas,
                  const std::vector<double>& inr_db, double gamma,
                  bool gamma_auto, int t_grid, const std::string& policy_str,
                  const std::string& variant_str, const CommonOut& o) {
  const bool by_alpha = !alphas.empty();
  const Weak2Variant variant = parse_variant(variant_str);
  Csv csv({"snr_db", "alpha", "inr_db", "regime", "gamma_frac",
           "analytic_gap_bits", "numeric_gap_bits", "normalized_gap_frac"});
  json rows = json::array();

  for (double sdb : snr_db) {
    const double snr = db_to_linear(sdb);
    const std::vector<double>& cols = by_alpha ? alphas : inr_db;
    for (double col : cols) {
      const double inr = by_alpha ? std::pow(snr, col) : db_to_linear(col);
      double alpha_out = kNan;
      if (by_alpha)
        alpha_out = col;
      else if (snr > 0 && snr != 1 && inr > 0)
        alpha_out = std::log(inr) / std::log(snr);
      const double gm = gamma_auto ? auto_gamma(snr, inr) : gamma;
      const Regime regime = classify_symmetric(snr, inr);
      const ChannelGains g = ChannelGains::symmetric(snr, inr);
      const DminPolicy policy = parse_policy(policy_str, gm);
      RateRegion inner =
          achievable_region(g, gm, t_grid, policy, nullptr, variant);
      const double gap_num = numeric_gap(inner, outer_region(g));
      const double gap_ana = analytic_gap(regime, snr, inr, gm);
      const double norm = ig(snr) > 0 ? gap_num / ig(snr) : kNan;
      csv.line({fmt_g(sdb), fmt_g(alpha_out), fmt_g(linear_to_db(inr)),
                regime_name(regime), fmt_g(gm), fmt_g(gap_ana),
                fmt_g(gap_num), fmt_g(norm)});
      rows.push_back({{"snr_db", sdb},
                      {"alpha", alpha_out},
                      {"inr_db", linear_to_db(inr)},
                      {"regime", regime_name(regime)},
                      {"gamma_frac", gm},
                      {"analytic_gap_bits", gap_ana},
                      {"numeric_gap_bits", gap_num},
                      {"normalized_gap_frac", norm}});
    }
  }

  if (o.format == "json") {
    json j{{"schema_version", 1},
           {"command", "gap-sweep"},
           {"params",
            {{"gamma_auto", gamma_auto},
             {"t_grid", t_grid},
             {"policy", policy_str},
             {"weak2_variant", variant_str}}},
           {"rows", rows}};
    write_output(o.out, dump_json(j));
  } else {
    write_output(o.out, csv.str());
  }
  return 0;
}

// minimum-distance --------------------------------------------------------

int cmd_minimum_distance(double hy, double hx_min, double hx_max,
                         int hx_steps, int nx, double dx, int ny, double dy,
                         const std::vector<double>& gammas,
                         const CommonOut& o) {
  if (hx_steps < 1)
    throw std::invalid_argument("minimum-distance: --hx-steps must be >= 1");
  if (hx_max < hx_min)
    throw std::invalid_argument("minimum-distance: --hx-max < --hx-min");
  DiscreteConstellation x = make_pam({nx, dx});
  DiscreteConstellation y = make_pam({ny, dy});

  Csv csv({"hx_linear", "gamma_frac", "dmin_exact_linear", "nonoverlap_ok_flag",
           "dmin_nonoverlap_linear", "dmin_outage_linear"});
  json rows = json::array();

  for (int i = 0; i < hx_steps; ++i) {
    const double hx =
        hx_steps == 1
            ? hx_min
            : hx_min + (hx_max - hx_min) * static_cast<double>(i) /
                           static_cast<double>(hx_steps - 1);
    DiscreteConstellation ss = sum_set(hx, x, hy, y);
    const double dmin_exact =
        ss.points.size() > 1 ? exact_min_distance(ss) : 0.0;
    const bool novl = nonoverlap_condition(hx, x, hy, y);
    double dmin_novl = kNan;
    if (novl && (x.points.size() > 1 || y.points.size() > 1))
      dmin_novl = nonoverlap_bound(hx, x, hy, y).dmin_lower;
    for (double gamma : gammas) {
      const double dmin_out = outage_bound(hx, x, hy, y, gamma).dmin_lower;
      csv.line({fmt_g(hx), fmt_g(gamma), fmt_g(dmin_exact), novl ? "1" : "0",
                fmt_g(dmin_novl), fmt_g(dmin_out)});
      rows.push_back(
          {{"hx_linear", hx},
           {"gamma_frac", gamma},
           {"dmin_exact_linear", dmin_exact},
           {"nonoverlap_ok_flag", novl},
           {"dmin_nonoverlap_linear",
            std::isnan(dmin_novl) ? json(nullptr) : json(dmin_novl)},
           {"dmin_outage_linear", dmin_out}});
    }
  }

  if (o.format == "json") {
    json j{{"schema_version", 1},
           {"command", "minimum-distance"},
           {"params",
            {{"hy_linear", hy},
             {"nx_count", nx},
             {"dx_linear", dx},
             {"ny_count", ny},
             {"dy_linear", dy}}},
           {"rows", rows}};
    write_output(o.out, dump_json(j));
  } else {
    write_output(o.out, csv.str());
  }
  return 0;
}

// ser ---------------------------------------------------------------------

int cmd_ser(double snr_db, double inr_db, int n_points, long long samples,
            unsigned long long seed, const CommonOut& o) {
  const double snr = db_to_linear(snr_db);
  const double inr = db_to_linear(inr_db);
  McConfig cfg;
  cfg.samples = static_cast<std::size_t>(samples);
  cfg.seed = seed;
  SerModuloResult r = ser_modulo_decoder(snr, inr, n_points, cfg);

  Csv csv({"snr_db", "inr_db", "n_count", "samples_count", "seed", "ser_prob",
           "ser_se_prob", "bound_prob", "ser_if_prob", "ser_if_se_prob"});
  csv.line({fmt_g(snr_db), fmt_g(inr_db), fmt_i(n_points), fmt_i(samples),
            fmt_i(static_cast<long long>(seed)), fmt_g(r.ser),
            fmt_g(r.ser_std_error), fmt_g(r.bound),
            fmt_g(r.ser_interference_free), fmt_g(r.ser_if_std_error)});

  if (o.format == "json") {
    json j{{"schema_version", 1},
           {"command", "ser"},
           {"params",
            {{"snr_db", snr_db},
             {"inr_db", inr_db},
             {"n_count", n_points},
             {"samples_count", samples},
             {"seed", seed}}},
           {"rows",
            json::array({{{"ser_prob", r.ser},
                          {"ser_se_prob", r.ser_std_error},
                          {"bound_prob", r.bound},
                          {"ser_if_prob", r.ser_interference_free},
                          {"ser_if_se_prob", r.ser_if_std_error}}})}};
    write_output(o.out, dump_json(j));
  } else {
    write_output(o.out, csv.str());
  }
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{
      "Rate-region toolbox for the two-user Gaussian interference channel "
      "with discrete-plus-Gaussian inputs and interference treated as noise"};
  app.require_subcommand(1);

  const std::vector<std::string> policy_names{"exact", "prop2", "prop3",
                                              "nonoverlap", "outage"};

  // bounds
  auto* sb = app.add_subcommand(
      "bounds", "point-to-point capacity vs discrete-input bound families");
  std::vector<double> b_snr_list, b_snr_range;
  int b_n = 0;
  long long b_samples = 100000;
  unsigned long long b_seed = 12345;
  CommonOut b_out;
  sb->add_option("--snr-db", b_snr_list, "SNR grid points, dB")->expected(-1);
  sb->add_option("--snr-range", b_snr_range, "MIN MAX STEP sweep, dB")
      ->expected(3);
  sb->add_option("--n-points", b_n,
                 "force the PAM size (default: fitted to each SNR)");
  sb->add_option("--samples", b_samples,
                 "Monte Carlo samples per row (0 disables the MC column)")
      ->capture_default_str();
  sb->add_option("--seed", b_seed, "root RNG seed")->capture_default_str();
  add_common(sb, b_out);

  // region
  auto* sr = app.add_subcommand(
      "region", "outer and achievable rate regions for a symmetric channel");
  double r_snr = 0, r_inr = 0, r_alpha = 0, r_gamma = 0.5;
  bool r_gamma_auto = false;
  int r_tgrid = 33;
  std::string r_policy = "exact", r_variant = "constant_gap";
  long long r_samples = 5000;
  unsigned long long r_seed = 12345;
  CommonOut r_out;
  sr->add_option("--snr-db", r_snr, "direct-link SNR, dB")->required();
  auto* opt_inr = sr->add_option("--inr-db", r_inr, "interference INR, dB");
  auto* opt_alpha =
      sr->add_option("--alpha", r_alpha, "interference exponent: INR = SNR^alpha");
  opt_inr->excludes(opt_alpha);
  opt_alpha->excludes(opt_inr);
  sr->add_option("--gamma", r_gamma, "outage measure in (0,1]")
      ->capture_default_str();
  sr->add_flag("--gamma-auto", r_gamma_auto,
               "use 1/log2(min(SNR,INR)) clamped to (0,1]");
  sr->add_option("--t-grid", r_tgrid, "points on the t in [0,1] sweep")
      ->capture_default_str();
  sr->add_option("--policy", r_policy, "minimum-distance policy")
      ->check(CLI::IsMember(policy_names))
      ->capture_default_str();
  sr->add_option("--weak2-variant", r_variant, "weak2 parameter recipe")
      ->check(CLI::IsMember({"constant_gap", "loglog"}))
      ->capture_default_str();
  sr->add_option("--samples", r_samples,
                 "Monte Carlo samples per parameter vector (0 disables)")
      ->capture_default_str();
  sr->add_option("--seed", r_seed, "root RNG seed")->capture_default_str();
  add_common(sr, r_out);

  // gap-sweep
  auto* sg = app.add_subcommand(
      "gap-sweep", "numeric and analytic gap over an (SNR, alpha) grid");
  std::vector<double> g_snr_list, g_snr_range, g_alpha, g_inr;
  double g_gamma = 0.5;
  bool g_gamma_auto = false;
  int g_tgrid = 65;
  std::string g_policy = "exact", g_variant = "constant_gap";
  CommonOut g_out;
  sg->add_option("--snr-db", g_snr_list, "SNR grid points, dB")->expected(-1);
  sg->add_option("--snr-range", g_snr_range, "MIN MAX STEP sweep, dB")
      ->expected(3);
  auto* opt_ga = sg->add_option("--alpha", g_alpha,
                                "interference exponents: INR = SNR^alpha")
                     ->expected(-1);
  auto* opt_gi =
      sg->add_option("--inr-db", g_inr, "INR grid points, dB")->expected(-1);
  opt_ga->excludes(opt_gi);
  opt_gi->excludes(opt_ga);
  sg->add_option("--gamma", g_gamma, "outage measure in (0,1]")
      ->capture_default_str();
  sg->add_flag("--gamma-auto", g_gamma_auto,
               "use 1/log2(min(SNR,INR)) clamped to (0,1]");
  sg->add_option("--t-grid", g_tgrid, "points on the t in [0,1] sweep")
      ->capture_default_str();
  sg->add_option("--policy", g_policy, "minimum-distance policy")
      ->check(CLI::IsMember(policy_names))
      ->capture_default_str();
  sg->add_option("--weak2-variant", g_variant, "weak2 parameter recipe")
      ->check(CLI::IsMember({"constant_gap", "loglog"}))
      ->capture_default_str();
  add_common(sg, g_out);

  // minimum-distance
  auto* sm = app.add_subcommand(
      "minimum-distance",
      "exact sum-set minimum distance vs certified thresholds over a gain "
      "sweep");
  double m_hy = 1.0, m_hx_min = 0.0, m_hx_max = 2.0, m_dx = 1.0, m_dy = 1.0;
  int m_hx_steps = 201, m_nx = 10, m_ny = 10;
  std::vector<double> m_gammas;
  CommonOut m_out;
  sm->add_option("--hy", m_hy, "fixed gain on Y")->capture_default_str();
  sm->add_option("--hx-min", m_hx_min, "sweep start for the gain on X")
      ->capture_default_str();
  sm->add_option("--hx-max", m_hx_max, "sweep end for the gain on X")
      ->capture_default_str();
  sm->add_option("--hx-steps", m_hx_steps, "sweep point count")
      ->capture_default_str();
  sm->add_option("--nx", m_nx, "X PAM size")->capture_default_str();
  sm->add_option("--dx", m_dx, "X PAM spacing")->capture_default_str();
  sm->add_option("--ny", m_ny, "Y PAM size")->capture_default_str();
  sm->add_option("--dy", m_dy, "Y PAM spacing")->capture_default_str();
  sm->add_option("--gamma", m_gammas, "outage measures (default 0.1 0.3 0.7)")
      ->expected(-1);
  add_common(sm, m_out);

  // ser
  auto* se = app.add_subcommand(
      "ser", "symbol error rate of the modulo receiver against its bound");
  double e_snr = 0, e_inr = 0;
  int e_n = 5;
  long long e_samples = 200000;
  unsigned long long e_seed = 12345;
  CommonOut e_out;
  se->add_option("--snr-db", e_snr, "direct-link SNR, dB")->required();
  se->add_option("--inr-db", e_inr, "interference INR, dB")->required();
  se->add_option("--n-points", e_n, "odd PAM size >= 3")->capture_default_str();
  se->add_option("--samples", e_samples, "Monte Carlo samples")
      ->capture_default_str();
  se->add_option("--seed", e_seed, "root RNG seed")->capture_default_str();
  add_common(se, e_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (sb->parsed())
      return cmd_bounds(expand_grid(b_snr_list, b_snr_range, "bounds"), b_n,
                        b_samples, b_seed, b_out);
    if (sr->parsed()) {
      if (opt_inr->count() == 0 && opt_alpha->count() == 0)
        throw std::invalid_argument("region: give --inr-db or --alpha");
      return cmd_region(r_snr, r_inr, r_alpha, opt_alpha->count() > 0, r_gamma,
                        r_gamma_auto, r_tgrid, r_policy, r_variant, r_samples,
                        r_seed, r_out);
    }
    if (sg->parsed()) {
      if (opt_ga->count() == 0 && opt_gi->count() == 0)
        throw std::invalid_argument("gap-sweep: give --alpha or --inr-db");
      return cmd_gap_sweep(expand_grid(g_snr_list, g_snr_range, "gap-sweep"),
                           g_alpha, g_inr, g_gamma, g_gamma_auto, g_tgrid,
                           g_policy, g_variant, g_out);
    }
    if (sm->parsed()) {
      if (m_gammas.empty()) m_gammas = {0.1, 0.3, 0.7};
      return cmd_minimum_distance(m_hy, m_hx_min, m_hx_max, m_hx_steps, m_nx,
                                  m_dx, m_ny, m_dy, m_gammas, m_out);
    }
    if (se->parsed())
      return cmd_ser(e_snr, e_inr, e_n, e_samples, e_seed, e_out);
  } catch (const precondition_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  }
  return 2;
}

}  // namespace tinnots
