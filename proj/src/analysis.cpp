#include "tourney/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "tourney/error.hpp"
#include "tourney/loctrans.hpp"
#include "tourney/rng.hpp"

namespace tourney {

double phi_t_w4(double t) {
  if (!(t > 0.0 && t < 1.0)) throw Error(Errc::OutOfDomain, "phi_t is defined on the open interval (0,1)");
  const double s = 1.0 - t;
  return s * s * s * (t + s / 8.0) / (1.0 - t * t * t * t);
}

W4Optimum maximize_phi_t(double tolerance) {
  if (!(tolerance > 0.0)) throw Error(Errc::InvalidArgument, "tolerance must be positive");
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = 0.0;
  double hi = 1.0;
  double c = hi - inv_phi * (hi - lo);
  double d = lo + inv_phi * (hi - lo);
  double fc = phi_t_w4(c);
  double fd = phi_t_w4(d);
  for (int iter = 0; iter < 200 && hi - lo > tolerance; ++iter) {
    if (fc > fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - inv_phi * (hi - lo);
      fc = phi_t_w4(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + inv_phi * (hi - lo);
      fd = phi_t_w4(d);
    }
  }
  const double t = (lo + hi) / 2.0;
  return {t, phi_t_w4(t)};
}

W4Optimum phi_t_closed_form_optimum() {
  const double c13 = std::cbrt(3.0);
  const double c23 = c13 * c13;
  return {(2.0 * c23 - c13 - 2.0) / 5.0, 1.0 + (std::pow(3.0, 5.0 / 3.0) - std::pow(3.0, 7.0 / 3.0)) / 8.0};
}

// ---------------------------------------------------------------------------

namespace {

int128 signed_diff(uint128 a, uint128 b) { return static_cast<int128>(a) - static_cast<int128>(b); }

double abs_ratio(int128 x, long double den) {
  const long double v = static_cast<long double>(x < 0 ? -x : x);
  return static_cast<double>(v / den);
}

}  // namespace

IdentityInputs gather_identity_inputs(const Tournament& t) {
  if (t.order() < 4) throw Error(Errc::OrderTooSmall, "identities need order >= 4");
  IdentityInputs in;
  in.n = t.order();
  in.triples = triple_counts(t);
  in.quads = quad_counts(t);
  const ArcFlagDistributions dists = all_arc_flag_distributions(t);
  for (std::size_t k = 0; k < kAllFlagCombos.size(); ++k) {
    in.arc_sum[k] = dists.by_combo[k].sum();
    in.arc_falling_sum[k] = dists.by_combo[k].sum_falling();
  }
  return in;
}

std::vector<IdentityResidual> evaluate_identities(const IdentityInputs& in) {
  if (in.n < 4) throw Error(Errc::OrderTooSmall, "identities need order >= 4");
  const uint128 n = in.n;
  const uint128 b3 = binomial(in.n, 3);
  const uint128 b4 = binomial(in.n, 4);
  const uint128 pairs = n * (n - 1) / 2;
  const uint128 falling = pairs * (n - 2) * (n - 3);  // arcs x (n-2)(n-3)
  const uint128 tr4 = in.quads.tr4;
  const uint128 r4 = in.quads.r4;

  std::vector<IdentityResidual> out;
  {
    // 4 c3 C(n,4) = C(n,3) (C(n,4) + r4 - tr4)
    const int128 rhs = static_cast<int128>(b3) * (static_cast<int128>(b4) + static_cast<int128>(r4) - static_cast<int128>(tr4));
    const int128 x = static_cast<int128>(4 * static_cast<uint128>(in.triples.c3) * b4) - rhs;
    out.push_back({"chain_rule", x, abs_ratio(x, 4.0L * static_cast<long double>(b3) * static_cast<long double>(b4))});
  }

  // 6 S C(n,4) = K * arcs (n-2)(n-3), with K the 4-density numerator mix times 6
  const std::array<uint128, 6> predicted{tr4, tr4, tr4, r4, 3 * tr4 + r4, tr4 + 3 * r4};
  const long double scale = 6.0L * static_cast<long double>(falling) * static_cast<long double>(b4);
  for (std::size_t k = 0; k < kAllFlagCombos.size(); ++k) {
    const int128 x = signed_diff(6 * in.arc_falling_sum[k] * b4, predicted[k] * falling);
    out.push_back({"fm_" + std::string(flag_name(kAllFlagCombos[k])), x, abs_ratio(x, scale)});
  }

  const std::array<uint128, 4> arc_targets{in.triples.tr3, in.triples.tr3, in.triples.tr3,
                                           3 * static_cast<uint128>(in.triples.c3)};
  for (std::size_t k = 0; k < 4; ++k) {
    const int128 x = signed_diff(in.arc_sum[k], arc_targets[k]);
    out.push_back({"arcsum_" + std::string(flag_name(kAllFlagCombos[k])), x,
                   abs_ratio(x, static_cast<long double>(b3))});
  }
  return out;
}

std::vector<IdentityResidual> identity_suite(const Tournament& t) {
  if (t.order() < 6) throw Error(Errc::OrderTooSmall, "identity suite needs order >= 6, got " + std::to_string(t.order()));
  return evaluate_identities(gather_identity_inputs(t));
}

// ---------------------------------------------------------------------------

const char* to_string(Profile p) noexcept { return p == Profile::Carousel ? "carousel" : "random"; }

Profile parse_profile(const std::string& s) {
  if (s == "carousel") return Profile::Carousel;
  if (s == "random") return Profile::Random;
  throw Error(Errc::InvalidArgument, "unknown profile '" + s + "' (expected carousel or random)");
}

double ReportConfig::threshold(std::size_t n) const {
  return std::max(threshold_floor, threshold_scale / std::sqrt(static_cast<double>(n)));
}

void apply_config_text(ReportConfig& config, const std::string& text) {
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw Error(Errc::InvalidArgument, "config line without '=': " + line);
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    try {
      if (key == "eps") config.eps = std::stod(value);
      else if (key == "delta") config.delta = std::stod(value);
      else if (key == "samples") config.samples = std::stoull(value);
      else if (key == "seed") config.seed = parse_seed(value);
      else if (key == "bins") config.bins = static_cast<std::uint32_t>(std::stoul(value));
      else if (key == "exact_limit") config.exact_limit = std::stoull(value);
      else throw Error(Errc::InvalidArgument, "unknown config key '" + key + "'");
    } catch (const std::logic_error&) {
      throw Error(Errc::InvalidArgument, "bad value for config key '" + key + "': " + value);
    }
  }
}

bool DiagnosticReport::pass() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const auto& kv) { return kv.second; });
}

namespace {

struct Measurements {
  bool exact = true;
  double p_c3 = 0;
  double p_tr4 = 0, p_w4 = 0, p_l4 = 0, p_r4 = 0;
  ArcFlagDistributions dists;
};

Measurements measure(const Tournament& t, const ReportConfig& config) {
  if (t.order() < 5) throw Error(Errc::OrderTooSmall, "reports need order >= 5, got " + std::to_string(t.order()));
  Measurements m;
  m.exact = !config.force_sampling && t.order() <= config.exact_limit;
  const CountProfile profile = count_profile(t, m.exact);
  m.p_c3 = profile.p_c3().value();
  if (m.exact) {
    m.p_tr4 = profile.p_tr4().value();
    m.p_w4 = profile.p_w4().value();
    m.p_l4 = profile.p_l4().value();
    m.p_r4 = profile.p_r4().value();
    m.dists = all_arc_flag_distributions(t);
  } else {
    const SampledQuadDensities s = sampled_quad_densities(t, config.samples, config.seed);
    m.p_tr4 = s.p_tr4;
    m.p_w4 = s.p_w4;
    m.p_l4 = s.p_l4;
    m.p_r4 = s.p_r4;
    m.dists = sampled_arc_flag_distributions(t, config.samples, derive_seed(config.seed, 1));
  }
  return m;
}

DiagnosticReport start_report(Profile p, const Tournament& t, const ReportConfig& config, const Measurements& m) {
  DiagnosticReport r;
  r.profile = p;
  r.n = t.order();
  r.exact = m.exact;
  r.threshold = config.threshold(t.order());
  r.config = config;
  for (FlagCombo f : kAllFlagCombos) {
    const std::string name(flag_name(f));
    const EmpiricalDistribution& d = m.dists[f];
    r.moments["mean_" + name] = d.mean();
    r.moments["m2_plain_" + name] = d.second_moment();
    r.moments["m2_factorial_" + name] = d.factorial_second_moment();
  }
  return r;
}

double fraction_outside(const EmpiricalDistribution& d, double centre, double delta) {
  std::uint64_t off = 0;
  for (std::uint64_t k = 0; k < d.multiplicity().size(); ++k)
    if (std::abs(d.value_of(k) - centre) > delta) off += d.multiplicity()[k];
  return static_cast<double>(off) / static_cast<double>(d.size());
}

}  // namespace

DiagnosticReport quasi_carousel_report(const Tournament& t, const ReportConfig& config) {
  const Measurements m = measure(t, config);
  DiagnosticReport r = start_report(Profile::Carousel, t, config, m);
  auto& res = r.residuals;
  res["bal"] = balance_deficiency(t, config.eps);
  res["lt"] = m.p_w4 + m.p_l4;
  res["r4"] = std::abs(m.p_r4 - 0.5);
  res["t4r4"] = std::abs(m.p_tr4 - m.p_r4);
  res["c3"] = std::abs(m.p_c3 - 0.25);

  const auto half = ReferenceDistribution::uniform(0.5);
  const auto unit = ReferenceDistribution::uniform(1.0);
  for (FlagCombo f : kAllFlagCombos) {
    const std::string name(flag_name(f));
    const bool combined = f == FlagCombo::OI || f == FlagCombo::CTR;
    res["ks_" + name] = ks_distance(m.dists[f], combined ? unit : half);

    double predicted = m.p_tr4 / 6.0;
    if (f == FlagCombo::C) predicted = m.p_r4 / 6.0;
    if (f == FlagCombo::OI) predicted = m.p_tr4 / 2.0 + m.p_r4 / 6.0;
    if (f == FlagCombo::CTR) predicted = m.p_tr4 / 6.0 + m.p_r4 / 2.0;
    res["m2_" + name] = std::abs(m.dists[f].factorial_second_moment() - predicted);
  }
  for (const auto& [name, value] : res) r.verdicts[name] = value <= r.threshold;
  return r;
}

DiagnosticReport quasi_random_report(const Tournament& t, const ReportConfig& config) {
  const Measurements m = measure(t, config);
  DiagnosticReport r = start_report(Profile::Random, t, config, m);
  auto& res = r.residuals;
  res["c3"] = std::abs(m.p_c3 - 0.25);
  res["p2"] = m.p_tr4 + m.p_r4 - 0.75;
  for (FlagCombo f : {FlagCombo::O, FlagCombo::I, FlagCombo::TR, FlagCombo::C})
    res["conc_" + std::string(flag_name(f))] = fraction_outside(m.dists[f], 0.25, config.delta);
  res["w4l4"] = std::abs(m.p_w4 - m.p_l4);
  res["w4cap"] = m.p_w4 - 0.125;
  for (const auto& [name, value] : res)
    r.verdicts[name] = (name == "p2" ? std::abs(value) : value) <= r.threshold;
  return r;
}

DiagnosticReport diagnostic_report(const Tournament& t, Profile profile, const ReportConfig& config) {
  return profile == Profile::Carousel ? quasi_carousel_report(t, config) : quasi_random_report(t, config);
}

}  // namespace tourney
