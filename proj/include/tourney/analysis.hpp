#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tourney/counting.hpp"
#include "tourney/tournament.hpp"

namespace tourney {

// ---------------------------------------------------------------------------
// Extremal W4 curve of the nested-layer construction
// ---------------------------------------------------------------------------

/// Limit W4 density (1-t)^3 (t + (1-t)/8) / (1 - t^4) for t in (0, 1).
double phi_t_w4(double t);

struct W4Optimum {
  double t_star = 0;
  double value = 0;
};

/// Golden-section maximisation of phi_t_w4 on (0, 1) until the bracket is
/// narrower than `tolerance`. value == phi_t_w4(t_star).
W4Optimum maximize_phi_t(double tolerance);

/// Closed-form maximiser (2*3^(2/3) - 3^(1/3) - 2) / 5 and its value
/// 1 + (3^(5/3) - 3^(7/3)) / 8.
W4Optimum phi_t_closed_form_optimum();

// ---------------------------------------------------------------------------
// Exact finite-n identities
// ---------------------------------------------------------------------------

/// Integer inputs to the identity suite, gathered once from a tournament.
/// Exposed so callers can inject faults into individual counts.
struct IdentityInputs {
  std::uint64_t n = 0;
  TripleCounts triples;
  QuadCounts quads;
  /// Per-flag arc sums of k and of k (k - 1), indexed like kAllFlagCombos.
  std::array<uint128, 6> arc_sum{};
  std::array<uint128, 6> arc_falling_sum{};
};

struct IdentityResidual {
  std::string name;
  int128 exact = 0;      // integer residual; zero iff the identity holds
  double magnitude = 0;  // |exact| scaled back to density units
  bool holds() const noexcept { return exact == 0; }
};

IdentityInputs gather_identity_inputs(const Tournament& t);

/**
 * Evaluates every exact identity on the given counts (n >= 4):
 *   chain_rule:  p(C3) = 1/4 + p(R4)/4 - p(Tr4)/4
 *   fm_c:        E[c(c-1)] / ((n-2)(n-3)) = p(R4)/6
 *   fm_o, fm_i, fm_tr:  same with p(Tr4)/6
 *   fm_oi:       p(Tr4)/2 + p(R4)/6
 *   fm_ctr:      p(Tr4)/6 + p(R4)/2
 *   arcsum_o, arcsum_i, arcsum_tr:  sum over arcs = tr3
 *   arcsum_c:    sum over arcs = 3 c3
 */
std::vector<IdentityResidual> evaluate_identities(const IdentityInputs& in);

/// gather + evaluate; requires n >= 6.
std::vector<IdentityResidual> identity_suite(const Tournament& t);

// ---------------------------------------------------------------------------
// Diagnostic reports
// ---------------------------------------------------------------------------

enum class Profile { Carousel, Random };

const char* to_string(Profile p) noexcept;
/// "carousel" or "random"; throws InvalidArgument.
Profile parse_profile(const std::string& s);

struct ReportConfig {
  double eps = 0.05;             // balance tolerance, fraction of n
  double delta = 0.05;           // concentration window around 1/4
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 1;
  std::uint32_t bins = 20;
  std::size_t exact_limit = 4000;  // largest n counted exactly
  bool force_sampling = false;
  double threshold_floor = 0.02;  // pass iff residual <= max(floor, scale / sqrt(n))
  double threshold_scale = 4.0;
  std::map<std::string, std::string> provenance;

  double threshold(std::size_t n) const;
};

/// Applies "key=value" lines (keys: eps, delta, samples, seed, bins,
/// exact_limit); '#' starts a comment. Throws InvalidArgument.
void apply_config_text(ReportConfig& config, const std::string& text);

struct DiagnosticReport {
  Profile profile = Profile::Carousel;
  std::size_t n = 0;
  bool exact = true;
  double threshold = 0;
  std::map<std::string, double> residuals;
  std::map<std::string, bool> verdicts;
  /// Plain (non-factorial) second moments and means, reported for context.
  std::map<std::string, double> moments;
  ReportConfig config;

  bool pass() const;
};

/**
 * Quasi-carousel battery. Residuals:
 *   bal    balance_deficiency(T, eps)
 *   lt     p(W4) + p(L4)
 *   r4     |p(R4) - 1/2|
 *   t4r4   |p(Tr4) - p(R4)|
 *   c3     |p(C3) - 1/4|
 *   ks_o, ks_i, ks_tr, ks_c     KS of single flags vs U(0, 1/2)
 *   ks_oi, ks_ctr               KS of combined flags vs U(0, 1)
 *   m2_o, m2_i, m2_tr, m2_c, m2_oi, m2_ctr
 *          |factorial second moment - its 4-density prediction|
 */
DiagnosticReport quasi_carousel_report(const Tournament& t, const ReportConfig& config);

/**
 * Quasi-random battery. Residuals:
 *   c3       |p(C3) - 1/4|
 *   p2       p(Tr4) + p(R4) - 3/4 (signed; verdict on |p2|)
 *   conc_o, conc_i, conc_tr, conc_c   fraction of arcs with |value - 1/4| > delta
 *   w4l4     |p(W4) - p(L4)|
 *   w4cap    p(W4) - 1/8 (signed; verdict on the value itself)
 */
DiagnosticReport quasi_random_report(const Tournament& t, const ReportConfig& config);

DiagnosticReport diagnostic_report(const Tournament& t, Profile profile, const ReportConfig& config);

}  // namespace tourney
