#include "tourney/report_json.hpp"

#include <charconv>

#include "tourney/error.hpp"

namespace tourney {

using nlohmann::json;

namespace {

std::string shortest(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return ec == std::errc{} ? std::string(buf, ptr) : std::string("nan");
}

json density(const Density& d) {
  return json{{"numerator", d.numerator}, {"denominator", d.denominator}, {"value", d.value()}};
}

}  // namespace

json to_json(const CountProfile& p) {
  json j;
  j["schema"] = kJsonSchema;
  j["n"] = p.n;
  j["exact"] = true;
  j["tr3"] = p.triples.tr3;
  j["c3"] = p.triples.c3;
  j["binom3"] = p.binom3;
  j["densities"]["tr3"] = density(p.p_tr3());
  j["densities"]["c3"] = density(p.p_c3());
  if (p.quads) {
    j["tr4"] = p.quads->tr4;
    j["w4"] = p.quads->w4;
    j["l4"] = p.quads->l4;
    j["r4"] = p.quads->r4;
    j["binom4"] = p.binom4;
    j["densities"]["tr4"] = density(p.p_tr4());
    j["densities"]["w4"] = density(p.p_w4());
    j["densities"]["l4"] = density(p.p_l4());
    j["densities"]["r4"] = density(p.p_r4());
  }
  return j;
}

json to_json(const SampledQuadDensities& s) {
  return json{{"samples", s.samples},
              {"hits", {{"tr4", s.hits.tr4}, {"w4", s.hits.w4}, {"l4", s.hits.l4}, {"r4", s.hits.r4}}},
              {"p_tr4", s.p_tr4},
              {"p_w4", s.p_w4},
              {"p_l4", s.p_l4},
              {"p_r4", s.p_r4},
              {"se_tr4", s.se_tr4},
              {"se_w4", s.se_w4},
              {"se_l4", s.se_l4},
              {"se_r4", s.se_r4}};
}

json to_json(const Obstruction& o) {
  return json{{"kind", to_string(o.kind)}, {"vertices", o.vertices}, {"apex", o.apex}};
}

json to_json(const CyclicOrder& o) { return json(o.order); }

json to_json(const DiagnosticReport& r) {
  json j;
  j["schema"] = kJsonSchema;
  j["profile"] = to_string(r.profile);
  j["n"] = r.n;
  j["mode"] = r.exact ? "exact" : "sampled";
  j["threshold"] = r.threshold;
  j["residuals"] = r.residuals;
  j["verdicts"] = r.verdicts;
  j["pass"] = r.pass();
  j["moments"] = r.moments;
  j["config"] = {{"eps", r.config.eps},
                 {"delta", r.config.delta},
                 {"samples", r.config.samples},
                 {"seed", r.config.seed},
                 {"bins", r.config.bins},
                 {"exact_limit", r.config.exact_limit},
                 {"threshold_floor", r.config.threshold_floor},
                 {"threshold_scale", r.config.threshold_scale}};
  j["provenance"] = r.config.provenance;
  return j;
}

json moments_json(const EmpiricalDistribution& d) {
  return json{{"arcs", d.size()},
              {"scale", d.scale()},
              {"mean", d.mean()},
              {"m2", d.second_moment()},
              {"m2_factorial", d.factorial_second_moment()}};
}

std::string distribution_csv(const EmpiricalDistribution& d) {
  std::string out = "value,count\n";
  for (std::uint64_t k = 0; k < d.multiplicity().size(); ++k)
    if (d.multiplicity()[k] != 0) out += shortest(d.value_of(k)) + "," + std::to_string(d.multiplicity()[k]) + "\n";
  return out;
}

std::string histogram_csv(const EmpiricalDistribution& d, std::uint32_t bins) {
  if (bins == 0) throw Error(Errc::InvalidArgument, "need at least one bin");
  std::vector<std::uint64_t> counts(bins, 0);
  for (std::uint64_t k = 0; k < d.multiplicity().size(); ++k) {
    const std::uint64_t j = std::min<std::uint64_t>(bins - 1, k * bins / d.scale());
    counts[j] += d.multiplicity()[k];
  }
  std::string out = "bin_lo,bin_hi,count\n";
  for (std::uint32_t j = 0; j < bins; ++j)
    out += shortest(static_cast<double>(j) / bins) + "," + shortest(static_cast<double>(j + 1) / bins) + "," +
           std::to_string(counts[j]) + "\n";
  return out;
}

}  // namespace tourney
