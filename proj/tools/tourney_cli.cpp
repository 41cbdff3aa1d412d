// tourney: command-line front end for generating, counting and checking
// tournaments. Machine output goes to stdout, prose to stderr.
//
// Exit codes: 0 success, 1 validation error, 2 I/O or parse error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "tourney/analysis.hpp"
#include "tourney/counting.hpp"
#include "tourney/error.hpp"
#include "tourney/generators.hpp"
#include "tourney/loctrans.hpp"
#include "tourney/report_json.hpp"
#include "tourney/rng.hpp"
#include "tourney/trn_io.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace tourney;

namespace {

constexpr int kExitValidation = 1;
constexpr int kExitIo = 2;

// Raised for anything that goes wrong while reading or writing files.
struct IoFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { Trn, Arcs };

Format format_of(const fs::path& p, const std::string& forced) {
  if (forced == "trn") return Format::Trn;
  if (forced == "arcs") return Format::Arcs;
  if (!forced.empty()) throw Error(Errc::InvalidArgument, "unknown format '" + forced + "' (expected trn or arcs)");
  const std::string ext = p.extension().string();
  if (ext == ".arcs" || ext == ".txt") return Format::Arcs;
  return Format::Trn;
}

Tournament load(const fs::path& p, const std::string& forced = "") {
  const Format f = format_of(p, forced);
  try {
    return f == Format::Arcs ? load_arc_list(p) : load_trn(p);
  } catch (const Error& e) {
    throw IoFailure(p.string() + ": " + e.what());
  }
}

void save(const fs::path& p, const Tournament& t, const std::string& forced = "") {
  const Format f = format_of(p, forced);
  try {
    if (f == Format::Arcs) save_arc_list(p, t);
    else save_trn(p, t);
  } catch (const Error& e) {
    throw IoFailure(e.what());
  }
}

void write_text(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw IoFailure("cannot write " + p.string());
  out << text;
  if (!out) throw IoFailure("write failed for " + p.string());
}

std::string read_text(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw IoFailure("cannot open " + p.string());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void emit(const json& j) { std::cout << j.dump() << '\n'; }

// ---------------------------------------------------------------------------

struct GenArgs {
  std::string kind;
  std::size_t n = 0;
  std::optional<double> t;
  std::string seed = "0";
  std::string out;
};

int run_gen(const GenArgs& a) {
  const std::uint64_t seed = parse_seed(a.seed);
  Tournament t = [&] {
    if (a.kind == "carousel") return carousel(a.n);
    if (a.kind == "transitive") return transitive(a.n);
    if (a.kind == "random") return random_uniform(a.n, seed);
    if (a.kind == "digraphon") return digraphon_sample(a.n, seed);
    if (!a.t) throw Error(Errc::InvalidArgument, "layered needs --t");
    return layered({a.n, *a.t, seed});
  }();
  json prov{{"schema", kJsonSchema}, {"command", "gen"}, {"kind", a.kind}, {"n", a.n}};
  if (a.kind == "random" || a.kind == "digraphon" || a.kind == "layered") prov["seed"] = seed;
  if (a.kind == "layered") {
    prov["t"] = *a.t;
    prov["layer_sizes"] = layer_sizes(a.n, *a.t);
  }
  if (a.out.empty()) {
    write_trn(std::cout, t);
    std::cerr << prov.dump() << '\n';
  } else {
    save(a.out, t);
    prov["output"] = a.out;
    emit(prov);
  }
  return 0;
}

struct StatsArgs {
  std::string in;
  int order = 4;
  std::uint64_t sample = 0;
  std::string seed = "1";
  std::size_t exact_limit = 4000;
};

int run_stats(const StatsArgs& a) {
  const Tournament t = load(a.in);
  const std::uint64_t seed = parse_seed(a.seed);
  const bool exact4 = a.order == 4 && a.sample == 0 && t.order() <= a.exact_limit;
  json j = to_json(count_profile(t, exact4));
  if (a.order == 4 && !exact4) {
    const std::uint64_t samples = a.sample ? a.sample : 1'000'000;
    j["exact"] = false;
    j["binom4"] = binomial(t.order(), 4);
    j["sampled"] = to_json(sampled_quad_densities(t, samples, seed));
    j["sampled"]["seed"] = seed;
  }
  emit(j);
  return 0;
}

struct ArcflagsArgs {
  std::string in;
  std::string flag = "c";
  std::uint32_t bins = 0;
  std::string out;
  std::string profile = "carousel";
  std::uint64_t sample = 0;
  std::string seed = "1";
};

int run_arcflags(const ArcflagsArgs& a) {
  const FlagCombo flag = parse_flag(a.flag);
  const Profile profile = parse_profile(a.profile);
  const Tournament t = load(a.in);
  const std::uint64_t seed = parse_seed(a.seed);
  const EmpiricalDistribution d = a.sample ? sampled_arc_flag_distributions(t, a.sample, seed)[flag]
                                           : arc_flag_distribution(t, flag);
  const bool combined = flag == FlagCombo::OI || flag == FlagCombo::CTR;
  const ReferenceDistribution ref = profile == Profile::Carousel
                                        ? ReferenceDistribution::uniform(combined ? 1.0 : 0.5)
                                        : ReferenceDistribution::point_mass(combined ? 0.5 : 0.25);
  const std::string csv = a.bins ? histogram_csv(d, a.bins) : distribution_csv(d);
  json j = moments_json(d);
  j["schema"] = kJsonSchema;
  j["flag"] = std::string(flag_name(flag));
  j["n"] = t.order();
  j["mode"] = a.sample ? "sampled" : "exact";
  if (a.sample) j["seed"] = seed;
  j["reference"] = ref.kind() == ReferenceDistribution::Kind::PointMass
                       ? json{{"kind", "point_mass"}, {"p", ref.parameter()}}
                       : json{{"kind", "uniform"}, {"q", ref.parameter()}};
  j["ks"] = ks_distance(d, ref);
  if (a.out.empty()) {
    std::cout << csv;
    std::cerr << j.dump() << '\n';
  } else {
    write_text(a.out, csv);
    j["output"] = a.out;
    emit(j);
  }
  return 0;
}

struct CheckArgs {
  std::string in;
  std::string profile = "carousel";
  std::string config;
  std::optional<double> eps, delta;
  std::optional<std::uint64_t> samples;
  std::optional<std::string> seed;
  std::optional<std::uint32_t> bins;
  std::optional<std::size_t> exact_limit;
  bool force_sampling = false;
};

int run_check(const CheckArgs& a) {
  const Profile profile = parse_profile(a.profile);
  ReportConfig cfg;
  if (!a.config.empty()) apply_config_text(cfg, read_text(a.config));
  if (a.eps) cfg.eps = *a.eps;
  if (a.delta) cfg.delta = *a.delta;
  if (a.samples) cfg.samples = *a.samples;
  if (a.seed) cfg.seed = parse_seed(*a.seed);
  if (a.bins) cfg.bins = *a.bins;
  if (a.exact_limit) cfg.exact_limit = *a.exact_limit;
  cfg.force_sampling = a.force_sampling;
  if (!(cfg.eps > 0.0 && cfg.eps < 1.0)) throw Error(Errc::InvalidArgument, "eps must lie in (0,1)");
  if (!(cfg.delta > 0.0 && cfg.delta < 1.0)) throw Error(Errc::InvalidArgument, "delta must lie in (0,1)");
  if (cfg.samples == 0) throw Error(Errc::InvalidArgument, "samples must be positive");
  cfg.provenance["input"] = a.in;
  if (!a.config.empty()) cfg.provenance["config_file"] = a.config;

  const Tournament t = load(a.in);
  const DiagnosticReport r = diagnostic_report(t, profile, cfg);
  emit(to_json(r));
  std::cerr << to_string(profile) << " profile, n = " << r.n << ", threshold " << r.threshold << ": "
            << (r.pass() ? "PASS" : "FAIL") << '\n';
  for (const auto& [name, ok] : r.verdicts)
    if (!ok) std::cerr << "  " << name << " = " << r.residuals.at(name) << " exceeds threshold\n";
  return 0;
}

int run_loctrans(const std::string& in) {
  const Tournament t = load(in);
  json j{{"schema", kJsonSchema}, {"n", t.order()}};
  if (const auto o = find_obstruction(t)) {
    j["locally_transitive"] = false;
    j["obstruction"] = to_json(*o);
    emit(j);
    return 0;
  }
  j["locally_transitive"] = true;
  j["cyclic_order"] = to_json(brouwer_order(t));
  try {
    j["carousel_isomorphism"] = carousel_isomorphism(t);
  } catch (const Error& e) {
    j["carousel_isomorphism_error"] = errc_name(e.code());
  }
  emit(j);
  return 0;
}

struct SweepArgs {
  std::uint32_t grid = 0;
  std::optional<double> optimize;
  std::size_t simulate = 0;
  std::string seed = "1";
  std::optional<double> t;
  std::uint64_t samples = 1'000'000;
};

int run_sweep(const SweepArgs& a) {
  const int modes = (a.grid > 0) + a.optimize.has_value() + (a.simulate > 0);
  if (modes != 1) throw Error(Errc::InvalidArgument, "give exactly one of --grid, --optimize, --simulate");
  if (a.grid > 0) {
    std::cout << "t,phi_t\n";
    for (std::uint32_t k = 0; k < a.grid; ++k) {
      const double t = (k + 1.0) / (a.grid + 1.0);
      std::cout << json(t).dump() << ',' << json(phi_t_w4(t)).dump() << '\n';
    }
    return 0;
  }
  if (a.optimize) {
    const W4Optimum g = maximize_phi_t(*a.optimize);
    const W4Optimum c = phi_t_closed_form_optimum();
    emit({{"schema", kJsonSchema},
          {"t_star", g.t_star},
          {"value", g.value},
          {"tolerance", *a.optimize},
          {"closed_form", {{"t_star", c.t_star}, {"value", c.value}}}});
    return 0;
  }
  const std::uint64_t seed = parse_seed(a.seed);
  const double t = a.t ? *a.t : maximize_phi_t(1e-10).t_star;
  const Tournament s = layered({a.simulate, t, seed});
  const SampledQuadDensities d = sampled_quad_densities(s, a.samples, derive_seed(seed, 1));
  emit({{"schema", kJsonSchema},
        {"n", a.simulate},
        {"t", t},
        {"seed", seed},
        {"samples", a.samples},
        {"sampled_w4", d.p_w4},
        {"se_w4", d.se_w4},
        {"phi_t", phi_t_w4(t)}});
  return 0;
}

struct ConvertArgs {
  std::string in, out, from, to;
};

int run_convert(const ConvertArgs& a) {
  save(a.out, load(a.in, a.from), a.to);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tournament generation, subtournament counting and structure diagnostics"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "Generate a tournament");
  g->add_option("--kind", gen.kind, "carousel, transitive, random, layered or digraphon")
      ->required()
      ->check(CLI::IsMember({"carousel", "transitive", "random", "layered", "digraphon"}));
  g->add_option("--n", gen.n, "Number of vertices")->required()->check(CLI::PositiveNumber);
  g->add_option("--t", gen.t, "Shrink ratio for layered");
  g->add_option("--seed", gen.seed, "Seed (decimal or 0x hex)");
  g->add_option("-o,--out", gen.out, "Output path (.trn or .arcs); stdout if omitted");

  StatsArgs stats;
  auto* s = app.add_subcommand("stats", "Order-3 and order-4 subtournament counts");
  s->add_option("input", stats.in)->required();
  s->add_option("--order", stats.order, "Largest order to count")->check(CLI::IsMember({3, 4}));
  s->add_option("--sample", stats.sample, "Estimate order-4 densities from this many 4-subsets");
  s->add_option("--seed", stats.seed, "Sampling seed");
  s->add_option("--exact-limit", stats.exact_limit, "Largest order counted exactly");

  ArcflagsArgs flags;
  auto* f = app.add_subcommand("arcflags", "Per-arc flag distribution");
  f->add_option("input", flags.in)->required();
  f->add_option("--flag", flags.flag, "o, i, tr, c, oi or ctr");
  f->add_option("--bins", flags.bins, "Histogram bins (0 = exact values)");
  f->add_option("-o,--out", flags.out, "CSV output path");
  f->add_option("--profile", flags.profile, "Reference law: carousel or random");
  f->add_option("--sample", flags.sample, "Use this many random arcs instead of all");
  f->add_option("--seed", flags.seed, "Sampling seed");

  CheckArgs check;
  auto* c = app.add_subcommand("check", "Quasi-carousel or quasi-random diagnostic report");
  c->add_option("input", check.in)->required();
  c->add_option("--profile", check.profile, "carousel or random");
  c->add_option("--config", check.config, "key=value config file");
  c->add_option("--eps", check.eps, "Balance tolerance");
  c->add_option("--delta", check.delta, "Concentration window");
  c->add_option("--samples", check.samples, "Samples in sampled mode");
  c->add_option("--seed", check.seed, "Sampling seed");
  c->add_option("--bins", check.bins, "Histogram bins");
  c->add_option("--exact-limit", check.exact_limit, "Largest order counted exactly");
  c->add_flag("--force-sampling", check.force_sampling, "Sample even below the exact limit");

  std::string lt_in;
  auto* l = app.add_subcommand("loctrans", "Local transitivity, cyclic order and carousel isomorphism");
  l->add_option("input", lt_in)->required();

  SweepArgs sweep;
  auto* w = app.add_subcommand("sweep-w4", "W4 density of the layered construction");
  w->add_option("--grid", sweep.grid, "Evaluate phi_t on this many interior points");
  w->add_option("--optimize", sweep.optimize, "Maximise phi_t to this tolerance");
  w->add_option("--simulate", sweep.simulate, "Build a layered tournament of this order and sample W4");
  w->add_option("--seed", sweep.seed, "Seed for --simulate");
  w->add_option("--t", sweep.t, "Ratio for --simulate (default: the optimum)");
  w->add_option("--samples", sweep.samples, "4-subsets sampled by --simulate");

  ConvertArgs conv;
  auto* v = app.add_subcommand("convert", "Convert between .trn and arc-list files");
  v->add_option("input", conv.in)->required();
  v->add_option("output", conv.out)->required();
  v->add_option("--from", conv.from, "Input format: trn or arcs (default: by extension)");
  v->add_option("--to", conv.to, "Output format: trn or arcs (default: by extension)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitValidation;
  }

  try {
    if (*g) return run_gen(gen);
    if (*s) return run_stats(stats);
    if (*f) return run_arcflags(flags);
    if (*c) return run_check(check);
    if (*l) return run_loctrans(lt_in);
    if (*w) return run_sweep(sweep);
    if (*v) return run_convert(conv);
  } catch (const IoFailure& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == Errc::ParseError ? kExitIo : kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  return 0;
}
