#include "tourney/counting.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "tourney/error.hpp"
#include "tourney/parallel.hpp"
#include "tourney/rng.hpp"

namespace tourney {

namespace {

constexpr std::uint64_t kSampleBlock = 1 << 16;

std::uint64_t choose2(std::uint64_t d) noexcept { return d < 2 ? 0 : d * (d - 1) / 2; }
std::uint64_t choose3(std::uint64_t d) noexcept {
  return d < 3 ? 0 : static_cast<std::uint64_t>(static_cast<uint128>(d) * (d - 1) * (d - 2) / 6);
}

void require_order(const Tournament& t, std::size_t min, const char* op) {
  if (t.order() < min)
    throw Error(Errc::OrderTooSmall,
                std::string(op) + " needs order >= " + std::to_string(min) + ", got " + std::to_string(t.order()));
}

// The single-popcount fast path behind every bulk arc statistic: for u -> v,
// N+(u) splits into {v}, the O-witnesses and the Tr-witnesses, and N+(v)
// splits into the O-witnesses and the C-witnesses.
ArcFlagCounts arc_counts_from_o(const Tournament& t, Vertex u, Vertex v, std::uint64_t o) noexcept {
  ArcFlagCounts a;
  a.o = o;
  a.tr = t.outdegree(u) - 1 - o;
  a.c = t.outdegree(v) - o;
  a.i = t.order() - 2 - a.o - a.tr - a.c;
  return a;
}

struct Histograms {
  std::array<std::vector<std::uint64_t>, 6> h;

  explicit Histograms(std::size_t bins = 0) {
    for (auto& v : h) v.assign(bins, 0);
  }
  void add(const ArcFlagCounts& a) {
    for (std::size_t k = 0; k < kAllFlagCombos.size(); ++k) ++h[k][flag_value(a, kAllFlagCombos[k])];
  }
  void merge(const Histograms& other) {
    for (std::size_t k = 0; k < h.size(); ++k)
      for (std::size_t j = 0; j < h[k].size(); ++j) h[k][j] += other.h[k][j];
  }
};

ArcFlagDistributions to_distributions(std::uint64_t scale, Histograms hist) {
  ArcFlagDistributions d;
  for (std::size_t k = 0; k < 6; ++k) d.by_combo[k] = EmpiricalDistribution(scale, std::move(hist.h[k]));
  return d;
}

}  // namespace

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  uint128 r = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    r = r * (n - i) / (i + 1);
    if (r > std::numeric_limits<std::uint64_t>::max())
      throw Error(Errc::InvalidArgument, "binomial C(" + std::to_string(n) + "," + std::to_string(k) + ") overflows");
  }
  return static_cast<std::uint64_t>(r);
}

std::string_view flag_name(FlagCombo f) noexcept {
  switch (f) {
    case FlagCombo::O: return "o";
    case FlagCombo::I: return "i";
    case FlagCombo::TR: return "tr";
    case FlagCombo::C: return "c";
    case FlagCombo::OI: return "oi";
    case FlagCombo::CTR: return "ctr";
  }
  return "?";
}

FlagCombo parse_flag(std::string_view name) {
  for (FlagCombo f : kAllFlagCombos)
    if (flag_name(f) == name) return f;
  throw Error(Errc::InvalidArgument, "unknown flag '" + std::string(name) + "' (expected o, i, tr, c, oi, ctr)");
}

std::uint64_t flag_value(const ArcFlagCounts& a, FlagCombo f) noexcept {
  switch (f) {
    case FlagCombo::O: return a.o;
    case FlagCombo::I: return a.i;
    case FlagCombo::TR: return a.tr;
    case FlagCombo::C: return a.c;
    case FlagCombo::OI: return a.o + a.i;
    case FlagCombo::CTR: return a.c + a.tr;
  }
  return 0;
}

EmpiricalDistribution::EmpiricalDistribution(std::uint64_t scale, std::vector<std::uint64_t> multiplicity)
    : scale_(scale), mult_(std::move(multiplicity)) {
  if (scale_ == 0) throw Error(Errc::InvalidArgument, "distribution scale must be positive");
  if (!mult_.empty() && mult_.size() > scale_ + 1)
    throw Error(Errc::InvalidArgument, "witness count exceeds the scale");
  for (std::uint64_t k = 0; k < mult_.size(); ++k) {
    const uint128 m = mult_[k];
    size_ += mult_[k];
    sum_ += m * k;
    sum_sq_ += m * k * k;
    if (k >= 2) sum_falling_ += m * k * (k - 1);
  }
}

double EmpiricalDistribution::mean() const {
  if (empty()) throw Error(Errc::EmptyDistribution, "mean of an empty distribution");
  return static_cast<double>(sum_) / static_cast<double>(size_) / static_cast<double>(scale_);
}

double EmpiricalDistribution::second_moment() const {
  if (empty()) throw Error(Errc::EmptyDistribution, "second moment of an empty distribution");
  const double s = static_cast<double>(scale_);
  return static_cast<double>(sum_sq_) / static_cast<double>(size_) / (s * s);
}

double EmpiricalDistribution::factorial_second_moment() const {
  if (empty()) throw Error(Errc::EmptyDistribution, "factorial moment of an empty distribution");
  if (scale_ < 2) return std::numeric_limits<double>::quiet_NaN();
  const double s = static_cast<double>(scale_);
  return static_cast<double>(sum_falling_) / static_cast<double>(size_) / (s * (s - 1));
}

ReferenceDistribution ReferenceDistribution::uniform(double q) {
  if (!(q > 0.0 && q <= 1.0)) throw Error(Errc::InvalidArgument, "uniform reference needs q in (0,1]");
  return {Kind::UniformOnInterval, q};
}

ReferenceDistribution ReferenceDistribution::point_mass(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw Error(Errc::InvalidArgument, "point mass must lie in [0,1]");
  return {Kind::PointMass, p};
}

double ReferenceDistribution::cdf(double x) const noexcept {
  if (kind_ == Kind::PointMass) return x >= param_ ? 1.0 : 0.0;
  return std::clamp(x / param_, 0.0, 1.0);
}

double ReferenceDistribution::cdf_left(double x) const noexcept {
  if (kind_ == Kind::PointMass) return x > param_ ? 1.0 : 0.0;
  return cdf(x);
}

ArcFlagCounts arc_flag_counts(const Tournament& t, Vertex u, Vertex v) {
  if (u >= t.order() || v >= t.order()) throw Error(Errc::VertexOutOfRange, "arc endpoint outside the tournament");
  if (u == v || !t.beats(u, v))
    throw Error(Errc::NotAnArc, std::to_string(u) + " -> " + std::to_string(v) + " is not an arc");
  const auto ru = t.out_row(u);
  const auto rv = t.out_row(v);
  ArcFlagCounts a;
  for (std::size_t w = 0; w < t.words_per_row(); ++w) {
    const Word iu = t.in_word(u, w);
    const Word iv = t.in_word(v, w);
    a.o += static_cast<std::uint64_t>(std::popcount(ru[w] & rv[w]));
    a.i += static_cast<std::uint64_t>(std::popcount(iu & iv));
    a.tr += static_cast<std::uint64_t>(std::popcount(ru[w] & iv));
    a.c += static_cast<std::uint64_t>(std::popcount(iu & rv[w]));
  }
  return a;
}

TripleCounts triple_counts(const Tournament& t) {
  require_order(t, 3, "triple_counts");
  TripleCounts c;
  for (Vertex v = 0; v < t.order(); ++v) c.tr3 += choose2(t.outdegree(v));
  c.c3 = binomial(t.order(), 3) - c.tr3;
  return c;
}

QuadCounts quad_counts(const Tournament& t) {
  require_order(t, 4, "quad_counts");
  const std::size_t n = t.order();
  const std::size_t words = t.words_per_row();
  auto partials = parallel_chunks(n, [&](std::size_t begin, std::size_t end) {
    QuadCounts q;
    std::vector<Word> in_row(words);
    for (std::size_t vi = begin; vi < end; ++vi) {
      const auto v = static_cast<Vertex>(vi);
      const auto out = t.out_row(v);
      for (std::size_t w = 0; w < words; ++w) in_row[w] = t.in_word(v, w);

      // transitive triples inside N+(v) and N-(v), via restricted outdegrees
      std::uint64_t tr_out = 0;
      std::uint64_t tr_in = 0;
      for (std::size_t w = 0; w < words; ++w) {
        for (Word x = out[w]; x; x &= x - 1) {
          const auto y = static_cast<Vertex>(w * kWordBits + std::countr_zero(x));
          tr_out += choose2(popcount_and(t.out_row(y), out));
        }
        for (Word x = in_row[w]; x; x &= x - 1) {
          const auto y = static_cast<Vertex>(w * kWordBits + std::countr_zero(x));
          tr_in += choose2(popcount_and(t.out_row(y), in_row));
        }
      }
      q.tr4 += tr_out;
      q.w4 += choose3(t.outdegree(v)) - tr_out;
      q.l4 += choose3(t.indegree(v)) - tr_in;
    }
    return q;
  });
  QuadCounts total;
  for (const auto& p : partials) {
    total.tr4 += p.tr4;
    total.w4 += p.w4;
    total.l4 += p.l4;
  }
  total.r4 = binomial(n, 4) - total.tr4 - total.w4 - total.l4;
  return total;
}

CountProfile count_profile(const Tournament& t, bool with_quads) {
  CountProfile p;
  p.n = t.order();
  p.triples = triple_counts(t);
  p.binom3 = binomial(p.n, 3);
  if (with_quads && p.n >= 4) {
    p.quads = quad_counts(t);
    p.binom4 = binomial(p.n, 4);
  }
  return p;
}

SampledQuadDensities sampled_quad_densities(const Tournament& t, std::uint64_t samples, std::uint64_t seed) {
  require_order(t, 4, "sampled_quad_densities");
  if (samples == 0) throw Error(Errc::InvalidArgument, "need at least one sample");
  const std::uint64_t n = t.order();
  const std::uint64_t blocks = (samples + kSampleBlock - 1) / kSampleBlock;
  auto partials = parallel_chunks(blocks, [&](std::size_t begin, std::size_t end) {
    QuadCounts q;
    for (std::size_t b = begin; b < end; ++b) {
      Rng rng(derive_seed(seed, b));
      const std::uint64_t count = std::min<std::uint64_t>(kSampleBlock, samples - b * kSampleBlock);
      for (std::uint64_t s = 0; s < count; ++s) {
        std::array<Vertex, 4> q4{};
        for (int k = 0; k < 4; ++k) {
          bool fresh = false;
          while (!fresh) {
            q4[k] = static_cast<Vertex>(rng.below(n));
            fresh = std::find(q4.begin(), q4.begin() + k, q4[k]) == q4.begin() + k;
          }
        }
        switch (classify4_subset(t, q4[0], q4[1], q4[2], q4[3])) {
          case SmallClass4::TR4: ++q.tr4; break;
          case SmallClass4::W4: ++q.w4; break;
          case SmallClass4::L4: ++q.l4; break;
          case SmallClass4::R4: ++q.r4; break;
        }
      }
    }
    return q;
  });
  SampledQuadDensities r;
  r.samples = samples;
  for (const auto& p : partials) {
    r.hits.tr4 += p.tr4;
    r.hits.w4 += p.w4;
    r.hits.l4 += p.l4;
    r.hits.r4 += p.r4;
  }
  const double s = static_cast<double>(samples);
  auto se = [s](double p) { return std::sqrt(p * (1.0 - p) / s); };
  r.p_tr4 = static_cast<double>(r.hits.tr4) / s;
  r.p_w4 = static_cast<double>(r.hits.w4) / s;
  r.p_l4 = static_cast<double>(r.hits.l4) / s;
  r.p_r4 = static_cast<double>(r.hits.r4) / s;
  r.se_tr4 = se(r.p_tr4);
  r.se_w4 = se(r.p_w4);
  r.se_l4 = se(r.p_l4);
  r.se_r4 = se(r.p_r4);
  return r;
}

ArcFlagDistributions all_arc_flag_distributions(const Tournament& t) {
  require_order(t, 3, "arc_flag_distribution");
  const std::size_t n = t.order();
  auto partials = parallel_chunks(n, [&](std::size_t begin, std::size_t end) {
    Histograms h(n - 1);
    for (std::size_t ui = begin; ui < end; ++ui) {
      const auto u = static_cast<Vertex>(ui);
      const auto out = t.out_row(u);
      for (std::size_t w = 0; w < out.size(); ++w)
        for (Word x = out[w]; x; x &= x - 1) {
          const auto v = static_cast<Vertex>(w * kWordBits + std::countr_zero(x));
          h.add(arc_counts_from_o(t, u, v, popcount_and(out, t.out_row(v))));
        }
    }
    return h;
  });
  Histograms total(n - 1);
  for (const auto& p : partials) total.merge(p);
  return to_distributions(n - 2, std::move(total));
}

EmpiricalDistribution arc_flag_distribution(const Tournament& t, FlagCombo combo) {
  return all_arc_flag_distributions(t)[combo];
}

ArcFlagDistributions sampled_arc_flag_distributions(const Tournament& t, std::uint64_t samples, std::uint64_t seed) {
  require_order(t, 3, "sampled_arc_flag_distributions");
  if (samples == 0) throw Error(Errc::InvalidArgument, "need at least one sample");
  const std::size_t n = t.order();
  const std::uint64_t blocks = (samples + kSampleBlock - 1) / kSampleBlock;
  auto partials = parallel_chunks(blocks, [&](std::size_t begin, std::size_t end) {
    Histograms h(n - 1);
    for (std::size_t b = begin; b < end; ++b) {
      Rng rng(derive_seed(seed, b));
      const std::uint64_t count = std::min<std::uint64_t>(kSampleBlock, samples - b * kSampleBlock);
      for (std::uint64_t s = 0; s < count; ++s) {
        auto u = static_cast<Vertex>(rng.below(n));
        auto v = static_cast<Vertex>(rng.below(n - 1));
        if (v >= u) ++v;
        if (!t.beats(u, v)) std::swap(u, v);
        h.add(arc_counts_from_o(t, u, v, popcount_and(t.out_row(u), t.out_row(v))));
      }
    }
    return h;
  });
  Histograms total(n - 1);
  for (const auto& p : partials) total.merge(p);
  return to_distributions(n - 2, std::move(total));
}

double ks_distance(const EmpiricalDistribution& d, const ReferenceDistribution& r) {
  if (d.empty()) throw Error(Errc::EmptyDistribution, "KS distance of an empty distribution");
  const double total = static_cast<double>(d.size());
  const auto& mult = d.multiplicity();

  std::vector<double> points;
  for (std::uint64_t k = 0; k < mult.size(); ++k)
    if (mult[k] != 0) points.push_back(d.value_of(k));
  if (r.kind() == ReferenceDistribution::Kind::PointMass) points.push_back(r.parameter());
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  double sup = 0.0;
  std::uint64_t below = 0;  // arcs with value < current point
  std::uint64_t k = 0;
  for (const double x : points) {
    while (k < mult.size() && d.value_of(k) < x) below += mult[k++];
    std::uint64_t at_or_below = below;
    for (std::uint64_t j = k; j < mult.size() && d.value_of(j) == x; ++j) at_or_below += mult[j];
    const double left = static_cast<double>(below) / total;
    const double right = static_cast<double>(at_or_below) / total;
    sup = std::max({sup, std::abs(left - r.cdf_left(x)), std::abs(right - r.cdf(x))});
  }
  return sup;
}

}  // namespace tourney
