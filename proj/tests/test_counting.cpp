#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "support/oracles.hpp"
#include "tourney/counting.hpp"
#include "tourney/error.hpp"
#include "tourney/generators.hpp"

using namespace tourney;

namespace {

// Direct KS oracle: expands the distribution into its sorted sample and
// compares CDFs just below and at every sample point.
double ks_oracle(const std::vector<double>& sample, double q) {
  std::vector<double> s = sample;
  std::sort(s.begin(), s.end());
  const double n = static_cast<double>(s.size());
  auto ref = [q](double x) { return std::clamp(x / q, 0.0, 1.0); };
  double sup = 0;
  for (std::size_t j = 0; j < s.size(); ++j) {
    const auto lo = std::lower_bound(s.begin(), s.end(), s[j]) - s.begin();
    const auto hi = std::upper_bound(s.begin(), s.end(), s[j]) - s.begin();
    sup = std::max(sup, std::abs(static_cast<double>(lo) / n - ref(s[j])));
    sup = std::max(sup, std::abs(static_cast<double>(hi) / n - ref(s[j])));
  }
  return sup;
}

std::vector<double> expand(const EmpiricalDistribution& d) {
  std::vector<double> v;
  for (std::uint64_t k = 0; k < d.multiplicity().size(); ++k)
    for (std::uint64_t r = 0; r < d.multiplicity()[k]; ++r) v.push_back(d.value_of(k));
  return v;
}

}  // namespace

TEST_SUITE("counting") {
  TEST_CASE("binomials") {
    CHECK(binomial(5, 3) == 10);
    CHECK(binomial(6, 4) == 15);
    CHECK(binomial(3, 4) == 0);
    CHECK(binomial(1001, 4) == 41583291750ULL);
    CHECK(binomial(20000, 4) == 6664666849995000ULL);
    CHECK_THROWS_AS(binomial(200, 100), Error);
  }

  TEST_CASE("arc flag counts on fixed instances") {
    CHECK(arc_flag_counts(carousel(5), 0, 1) == ArcFlagCounts{1, 1, 0, 1});
    CHECK(arc_flag_counts(transitive(4), 0, 1) == ArcFlagCounts{2, 0, 0, 0});
    CHECK_THROWS_AS(arc_flag_counts(transitive(4), 1, 0), Error);
    CHECK_THROWS_AS(arc_flag_counts(transitive(4), 2, 2), Error);
  }

  TEST_CASE("carousel arc at gap i has counts (n-i, n-i, i-1, i)") {
    for (std::uint64_t n = 1; n <= 40; ++n) {
      const Tournament r = carousel(2 * n + 1);
      for (Vertex x = 0; x < 2 * n + 1; x += 3)
        for (std::uint64_t i = 1; i <= n; ++i) {
          const auto y = static_cast<Vertex>((x + i) % (2 * n + 1));
          REQUIRE(arc_flag_counts(r, x, y) == ArcFlagCounts{n - i, n - i, i - 1, i});
        }
    }
  }

  TEST_CASE("arc flag counts match the vertex-by-vertex oracle") {
    Rng rng(99);
    for (std::size_t n : {3, 4, 63, 64, 65, 129, 200}) {
      const Tournament t = oracle::random_tournament(n, rng);
      for (Vertex u = 0; u < n; u += 7)
        for (Vertex v = 0; v < n; ++v) {
          if (u == v || !t.beats(u, v)) continue;
          const ArcFlagCounts a = arc_flag_counts(t, u, v);
          REQUIRE(a == oracle::arc_flags(t, u, v));
          CHECK(a.o + a.i + a.tr + a.c == n - 2);
        }
    }
  }

  TEST_CASE("triple counts") {
    CHECK(triple_counts(carousel(5)) == TripleCounts{5, 5});
    CHECK(oracle::triples(carousel(5)) == TripleCounts{5, 5});
    CHECK(triple_counts(transitive(9)) == TripleCounts{84, 0});
    for (std::uint64_t n = 1; n <= 6; ++n) {
      const std::uint64_t m = 2 * n + 1;
      const std::uint64_t c3 = oracle::choose(m, 3) - m * oracle::choose(n, 2);
      CHECK(triple_counts(carousel(m)).c3 == c3);
      CHECK(oracle::triples(carousel(m)).c3 == c3);
    }
    Rng rng(3);
    for (int trial = 0; trial < 30; ++trial) {
      const Tournament t = oracle::random_tournament(3 + rng.below(30), rng);
      CHECK(triple_counts(t) == oracle::triples(t));
    }
    CHECK_THROWS_AS(triple_counts(transitive(2)), Error);
  }

  TEST_CASE("quad counts on fixed instances") {
    CHECK(quad_counts(carousel(5)) == QuadCounts{0, 0, 0, 5});
    CHECK(oracle::quads(carousel(5)) == QuadCounts{0, 0, 0, 5});
    CHECK(quad_counts(transitive(6)) == QuadCounts{15, 0, 0, 0});
    const QuadCounts r101 = quad_counts(carousel(101));
    CHECK(r101.tr4 == 101 * oracle::choose(50, 3));
    CHECK(r101.w4 == 0);
    CHECK(r101.l4 == 0);
    CHECK(r101.r4 == oracle::choose(101, 4) - 101 * oracle::choose(50, 3));
    for (std::uint64_t m : {9, 11}) {
      const QuadCounts expected{m * oracle::choose((m - 1) / 2, 3), 0, 0,
                                oracle::choose(m, 4) - m * oracle::choose((m - 1) / 2, 3)};
      CHECK(oracle::quads(carousel(m)) == expected);
      CHECK(quad_counts(carousel(m)) == expected);
    }
    CHECK_THROWS_AS(quad_counts(transitive(3)), Error);
  }

  TEST_CASE("quad counts equal exhaustive classify4 on all tournaments of order <= 6") {
    const auto classes = oracle::isomorphism_classes(6);
    for (int n = 4; n <= 6; ++n)
      for (const auto& s : classes[n]) {
        const Tournament t = oracle::to_tournament(s);
        REQUIRE(quad_counts(t) == oracle::quads(t));
      }
  }

  TEST_CASE("quad counts equal exhaustive classify4 on random tournaments across word boundaries") {
    Rng rng(12);
    for (std::size_t n : {8, 31, 63, 64, 65, 70}) {
      const Tournament t = oracle::random_tournament(n, rng);
      CHECK(quad_counts(t) == oracle::quads(t));
    }
  }

  TEST_CASE("quad counts do not depend on the worker count") {
    const Tournament t = random_uniform(300, 4);
    setenv("TOURNEY_THREADS", "1", 1);
    const QuadCounts one = quad_counts(t);
    const auto d1 = all_arc_flag_distributions(t);
    setenv("TOURNEY_THREADS", "5", 1);
    const QuadCounts five = quad_counts(t);
    const auto d5 = all_arc_flag_distributions(t);
    const SampledQuadDensities s5 = sampled_quad_densities(t, 200000, 8);
    setenv("TOURNEY_THREADS", "2", 1);
    const SampledQuadDensities s2 = sampled_quad_densities(t, 200000, 8);
    unsetenv("TOURNEY_THREADS");
    CHECK(one == five);
    CHECK(s5.hits == s2.hits);
    for (FlagCombo f : kAllFlagCombos) CHECK(d1[f].multiplicity() == d5[f].multiplicity());
  }

  TEST_CASE("sampled quad densities") {
    const SampledQuadDensities tr = sampled_quad_densities(transitive(100), 100000, 5);
    CHECK(tr.p_tr4 == 1.0);
    CHECK(tr.se_tr4 == 0.0);
    CHECK(sampled_quad_densities(carousel(5), 10000, 5).p_r4 == 1.0);

    const double exact = 1.0 - 1001.0 * static_cast<double>(oracle::choose(500, 3)) /
                                   static_cast<double>(oracle::choose(1001, 4));
    const SampledQuadDensities r = sampled_quad_densities(carousel(1001), 1000000, 11);
    CHECK(std::abs(r.p_r4 - exact) < 0.01);
    CHECK(r.hits.tr4 + r.hits.w4 + r.hits.l4 + r.hits.r4 == 1000000);
    CHECK(r.hits.w4 == 0);
    CHECK(sampled_quad_densities(carousel(1001), 1000, 11).hits == sampled_quad_densities(carousel(1001), 1000, 11).hits);
    CHECK_THROWS_AS(sampled_quad_densities(transitive(3), 10, 1), Error);
    CHECK_THROWS_AS(sampled_quad_densities(transitive(5), 0, 1), Error);
  }

  TEST_CASE("carousel C-flag law is the uniform grid {i/(2n-1)}") {
    for (std::uint64_t n : {2, 5, 50}) {
      const EmpiricalDistribution d = arc_flag_distribution(carousel(2 * n + 1), FlagCombo::C);
      CHECK(d.size() == (2 * n + 1) * n);
      CHECK(d.scale() == 2 * n - 1);
      for (std::uint64_t k = 0; k < d.multiplicity().size(); ++k)
        CHECK(d.multiplicity()[k] == (k >= 1 && k <= n ? 2 * n + 1 : 0));
    }
  }

  TEST_CASE("carousel O+I law is the uniform grid {2t/(2n-1)}") {
    for (std::uint64_t n : {2, 7, 30}) {
      const EmpiricalDistribution d = arc_flag_distribution(carousel(2 * n + 1), FlagCombo::OI);
      for (std::uint64_t k = 0; k < d.multiplicity().size(); ++k)
        CHECK(d.multiplicity()[k] == (k % 2 == 0 && k / 2 < n ? 2 * n + 1 : 0));
      // Tr and O take {t/(2n-1) : t = 0..n-1}
      const EmpiricalDistribution tr = arc_flag_distribution(carousel(2 * n + 1), FlagCombo::TR);
      for (std::uint64_t k = 0; k < tr.multiplicity().size(); ++k)
        CHECK(tr.multiplicity()[k] == (k < n ? 2 * n + 1 : 0));
    }
  }

  TEST_CASE("transitive C-flag law is a point mass at 0") {
    const EmpiricalDistribution d = arc_flag_distribution(transitive(40), FlagCombo::C);
    CHECK(d.multiplicity()[0] == 780);
    CHECK(d.mean() == 0.0);
    CHECK(ks_distance(d, ReferenceDistribution::point_mass(0.0)) == 0.0);
    CHECK(ks_distance(d, ReferenceDistribution::point_mass(0.25)) == 1.0);
    CHECK_THROWS_AS(arc_flag_distribution(transitive(2), FlagCombo::C), Error);
  }

  TEST_CASE("bulk distributions agree with per-arc oracle counts") {
    Rng rng(17);
    for (std::size_t n : {3, 10, 65}) {
      const Tournament t = oracle::random_tournament(n, rng);
      const ArcFlagDistributions all = all_arc_flag_distributions(t);
      std::array<std::vector<std::uint64_t>, 6> hist;
      for (auto& h : hist) h.assign(n - 1, 0);
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v)
          if (u != v && t.beats(u, v)) {
            const ArcFlagCounts a = oracle::arc_flags(t, u, v);
            for (std::size_t k = 0; k < 6; ++k) ++hist[k][flag_value(a, kAllFlagCombos[k])];
          }
      for (std::size_t k = 0; k < 6; ++k) CHECK(all.by_combo[k].multiplicity() == hist[k]);
    }
  }

  TEST_CASE("moments") {
    const EmpiricalDistribution d(4, {1, 0, 2, 0, 1});  // values 0, .5, .5, 1
    CHECK(d.size() == 4);
    CHECK(d.mean() == doctest::Approx(0.5));
    CHECK(d.second_moment() == doctest::Approx((0.25 + 0.25 + 1.0) / 4));
    CHECK(d.factorial_second_moment() == doctest::Approx((2 * 2.0 + 12.0) / 4 / 12));
    CHECK(std::isnan(EmpiricalDistribution(1, {1, 1}).factorial_second_moment()));
    CHECK_THROWS_AS(EmpiricalDistribution(4, {}).mean(), Error);
  }

  TEST_CASE("KS distance") {
    // grid equal to U(0, q) up to discretisation
    const EmpiricalDistribution grid(10, {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1});
    const double g = ks_distance(grid, ReferenceDistribution::uniform(1.0));
    CHECK(g > 0.0);
    CHECK(g <= 1.0 / 11.0 + 1e-15);
    CHECK(g == doctest::Approx(ks_oracle(expand(grid), 1.0)));
    CHECK_THROWS_AS(ks_distance(EmpiricalDistribution(3, {0, 0}), ReferenceDistribution::uniform(0.5)), Error);
    CHECK_THROWS_AS(ReferenceDistribution::uniform(0.0), Error);
    CHECK_THROWS_AS(ReferenceDistribution::point_mass(1.5), Error);
  }

  TEST_CASE("KS of the carousel C-flag law against U(0, 1/2)") {
    // Closed form for the grid {i/(2n-1)}: (3n-2) / (n (2n-1)), attained just
    // below the value (n-1)/(2n-1). Checked against the direct oracle.
    for (std::uint64_t n = 2; n <= 50; ++n) {
      const EmpiricalDistribution d = arc_flag_distribution(carousel(2 * n + 1), FlagCombo::C);
      const double ks = ks_distance(d, ReferenceDistribution::uniform(0.5));
      const double nd = static_cast<double>(n);
      CHECK(ks == doctest::Approx(ks_oracle(expand(d), 0.5)).epsilon(1e-12));
      CHECK(std::abs(ks - (3 * nd - 2) / (nd * (2 * nd - 1))) < 1e-12);
    }
  }

  TEST_CASE("arc sums match triangle counts") {
    Rng rng(23);
    for (int trial = 0; trial < 40; ++trial) {
      const Tournament t = oracle::random_tournament(3 + rng.below(80), rng);
      const TripleCounts tc = triple_counts(t);
      const ArcFlagDistributions d = all_arc_flag_distributions(t);
      CHECK(d[FlagCombo::TR].sum() == tc.tr3);
      CHECK(d[FlagCombo::O].sum() == tc.tr3);
      CHECK(d[FlagCombo::I].sum() == tc.tr3);
      CHECK(d[FlagCombo::C].sum() == 3 * static_cast<uint128>(tc.c3));
    }
  }

  TEST_CASE("factorial-moment identities hold by brute force on every tournament of order <= 7") {
    // Independent of the kernels: per-arc counts and 4-set classes are both
    // taken from the oracle. Σc(c-1) = 2 r4, Σf(f-1) = 2 tr4 for f in {o,i,tr},
    // Σ(o+i)(o+i-1) = 6 tr4 + 2 r4, Σ(c+tr)(c+tr-1) = 2 tr4 + 6 r4.
    const auto classes = oracle::isomorphism_classes(7);
    CHECK(classes[7].size() == 456);
    for (int n = 4; n <= 7; ++n)
      for (const auto& s : classes[n]) {
        const Tournament t = oracle::to_tournament(s);
        const QuadCounts q = oracle::quads(t);
        const auto f = oracle::falling_sums(t);
        REQUIRE(f[0] == 2 * q.tr4);
        REQUIRE(f[1] == 2 * q.tr4);
        REQUIRE(f[2] == 2 * q.tr4);
        REQUIRE(f[3] == 2 * q.r4);
        REQUIRE(f[4] == 6 * q.tr4 + 2 * q.r4);
        REQUIRE(f[5] == 2 * q.tr4 + 6 * q.r4);
        // chain rule: 4 c3 = C(n,3) (1 + (r4 - tr4) / C(n,4))
        const auto c3 = static_cast<std::int64_t>(oracle::triples(t).c3);
        const auto b3 = static_cast<std::int64_t>(oracle::choose(n, 3));
        const auto b4 = static_cast<std::int64_t>(oracle::choose(n, 4));
        REQUIRE(4 * c3 * b4 == b3 * (b4 + static_cast<std::int64_t>(q.r4) - static_cast<std::int64_t>(q.tr4)));
      }
  }

  TEST_CASE("isomorphism class counts") {
    const auto classes = oracle::isomorphism_classes(7);
    CHECK(classes[3].size() == 2);
    CHECK(classes[4].size() == 4);
    CHECK(classes[5].size() == 12);
    CHECK(classes[6].size() == 56);
  }

  TEST_CASE("no tournament of odd order has more 3-cycles than the carousel") {
    Rng rng(31);
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t m = 5 + 2 * rng.below(40);
      const Tournament t = oracle::random_tournament(m, rng);
      CHECK(triple_counts(t).c3 <= triple_counts(carousel(m)).c3);
    }
    for (const auto& s : oracle::isomorphism_classes(7)[7])
      CHECK(triple_counts(oracle::to_tournament(s)).c3 <= triple_counts(carousel(7)).c3);
  }

  TEST_CASE("flag names round-trip") {
    for (FlagCombo f : kAllFlagCombos) CHECK(parse_flag(flag_name(f)) == f);
    CHECK_THROWS_AS(parse_flag("x"), Error);
  }
}
