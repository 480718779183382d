#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "trisub/error.hpp"
#include "trisub/format.hpp"
#include "trisub/subdivision.hpp"
#include "trisub/verify.hpp"

using namespace trisub;
using namespace trisub::verify;

namespace {

SampleSpec spec(std::uint64_t seed, std::size_t samples, std::size_t steps) {
    SampleSpec s;
    s.seed = seed;
    s.samples = samples;
    s.steps = steps;
    return s;
}

void require_counterexample(const Report& r) {
    CHECK_FALSE(r.pass);
    REQUIRE_FALSE(r.failures.empty());
    CHECK(r.failure_count >= r.failures.size());
    CHECK_FALSE(r.failures.front().check.empty());
    CHECK_FALSE(r.failures.front().input.is_null());
}

}  // namespace

TEST_CASE("sample spec validation") {
    SampleSpec s;
    CHECK_NOTHROW(s.validate());
    s.edge_lo = 0;
    CHECK_THROWS_AS(s.validate(), DomainError);
    s = SampleSpec{};
    s.samples = 0;
    CHECK_THROWS_AS(s.validate(), DomainError);
    s = SampleSpec{};
    s.sigma = 1.5;
    CHECK_THROWS_AS(s.validate(), DomainError);
}

TEST_CASE("sampling is a pure function of seed and index") {
    SampleRng a(9, 3);
    SampleRng b(9, 3);
    SampleRng c(9, 4);
    const EdgeLengths ea = random_triangle(a, 0.01, 5);
    const EdgeLengths eb = random_triangle(b, 0.01, 5);
    const EdgeLengths ec = random_triangle(c, 0.01, 5);
    CHECK(ea == eb);
    CHECK_FALSE(ea == ec);
    CHECK(to_string(random_word(a, 10)) == to_string(random_word(b, 10)));
}

TEST_CASE("burn-in brings every sinh(edge/2) below sigma") {
    SampleRng rng(1, 0);
    const EdgeLengths e = burn_in({5, 4.5, 4.8}, 1.0, rng);
    for (std::size_t i = 0; i < 3; ++i) CHECK(std::sinh(e[i] / 2) < 1.0);
    const EdgeLengths small{0.1, 0.1, 0.1};
    CHECK(burn_in(small, 1.0, rng) == small);
}

TEST_CASE("edge halving suite") {
    const Report r = run_lemma21(spec(1, 200, 40));
    CHECK(r.pass);
    CHECK(r.failure_count == 0);
    CHECK(r.stats["max_halving_ratio"].get<double>() <= 0.5 * (1 + kEvalAllowance));
    CHECK(r.stats["min_envelope_ratio"].get<double>() > std::exp(-1.5));
}

TEST_CASE("edge halving near the Euclidean limit") {
    SampleSpec s = spec(8, 20, 10);
    s.edge_lo = 1e-6;
    s.edge_hi = 2e-6;
    const Report r = run_lemma21(s);
    CHECK(r.pass);
    CHECK(r.stats["max_halving_ratio"].get<double>() == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("edge halving sanity inversion") { require_counterexample(run_lemma21(spec(1, 20, 10), 0.49)); }

TEST_CASE("area decay suite and its inversion") {
    CHECK(run_area_bounds(spec(2, 200, 30)).pass);
    require_counterexample(run_area_bounds(spec(2, 20, 30), 0.99));
}

TEST_CASE("area ratio of a small equilateral start is 4^-n to first order") {
    SampleSpec s = spec(2, 5, 20);
    s.edge_lo = 1e-4;
    s.edge_hi = 1.0001e-4;
    const Report r = run_area_bounds(s);
    CHECK(r.pass);
    CHECK(r.stats["min_ratio_times_4n"].get<double>() == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("area ratio limit suite") {
    const Report r = run_ratio_limit(spec(3, 100, 80));
    CHECK(r.pass);
    CHECK(r.stats["max_gap_r80_r40"].get<double>() < 1e-10);
}

TEST_CASE("area ratio limit is nontrivial") {
    // Tight interval around 1 fails for large starts.
    require_counterexample(run_ratio_limit(spec(3, 100, 80), 0.95, 1.05));
    SampleSpec tiny = spec(3, 3, 80);
    tiny.edge_lo = 1e-5;
    tiny.edge_hi = 1.00001e-5;
    const Report r = run_ratio_limit(tiny);
    CHECK(r.stats["min_r80"].get<double>() == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("non-contraction witness") {
    const Report r = run_noncontraction();
    CHECK(r.pass);
    CHECK(r.stats["distance_after"].get<double>() > r.stats["distance_before"].get<double>());
    // Equilateral starts move toward the fixed point.
    CHECK(r.stats["equilateral_distance_after"].get<double>() < r.stats["equilateral_distance_before"].get<double>());
    CHECK(r.stats.contains("corner_A_angles"));
}

TEST_CASE("medial angle probe is diagnostic") {
    const Report r = run_eq1_probe(spec(7, 100, 1));
    CHECK(r.pass);
    CHECK_FALSE(r.asserting);
    CHECK(std::isfinite(r.stats["log_delta_vs_log_area_slope"].get<double>()));

    SampleSpec tiny = spec(7, 20, 1);
    tiny.edge_lo = 1e-6;
    tiny.edge_hi = 2e-6;
    CHECK(run_eq1_probe(tiny).stats["delta_max"].get<double>() < 1e-9);

    SampleSpec one = spec(7, 1, 1);
    one.edge_lo = 1;
    one.edge_hi = 1 + 1e-12;
    CHECK(run_eq1_probe(one).stats["delta_min"].get<double>() > 0.01);
}

TEST_CASE("Cauchy bound suite") {
    const Report r = run_cauchy_bound(spec(4, 200, 40));
    CHECK(r.pass);
    CHECK(r.stats["min_limit_angle"].get<double>() > 0);
    // Observed deviations use well under half the bound, so the inversion
    // must shrink the bound further than 1/2 to bite.
    CHECK(r.stats["max_observed_over_bound"].get<double>() < 0.5);
    require_counterexample(run_cauchy_bound(spec(4, 200, 40), 0.25));
}

TEST_CASE("angle ratio suite and inversion") {
    CHECK(run_angle_ratio(spec(6, 200, 40)).pass);
    require_counterexample(run_angle_ratio(spec(6, 20, 10), true));
}

TEST_CASE("continuity probe on the medial sequence") {
    const std::vector<double> radii{1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6};
    const Report r = run_continuity(symbolic::parse_seq("|M"), shape_from_edges({1, 1, 1}), radii);
    CHECK(r.pass);
    CHECK(r.stats["envelope_asserted"].get<bool>());
    const auto& rows = r.stats["radii"];
    for (std::size_t k = 1; k < rows.size(); ++k) {
        CHECK(rows[k]["sup_deviation"].get<double>() <= rows[k - 1]["sup_deviation"].get<double>() + 1e-12);
    }
}

TEST_CASE("continuity at a rational sequence is recorded, not asserted") {
    const std::vector<double> radii{1e-2, 1e-4};
    const Report r = run_continuity(symbolic::parse_seq("|A"), shape_from_edges({1, 1.2, 1.4}), radii);
    CHECK_FALSE(r.stats["envelope_asserted"].get<bool>());
    CHECK(r.stats["prefix_envelope"].size() == 5);
    CHECK_THROWS_AS((void)run_continuity(symbolic::parse_seq("|M"), shape_from_angles({1, 1, std::numbers::pi - 2}),
                                         radii),
                    DomainError);
}

TEST_CASE("Euclidean grid") {
    const auto g = euclidean_grid(5);
    CHECK(g.size() == 25);
    for (const auto& t : g) {
        CHECK(t.sum() == doctest::Approx(std::numbers::pi).epsilon(1e-15));
        CHECK(t.A > 0);
        CHECK(t.B > 0);
        CHECK(t.C > 0);
    }
    CHECK_THROWS_AS((void)euclidean_grid(1), DomainError);
}

TEST_CASE("inversion hits a known image immediately") {
    const auto seq = symbolic::parse_seq("|M");
    const ShapeRecord known = shape_from_angles({0.5, 0.9, std::numbers::pi - 0.3 - 1.4});
    const AngleShape target = subdivision::limit_shape(seq, known).angles;
    const InversionResult r = invert_limit(seq, target, {}, known.angles);
    CHECK(r.converged);
    CHECK(r.iterations == 0);
    CHECK(r.residual < 1e-9);
}

TEST_CASE("inversion of a near-degenerate target does not throw") {
    const auto seq = symbolic::parse_seq("|M");
    const AngleShape target{1e-3, 1.0, std::numbers::pi - 1.001};
    InversionOptions opts;
    opts.max_iterations = 50;
    const InversionResult r = invert_limit(seq, target, opts);
    CHECK(std::isfinite(r.residual));
}

TEST_CASE("surjectivity probe") {
    const Report r = run_surjectivity(symbolic::parse_seq("|M"), 5);
    CHECK(r.pass);
    CHECK(r.stats["max_residual"].get<double>() < 1e-6);
    CHECK(r.stats["targets"].size() == 25);
}

TEST_CASE("named suites") {
    CHECK(suite_names().size() == 9);
    CHECK(run_named("noncontraction", std::nullopt, std::nullopt).pass);
    CHECK(run_named("lemma21", 5, 10).samples == 10);
    CHECK_THROWS_AS((void)run_named("nope", std::nullopt, std::nullopt), DomainError);
}

TEST_CASE("reports are deterministic and machine readable") {
    const auto a = dump_json(to_json(run_named("cauchy", 4, 20)));
    const auto b = dump_json(to_json(run_named("cauchy", 4, 20)));
    CHECK(a == b);
    const auto j = to_json(run_lemma21(spec(1, 5, 5), 0.49));
    CHECK(j["pass"] == false);
    CHECK(j["failures"][0].contains("observed"));
    CHECK(j["failures"][0].contains("bound"));
    CHECK(j["failures"][0].contains("step"));
    CHECK(j["failures"][0].contains("input"));
    CHECK(j["stats"]["failure_count"].get<std::size_t>() > 0);
}
