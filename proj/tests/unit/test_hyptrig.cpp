#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <string>

#include "naive.hpp"
#include "oracle_values.hpp"
#include "trisub/error.hpp"
#include "trisub/hyptrig.hpp"
#include "trisub/subdivision.hpp"

using namespace trisub;
using namespace trisub::hyptrig;

namespace {

EdgeLengths edges_of(const std::array<double, 3>& e) { return {e[0], e[1], e[2]}; }

bool rel_close(double got, double want, double rel) { return std::abs(got - want) <= rel * std::abs(want); }

}  // namespace

TEST_CASE("angles match the high-precision oracle to full relative precision") {
    for (const auto& c : oracle::kEdgeCases) {
        const AngleShape s = angles_from_edges(edges_of(c.edges));
        for (std::size_t i = 0; i < 3; ++i) {
            CHECK(rel_close(s[i], c.angles[i], 1e-13));
        }
    }
}

TEST_CASE("edges from angles match the oracle") {
    for (const auto& c : oracle::kAngleCases) {
        const EdgeLengths e = edges_from_angles({c.angles[0], c.angles[1], c.angles[2]});
        for (std::size_t i = 0; i < 3; ++i) {
            CHECK(rel_close(e[i], c.edges[i], 1e-13));
        }
    }
}

TEST_CASE("angles and edges round-trip") {
    const EdgeLengths e{0.8, 1.3, 1.7};
    const EdgeLengths back = edges_from_angles(angles_from_edges(e));
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(back[i] == doctest::Approx(e[i]).epsilon(1e-12));
    }
}

TEST_CASE("area from edges matches the defect, including for tiny triangles") {
    for (const auto& c : oracle::kEdgeCases) {
        CHECK(rel_close(area_from_edges(edges_of(c.edges)), c.area, 1e-12));
    }
    // The defect loses digits for a tiny triangle; the edge formula does not.
    const auto& tiny = oracle::kEdgeCases[4];
    const double via_defect = defect_area(angles_from_edges(edges_of(tiny.edges)));
    CHECK(rel_close(via_defect, tiny.area, 1e-8));
    CHECK(rel_close(area_from_edges(edges_of(tiny.edges)), tiny.area, 1e-13));
}

TEST_CASE("sin of half area keeps precision far below double epsilon areas") {
    const EdgeLengths e{1e-9, 1.2e-9, 1.5e-9};
    // Euclidean limit: area ~ Heron area of the edges.
    const double s = (1e-9 + 1.2e-9 + 1.5e-9) / 2;
    const double heron = std::sqrt(s * (s - 1e-9) * (s - 1.2e-9) * (s - 1.5e-9));
    CHECK(rel_close(2 * sin_half_area(e), heron, 1e-6));
    CHECK(area_from_edges(e) > 0);
}

TEST_CASE("defect area clamps tiny negative defects and rejects spherical sums") {
    CHECK(defect_area({1, 1, std::numbers::pi - 2 + 1e-12}) == 0.0);
    CHECK_THROWS_AS((void)defect_area({1, 1, 1.2}), DomainError);
}

TEST_CASE("medial data matches the oracle") {
    for (const auto& c : oracle::kEdgeCases) {
        const MedialData md = medial_data(edges_of(c.edges));
        CHECK(rel_close(md.mu, c.mu, 1e-14));
        for (std::size_t i = 0; i < 3; ++i) {
            CHECK(rel_close(md.m[i], c.m[i], 1e-13));
            CHECK(rel_close(md.l[i], c.l[i], 1e-12));
        }
    }
}

TEST_CASE("midlines are shorter than half the parallel edge") {
    for (const auto& c : oracle::kEdgeCases) {
        const MedialData md = medial_data(edges_of(c.edges));
        CHECK(md.m_a() < c.edges[0] / 2);
        CHECK(md.m_b() < c.edges[1] / 2);
        CHECK(md.m_c() < c.edges[2] / 2);
    }
}

TEST_CASE("Lambert quadrilateral relation sinh(x/2) = sinh(m) cosh(l)") {
    for (const auto& c : oracle::kEdgeCases) {
        const MedialData md = medial_data(edges_of(c.edges));
        for (std::size_t i = 0; i < 3; ++i) {
            CHECK(rel_close(std::sinh(md.m[i]) * std::cosh(md.l[i]), std::sinh(c.edges[i] / 2), 1e-12));
        }
    }
}

TEST_CASE("five area formulas agree") {
    for (const auto& c : oracle::kEdgeCases) {
        const EdgeLengths e = edges_of(c.edges);
        const AngleShape s = angles_from_edges(e);
        const EdgeLengths medial = subdivision::child_edges(Letter::M, e);
        const double alpha = angles_from_edges(medial).A;
        const MedialData md = medial_data(e);
        const double tol = 1e-12 * std::max(1.0, c.area) + (c.area < 1e-3 ? 1e-15 : 0);
        CHECK(std::abs(cagnoli_area(e, s.A) - c.area) <= tol);
        CHECK(std::abs(keogh_area(md.m_b(), md.m_c(), alpha) - c.area) <= tol);
        CHECK(std::abs(trace_parent_area(TraceCoords::from_edges(medial)) - c.area) <= tol);
        CHECK(std::abs(area_from_edges(e) - c.area) <= tol);
    }
}

TEST_CASE("trace identity from literal coordinates") {
    const EdgeLengths medial = subdivision::child_edges(Letter::M, {1.5, 2, 2.5});
    const auto raw = TraceCoords::from_raw(2 * std::cosh(medial.a), 2 * std::cosh(medial.b), 2 * std::cosh(medial.c));
    CHECK(trace_parent_area(raw) == doctest::Approx(area_from_edges({1.5, 2, 2.5})).epsilon(1e-10));
    CHECK_THROWS_AS((void)trace_parent_area(TraceCoords::from_raw(5, 5, 5)), InconsistentInput);
}

TEST_CASE("Cagnoli and Keogh reject arguments of no triangle") {
    CHECK_THROWS_AS((void)cagnoli_area({4, 4, 7}, std::numbers::pi / 2), InconsistentInput);
    CHECK_THROWS_AS((void)keogh_area(3, 3, 1), InconsistentInput);
}

TEST_CASE("law of sines ratio is shared by all three slots") {
    const EdgeLengths e{2, 3, 4};
    const AngleShape s = angles_from_edges(e);
    const double r = law_of_sines_ratio(e.a, s.A);
    CHECK(law_of_sines_ratio(e.b, s.B) == doctest::Approx(r).epsilon(1e-13));
    CHECK(law_of_sines_ratio(e.c, s.C) == doctest::Approx(r).epsilon(1e-13));
}

TEST_CASE("cos_angle agrees with the computed angle") {
    const EdgeLengths e{0.5, 0.7, 1.1};
    CHECK(cos_angle(e.a, e.b, e.c) == doctest::Approx(std::cos(angles_from_edges(e).A)).epsilon(1e-14));
}

TEST_CASE("edge validation names the offending edge") {
    CHECK_THROWS_WITH_AS(validate_edges({1, 1, 3}), doctest::Contains("edge c"), DomainError);
    CHECK_THROWS_WITH_AS(validate_edges({1, -1, 1}), doctest::Contains("edge b"), DomainError);
    CHECK_THROWS_WITH_AS(validate_edges({std::nan(""), 1, 1}), doctest::Contains("edge a"), DomainError);
    CHECK_THROWS_AS(validate_edges({1, 1, 2}), DomainError);
}

TEST_CASE("angles with sum at least pi are not hyperbolic") {
    CHECK_THROWS_WITH_AS((void)edges_from_angles({1, 1, std::numbers::pi - 2}), doctest::Contains("not hyperbolic"),
                         DomainError);
    CHECK_THROWS_AS((void)edges_from_angles({0, 1, 1}), DomainError);
}

TEST_CASE("halving deficits are positive and match the direct difference") {
    for (const auto& c : oracle::kEdgeCases) {
        const EdgeLengths e = edges_of(c.edges);
        const MedialData md = medial_data(e);
        for (std::size_t i = 0; i < 3; ++i) {
            const double x = e[i];
            const double half = halving_deficit_half_edge(x);
            const double mid = halving_deficit_midline(x, md.m[i], md);
            CHECK(half > 0);
            CHECK(mid > 0);
            if (x > 0.1) {
                CHECK(half == doctest::Approx(std::sinh(x / 2) / 2 - std::sinh(x / 4)).epsilon(1e-10));
                CHECK(mid == doctest::Approx(std::sinh(x / 2) / 2 - std::sinh(md.m[i] / 2)).epsilon(1e-10));
            }
        }
    }
}

TEST_CASE("agreement with the naive long double formulas at moderate sizes") {
    for (double a = 0.3; a < 4; a += 0.7) {
        for (double b = 0.4; b < 4; b += 0.9) {
            const double c = (a + b) * 0.7;
            if (std::abs(a - b) >= c) continue;
            const EdgeLengths e{a, b, c};
            const auto want = oracle::naive::angles({a, b, c});
            const auto want_m = oracle::naive::midlines({a, b, c});
            const AngleShape got = angles_from_edges(e);
            const MedialData md = medial_data(e);
            for (std::size_t i = 0; i < 3; ++i) {
                CHECK(got[i] == doctest::Approx(static_cast<double>(want[i])).epsilon(1e-11));
                CHECK(md.m[i] == doctest::Approx(static_cast<double>(want_m[i])).epsilon(1e-11));
            }
            CHECK(area_from_edges(e) ==
                  doctest::Approx(static_cast<double>(oracle::naive::area({a, b, c}))).epsilon(1e-11));
        }
    }
}

TEST_CASE("round trip over sampled angle triples") {
    std::uint64_t state = 12345;
    auto next = [&state] {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<double>(state >> 11) * 0x1.0p-53;
    };
    std::size_t tried = 0;
    while (tried < 1000) {
        const AngleShape s{0.01 + 2.5 * next(), 0.01 + 2.5 * next(), 0.01 + 2.5 * next()};
        if (!(s.sum() < std::numbers::pi - 1e-3)) continue;
        ++tried;
        const AngleShape back = angles_from_edges(edges_from_angles(s));
        for (std::size_t i = 0; i < 3; ++i) {
            REQUIRE(std::abs(back[i] - s[i]) <= 1e-10 * s[i]);
        }
    }
}

TEST_CASE("mu decreases as a triangle is scaled up") {
    const EdgeLengths base{0.3, 0.4, 0.5};
    double prev = medial_data(base).mu;
    for (double lambda = 1.25; lambda < 12; lambda *= 1.25) {
        const double mu = medial_data({base.a * lambda, base.b * lambda, base.c * lambda}).mu;
        CHECK(mu < prev);
        prev = mu;
    }
}

TEST_CASE("tiny triangles follow the Euclidean law of cosines") {
    const double a = 1e-6, b = 1.3e-6, c = 1.7e-6;
    const AngleShape s = angles_from_edges({a, b, c});
    CHECK(s.A == doctest::Approx(std::acos((b * b + c * c - a * a) / (2 * b * c))).epsilon(1e-6));
    CHECK(s.B == doctest::Approx(std::acos((c * c + a * a - b * b) / (2 * c * a))).epsilon(1e-6));
    CHECK(s.C == doctest::Approx(std::acos((a * a + b * b - c * c) / (2 * a * b))).epsilon(1e-6));
}
