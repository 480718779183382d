#include <cmath>
#include <numbers>

#include "trisub/error.hpp"
#include "trisub/format.hpp"
#include "trisub/subdivision.hpp"
#include "trisub/verify.hpp"
#include "verify_internal.hpp"

namespace trisub::verify {

void SampleSpec::validate() const {
    if (!(edge_lo > 0) || !(edge_hi > edge_lo)) {
        throw DomainError("sample spec: need 0 < edge_lo < edge_hi");
    }
    if (samples < 1) {
        throw DomainError("sample spec: samples must be at least 1");
    }
    if (!(sigma > 0) || sigma > 1) {
        throw DomainError("sample spec: sigma must lie in (0, 1]");
    }
}

void Report::fail(Failure f) {
    pass = false;
    ++failure_count;
    if (failures.size() < kMaxStoredFailures) {
        failures.push_back(std::move(f));
    }
}

nlohmann::json to_json(const Report& r) {
    nlohmann::json failures = nlohmann::json::array();
    for (const auto& f : r.failures) {
        failures.push_back({{"input", f.input}, {"step", f.step}, {"observed", f.observed}, {"bound", f.bound},
                            {"check", f.check}});
    }
    nlohmann::json stats = r.stats;
    stats["failure_count"] = r.failure_count;
    return {{"suite", r.suite},        {"pass", r.pass},         {"asserting", r.asserting},
            {"samples", r.samples},    {"failures", failures},   {"stats", stats}};
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

}  // namespace

SampleRng::SampleRng(std::uint64_t seed, std::uint64_t index)
    : engine_(splitmix64(splitmix64(seed) ^ (index * 0xD1B54A32D192ED03ULL))) {}

double SampleRng::uniform(double lo, double hi) {
    const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
}

std::size_t SampleRng::index(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }

EdgeLengths random_triangle(SampleRng& rng, double lo, double hi) {
    for (;;) {
        const EdgeLengths e{rng.uniform(lo, hi), rng.uniform(lo, hi), rng.uniform(lo, hi)};
        if (e.a < e.b + e.c && e.b < e.c + e.a && e.c < e.a + e.b && e.a > 0 && e.b > 0 && e.c > 0) {
            return e;
        }
    }
}

Word random_word(SampleRng& rng, std::size_t length) {
    Word w(length);
    for (auto& l : w) {
        l = kAllLetters[rng.index(4)];
    }
    return w;
}

EdgeLengths burn_in(const EdgeLengths& e, double sigma, SampleRng& rng, std::optional<Letter> letter) {
    EdgeLengths cur = e;
    auto above = [sigma](const EdgeLengths& x) {
        return std::sinh(x.a / 2) >= sigma || std::sinh(x.b / 2) >= sigma || std::sinh(x.c / 2) >= sigma;
    };
    // sinh(edge/2) at least halves per step, so 64 steps reach any sigma > 2^-50 from edges below 40.
    for (int guard = 0; above(cur); ++guard) {
        if (guard > 200) {
            throw ConvergenceFailure("burn_in: edges did not shrink below sigma");
        }
        cur = subdivision::child_edges(letter ? *letter : kAllLetters[rng.index(4)], cur);
    }
    return cur;
}

nlohmann::json edges_json(const EdgeLengths& e) { return nlohmann::json::array({e.a, e.b, e.c}); }

}  // namespace trisub::verify
