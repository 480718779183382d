#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "trisub/error.hpp"
#include "trisub/subdivision.hpp"
#include "trisub/verify.hpp"
#include "verify_internal.hpp"

namespace trisub::verify {

namespace {

constexpr double kPi = std::numbers::pi;

// Noise floor of limit_shape outputs at its default tolerance.
constexpr double kLimitNoise = 1e-12;

nlohmann::json angles_json(const AngleShape& s) { return nlohmann::json::array({s.A, s.B, s.C}); }

AngleShape limit_of(const symbolic::SymbolSequence& seq, const AngleShape& start) {
    return subdivision::limit_shape(seq, shape_from_angles(start)).angles;
}

std::array<double, 3> unit_direction(SampleRng& rng) {
    for (;;) {
        std::array<double, 3> d{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
        const double n = std::sqrt(d[0] * d[0] + d[1] * d[1] + d[2] * d[2]);
        if (n > 0.1 && n <= 1) {
            for (auto& x : d) x /= n;
            return d;
        }
    }
}

bool is_hyperbolic_shape(const AngleShape& s) {
    return s.A > 0 && s.B > 0 && s.C > 0 && s.sum() < kPi - kEuclideanTolerance;
}

}  // namespace

Report run_continuity(const symbolic::SymbolSequence& seq, const ShapeRecord& base, std::span<const double> radii,
                      const ContinuityOptions& opts) {
    if (base.is_euclidean()) {
        throw DomainError("continuity probe needs a hyperbolic base shape");
    }
    if (radii.empty()) {
        throw DomainError("continuity probe needs at least one radius");
    }
    Report r;
    r.suite = "continuity";
    r.samples = opts.directions;
    const AngleShape base_limit = subdivision::limit_shape(seq, base).angles;
    const nlohmann::json input = {{"seq", seq.to_string()}, {"base", angles_json(base.angles)}};

    std::vector<std::array<double, 3>> dirs;
    for (std::size_t d = 0; d < opts.directions; ++d) {
        SampleRng rng(opts.seed, d);
        dirs.push_back(unit_direction(rng));
    }

    nlohmann::json sups = nlohmann::json::array();
    std::vector<double> sup_values;
    std::size_t skipped = 0;
    for (std::size_t k = 0; k < radii.size(); ++k) {
        const double rad = radii[k];
        double sup = 0;
        for (const auto& d : dirs) {
            const AngleShape p{base.angles.A + rad * d[0], base.angles.B + rad * d[1], base.angles.C + rad * d[2]};
            if (!is_hyperbolic_shape(p)) {
                ++skipped;
                continue;
            }
            sup = std::max(sup, metric_distance(limit_of(seq, p), base_limit));
        }
        sup_values.push_back(sup);
        sups.push_back({{"radius", rad}, {"sup_deviation", sup}});
        if (k > 0 && sup > sup_values[k - 1] + kLimitNoise) {
            r.fail({input, static_cast<long>(k), sup, sup_values[k - 1], "sup deviation nonincreasing in radius"});
        }
    }
    if (sup_values.size() > 1 && sup_values.back() > sup_values.front() * 1e-3 + kLimitNoise) {
        r.fail({input, static_cast<long>(sup_values.size() - 1), sup_values.back(), sup_values.front() * 1e-3,
                "sup deviation decays by 1e3 over the radii"});
    }

    nlohmann::json envelope = nlohmann::json::array();
    const bool irrational = symbolic::classify(seq) == symbolic::Rationality::irrational;
    std::vector<double> env_values;
    for (std::size_t di = 0; di < opts.depths.size(); ++di) {
        const std::size_t depth = opts.depths[di];
        double worst = 0;
        for (std::size_t t = 0; t < opts.tails_per_depth; ++t) {
            SampleRng rng(opts.seed + 1000 + depth, t);
            Word prefix;
            for (std::size_t i = 0; i < depth; ++i) prefix.push_back(seq.at(i));
            const Word extra = random_word(rng, rng.index(4));
            prefix.insert(prefix.end(), extra.begin(), extra.end());
            const symbolic::SymbolSequence other(prefix, random_word(rng, 1 + rng.index(3)));
            worst = std::max(worst, metric_distance(subdivision::limit_shape(other, base).angles, base_limit));
        }
        env_values.push_back(worst);
        envelope.push_back({{"depth", depth}, {"max_deviation", worst}});
        if (!irrational) continue;
        if (di > 0 && worst > env_values[di - 1] + kLimitNoise) {
            r.fail({input, static_cast<long>(depth), worst, env_values[di - 1],
                    "shared-prefix envelope nonincreasing in depth"});
        }
    }
    if (irrational && !env_values.empty() && !(env_values.back() < 1e-6)) {
        r.fail({input, static_cast<long>(opts.depths.back()), env_values.back(), 1e-6,
                "shared-prefix envelope at the deepest depth"});
    }

    r.stats = {{"radii", sups},
               {"skipped_non_hyperbolic", skipped},
               {"prefix_envelope", envelope},
               {"envelope_asserted", irrational},
               {"base_limit", angles_json(base_limit)}};
    return r;
}

InversionResult invert_limit(const symbolic::SymbolSequence& seq, const AngleShape& target,
                             const InversionOptions& opts, std::optional<AngleShape> initial) {
    if (!(opts.defect > 0) || !(opts.defect < kPi)) {
        throw DomainError("inversion slice defect must lie in (0, pi)");
    }
    const double total = kPi - opts.defect;
    const double scale = total / kPi;
    InversionResult res;
    res.start = initial ? *initial : AngleShape{target.A * scale, target.B * scale, total - target.A * scale - target.B * scale};
    const double stop = opts.target_residual * 1e-3;
    for (std::size_t it = 0;; ++it) {
        const AngleShape phi = limit_of(seq, res.start);
        res.residual = metric_distance(phi, target);
        res.iterations = it;
        if (res.residual < stop || it >= opts.max_iterations) break;
        AngleShape next = res.start;
        next.A += (target.A - phi.A) * scale;
        next.B += (target.B - phi.B) * scale;
        next.C = total - next.A - next.B;
        if (!(next.A > 0 && next.B > 0 && next.C > 0)) break;
        res.start = next;
    }
    res.converged = res.residual < opts.target_residual;
    return res;
}

std::vector<AngleShape> euclidean_grid(std::size_t grid) {
    if (grid < 2) {
        throw DomainError("grid must be at least 2");
    }
    std::vector<AngleShape> out;
    for (std::size_t i = 0; i < grid; ++i) {
        const double x = (static_cast<double>(i) + 0.5) / static_cast<double>(grid);
        const double rx = std::sqrt(x);
        for (std::size_t j = 0; j < grid; ++j) {
            const double y = (static_cast<double>(j) + 0.5) / static_cast<double>(grid);
            const double a = kPi * (1 - rx);
            const double b = kPi * rx * (1 - y);
            out.push_back({a, b, kPi - a - b});
        }
    }
    return out;
}

Report run_surjectivity(const symbolic::SymbolSequence& seq, std::size_t grid, const InversionOptions& opts) {
    Report r;
    r.suite = "surjectivity";
    const auto targets = euclidean_grid(grid);
    r.samples = targets.size();
    nlohmann::json rows = nlohmann::json::array();
    double max_residual = 0;
    std::size_t max_iterations = 0;
    for (std::size_t i = 0; i < targets.size(); ++i) {
        const InversionResult inv = invert_limit(seq, targets[i], opts);
        max_residual = std::max(max_residual, inv.residual);
        max_iterations = std::max(max_iterations, inv.iterations);
        rows.push_back({{"target", angles_json(targets[i])},
                        {"start", angles_json(inv.start)},
                        {"residual", inv.residual},
                        {"iterations", inv.iterations}});
        if (!inv.converged) {
            r.fail({{{"seq", seq.to_string()}, {"target", angles_json(targets[i])}},
                    static_cast<long>(inv.iterations), inv.residual, opts.target_residual, "inversion residual"});
        }
    }
    r.stats = {{"grid", grid},
               {"defect", opts.defect},
               {"max_residual", max_residual},
               {"max_iterations", max_iterations},
               {"targets", rows}};
    return r;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"lemma21",  "area",           "ratiolimit", "cauchy",      "angleratio",
                                                "noncontraction", "eq1probe", "continuity", "surjectivity"};
    return names;
}

Report run_named(const std::string& name, std::optional<std::uint64_t> seed, std::optional<std::size_t> samples) {
    auto spec_for = [&](std::uint64_t s, std::size_t n, std::size_t steps) {
        SampleSpec spec;
        spec.seed = seed.value_or(s);
        spec.samples = samples.value_or(n);
        spec.steps = steps;
        return spec;
    };
    if (name == "lemma21") return run_lemma21(spec_for(1, 200, 40));
    if (name == "area") return run_area_bounds(spec_for(2, 200, 30));
    if (name == "ratiolimit") return run_ratio_limit(spec_for(3, 100, 80));
    if (name == "cauchy") return run_cauchy_bound(spec_for(4, 200, 40));
    if (name == "angleratio") return run_angle_ratio(spec_for(6, 200, 40));
    if (name == "noncontraction") return run_noncontraction();
    if (name == "eq1probe") return run_eq1_probe(spec_for(7, 200, 1));
    if (name == "continuity") {
        ContinuityOptions opts;
        if (seed) opts.seed = *seed;
        if (samples) opts.directions = *samples;
        const std::vector<double> radii{1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6};
        return run_continuity(symbolic::parse_seq("|M"), shape_from_edges({1, 1, 1}), radii, opts);
    }
    if (name == "surjectivity") return run_surjectivity(symbolic::parse_seq("|M"), 5);
    throw DomainError("unknown suite '" + name + "'");
}

}  // namespace trisub::verify
