#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "trisub/error.hpp"
#include "trisub/hyptrig.hpp"
#include "trisub/subdivision.hpp"
#include "trisub/verify.hpp"
#include "verify_internal.hpp"

namespace trisub::verify {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr const char* kSlotNames[3] = {"a", "b", "c"};

bool is_midline_slot(Letter l, std::size_t slot) {
    return l == Letter::M || static_cast<std::size_t>(l) == slot;
}

// ln cosh(x) = log1p(2 sinh^2(x/2)).
double ln_cosh(double x) {
    const double s = std::sinh(x / 2);
    return std::log1p(2 * s * s);
}

double sum_sinh_half_sq(const EdgeLengths& e) {
    double sum = 0;
    for (std::size_t i = 0; i < 3; ++i) {
        const double s = std::sinh(e[i] / 2);
        sum += s * s;
    }
    return sum;
}

nlohmann::json orbit_input(const EdgeLengths& start, const Word& word) {
    return {{"edges", edges_json(start)}, {"word", to_string(word)}};
}

// Extended-precision re-evaluation of one subdivision step. Angles of tiny,
// nearly flat triangles lose more than the allowance in double, so the
// per-step angle ratio is judged from the exact double parent edges with
// the same cancellation-free formulas in long double.
using Triple = std::array<long double, 3>;

long double angle_ld(long double opp, long double adj1, long double adj2) {
    const long double sa = std::sinh(opp / 2);
    const long double sb = std::sinh(adj1 / 2);
    const long double sc = std::sinh(adj2 / 2);
    const long double num = sb * sb + sc * sc - sa * sa + 2 * sb * sb * sc * sc;
    const long double p = std::sinh((opp + adj1 + adj2) / 2) * std::sinh((adj1 + adj2 - opp) / 2) *
                          std::sinh((opp - adj1 + adj2) / 2) * std::sinh((opp + adj1 - adj2) / 2);
    return std::atan2(std::sqrt(p > 0 ? p : 0.0L), num);
}

Triple angles_ld(const Triple& e) {
    return {angle_ld(e[0], e[1], e[2]), angle_ld(e[1], e[2], e[0]), angle_ld(e[2], e[0], e[1])};
}

Triple child_ld(Letter l, const Triple& e) {
    const long double t = std::tanh((e[0] + e[1] + e[2]) / 4) * std::tanh((e[0] + e[1] - e[2]) / 4) *
                          std::tanh((e[2] + e[0] - e[1]) / 4) * std::tanh((e[1] + e[2] - e[0]) / 4);
    Triple out{};
    for (std::size_t i = 0; i < 3; ++i) {
        if (is_midline_slot(l, i)) {
            const long double q = std::sinh(e[i] / 4);
            const long double h = q * q;
            out[i] = 2 * std::asinh(std::sqrt((h - t * (1 + h)) / (1 + t)));
        } else {
            out[i] = e[i] / 2;
        }
    }
    return out;
}

}  // namespace

Report run_lemma21(const SampleSpec& spec, double halving_factor) {
    spec.validate();
    Report r;
    r.suite = "lemma21";
    r.samples = spec.samples;
    const double envelope = std::exp(-1.5);
    double max_ratio = 0;
    double min_rel_deficit = kInf;
    double min_envelope_ratio = kInf;
    std::size_t halving_checks = 0;
    std::size_t envelope_checks = 0;
    std::size_t halving_failures = 0;
    std::size_t envelope_failures = 0;

    for (std::size_t i = 0; i < spec.samples; ++i) {
        SampleRng rng(spec.seed, i);
        const EdgeLengths start = random_triangle(rng, spec.edge_lo, spec.edge_hi);
        const Word word = random_word(rng, spec.steps);

        EdgeLengths cur = start;
        for (std::size_t n = 0; n < word.size(); ++n) {
            const hyptrig::MedialData md = hyptrig::medial_data(cur);
            const EdgeLengths child = subdivision::child_edges(word[n], cur);
            for (std::size_t j = 0; j < 3; ++j) {
                const double parent_s = std::sinh(cur[j] / 2);
                const double child_s = std::sinh(child[j] / 2);
                const double ratio = child_s / parent_s;
                max_ratio = std::max(max_ratio, ratio);
                ++halving_checks;
                if (child_s > halving_factor * parent_s * (1 + kEvalAllowance)) {
                    ++halving_failures;
                    r.fail({orbit_input(start, word), static_cast<long>(n + 1), ratio, halving_factor,
                            std::string("halving of sinh(") + kSlotNames[j] + "/2)"});
                }
                if (halving_factor == 0.5) {
                    const double deficit = is_midline_slot(word[n], j)
                                               ? hyptrig::halving_deficit_midline(cur[j], child[j], md)
                                               : hyptrig::halving_deficit_half_edge(cur[j]);
                    min_rel_deficit = std::min(min_rel_deficit, deficit / parent_s);
                    if (!(deficit > 0)) {
                        ++halving_failures;
                        r.fail({orbit_input(start, word), static_cast<long>(n + 1), deficit, 0.0,
                                std::string("strict halving deficit of ") + kSlotNames[j]});
                    }
                }
            }
            cur = child;
        }

        const EdgeLengths base = burn_in(start, spec.sigma, rng);
        const Word tail = random_word(rng, spec.steps);
        EdgeLengths e = base;
        for (std::size_t n = 0; n <= tail.size(); ++n) {
            for (std::size_t j = 0; j < 3; ++j) {
                const double s0 = std::sinh(base[j] / 2);
                const double sn = std::sinh(e[j] / 2);
                const double bound = envelope * std::ldexp(s0, -static_cast<int>(n));
                ++envelope_checks;
                min_envelope_ratio = std::min(min_envelope_ratio, sn / std::ldexp(s0, -static_cast<int>(n)));
                if (!(sn > bound)) {
                    ++envelope_failures;
                    r.fail({orbit_input(base, tail), static_cast<long>(n), sn, bound,
                            std::string("lower envelope of sinh(") + kSlotNames[j] + "/2)"});
                }
            }
            if (n < tail.size()) e = subdivision::child_edges(tail[n], e);
        }
    }
    r.stats = {{"halving_factor", halving_factor},
               {"halving_checks", halving_checks},
               {"halving_failures", halving_failures},
               {"max_halving_ratio", max_ratio},
               {"min_relative_deficit", min_rel_deficit},
               {"envelope_constant", envelope},
               {"envelope_checks", envelope_checks},
               {"envelope_failures", envelope_failures},
               {"min_envelope_ratio", min_envelope_ratio}};
    return r;
}

Report run_area_bounds(const SampleSpec& spec, double upper_factor) {
    spec.validate();
    Report r;
    r.suite = "area";
    r.samples = spec.samples;
    const double lower_const = std::exp(-0.5);
    double min_scaled = kInf;
    double max_scaled = 0;
    for (std::size_t i = 0; i < spec.samples; ++i) {
        SampleRng rng(spec.seed, i);
        const EdgeLengths start = random_triangle(rng, spec.edge_lo, spec.edge_hi);
        const EdgeLengths base = burn_in(start, spec.sigma, rng, Letter::M);
        const double s0 = hyptrig::sin_half_area(base);
        EdgeLengths e = base;
        for (std::size_t n = 0; n <= spec.steps; ++n) {
            const double ratio = hyptrig::sin_half_area(e) / s0;
            const double q = std::ldexp(1.0, -2 * static_cast<int>(n));
            min_scaled = std::min(min_scaled, ratio / q);
            max_scaled = std::max(max_scaled, ratio / q);
            const nlohmann::json input = {{"edges", edges_json(base)}, {"letter", "M"}};
            if (ratio < lower_const * q * (1 - kEvalAllowance)) {
                r.fail({input, static_cast<long>(n), ratio, lower_const * q, "lower area bound"});
            }
            if (ratio > upper_factor * q * (1 + kEvalAllowance)) {
                r.fail({input, static_cast<long>(n), ratio, upper_factor * q, "upper area bound"});
            }
            e = subdivision::child_edges(Letter::M, e);
        }
    }
    r.stats = {{"upper_factor", upper_factor},
               {"lower_constant", lower_const},
               {"min_ratio_times_4n", min_scaled},
               {"max_ratio_times_4n", max_scaled}};
    return r;
}

Report run_ratio_limit(const SampleSpec& spec, double lo, double hi) {
    spec.validate();
    if (lo == 0.0 && hi == 0.0) {
        lo = std::exp(-0.5);
        hi = std::exp(0.5);
    }
    Report r;
    r.suite = "ratiolimit";
    r.samples = spec.samples;
    double min_r80 = kInf;
    double max_r80 = 0;
    double max_gap = 0;
    for (std::size_t i = 0; i < spec.samples; ++i) {
        SampleRng rng(spec.seed, i);
        const EdgeLengths start = random_triangle(rng, spec.edge_lo, spec.edge_hi);
        const EdgeLengths base = burn_in(start, spec.sigma, rng, Letter::M);
        const double s0 = hyptrig::sin_half_area(base);
        EdgeLengths e = base;
        double r40 = 0;
        double r80 = 0;
        for (int n = 0; n <= 80; ++n) {
            if (n == 40) r40 = std::ldexp(hyptrig::sin_half_area(e) / s0, 2 * n);
            if (n == 80) r80 = std::ldexp(hyptrig::sin_half_area(e) / s0, 2 * n);
            if (n < 80) e = subdivision::child_edges(Letter::M, e);
        }
        const double gap = std::abs(r80 - r40);
        max_gap = std::max(max_gap, gap);
        min_r80 = std::min(min_r80, r80);
        max_r80 = std::max(max_r80, r80);
        const nlohmann::json input = {{"edges", edges_json(base)}, {"letter", "M"}};
        if (!(gap < 1e-10)) {
            r.fail({input, 80, gap, 1e-10, "|r_80 - r_40|"});
        }
        if (!(r80 > lo)) {
            r.fail({input, 80, r80, lo, "r_80 above lower end"});
        }
        if (!(r80 < hi)) {
            r.fail({input, 80, r80, hi, "r_80 below upper end"});
        }
    }
    r.stats = {{"interval", {lo, hi}}, {"min_r80", min_r80}, {"max_r80", max_r80}, {"max_gap_r80_r40", max_gap}};
    return r;
}

Report run_noncontraction() {
    Report r;
    r.suite = "noncontraction";
    r.samples = 1;
    constexpr double kMargin = 1e-12;
    const AngleShape fixed{std::numbers::pi / 3, std::numbers::pi / 3, std::numbers::pi / 3};

    const ShapeRecord witness = shape_from_edges({4, 4, 7});
    const ShapeRecord child = subdivision::apply(Letter::M, witness);
    const double d0 = metric_distance(witness.angles, fixed);
    const double d1 = metric_distance(child.angles, fixed);
    const nlohmann::json input = {{"edges", {4, 4, 7}}, {"letter", "M"}};
    auto require = [&](double gain, const char* what, double observed, double bound) {
        if (!(gain > kMargin)) {
            r.fail({input, 1, observed, bound, what});
        }
    };
    require(child.angles.C - witness.angles.C, "apex angle increases", child.angles.C, witness.angles.C);
    require(witness.angles.A - child.angles.A, "base angle A decreases", child.angles.A, witness.angles.A);
    require(witness.angles.B - child.angles.B, "base angle B decreases", child.angles.B, witness.angles.B);
    require(d1 - d0, "distance to (pi/3,pi/3,pi/3) increases", d1, d0);

    const ShapeRecord fixed_image = subdivision::apply(Letter::M, shape_from_angles(fixed));
    if (!(fixed_image.angles == fixed)) {
        r.fail({{{"angles", {fixed.A, fixed.B, fixed.C}}}, 1, metric_distance(fixed_image.angles, fixed), 0.0,
                "(pi/3,pi/3,pi/3) fixed by the medial map"});
    }

    // Observational channels, not asserted.
    const ShapeRecord equi = shape_from_edges({1, 1, 1});
    const ShapeRecord equi_child = subdivision::apply(Letter::M, equi);
    const ShapeRecord corner_child = subdivision::apply(Letter::A, witness);
    r.stats = {
        {"witness_angles", {witness.angles.A, witness.angles.B, witness.angles.C}},
        {"medial_angles", {child.angles.A, child.angles.B, child.angles.C}},
        {"distance_before", d0},
        {"distance_after", d1},
        {"equilateral_distance_before", metric_distance(equi.angles, fixed)},
        {"equilateral_distance_after", metric_distance(equi_child.angles, fixed)},
        {"corner_A_angles", {corner_child.angles.A, corner_child.angles.B, corner_child.angles.C}},
        {"corner_A_distance_after", metric_distance(corner_child.angles, fixed)},
    };
    return r;
}

Report run_eq1_probe(const SampleSpec& spec) {
    spec.validate();
    Report r;
    r.suite = "eq1probe";
    r.asserting = false;
    r.samples = spec.samples;
    std::vector<double> deltas;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    std::size_t used = 0;
    for (std::size_t i = 0; i < spec.samples; ++i) {
        SampleRng rng(spec.seed, i);
        const EdgeLengths e = random_triangle(rng, spec.edge_lo, spec.edge_hi);
        const AngleShape own = hyptrig::angles_from_edges(e);
        const AngleShape medial = hyptrig::angles_from_edges(subdivision::child_edges(Letter::M, e));
        double delta = 0;
        for (std::size_t j = 0; j < 3; ++j) {
            delta = std::max(delta, std::abs(own[j] - medial[j]));
        }
        deltas.push_back(delta);
        const double area = hyptrig::area_from_edges(e);
        if (delta > 0 && area > 0) {
            const double x = std::log(area);
            const double y = std::log(delta);
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
            ++used;
        }
    }
    std::sort(deltas.begin(), deltas.end());
    double slope = std::nan("");
    double intercept = std::nan("");
    if (used >= 2) {
        const double n = static_cast<double>(used);
        const double den = n * sxx - sx * sx;
        if (den != 0) {
            slope = (n * sxy - sx * sy) / den;
            intercept = (sy - slope * sx) / n;
        }
    }
    r.stats = {{"delta_min", deltas.front()},
               {"delta_median", deltas[deltas.size() / 2]},
               {"delta_max", deltas.back()},
               {"log_delta_vs_log_area_slope", slope},
               {"log_delta_vs_log_area_intercept", intercept},
               {"fitted_points", used}};
    return r;
}

Report run_cauchy_bound(const SampleSpec& spec, double bound_scale) {
    spec.validate();
    Report r;
    r.suite = "cauchy";
    r.samples = spec.samples;
    double max_used = 0;  // largest observed / bound over pairs resolvable above the allowance
    std::size_t pairs = 0;
    double min_limit_angle = kInf;
    for (std::size_t i = 0; i < spec.samples; ++i) {
        SampleRng rng(spec.seed, i);
        const EdgeLengths start = random_triangle(rng, spec.edge_lo, spec.edge_hi);
        const EdgeLengths base = burn_in(start, spec.sigma, rng);
        const Word word = random_word(rng, spec.steps);
        const auto trace = subdivision::orbit(word, shape_from_edges(base));
        const double budget = sum_sinh_half_sq(base);
        const std::size_t len = trace.steps.size();
        for (std::size_t slot = 0; slot < 3; ++slot) {
            std::vector<double> rho(len);
            for (std::size_t n = 0; n < len; ++n) {
                rho[n] = std::log(std::sin(trace.steps[n].shape.angles[slot]));
            }
            for (std::size_t n = 0; n < len; ++n) {
                const double bound = bound_scale * std::ldexp(budget, -static_cast<int>(n));
                for (std::size_t k = 0; n + k < len; ++k) {
                    const double obs = std::abs(rho[n + k] - rho[n]);
                    ++pairs;
                    if (obs > kEvalAllowance) max_used = std::max(max_used, obs / bound);
                    if (obs > bound + kEvalAllowance) {
                        r.fail({{{"edges", edges_json(base)}, {"word", to_string(word)}, {"slot", kSlotNames[slot]},
                                 {"k", k}},
                                static_cast<long>(n), obs, bound, "Cauchy bound on ln sin"});
                    }
                }
            }
        }

        const Word cycle = random_word(rng, 1 + rng.index(4));
        const auto lim = subdivision::limit_shape(symbolic::SymbolSequence({}, cycle), shape_from_edges(start));
        const double min_angle = std::min({lim.angles.A, lim.angles.B, lim.angles.C});
        min_limit_angle = std::min(min_limit_angle, min_angle);
        if (!(min_angle > 0)) {
            r.fail({{{"edges", edges_json(start)}, {"cycle", to_string(cycle)}}, static_cast<long>(lim.iterations),
                    min_angle, 0.0, "nondegenerate limit"});
        }
    }
    r.stats = {{"bound_scale", bound_scale},
               {"pairs", pairs},
               {"max_observed_over_bound", max_used},
               {"min_limit_angle", min_limit_angle}};
    return r;
}

Report run_angle_ratio(const SampleSpec& spec, bool inverted) {
    spec.validate();
    Report r;
    r.suite = "angleratio";
    r.samples = spec.samples;
    std::size_t checks = 0;
    std::size_t unresolved = 0;  // steps whose bound gap is below the allowance
    for (std::size_t i = 0; i < spec.samples; ++i) {
        SampleRng rng(spec.seed, i);
        const EdgeLengths start = random_triangle(rng, spec.edge_lo, spec.edge_hi);
        const Word word = random_word(rng, spec.steps);
        EdgeLengths e = start;
        for (std::size_t n = 0; n < word.size(); ++n) {
            const Triple parent{e.a, e.b, e.c};
            const Triple before = angles_ld(parent);
            const Triple after = angles_ld(child_ld(word[n], parent));
            for (std::size_t slot = 0; slot < 3; ++slot) {
                const double own = e[slot];
                const double adj1 = e[(slot + 1) % 3];
                const double adj2 = e[(slot + 2) % 3];
                const double lower = -ln_cosh(own / 2);
                const double upper = ln_cosh(adj1 / 2) + ln_cosh(adj2 / 2);
                const double d = static_cast<double>(std::log(std::sin(after[slot])) - std::log(std::sin(before[slot])));
                ++checks;
                if (-lower < kEvalAllowance || upper < kEvalAllowance) ++unresolved;
                const nlohmann::json input = {
                    {"edges", edges_json(start)}, {"word", to_string(word)}, {"slot", kSlotNames[slot]}};
                if (inverted) {
                    if (d > lower + kEvalAllowance) {
                        r.fail({input, static_cast<long>(n + 1), d, lower, "inverted: ratio below 1/cosh"});
                    }
                    continue;
                }
                if (d < lower - kEvalAllowance) {
                    r.fail({input, static_cast<long>(n + 1), d, lower, "ln ratio above -ln cosh(x/2)"});
                }
                if (d > upper + kEvalAllowance) {
                    r.fail({input, static_cast<long>(n + 1), d, upper, "ln ratio below ln cosh + ln cosh"});
                }
            }
            e = subdivision::child_edges(word[n], e);
        }
    }
    r.stats = {{"inverted", inverted}, {"checks", checks}, {"unresolved_below_allowance", unresolved}};
    return r;
}

}  // namespace trisub::verify
