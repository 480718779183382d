#pragma once

// Executable checks of the quantitative bounds on subdivision orbits:
// edge halving and its lower envelope, the medial area decay and its limit
// ratio, the Cauchy estimate on ln sin of the angles, the per-step angle
// ratio, the (4,4,7) non-contraction witness, and numerical probes of the
// limit map's continuity and surjectivity.
//
// Floating-point comparisons of mathematically strict inequalities allow an
// evaluation slack of kEvalAllowance (relative for ratios, absolute for
// logarithms). Where the gap itself is below rounding, strictness is
// witnessed separately through cancellation-free closed forms.

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "trisub/letter.hpp"
#include "trisub/shape.hpp"
#include "trisub/symbolic.hpp"

namespace trisub::verify {

inline constexpr double kEvalAllowance = 64 * 2.220446049250313e-16;

struct SampleSpec {
    std::uint64_t seed = 1;
    std::size_t samples = 200;
    double edge_lo = 0.01;
    double edge_hi = 5.0;
    std::size_t steps = 40;
    /// Burn-in runs until every sinh(edge/2) is below sigma; at most 1.
    double sigma = 1.0;

    void validate() const;
};

struct Failure {
    nlohmann::json input;
    long step = -1;
    double observed = 0.0;
    double bound = 0.0;
    std::string check;
};

struct Report {
    std::string suite;
    bool pass = true;
    bool asserting = true;
    std::size_t samples = 0;
    std::vector<Failure> failures;
    std::size_t failure_count = 0;
    nlohmann::json stats = nlohmann::json::object();

    /// Records a violation; at most kMaxStoredFailures are kept verbatim.
    void fail(Failure f);
    static constexpr std::size_t kMaxStoredFailures = 25;
};

[[nodiscard]] nlohmann::json to_json(const Report& r);

/// Deterministic per-sample generator: the stream for sample i depends only
/// on (seed, i).
class SampleRng {
public:
    SampleRng(std::uint64_t seed, std::uint64_t index);
    /// Uniform on [lo, hi) from the top 53 bits of the engine output.
    double uniform(double lo, double hi);
    std::size_t index(std::size_t n);

private:
    std::mt19937_64 engine_;
};

/// Edges uniform in (lo, hi), rejected until they form a triangle.
[[nodiscard]] EdgeLengths random_triangle(SampleRng& rng, double lo, double hi);
[[nodiscard]] Word random_word(SampleRng& rng, std::size_t length);

/// Applies letters (random when `letter` is empty) until every
/// sinh(edge/2) < sigma. Returns the rebased edges.
[[nodiscard]] EdgeLengths burn_in(const EdgeLengths& e, double sigma, SampleRng& rng,
                                  std::optional<Letter> letter = std::nullopt);

/// Halving of sinh(edge/2) at every step of random orbits and, after
/// burn-in, the lower envelope e^{-3/2} 2^{-n} sinh(x_0/2).
/// `halving_factor` below 1/2 is the sanity inversion.
[[nodiscard]] Report run_lemma21(const SampleSpec& spec, double halving_factor = 0.5);

/// e^{-1/2} 4^{-n} <= sin(S_n/2)/sin(S_0/2) <= upper_factor * 4^{-n} along
/// medial orbits after burn-in.
[[nodiscard]] Report run_area_bounds(const SampleSpec& spec, double upper_factor = 1.0);

/// r_n = 4^n sin(S_n/2)/sin(S_0/2): |r_80 - r_40| < 1e-10 and r_80 in (lo, hi).
[[nodiscard]] Report run_ratio_limit(const SampleSpec& spec, double lo = 0.0, double hi = 0.0);

/// The (4,4,7) witness that the medial map is not a contraction.
[[nodiscard]] Report run_noncontraction();

/// Diagnostic: angles of a triangle against the law-of-cosines angles of its
/// medial triangle. Never fails.
[[nodiscard]] Report run_eq1_probe(const SampleSpec& spec);

/// |ln sin X_{n+k} - ln sin X_n| <= scale * 2^{-n} sum sinh^2(x_0/2) after
/// burn-in, for all three slots; also checks that every sampled limit shape
/// is nondegenerate.
[[nodiscard]] Report run_cauchy_bound(const SampleSpec& spec, double bound_scale = 1.0);

/// 1/cosh(a_n/2) < sin A_{n+1}/sin A_n < cosh(b_n/2) cosh(c_n/2) per slot.
/// `inverted` demands the ratio stay below the lower bound instead.
[[nodiscard]] Report run_angle_ratio(const SampleSpec& spec, bool inverted = false);

struct ContinuityOptions {
    std::uint64_t seed = 5;
    std::size_t directions = 16;
    std::vector<std::size_t> depths{2, 4, 8, 12, 16};
    std::size_t tails_per_depth = 12;
};

/// Part 1: sup deviation of the limit map over perturbations of radius r,
/// nonincreasing as r shrinks and decaying by at least 1e3 over the radii.
/// Part 2 (irrational seq only): sequences sharing N leading letters have
/// limits within an envelope that shrinks with N and ends below 1e-6.
[[nodiscard]] Report run_continuity(const symbolic::SymbolSequence& seq, const ShapeRecord& base,
                                    std::span<const double> radii, const ContinuityOptions& opts = {});

struct InversionOptions {
    double defect = 0.3;           ///< searched slice: A + B + C = pi - defect
    double target_residual = 1e-6;
    std::size_t max_iterations = 200;
};

struct InversionResult {
    AngleShape start;              ///< hyperbolic shape found
    double residual = 0.0;
    std::size_t iterations = 0;
    bool converged = false;
};

/// Derivative-free search for a hyperbolic shape whose limit is `target`:
/// corrects two angles of the slice by the observed limit error until the
/// residual is below tolerance (stops at 1e-3 of it, or the budget).
[[nodiscard]] InversionResult invert_limit(const symbolic::SymbolSequence& seq, const AngleShape& target,
                                           const InversionOptions& opts = {},
                                           std::optional<AngleShape> initial = std::nullopt);

/// Interior grid of grid x grid Euclidean targets.
[[nodiscard]] std::vector<AngleShape> euclidean_grid(std::size_t grid);

[[nodiscard]] Report run_surjectivity(const symbolic::SymbolSequence& seq, std::size_t grid,
                                      const InversionOptions& opts = {});

/// Suite names accepted by run_named: lemma21, area, ratiolimit, cauchy,
/// angleratio, noncontraction, eq1probe, continuity, surjectivity.
[[nodiscard]] const std::vector<std::string>& suite_names();

/// Runs one suite with its default parameters; seed and samples override
/// the defaults when given. Throws DomainError for unknown names.
[[nodiscard]] Report run_named(const std::string& name, std::optional<std::uint64_t> seed,
                               std::optional<std::size_t> samples);

}  // namespace trisub::verify
