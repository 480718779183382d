#pragma once

// Eventually periodic words over {A, B, C, M} and the address map into a
// reference Euclidean triangle (the standard 2-simplex in barycentric
// coordinates), evaluated exactly in rational arithmetic.

#include <array>
#include <cstddef>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "trisub/letter.hpp"

namespace trisub::symbolic {

using Rational = boost::multiprecision::cpp_rational;

/// prefix followed by cycle repeated forever.
///
/// Canonical form: the cycle is primitive (not a power of a shorter word)
/// and the prefix does not end with the cycle's last letter (that letter
/// would be absorbed by rotating the cycle).
class SymbolSequence {
public:
    /// Canonicalizes. Throws DomainError when the cycle is empty.
    SymbolSequence(Word prefix, Word cycle);

    [[nodiscard]] const Word& prefix() const { return prefix_; }
    [[nodiscard]] const Word& cycle() const { return cycle_; }

    /// i-th letter of the infinite word (0-based).
    [[nodiscard]] Letter at(std::size_t i) const;

    /// True iff every letter from position `pos` on equals `l`.
    [[nodiscard]] bool constant_from(std::size_t pos, Letter l) const;

    /// "PREFIX|CYCLE".
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const SymbolSequence&, const SymbolSequence&) = default;

private:
    Word prefix_;
    Word cycle_;
};

/// Parses "PREFIX|CYCLE"; the separator may also be U+2016 (double bar).
[[nodiscard]] SymbolSequence parse_seq(const std::string& text);

enum class Rationality { rational, irrational };

/// Rational iff exactly one of A, B, C occurs in the cycle.
[[nodiscard]] Rationality classify(const SymbolSequence& s);

struct Bary {
    Rational u;
    Rational v;
    Rational w;

    friend bool operator==(const Bary&, const Bary&) = default;
    [[nodiscard]] Rational operator[](std::size_t i) const { return i == 0 ? u : (i == 1 ? v : w); }
};

/// x -> scale * x + offset on barycentric triples. Every letter map has
/// scale +1/2 or -1/2, so compositions stay in this form.
struct AffineMap {
    Rational scale;
    std::array<Rational, 3> offset;

    [[nodiscard]] Bary operator()(const Bary& x) const;
    /// (*this) after `inner`: x -> this(inner(x)).
    [[nodiscard]] AffineMap after(const AffineMap& inner) const;
};

[[nodiscard]] AffineMap letter_map(Letter l);

/// Diameter of the reference simplex as a subset of R^3.
[[nodiscard]] double reference_diameter();

struct BaryApprox {
    std::array<double, 3> point{};
    double error_bound = 0.0;
};

/// Composes the first `depth` letter maps applied to the centroid.
/// Throws DomainError when depth < 1.
[[nodiscard]] BaryApprox address_approx(const SymbolSequence& s, std::size_t depth);

/// Exact fixed point of the cycle composition, pushed through the prefix.
[[nodiscard]] Bary address_exact(const SymbolSequence& s);

[[nodiscard]] bool equivalent(const SymbolSequence& s, const SymbolSequence& t);

/// "p/q" (or "p" for integers).
[[nodiscard]] std::string to_fraction_string(const Rational& r);

/// One way of reading a sequence as a tail form of the two-address
/// classification: tau = first `prefix_len` letters, then the head letter
/// (sigma(A) for forms 1-3, M for forms 4-6), then the zeta word encoded
/// over {x, y}, then the form's two-letter ending.
struct Prop31Fit {
    std::size_t prefix_len = 0;
    std::array<Letter, 3> sigma{};  ///< images of A, B, C
    std::string zeta;               ///< letters 'x'/'y'
    int form = 0;                   ///< 1..6

    friend bool operator==(const Prop31Fit&, const Prop31Fit&) = default;
};

struct Prop31Witness {
    std::size_t prefix_len = 0;
    std::array<Letter, 3> sigma{};
    std::string zeta;
    int form_s = 0;
    int form_t = 0;
};

/// Default search horizon for prefix and zeta lengths.
inline constexpr std::size_t kDefaultHorizon = 64;

/// Every fit of `s` with prefix and zeta lengths at most `horizon`.
[[nodiscard]] std::vector<Prop31Fit> prop31_fits(const SymbolSequence& s, std::size_t horizon = kDefaultHorizon);

/// Searches for a common (tau, sigma, zeta) putting s and t in two distinct
/// forms of the six-form list. Returns nullopt when s == t or nothing fits
/// within the horizon.
[[nodiscard]] std::optional<Prop31Witness> match_prop31(const SymbolSequence& s, const SymbolSequence& t,
                                                        std::size_t horizon = kDefaultHorizon);

}  // namespace trisub::symbolic
