#include "trisub/symbolic.hpp"

#include <algorithm>
#include <cmath>

#include "trisub/error.hpp"

namespace trisub::symbolic {

namespace {

Word primitive_root(const Word& w) {
    const std::size_t n = w.size();
    for (std::size_t p = 1; p < n; ++p) {
        if (n % p != 0) continue;
        bool periodic = true;
        for (std::size_t i = p; i < n && periodic; ++i) {
            periodic = w[i] == w[i - p];
        }
        if (periodic) return Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(p));
    }
    return w;
}

constexpr std::array<std::array<Letter, 3>, 6> kPermutations{{
    {Letter::A, Letter::B, Letter::C},
    {Letter::A, Letter::C, Letter::B},
    {Letter::B, Letter::A, Letter::C},
    {Letter::B, Letter::C, Letter::A},
    {Letter::C, Letter::A, Letter::B},
    {Letter::C, Letter::B, Letter::A},
}};

}  // namespace

SymbolSequence::SymbolSequence(Word prefix, Word cycle) : prefix_(std::move(prefix)), cycle_(std::move(cycle)) {
    if (cycle_.empty()) {
        throw DomainError("sequence cycle must be nonempty");
    }
    cycle_ = primitive_root(cycle_);
    while (!prefix_.empty() && prefix_.back() == cycle_.back()) {
        std::rotate(cycle_.rbegin(), cycle_.rbegin() + 1, cycle_.rend());
        prefix_.pop_back();
    }
}

Letter SymbolSequence::at(std::size_t i) const {
    if (i < prefix_.size()) return prefix_[i];
    return cycle_[(i - prefix_.size()) % cycle_.size()];
}

bool SymbolSequence::constant_from(std::size_t pos, Letter l) const {
    const std::size_t end = std::max(pos, prefix_.size()) + cycle_.size();
    for (std::size_t i = pos; i < end; ++i) {
        if (at(i) != l) return false;
    }
    return true;
}

std::string SymbolSequence::to_string() const { return trisub::to_string(prefix_) + "|" + trisub::to_string(cycle_); }

SymbolSequence parse_seq(const std::string& text) {
    static const std::string kDoubleBar = "\xE2\x80\x96";
    std::size_t sep = text.find('|');
    std::size_t sep_len = 1;
    if (sep == std::string::npos) {
        sep = text.find(kDoubleBar);
        sep_len = kDoubleBar.size();
    }
    if (sep == std::string::npos) {
        throw DomainError("sequence text must have the form PREFIX|CYCLE");
    }
    const std::string rest = text.substr(sep + sep_len);
    if (rest.find('|') != std::string::npos || rest.find(kDoubleBar) != std::string::npos) {
        throw DomainError("sequence text has more than one separator");
    }
    return SymbolSequence(parse_word(text.substr(0, sep)), parse_word(rest));
}

Rationality classify(const SymbolSequence& s) {
    int distinct = 0;
    for (const Letter l : {Letter::A, Letter::B, Letter::C}) {
        if (std::find(s.cycle().begin(), s.cycle().end(), l) != s.cycle().end()) ++distinct;
    }
    return distinct == 1 ? Rationality::rational : Rationality::irrational;
}

Bary AffineMap::operator()(const Bary& x) const {
    return Bary{scale * x.u + offset[0], scale * x.v + offset[1], scale * x.w + offset[2]};
}

AffineMap AffineMap::after(const AffineMap& inner) const {
    AffineMap out;
    out.scale = scale * inner.scale;
    for (std::size_t i = 0; i < 3; ++i) {
        out.offset[i] = scale * inner.offset[i] + offset[i];
    }
    return out;
}

AffineMap letter_map(Letter l) {
    const Rational half(1, 2);
    switch (l) {
        case Letter::A: return AffineMap{half, {half, 0, 0}};
        case Letter::B: return AffineMap{half, {0, half, 0}};
        case Letter::C: return AffineMap{half, {0, 0, half}};
        case Letter::M: return AffineMap{-half, {half, half, half}};
    }
    return AffineMap{};
}

double reference_diameter() { return std::sqrt(2.0); }

BaryApprox address_approx(const SymbolSequence& s, std::size_t depth) {
    if (depth < 1) {
        throw DomainError("address depth must be at least 1");
    }
    std::array<double, 3> x{1.0 / 3, 1.0 / 3, 1.0 / 3};
    for (std::size_t k = depth; k-- > 0;) {
        const Letter l = s.at(k);
        if (l == Letter::M) {
            for (double& c : x) c = 0.5 - 0.5 * c;
        } else {
            for (double& c : x) c = 0.5 * c;
            x[static_cast<std::size_t>(l)] += 0.5;
        }
    }
    return BaryApprox{x, std::ldexp(reference_diameter(), -static_cast<int>(std::min<std::size_t>(depth, 1100)))};
}

Bary address_exact(const SymbolSequence& s) {
    AffineMap cycle_map{1, {0, 0, 0}};
    for (const Letter l : s.cycle()) {
        cycle_map = cycle_map.after(letter_map(l));
    }
    const Rational denom = 1 - cycle_map.scale;
    Bary q{cycle_map.offset[0] / denom, cycle_map.offset[1] / denom, cycle_map.offset[2] / denom};
    for (std::size_t k = s.prefix().size(); k-- > 0;) {
        q = letter_map(s.prefix()[k])(q);
    }
    return q;
}

bool equivalent(const SymbolSequence& s, const SymbolSequence& t) { return address_exact(s) == address_exact(t); }

std::string to_fraction_string(const Rational& r) {
    const auto num = boost::multiprecision::numerator(r);
    const auto den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

std::vector<Prop31Fit> prop31_fits(const SymbolSequence& s, std::size_t horizon) {
    std::vector<Prop31Fit> fits;
    for (std::size_t n = 0; n <= horizon; ++n) {
        const Letter head = s.at(n);
        for (const auto& sigma : kPermutations) {
            const Letter sa = sigma[0];
            const Letter sb = sigma[1];
            const Letter sc = sigma[2];
            int base = 0;
            if (head == sa) {
                base = 0;
            } else if (head == Letter::M) {
                base = 3;
            } else {
                continue;
            }
            // Forms 1-3 spell zeta as alpha = zeta(sigma B, sigma C); forms 4-6
            // as beta = zeta(sigma C, sigma B).
            const Letter x_letter = base == 0 ? sb : sc;
            std::string zeta;
            for (std::size_t m = 0; m <= horizon; ++m) {
                const std::size_t p = n + 1 + m;
                const Letter at_p = s.at(p);
                if (at_p == Letter::M && s.constant_from(p + 1, sa)) {
                    fits.push_back({n, sigma, zeta, base + 1});
                } else if (at_p == sb && s.constant_from(p + 1, sc)) {
                    fits.push_back({n, sigma, zeta, base + 2});
                } else if (at_p == sc && s.constant_from(p + 1, sb)) {
                    fits.push_back({n, sigma, zeta, base + 3});
                }
                if (at_p != sb && at_p != sc) break;
                zeta.push_back(at_p == x_letter ? 'x' : 'y');
            }
        }
    }
    return fits;
}

std::optional<Prop31Witness> match_prop31(const SymbolSequence& s, const SymbolSequence& t, std::size_t horizon) {
    if (s == t) return std::nullopt;
    const auto fs = prop31_fits(s, horizon);
    const auto ft = prop31_fits(t, horizon);
    for (const auto& a : fs) {
        bool same_tau = true;
        for (std::size_t i = 0; i < a.prefix_len && same_tau; ++i) {
            same_tau = s.at(i) == t.at(i);
        }
        if (!same_tau) continue;
        for (const auto& b : ft) {
            if (a.prefix_len == b.prefix_len && a.sigma == b.sigma && a.zeta == b.zeta && a.form != b.form) {
                return Prop31Witness{a.prefix_len, a.sigma, a.zeta, a.form, b.form};
            }
        }
    }
    return std::nullopt;
}

}  // namespace trisub::symbolic
