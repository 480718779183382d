#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace trisub {

/// The four subdivision maps: the three corner children and the medial child.
enum class Letter : unsigned char { A = 0, B = 1, C = 2, M = 3 };

inline constexpr std::array<Letter, 4> kAllLetters{Letter::A, Letter::B, Letter::C, Letter::M};

using Word = std::vector<Letter>;

[[nodiscard]] constexpr char to_char(Letter l) { return "ABCM"[static_cast<int>(l)]; }

[[nodiscard]] constexpr std::optional<Letter> letter_from_char(char ch) {
    switch (ch) {
        case 'A': return Letter::A;
        case 'B': return Letter::B;
        case 'C': return Letter::C;
        case 'M': return Letter::M;
        default: return std::nullopt;
    }
}

/// Throws DomainError on characters outside {A, B, C, M}.
[[nodiscard]] Word parse_word(const std::string& text);

[[nodiscard]] std::string to_string(const Word& w);

}  // namespace trisub
