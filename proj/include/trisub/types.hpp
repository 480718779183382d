#pragma once

#include <array>
#include <cstddef>

namespace trisub {

/// Ordered angle triple (A, B, C) in radians. A point of the moduli space.
struct AngleShape {
    double A = 0.0;
    double B = 0.0;
    double C = 0.0;

    [[nodiscard]] double operator[](std::size_t i) const { return i == 0 ? A : (i == 1 ? B : C); }
    [[nodiscard]] double sum() const { return A + B + C; }
    [[nodiscard]] std::array<double, 3> as_array() const { return {A, B, C}; }
    friend bool operator==(const AngleShape&, const AngleShape&) = default;
};

/// Ordered hyperbolic edge lengths; `a` is opposite angle A.
struct EdgeLengths {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;

    [[nodiscard]] double operator[](std::size_t i) const { return i == 0 ? a : (i == 1 ? b : c); }
    [[nodiscard]] std::array<double, 3> as_array() const { return {a, b, c}; }
    friend bool operator==(const EdgeLengths&, const EdgeLengths&) = default;
};

}  // namespace trisub
