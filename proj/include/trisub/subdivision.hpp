#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "trisub/letter.hpp"
#include "trisub/shape.hpp"
#include "trisub/symbolic.hpp"

namespace trisub::subdivision {

// Child vertex order, with M_x the midpoint of edge x:
//   A: (A, M_c, M_b)   B: (M_c, B, M_a)   C: (M_b, M_a, C)   M: (M_a, M_b, M_c)
// the unique order under which every map fixes Euclidean shapes.

/// Child edges from the closed-form midlines:
/// M -> (m_a, m_b, m_c); A -> (m_a, b/2, c/2); B -> (a/2, m_b, c/2); C -> (a/2, b/2, m_c).
[[nodiscard]] EdgeLengths child_edges(Letter l, const EdgeLengths& e);

/// Euclidean shapes are returned unchanged; hyperbolic children get angles
/// from their own edges.
[[nodiscard]] ShapeRecord apply(Letter l, const ShapeRecord& s);

/// Geometric route: place the triangle in the hyperboloid model, take the
/// geodesic midpoints, select the child's vertices and measure its edges.
[[nodiscard]] EdgeLengths apply_oracle(Letter l, const EdgeLengths& e);

/// apply_oracle over many triangles at once on the batched kernels.
[[nodiscard]] std::vector<EdgeLengths> apply_oracle_batch(Letter l, std::span<const EdgeLengths> edges);

struct OrbitStep {
    std::size_t n = 0;
    std::optional<Letter> letter;  ///< the map that produced this step; empty at n = 0
    ShapeRecord shape;
    double rho = 0.0;                      ///< ln sin A_n
    std::array<double, 3> sinh_half{};     ///< sinh(a_n/2), sinh(b_n/2), sinh(c_n/2); zero when Euclidean
};

struct OrbitTrace {
    std::vector<OrbitStep> steps;
};

[[nodiscard]] OrbitTrace orbit(const Word& word, const ShapeRecord& s0);

/// Columns: n, letter, A, B, C, a, b, c, S, ln_sin_A, sinh_a2, sinh_b2, sinh_c2.
[[nodiscard]] std::string to_csv(const OrbitTrace& trace);

struct LimitOptions {
    double tol = 1e-13;
    std::size_t max_iterations = 10000;
};

struct LimitResult {
    AngleShape angles;       ///< on the Euclidean face
    std::size_t iterations = 0;
    double residual = 0.0;   ///< max(area, last per-step angle change) at stop
};

/// Follows `seq` from s0 until the area and the per-step angle change both
/// fall below tol, then projects onto the Euclidean face. Throws
/// ConvergenceFailure past max_iterations.
[[nodiscard]] LimitResult limit_shape(const symbolic::SymbolSequence& seq, const ShapeRecord& s0,
                                      const LimitOptions& opts = {});

}  // namespace trisub::subdivision
