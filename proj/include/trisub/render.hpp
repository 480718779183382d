#pragma once

// SVG pictures of nested subdivision cells in the Klein or Poincare disk.
// The triangle is placed with vertex A at the disk center and vertex B on
// the positive x axis; coordinates are written in disk units.

#include <array>
#include <optional>
#include <string>

#include "trisub/letter.hpp"
#include "trisub/plane_model.hpp"
#include "trisub/types.hpp"

namespace trisub::render {

inline constexpr std::size_t kMaxDepth = 8;

struct RenderSpec {
    plane_model::DiskModel model = plane_model::DiskModel::klein;
    /// Exactly one of depth and word is used; word wins when both are set.
    std::size_t depth = 0;
    std::optional<Word> word;
    /// Stroke colors for cells produced by A, B, C, M, and for the root.
    std::array<std::string, 4> palette{"#d62728", "#2ca02c", "#1f77b4", "#ff7f0e"};
    std::string root_color = "#000000";
    int canvas = 800;
    /// Points per edge when geodesics are drawn as arcs (poincare).
    std::size_t sampling = 32;

    void validate() const;
};

/// Depth mode draws the root and all 4^depth leaf cells, in depth-first
/// order A, B, C, M. Word mode draws the root and the chain of nested cells
/// along the word, filling the last one. Throws DomainError for depth > 8.
[[nodiscard]] std::string render_svg(const RenderSpec& spec, const EdgeLengths& e);

}  // namespace trisub::render
