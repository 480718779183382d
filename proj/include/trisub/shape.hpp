#pragma once

#include <optional>
#include <string>

#include "trisub/types.hpp"

namespace trisub {

/// Angle sums within this distance of pi are classified Euclidean when a
/// shape is built from angles.
inline constexpr double kEuclideanTolerance = 1e-12;

/// A point of the moduli space with its realization data.
///
/// Hyperbolic records carry edges and an area computed from them; Euclidean
/// records have no edges and zero area. A record built from edges is always
/// hyperbolic, however small the triangle: the classification threshold only
/// applies to shapes given by angles.
struct ShapeRecord {
    AngleShape angles;
    std::optional<EdgeLengths> edges;
    double area = 0.0;

    [[nodiscard]] bool is_euclidean() const { return !edges.has_value(); }
};

[[nodiscard]] ShapeRecord shape_from_edges(const EdgeLengths& e);
[[nodiscard]] ShapeRecord shape_from_angles(const AngleShape& s);

/// Euclidean distance between angle triples.
[[nodiscard]] double metric_distance(const AngleShape& s1, const AngleShape& s2);

/// Radial projection (A, B, C) -> pi (A, B, C) / (A + B + C) onto the
/// Euclidean face. The last component absorbs the rounding so the sum is pi.
[[nodiscard]] AngleShape project_euclidean(const AngleShape& s);

/// Throws InconsistentInput if the record violates its invariants
/// (angle/edge agreement to 1e-10, area equal to the defect).
void check_invariants(const ShapeRecord& r);

/// {"angles":[..], "edges":[..]|null, "area":..} with 17 significant digits.
[[nodiscard]] std::string to_json(const ShapeRecord& r);

}  // namespace trisub
