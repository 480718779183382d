#pragma once

// Hyperboloid model {x0^2 - x1^2 - x2^2 = 1, x0 > 0} of the hyperbolic
// plane. Serves as the geometric oracle for the closed-form formulas: real
// points, real geodesic midpoints, measured distances and angles.

#include "trisub/types.hpp"

namespace trisub::plane_model {

struct HPoint {
    double x0 = 1.0;
    double x1 = 0.0;
    double x2 = 0.0;
};

/// Vertices in slot order: p_a is the vertex with angle A.
struct PlacedTriangle {
    HPoint p_a;
    HPoint p_b;
    HPoint p_c;
};

enum class DiskModel { klein, poincare };

/// Minkowski product u0 v0 - u1 v1 - u2 v2.
[[nodiscard]] double minkowski(const HPoint& u, const HPoint& v);

/// Re-projects onto the upper sheet, keeping the spatial part.
[[nodiscard]] HPoint normalized(const HPoint& u);

/// P_A = (1,0,0), P_B on the x1 axis at distance c, P_C at distance b with
/// angle A at P_A.
[[nodiscard]] PlacedTriangle place(const EdgeLengths& e);

[[nodiscard]] double dist(const HPoint& u, const HPoint& v);
[[nodiscard]] HPoint midpoint(const HPoint& u, const HPoint& v);

/// Angle at v between the geodesics toward p and q.
[[nodiscard]] double angle_at(const HPoint& v, const HPoint& p, const HPoint& q);

/// Distance from p to the complete geodesic through u and v.
[[nodiscard]] double distance_to_geodesic(const HPoint& p, const HPoint& u, const HPoint& v);

/// Foot of the perpendicular from p to the geodesic through u and v.
[[nodiscard]] HPoint foot_on_geodesic(const HPoint& p, const HPoint& u, const HPoint& v);

/// Point at fraction t of the way from u to v along their geodesic.
[[nodiscard]] HPoint geodesic_point(const HPoint& u, const HPoint& v, double t);

struct DiskPoint {
    double x = 0.0;
    double y = 0.0;
};

[[nodiscard]] DiskPoint to_disk(const HPoint& u, DiskModel model);

/// Edge lengths measured in the model: (dist(P_B,P_C), dist(P_C,P_A), dist(P_A,P_B)).
[[nodiscard]] EdgeLengths measure(const PlacedTriangle& t);

}  // namespace trisub::plane_model
