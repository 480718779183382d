#pragma once

// Scalar hyperbolic trigonometry for triangles of curvature -1.
//
// Every formula whose textbook form subtracts nearly equal cosh values is
// evaluated through half-argument sinh quantities instead, so relative
// precision survives for edges far below 1e-3 (an orbit of the subdivision
// maps reaches edges of 1e-12 within forty steps).

#include <array>

#include "trisub/types.hpp"

namespace trisub::hyptrig {

/// Values past a mathematical bound by at most this much are clamped;
/// anything further is reported as inconsistent input.
inline constexpr double kClampTolerance = 1e-9;

/// Midline and Lambert-quadrilateral data of a triangle.
///
/// `m[i]` is the midline parallel to edge i (it joins the midpoints of the
/// other two edges) and `l[i]` is the common distance from the three
/// vertices to the geodesic carrying that midline: the legs of the Saccheri
/// quadrilateral with summit edge i and base 2 m_i, split into two Lambert
/// quadrilaterals. They satisfy sinh(x_i / 2) = sinh(m_i) * cosh(l_i).
struct MedialData {
    double mu = 1.0;            ///< cosh(m_i) = cosh(x_i / 2) * mu
    double tanh_product = 0.0;  ///< T, with mu = (1 - T) / (1 + T)
    std::array<double, 3> m{};
    std::array<double, 3> l{};

    [[nodiscard]] double m_a() const { return m[0]; }
    [[nodiscard]] double m_b() const { return m[1]; }
    [[nodiscard]] double m_c() const { return m[2]; }
    [[nodiscard]] double l_a() const { return l[0]; }
    [[nodiscard]] double l_b() const { return l[1]; }
    [[nodiscard]] double l_c() const { return l[2]; }
};

/// Trace coordinates x = 2cosh(a), y = 2cosh(b), z = 2cosh(c).
///
/// The excesses x - 2 = 4 sinh^2(a/2) etc. are stored alongside so the
/// trace identity can be evaluated without cancellation when the triple was
/// built from edges.
struct TraceCoords {
    double x = 2.0;
    double y = 2.0;
    double z = 2.0;
    std::array<double, 3> excess{};

    /// Literal coordinates; excesses are taken as x - 2 etc.
    static TraceCoords from_raw(double x, double y, double z);
    static TraceCoords from_edges(const EdgeLengths& e);
};

/// Throws DomainError naming the first edge that is nonpositive, non-finite
/// or not strictly shorter than the sum of the other two.
void validate_edges(const EdgeLengths& e);

/// Angles of the triangle with the given edges (hyperbolic law of cosines).
[[nodiscard]] AngleShape angles_from_edges(const EdgeLengths& e);

/// cos A from the cancellation-free half-argument form
/// (s_b^2 + s_c^2 - s_a^2 + 2 s_b^2 s_c^2) / (2 s_b s_c c_b c_c).
[[nodiscard]] double cos_angle(double opposite, double adj1, double adj2);

/// Edges of the hyperbolic triangle with the given angles (dual law of
/// cosines). Throws DomainError "not hyperbolic" when A + B + C >= pi.
[[nodiscard]] EdgeLengths edges_from_angles(const AngleShape& s);

/// pi - A - B - C. Sums up to kClampTolerance above pi clamp to zero.
[[nodiscard]] double defect_area(const AngleShape& s);

/// Area from sin(S/2) = sinh(b/2) sinh(c/2) sin(A) / cosh(a/2).
[[nodiscard]] double cagnoli_area(const EdgeLengths& e, double angle_a);

/// Parent area from two midlines meeting at the midpoint of edge a and the
/// medial triangle's angle between them: sin(S/2) = sinh(m_b) sinh(m_c) sin(alpha).
[[nodiscard]] double keogh_area(double m_b, double m_c, double alpha);

/// sin(A) / sinh(a); the same for all three edge/angle pairs of a triangle.
[[nodiscard]] double law_of_sines_ratio(double edge, double opposite_angle);

[[nodiscard]] MedialData medial_data(const EdgeLengths& e);

/// Area of the parent of a medial triangle from the trace coordinates of
/// the medial edges: 4cos^2(S/2) = x^2 + y^2 + z^2 - xyz.
[[nodiscard]] double trace_parent_area(const TraceCoords& medial);

/// Area from cos^2(S/2) = (x+y+z+2)^2 / ((x+2)(y+2)(z+2)).
[[nodiscard]] double area_from_edges(const EdgeLengths& e);

/// sin(S/2) of the triangle with the given edges, without passing through S.
/// Keeps full relative precision for arbitrarily small triangles.
[[nodiscard]] double sin_half_area(const EdgeLengths& e);

/// Closed form of (1/2) sinh(x/2) - sinh(x'/2) for the two kinds of child
/// edge produced by subdivision: the half edge x' = x/2, and the midline
/// x' = m_x of `medial`. Both are positive for every nondegenerate triangle.
[[nodiscard]] double halving_deficit_half_edge(double x);
[[nodiscard]] double halving_deficit_midline(double x, double midline, const MedialData& medial);

}  // namespace trisub::hyptrig
