#include "trisub/shape.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "trisub/error.hpp"
#include "trisub/format.hpp"
#include "trisub/hyptrig.hpp"

namespace trisub {

ShapeRecord shape_from_edges(const EdgeLengths& e) {
    ShapeRecord r;
    r.angles = hyptrig::angles_from_edges(e);
    r.edges = e;
    r.area = hyptrig::area_from_edges(e);
    return r;
}

ShapeRecord shape_from_angles(const AngleShape& s) {
    for (std::size_t i = 0; i < 3; ++i) {
        if (!std::isfinite(s[i]) || !(s[i] > 0)) {
            throw DomainError("angles must be positive and finite");
        }
    }
    const double excess = s.sum() - std::numbers::pi;
    if (excess > kEuclideanTolerance) {
        throw DomainError("angle sum " + format_real(s.sum()) + " exceeds pi");
    }
    ShapeRecord r;
    r.angles = s;
    if (excess >= -kEuclideanTolerance) {
        return r;
    }
    r.edges = hyptrig::edges_from_angles(s);
    r.area = hyptrig::defect_area(s);
    return r;
}

double metric_distance(const AngleShape& s1, const AngleShape& s2) {
    return std::hypot(s1.A - s2.A, s1.B - s2.B, s1.C - s2.C);
}

AngleShape project_euclidean(const AngleShape& s) {
    const double k = std::numbers::pi / s.sum();
    AngleShape p{s.A * k, s.B * k, 0.0};
    p.C = std::numbers::pi - p.A - p.B;
    return p;
}

void check_invariants(const ShapeRecord& r) {
    for (std::size_t i = 0; i < 3; ++i) {
        if (!(r.angles[i] > 0)) {
            throw InconsistentInput("shape record: nonpositive angle");
        }
    }
    if (r.is_euclidean()) {
        if (std::abs(r.angles.sum() - std::numbers::pi) > kEuclideanTolerance || r.area != 0.0) {
            throw InconsistentInput("shape record: Euclidean record off the Euclidean face");
        }
        return;
    }
    const AngleShape from_edges = hyptrig::angles_from_edges(*r.edges);
    for (std::size_t i = 0; i < 3; ++i) {
        if (std::abs(from_edges[i] - r.angles[i]) > 1e-10 * std::max(1.0, r.angles[i])) {
            throw InconsistentInput("shape record: angles disagree with edges");
        }
    }
    if (std::abs(r.area - hyptrig::defect_area(r.angles)) > 1e-10) {
        throw InconsistentInput("shape record: area disagrees with angle defect");
    }
}

std::string to_json(const ShapeRecord& r) {
    std::string out = "{\"angles\":[" + format_real(r.angles.A) + "," + format_real(r.angles.B) + "," +
                      format_real(r.angles.C) + "],\"edges\":";
    if (r.edges) {
        out += "[" + format_real(r.edges->a) + "," + format_real(r.edges->b) + "," + format_real(r.edges->c) + "]";
    } else {
        out += "null";
    }
    out += ",\"area\":" + format_real(r.area) + "}";
    return out;
}

}  // namespace trisub
