#include "trisub/hyptrig.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "trisub/error.hpp"

namespace trisub::hyptrig {

namespace {

constexpr double kPi = std::numbers::pi;

// Product (s1+s2+s3)(-s1+s2+s3)(s1-s2+s3)(s1+s2-s3).
double heron_product(double s1, double s2, double s3) {
    return (s1 + s2 + s3) * (-s1 + s2 + s3) * (s1 - s2 + s3) * (s1 + s2 - s3);
}

double clamp_unit(double v, const char* what) {
    if (!(v <= 1.0 + kClampTolerance)) {
        throw InconsistentInput(std::string(what) + ": value " + std::to_string(v) + " exceeds 1");
    }
    return v > 1.0 ? 1.0 : v;
}

double angle_from_edges(double opp, double adj1, double adj2) {
    const double sa = std::sinh(opp / 2);
    const double sb = std::sinh(adj1 / 2);
    const double sc = std::sinh(adj2 / 2);
    // cos A and sin A share the denominator 2 s_b c_b s_c c_c.
    const double cos_num = sb * sb + sc * sc - sa * sa + 2 * sb * sb * sc * sc;
    const double half_perimeter = (opp + adj1 + adj2) / 2;
    const double p = std::sinh(half_perimeter) * std::sinh((adj1 + adj2 - opp) / 2) *
                     std::sinh((opp - adj1 + adj2) / 2) * std::sinh((opp + adj1 - adj2) / 2);
    return std::atan2(std::sqrt(p > 0 ? p : 0.0), cos_num);
}

double edge_from_angles(double opp, double adj1, double adj2, double defect) {
    const double s2 = std::sin(defect / 2) * std::cos((adj1 + adj2 - opp) / 2) /
                      (std::sin(adj1) * std::sin(adj2));
    return 2 * std::asinh(std::sqrt(s2));
}

double tanh_product(const EdgeLengths& e) {
    const auto [a, b, c] = e;
    return std::tanh((a + b + c) / 4) * std::tanh((a + b - c) / 4) * std::tanh((c + a - b) / 4) *
           std::tanh((b + c - a) / 4);
}

}  // namespace

TraceCoords TraceCoords::from_raw(double x, double y, double z) {
    return TraceCoords{x, y, z, {x - 2, y - 2, z - 2}};
}

TraceCoords TraceCoords::from_edges(const EdgeLengths& e) {
    TraceCoords tc;
    tc.x = 2 * std::cosh(e.a);
    tc.y = 2 * std::cosh(e.b);
    tc.z = 2 * std::cosh(e.c);
    for (std::size_t i = 0; i < 3; ++i) {
        const double s = std::sinh(e[i] / 2);
        tc.excess[i] = 4 * s * s;
    }
    return tc;
}

void validate_edges(const EdgeLengths& e) {
    static constexpr const char* kNames[3] = {"a", "b", "c"};
    for (std::size_t i = 0; i < 3; ++i) {
        if (!std::isfinite(e[i]) || !(e[i] > 0)) {
            throw DomainError(std::string("edge ") + kNames[i] + " must be positive and finite");
        }
    }
    for (std::size_t i = 0; i < 3; ++i) {
        if (!(e[i] < e[(i + 1) % 3] + e[(i + 2) % 3])) {
            throw DomainError(std::string("edge ") + kNames[i] + " = " + std::to_string(e[i]) +
                              " violates the triangle inequality");
        }
    }
}

double cos_angle(double opposite, double adj1, double adj2) {
    const double sa = std::sinh(opposite / 2);
    const double sb = std::sinh(adj1 / 2);
    const double sc = std::sinh(adj2 / 2);
    const double cb = std::cosh(adj1 / 2);
    const double cc = std::cosh(adj2 / 2);
    return (sb * sb + sc * sc - sa * sa + 2 * sb * sb * sc * sc) / (2 * sb * sc * cb * cc);
}

AngleShape angles_from_edges(const EdgeLengths& e) {
    validate_edges(e);
    return AngleShape{angle_from_edges(e.a, e.b, e.c), angle_from_edges(e.b, e.c, e.a),
                      angle_from_edges(e.c, e.a, e.b)};
}

EdgeLengths edges_from_angles(const AngleShape& s) {
    for (std::size_t i = 0; i < 3; ++i) {
        if (!std::isfinite(s[i]) || !(s[i] > 0)) {
            throw DomainError("angles must be positive and finite");
        }
    }
    const double defect = kPi - s.A - s.B - s.C;
    if (!(defect > 0)) {
        throw DomainError("not hyperbolic: angle sum " + std::to_string(s.sum()) + " >= pi");
    }
    return EdgeLengths{edge_from_angles(s.A, s.B, s.C, defect), edge_from_angles(s.B, s.C, s.A, defect),
                       edge_from_angles(s.C, s.A, s.B, defect)};
}

double defect_area(const AngleShape& s) {
    const double d = kPi - s.sum();
    if (d < -kClampTolerance) {
        throw DomainError("angle sum " + std::to_string(s.sum()) + " exceeds pi");
    }
    return d > 0 ? d : 0.0;
}

double cagnoli_area(const EdgeLengths& e, double angle_a) {
    const double rhs = std::sinh(e.b / 2) * std::sinh(e.c / 2) * std::sin(angle_a) / std::cosh(e.a / 2);
    return 2 * std::asin(clamp_unit(rhs, "cagnoli_area"));
}

double keogh_area(double m_b, double m_c, double alpha) {
    const double rhs = std::sinh(m_b) * std::sinh(m_c) * std::sin(alpha);
    return 2 * std::asin(clamp_unit(rhs, "keogh_area"));
}

double law_of_sines_ratio(double edge, double opposite_angle) {
    return std::sin(opposite_angle) / std::sinh(edge);
}

MedialData medial_data(const EdgeLengths& e) {
    validate_edges(e);
    MedialData md;
    const double t = tanh_product(e);
    md.tanh_product = t;
    md.mu = (1 - t) / (1 + t);
    for (std::size_t i = 0; i < 3; ++i) {
        // h = sinh^2(x/4); s = sinh^2(m/2) = (h - T cosh^2(x/4)) / (1 + T).
        const double q = std::sinh(e[i] / 4);
        const double h = q * q;
        const double s = (h - t * (1 + h)) / (1 + t);
        if (!(s > 0)) {
            throw InconsistentInput("medial_data: midline collapsed for edge " + std::to_string(e[i]));
        }
        md.m[i] = 2 * std::asinh(std::sqrt(s));

        // cosh(l) - 1 = (sinh(x/2) - sinh(m)) / sinh(m), with
        // sinh^2(x/2) - sinh^2(m) = 4 T (1 + 2h)(1 + h + s) / (1 + T).
        const double sinh_half = std::sinh(e[i] / 2);
        const double sinh_mid = std::sinh(md.m[i]);
        const double diff_sq = 4 * t * (1 + 2 * h) * (1 + h + s) / (1 + t);
        const double u = diff_sq / (sinh_half + sinh_mid) / sinh_mid;
        md.l[i] = std::log1p(u + std::sqrt(u * (u + 2)));
    }
    return md;
}

double trace_parent_area(const TraceCoords& medial) {
    const double x = medial.x;
    const double y = medial.y;
    const double z = medial.z;
    const double four_cos2 = x * x + y * y + z * z - x * y * z;
    if (four_cos2 > 4 + kClampTolerance || four_cos2 < -kClampTolerance) {
        throw InconsistentInput("trace_parent_area: x^2+y^2+z^2-xyz = " + std::to_string(four_cos2) +
                                " outside (0, 4]");
    }
    std::array<double, 3> s{};
    for (std::size_t i = 0; i < 3; ++i) {
        const double ex = medial.excess[i];
        if (ex < -kClampTolerance) {
            throw InconsistentInput("trace_parent_area: trace coordinate below 2");
        }
        s[i] = std::sqrt(ex > 0 ? ex : 0.0) / 2;
    }
    // 4 sin^2(S/2) = 4 - (x^2+y^2+z^2-xyz) = 16 H(s) + 64 (s_a s_b s_c)^2.
    const double prod = s[0] * s[1] * s[2];
    const double sin2 = 4 * heron_product(s[0], s[1], s[2]) + 16 * prod * prod;
    if (sin2 < -kClampTolerance) {
        throw InconsistentInput("trace_parent_area: negative sin^2(S/2)");
    }
    const double cos2 = four_cos2 / 4;
    return 2 * std::atan2(std::sqrt(sin2 > 0 ? sin2 : 0.0), std::sqrt(cos2 > 0 ? cos2 : 0.0));
}

namespace {

// sin(S/2) * prod(cosh(x/2)) and cos(S/2) * prod(cosh(x/2)).
std::array<double, 2> scaled_half_area(const EdgeLengths& e) {
    std::array<double, 3> s{};
    std::array<double, 3> c{};
    double csq_sum = 0;
    double cprod = 1;
    for (std::size_t i = 0; i < 3; ++i) {
        s[i] = std::sinh(e[i] / 2);
        c[i] = std::cosh(e[i] / 2);
        csq_sum += c[i] * c[i];
        cprod *= c[i];
    }
    const double sprod = s[0] * s[1] * s[2];
    const double sin2 = heron_product(s[0], s[1], s[2]) / 4 + sprod * sprod;
    if (sin2 / (cprod * cprod) < -kClampTolerance) {
        throw InconsistentInput("area_from_edges: cos^2(S/2) exceeds 1");
    }
    return {std::sqrt(sin2 > 0 ? sin2 : 0.0), (csq_sum - 1) / 2};
}

}  // namespace

double area_from_edges(const EdgeLengths& e) {
    validate_edges(e);
    const auto [sin_scaled, cos_scaled] = scaled_half_area(e);
    return 2 * std::atan2(sin_scaled, cos_scaled);
}

double sin_half_area(const EdgeLengths& e) {
    validate_edges(e);
    const auto [sin_scaled, cos_scaled] = scaled_half_area(e);
    return sin_scaled / (std::cosh(e.a / 2) * std::cosh(e.b / 2) * std::cosh(e.c / 2));
}

double halving_deficit_half_edge(double x) {
    const double q = std::sinh(x / 8);
    return 2 * std::sinh(x / 4) * q * q;
}

double halving_deficit_midline(double x, double midline, const MedialData& medial) {
    const double q = std::sinh(x / 4);
    const double h = q * q;
    const double t = medial.tanh_product;
    // (1/4) sinh^2(x/2) - sinh^2(m/2) = (h^2 + T (1 + h)^2) / (1 + T)
    const double diff_sq = (h * h + t * (1 + h) * (1 + h)) / (1 + t);
    return diff_sq / (std::sinh(x / 2) / 2 + std::sinh(midline / 2));
}

}  // namespace trisub::hyptrig
