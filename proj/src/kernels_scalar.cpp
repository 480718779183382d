#include "kernels_impl.hpp"

#include <cmath>

namespace trisub::kernels::detail {

void dot_scalar(Lanes u, Lanes v, double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = u.x0[i] * v.x0[i] - u.x1[i] * v.x1[i] - u.x2[i] * v.x2[i];
    }
}

void chord_sq_scalar(Lanes u, Lanes v, double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const double d0 = u.x0[i] - v.x0[i];
        const double d1 = u.x1[i] - v.x1[i];
        const double d2 = u.x2[i] - v.x2[i];
        out[i] = (d1 * d1 + d2 * d2) - d0 * d0;
    }
}

void midpoint_scalar(Lanes u, Lanes v, MutLanes out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const double d = u.x0[i] * v.x0[i] - u.x1[i] * v.x1[i] - u.x2[i] * v.x2[i];
        const double s = std::sqrt(2 + 2 * d);
        const double m1 = (u.x1[i] + v.x1[i]) / s;
        const double m2 = (u.x2[i] + v.x2[i]) / s;
        out.x0[i] = std::sqrt(1 + m1 * m1 + m2 * m2);
        out.x1[i] = m1;
        out.x2[i] = m2;
    }
}

void to_disk_scalar(Lanes p, double* x, double* y, std::size_t n, bool poincare) {
    for (std::size_t i = 0; i < n; ++i) {
        const double den = poincare ? 1 + p.x0[i] : p.x0[i];
        x[i] = p.x1[i] / den;
        y[i] = p.x2[i] / den;
    }
}

}  // namespace trisub::kernels::detail
