#pragma once

// Batched hyperboloid arithmetic over structure-of-arrays point sets.
//
// Each kernel exists as a portable scalar reference and, on x86-64, an AVX2
// variant. The active table is chosen once at runtime from the CPU features
// (override with TRISUB_SIMD=scalar). The variants use the same operation
// order without fused multiply-add, so their results are bit-identical to
// the reference and to the single-point functions in plane_model.

#include <cstddef>
#include <span>
#include <vector>

#include "trisub/plane_model.hpp"

namespace trisub::kernels {

struct PointSet {
    std::vector<double> x0;
    std::vector<double> x1;
    std::vector<double> x2;

    PointSet() = default;
    explicit PointSet(std::size_t n) : x0(n, 1.0), x1(n, 0.0), x2(n, 0.0) {}

    [[nodiscard]] std::size_t size() const { return x0.size(); }
    void resize(std::size_t n) {
        x0.resize(n, 1.0);
        x1.resize(n, 0.0);
        x2.resize(n, 0.0);
    }
    void set(std::size_t i, const plane_model::HPoint& p) {
        x0[i] = p.x0;
        x1[i] = p.x1;
        x2[i] = p.x2;
    }
    [[nodiscard]] plane_model::HPoint get(std::size_t i) const { return {x0[i], x1[i], x2[i]}; }
};

/// Raw lane pointers for one point set.
struct Lanes {
    const double* x0;
    const double* x1;
    const double* x2;
};

struct MutLanes {
    double* x0;
    double* x1;
    double* x2;
};

struct KernelTable {
    const char* name;
    /// out[i] = <u_i, v_i> (Minkowski).
    void (*dot)(Lanes u, Lanes v, double* out, std::size_t n);
    /// out[i] = (du1^2 + du2^2) - du0^2 with d = u_i - v_i.
    void (*chord_sq)(Lanes u, Lanes v, double* out, std::size_t n);
    /// Geodesic midpoints, re-projected onto the hyperboloid.
    void (*midpoint)(Lanes u, Lanes v, MutLanes out, std::size_t n);
    /// Disk coordinates; poincare selects (x1, x2) / (1 + x0) over klein's / x0.
    void (*to_disk)(Lanes p, double* x, double* y, std::size_t n, bool poincare);
};

[[nodiscard]] const KernelTable& scalar_table();

/// nullptr when the AVX2 variant was not compiled in.
[[nodiscard]] const KernelTable* avx2_table();

[[nodiscard]] bool cpu_supports_avx2();

/// Every table usable on this machine, reference first.
[[nodiscard]] std::vector<const KernelTable*> available_tables();

/// Table selected for this process.
[[nodiscard]] const KernelTable& active_table();

void midpoints(const PointSet& u, const PointSet& v, PointSet& out, const KernelTable& k = active_table());

/// Hyperbolic distances between paired points; matches plane_model::dist.
[[nodiscard]] std::vector<double> distances(const PointSet& u, const PointSet& v,
                                            const KernelTable& k = active_table());

[[nodiscard]] std::vector<plane_model::DiskPoint> to_disk(const PointSet& p, plane_model::DiskModel model,
                                                          const KernelTable& k = active_table());

}  // namespace trisub::kernels
