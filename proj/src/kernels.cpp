#include <cmath>
#include <cstdlib>
#include <string_view>

#include "kernels_impl.hpp"

namespace trisub::kernels {

namespace {

const KernelTable kScalarTable{"scalar", detail::dot_scalar, detail::chord_sq_scalar, detail::midpoint_scalar,
                               detail::to_disk_scalar};

Lanes lanes(const PointSet& p) { return {p.x0.data(), p.x1.data(), p.x2.data()}; }

const KernelTable& select_table() {
    if (const char* env = std::getenv("TRISUB_SIMD"); env != nullptr && std::string_view(env) == "scalar") {
        return kScalarTable;
    }
    if (const KernelTable* t = avx2_table(); t != nullptr && cpu_supports_avx2()) {
        return *t;
    }
    return kScalarTable;
}

}  // namespace

const KernelTable& scalar_table() { return kScalarTable; }

const KernelTable* avx2_table() {
#if defined(TRISUB_HAVE_AVX2)
    return &detail::kAvx2Table;
#else
    return nullptr;
#endif
}

bool cpu_supports_avx2() {
#if defined(TRISUB_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

std::vector<const KernelTable*> available_tables() {
    std::vector<const KernelTable*> out{&kScalarTable};
    if (const KernelTable* t = avx2_table(); t != nullptr && cpu_supports_avx2()) {
        out.push_back(t);
    }
    return out;
}

const KernelTable& active_table() {
    static const KernelTable& table = select_table();
    return table;
}

void midpoints(const PointSet& u, const PointSet& v, PointSet& out, const KernelTable& k) {
    const std::size_t n = u.size();
    out.resize(n);
    k.midpoint(lanes(u), lanes(v), MutLanes{out.x0.data(), out.x1.data(), out.x2.data()}, n);
}

std::vector<double> distances(const PointSet& u, const PointSet& v, const KernelTable& k) {
    const std::size_t n = u.size();
    std::vector<double> dots(n);
    std::vector<double> chords(n);
    k.dot(lanes(u), lanes(v), dots.data(), n);
    k.chord_sq(lanes(u), lanes(v), chords.data(), n);
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = dots[i] > 2 ? std::acosh(dots[i]) : 2 * std::asinh(std::sqrt(chords[i] > 0 ? chords[i] : 0.0) / 2);
    }
    return out;
}

std::vector<plane_model::DiskPoint> to_disk(const PointSet& p, plane_model::DiskModel model, const KernelTable& k) {
    const std::size_t n = p.size();
    std::vector<double> xs(n);
    std::vector<double> ys(n);
    k.to_disk(lanes(p), xs.data(), ys.data(), n, model == plane_model::DiskModel::poincare);
    std::vector<plane_model::DiskPoint> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = {xs[i], ys[i]};
    }
    return out;
}

}  // namespace trisub::kernels
