#pragma once

#include "trisub/kernels.hpp"

namespace trisub::kernels::detail {

void dot_scalar(Lanes u, Lanes v, double* out, std::size_t n);
void chord_sq_scalar(Lanes u, Lanes v, double* out, std::size_t n);
void midpoint_scalar(Lanes u, Lanes v, MutLanes out, std::size_t n);
void to_disk_scalar(Lanes p, double* x, double* y, std::size_t n, bool poincare);

#if defined(TRISUB_HAVE_AVX2)
extern const KernelTable kAvx2Table;
#endif

inline Lanes offset(Lanes l, std::size_t k) { return {l.x0 + k, l.x1 + k, l.x2 + k}; }
inline MutLanes offset(MutLanes l, std::size_t k) { return {l.x0 + k, l.x1 + k, l.x2 + k}; }

}  // namespace trisub::kernels::detail
