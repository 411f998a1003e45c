#include <cmath>
#include <cstddef>

#include "metsel/kernels.hpp"

namespace metsel::kernels::scalar_impl {

static inline void row_axpy(int n, double alpha, const double* x, double* y) {
    for (int i = 0; i < n; ++i) y[i] += alpha * x[i];
}

static inline double row_dot(int n, const double* a, const double* b) {
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += a[i] * b[i];
    return s;
}

void scale(int n, double alpha, double* x) {
    for (int i = 0; i < n; ++i) x[i] *= alpha;
}

void vadd(int n, const double* a, const double* b, double* out) {
    for (int i = 0; i < n; ++i) out[i] = a[i] + b[i];
}

void vmul(int n, const double* a, const double* b, double* out) {
    for (int i = 0; i < n; ++i) out[i] = a[i] * b[i];
}

void lrelu_fwd(int n, double slope, const double* x, double* out) {
    for (int i = 0; i < n; ++i) out[i] = x[i] > 0.0 ? x[i] : slope * x[i];
}

void lrelu_bwd(int n, double slope, const double* x, const double* g, double* gx) {
    for (int i = 0; i < n; ++i) gx[i] += (x[i] > 0.0 ? 1.0 : slope) * g[i];
}

void adam_step(int n, double* p, const double* g, double* m, double* v, double lr, double beta1,
               double beta2, double eps, double b1t, double b2t) {
    for (int i = 0; i < n; ++i) {
        m[i] = beta1 * m[i] + (1.0 - beta1) * g[i];
        v[i] = beta2 * v[i] + (1.0 - beta2) * g[i] * g[i];
        const double mhat = m[i] / (1.0 - b1t);
        const double vhat = v[i] / (1.0 - b2t);
        p[i] -= lr * mhat / (std::sqrt(vhat) + eps);
    }
}

void colwise_sumsq(const double* b, int d, int m, double* out) {
    for (int j = 0; j < m; ++j) out[j] = 0.0;
    for (int r = 0; r < d; ++r) {
        const double* row = b + static_cast<std::size_t>(r) * m;
        for (int j = 0; j < m; ++j) out[j] += row[j] * row[j];
    }
}

} // namespace metsel::kernels::scalar_impl

#define KERNEL_NAMESPACE scalar_impl
#include "kernels_generic.inl"
#undef KERNEL_NAMESPACE

namespace metsel::kernels {

const Ops& scalar_ops() {
    static const Ops table = {
        scalar_impl::matmul_nn, scalar_impl::matmul_nt, scalar_impl::matmul_tn,
        scalar_impl::axpy,      scalar_impl::scale,     scalar_impl::vadd,
        scalar_impl::vmul,      scalar_impl::lrelu_fwd, scalar_impl::lrelu_bwd,
        scalar_impl::adam_step, scalar_impl::colwise_sumsq,
        scalar_impl::spmm,      scalar_impl::spmm_t,
    };
    return table;
}

} // namespace metsel::kernels
