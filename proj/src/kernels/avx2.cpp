// AVX2+FMA kernel variants. This translation unit is compiled with
// -mavx2 -mfma on x86-64 only; dispatch.cpp checks cpuid before handing out
// the table. Horizontal reductions keep a fixed lane order so repeated runs
// give identical bits.

#include "metsel/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <cmath>
#include <cstddef>

namespace metsel::kernels::avx2_impl {

static inline void row_axpy(int n, double alpha, const double* x, double* y) {
    const __m256d va = _mm256_set1_pd(alpha);
    int i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d vy = _mm256_loadu_pd(y + i);
        __m256d vx = _mm256_loadu_pd(x + i);
        vy = _mm256_fmadd_pd(va, vx, vy);
        _mm256_storeu_pd(y + i, vy);
    }
    for (; i < n; ++i) y[i] += alpha * x[i];
}

static inline double row_dot(int n, const double* a, const double* b) {
    __m256d acc = _mm256_setzero_pd();
    int i = 0;
    for (; i + 4 <= n; i += 4)
        acc = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc);
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    double s = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
    for (; i < n; ++i) s += a[i] * b[i];
    return s;
}

void scale(int n, double alpha, double* x) {
    const __m256d va = _mm256_set1_pd(alpha);
    int i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(x + i, _mm256_mul_pd(va, _mm256_loadu_pd(x + i)));
    for (; i < n; ++i) x[i] *= alpha;
}

void vadd(int n, const double* a, const double* b, double* out) {
    int i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(out + i, _mm256_add_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
    for (; i < n; ++i) out[i] = a[i] + b[i];
}

void vmul(int n, const double* a, const double* b, double* out) {
    int i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(out + i, _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
    for (; i < n; ++i) out[i] = a[i] * b[i];
}

void lrelu_fwd(int n, double slope, const double* x, double* out) {
    const __m256d vs = _mm256_set1_pd(slope);
    const __m256d zero = _mm256_setzero_pd();
    int i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d vx = _mm256_loadu_pd(x + i);
        const __m256d mask = _mm256_cmp_pd(vx, zero, _CMP_GT_OQ);
        _mm256_storeu_pd(out + i, _mm256_blendv_pd(_mm256_mul_pd(vs, vx), vx, mask));
    }
    for (; i < n; ++i) out[i] = x[i] > 0.0 ? x[i] : slope * x[i];
}

void lrelu_bwd(int n, double slope, const double* x, const double* g, double* gx) {
    const __m256d vs = _mm256_set1_pd(slope);
    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d zero = _mm256_setzero_pd();
    int i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d vx = _mm256_loadu_pd(x + i);
        const __m256d mask = _mm256_cmp_pd(vx, zero, _CMP_GT_OQ);
        const __m256d deriv = _mm256_blendv_pd(vs, one, mask);
        __m256d vgx = _mm256_loadu_pd(gx + i);
        vgx = _mm256_fmadd_pd(deriv, _mm256_loadu_pd(g + i), vgx);
        _mm256_storeu_pd(gx + i, vgx);
    }
    for (; i < n; ++i) gx[i] += (x[i] > 0.0 ? 1.0 : slope) * g[i];
}

void adam_step(int n, double* p, const double* g, double* m, double* v, double lr, double beta1,
               double beta2, double eps, double b1t, double b2t) {
    const __m256d vb1 = _mm256_set1_pd(beta1);
    const __m256d vb2 = _mm256_set1_pd(beta2);
    const __m256d v1mb1 = _mm256_set1_pd(1.0 - beta1);
    const __m256d v1mb2 = _mm256_set1_pd(1.0 - beta2);
    const __m256d vc1 = _mm256_set1_pd(1.0 / (1.0 - b1t));
    const __m256d vc2 = _mm256_set1_pd(1.0 / (1.0 - b2t));
    const __m256d vlr = _mm256_set1_pd(lr);
    const __m256d veps = _mm256_set1_pd(eps);
    int i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d vg = _mm256_loadu_pd(g + i);
        __m256d vm = _mm256_fmadd_pd(v1mb1, vg, _mm256_mul_pd(vb1, _mm256_loadu_pd(m + i)));
        __m256d vv = _mm256_fmadd_pd(v1mb2, _mm256_mul_pd(vg, vg),
                                     _mm256_mul_pd(vb2, _mm256_loadu_pd(v + i)));
        _mm256_storeu_pd(m + i, vm);
        _mm256_storeu_pd(v + i, vv);
        const __m256d mhat = _mm256_mul_pd(vm, vc1);
        const __m256d vhat = _mm256_mul_pd(vv, vc2);
        const __m256d denom = _mm256_add_pd(_mm256_sqrt_pd(vhat), veps);
        const __m256d step = _mm256_div_pd(_mm256_mul_pd(vlr, mhat), denom);
        _mm256_storeu_pd(p + i, _mm256_sub_pd(_mm256_loadu_pd(p + i), step));
    }
    for (; i < n; ++i) {
        m[i] = beta1 * m[i] + (1.0 - beta1) * g[i];
        v[i] = beta2 * v[i] + (1.0 - beta2) * g[i] * g[i];
        const double mhat = m[i] / (1.0 - b1t);
        const double vhat = v[i] / (1.0 - b2t);
        p[i] -= lr * mhat / (std::sqrt(vhat) + eps);
    }
}

void colwise_sumsq(const double* b, int d, int m, double* out) {
    int j = 0;
    for (; j + 4 <= m; j += 4) _mm256_storeu_pd(out + j, _mm256_setzero_pd());
    for (; j < m; ++j) out[j] = 0.0;
    for (int r = 0; r < d; ++r) {
        const double* row = b + static_cast<std::size_t>(r) * m;
        int i = 0;
        for (; i + 4 <= m; i += 4) {
            const __m256d vr = _mm256_loadu_pd(row + i);
            __m256d vo = _mm256_loadu_pd(out + i);
            vo = _mm256_fmadd_pd(vr, vr, vo);
            _mm256_storeu_pd(out + i, vo);
        }
        for (; i < m; ++i) out[i] += row[i] * row[i];
    }
}

} // namespace metsel::kernels::avx2_impl

#define KERNEL_NAMESPACE avx2_impl
#include "kernels_generic.inl"
#undef KERNEL_NAMESPACE

namespace metsel::kernels {

const Ops* avx2_ops_or_null() {
    static const Ops table = {
        avx2_impl::matmul_nn, avx2_impl::matmul_nt, avx2_impl::matmul_tn,
        avx2_impl::axpy,      avx2_impl::scale,     avx2_impl::vadd,
        avx2_impl::vmul,      avx2_impl::lrelu_fwd, avx2_impl::lrelu_bwd,
        avx2_impl::adam_step, avx2_impl::colwise_sumsq,
        avx2_impl::spmm,      avx2_impl::spmm_t,
    };
    return &table;
}

} // namespace metsel::kernels

#else // non-x86: AVX2 table absent, scalar path is used everywhere.

namespace metsel::kernels {
const Ops* avx2_ops_or_null() { return nullptr; }
} // namespace metsel::kernels

#endif
