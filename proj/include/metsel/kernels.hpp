#pragma once

#include <string>

namespace metsel::kernels {

// Flat data-parallel kernels behind a runtime-dispatched table. Every entry
// has a scalar reference implementation and, on x86-64 with AVX2+FMA, a
// vectorized variant; the two are equivalence-tested against each other.
// Reductions use a fixed lane order, so results are deterministic for a
// given backend.
struct Ops {
    // c = a*b (m x k times k x n), or c += a*b when accumulate is set.
    void (*matmul_nn)(const double* a, const double* b, double* c, int m, int k, int n,
                      bool accumulate);
    // c = a*b^T (a: m x k, b: n x k).
    void (*matmul_nt)(const double* a, const double* b, double* c, int m, int k, int n,
                      bool accumulate);
    // c = a^T*b (a: k x m, b: k x n).
    void (*matmul_tn)(const double* a, const double* b, double* c, int m, int k, int n,
                      bool accumulate);

    void (*axpy)(int n, double alpha, const double* x, double* y); // y += alpha*x
    void (*scale)(int n, double alpha, double* x);                 // x *= alpha
    void (*vadd)(int n, const double* a, const double* b, double* out);
    void (*vmul)(int n, const double* a, const double* b, double* out);

    // Leaky ReLU with slope for negative inputs; slope 0 is plain ReLU.
    // Gradient at exactly 0 is defined as 0 in the backward kernel.
    void (*lrelu_fwd)(int n, double slope, const double* x, double* out);
    void (*lrelu_bwd)(int n, double slope, const double* x, const double* g, double* gx);

    // One Adam step over a flat parameter block; b1t/b2t are beta^t powers.
    void (*adam_step)(int n, double* p, const double* g, double* m, double* v, double lr,
                      double beta1, double beta2, double eps, double b1t, double b2t);

    // out[j] = sum_r b[r*m + j]^2  (column-wise sum of squares of a d x m block).
    void (*colwise_sumsq)(const double* b, int d, int m, double* out);

    // CSR sparse-dense product: y = A*x (x, y have xc columns).
    void (*spmm)(int rows, const int* offs, const int* cols, const double* vals,
                 const double* x, int xc, double* y, bool accumulate);
    // y += A^T*g, scatter form; deterministic row order.
    void (*spmm_t)(int rows, int out_rows, const int* offs, const int* cols, const double* vals,
                   const double* g, int xc, double* y, bool accumulate);
};

enum class Backend { scalar, avx2 };

bool avx2_available();

// Active table. Defaults to the best available backend; the METSEL_KERNELS
// environment variable ("scalar" or "avx2") or set_backend() override it.
const Ops& ops();
Backend active_backend();
void set_backend(Backend b);
std::string backend_name();

const Ops& scalar_ops();
const Ops* avx2_ops_or_null();

// Triangular solves with many right-hand sides, composed from the active
// axpy/scale kernels. b is d x m row-major; each column is one system.
void solve_lower_multi(const double* L, int d, double* b, int m);    // L z = b
void solve_lower_t_multi(const double* L, int d, double* b, int m);  // L^T z = b

} // namespace metsel::kernels
