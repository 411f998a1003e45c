// Shared kernel bodies, included by both the scalar and AVX2 translation
// units. The vector TU overrides the innermost loops; everything that is
// pure control flow lives here once.

namespace metsel::kernels::KERNEL_NAMESPACE {

void matmul_nn(const double* a, const double* b, double* c, int m, int k, int n,
               bool accumulate) {
    if (!accumulate)
        for (int i = 0; i < m * n; ++i) c[i] = 0.0;
    for (int i = 0; i < m; ++i) {
        const double* arow = a + static_cast<std::size_t>(i) * k;
        double* crow = c + static_cast<std::size_t>(i) * n;
        for (int p = 0; p < k; ++p) {
            const double av = arow[p];
            if (av == 0.0) continue;
            row_axpy(n, av, b + static_cast<std::size_t>(p) * n, crow);
        }
    }
}

void matmul_nt(const double* a, const double* b, double* c, int m, int k, int n,
               bool accumulate) {
    for (int i = 0; i < m; ++i) {
        const double* arow = a + static_cast<std::size_t>(i) * k;
        double* crow = c + static_cast<std::size_t>(i) * n;
        for (int j = 0; j < n; ++j) {
            const double d = row_dot(k, arow, b + static_cast<std::size_t>(j) * k);
            crow[j] = accumulate ? crow[j] + d : d;
        }
    }
}

void matmul_tn(const double* a, const double* b, double* c, int m, int k, int n,
               bool accumulate) {
    if (!accumulate)
        for (int i = 0; i < m * n; ++i) c[i] = 0.0;
    for (int p = 0; p < k; ++p) {
        const double* arow = a + static_cast<std::size_t>(p) * m;
        const double* brow = b + static_cast<std::size_t>(p) * n;
        for (int i = 0; i < m; ++i) {
            const double av = arow[i];
            if (av == 0.0) continue;
            row_axpy(n, av, brow, c + static_cast<std::size_t>(i) * n);
        }
    }
}

void axpy(int n, double alpha, const double* x, double* y) { row_axpy(n, alpha, x, y); }

void spmm(int rows, const int* offs, const int* cols, const double* vals, const double* x,
          int xc, double* y, bool accumulate) {
    if (!accumulate)
        for (std::size_t i = 0; i < static_cast<std::size_t>(rows) * xc; ++i) y[i] = 0.0;
    for (int r = 0; r < rows; ++r) {
        double* yrow = y + static_cast<std::size_t>(r) * xc;
        for (int k = offs[r]; k < offs[r + 1]; ++k)
            row_axpy(xc, vals[k], x + static_cast<std::size_t>(cols[k]) * xc, yrow);
    }
}

void spmm_t(int rows, int out_rows, const int* offs, const int* cols, const double* vals,
            const double* g, int xc, double* y, bool accumulate) {
    if (!accumulate)
        for (std::size_t i = 0; i < static_cast<std::size_t>(out_rows) * xc; ++i) y[i] = 0.0;
    for (int r = 0; r < rows; ++r) {
        const double* grow = g + static_cast<std::size_t>(r) * xc;
        for (int k = offs[r]; k < offs[r + 1]; ++k)
            row_axpy(xc, vals[k], grow, y + static_cast<std::size_t>(cols[k]) * xc);
    }
}

} // namespace metsel::kernels::KERNEL_NAMESPACE
