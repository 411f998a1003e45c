#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "metsel/errors.hpp"
#include "metsel/rng.hpp"

namespace metsel {

// Row-major double matrix. The only dense container used throughout; vectors
// are 1xN or Nx1, scalars 1x1.
struct DenseMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<double> values;

    DenseMatrix() = default;
    DenseMatrix(int r, int c) : rows(r), cols(c), values(static_cast<std::size_t>(r) * c, 0.0) {}
    DenseMatrix(int r, int c, std::vector<double> v) : rows(r), cols(c), values(std::move(v)) {
        if (values.size() != static_cast<std::size_t>(r) * c)
            throw ShapeError("DenseMatrix init: " + std::to_string(values.size()) + " values for " +
                             std::to_string(r) + "x" + std::to_string(c));
    }

    double& at(int r, int c) { return values[static_cast<std::size_t>(r) * cols + c]; }
    double at(int r, int c) const { return values[static_cast<std::size_t>(r) * cols + c]; }

    double* row(int r) { return values.data() + static_cast<std::size_t>(r) * cols; }
    const double* row(int r) const { return values.data() + static_cast<std::size_t>(r) * cols; }

    double* data() { return values.data(); }
    const double* data() const { return values.data(); }
    std::size_t size() const { return values.size(); }

    bool same_shape(const DenseMatrix& o) const { return rows == o.rows && cols == o.cols; }

    bool all_finite() const {
        for (double v : values)
            if (!std::isfinite(v)) return false;
        return true;
    }

    void fill(double v) { std::fill(values.begin(), values.end(), v); }

    static DenseMatrix zeros(int r, int c) { return DenseMatrix(r, c); }

    static DenseMatrix identity(int n) {
        DenseMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
        return m;
    }

    static DenseMatrix scalar(double v) {
        DenseMatrix m(1, 1);
        m.values[0] = v;
        return m;
    }

    static DenseMatrix randn(int r, int c, Rng& rng, double stddev = 1.0) {
        DenseMatrix m(r, c);
        for (double& v : m.values) v = stddev * rng.normal();
        return m;
    }

    // Glorot-uniform with fan_in/fan_out taken from the matrix shape.
    static DenseMatrix glorot(int r, int c, Rng& rng) {
        const double limit = std::sqrt(6.0 / (r + c));
        DenseMatrix m(r, c);
        for (double& v : m.values) v = rng.uniform(-limit, limit);
        return m;
    }
};

inline double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b) {
    if (!a.same_shape(b)) throw ShapeError("max_abs_diff on mismatched shapes");
    double m = 0.0;
    for (std::size_t i = 0; i < a.values.size(); ++i)
        m = std::max(m, std::fabs(a.values[i] - b.values[i]));
    return m;
}

} // namespace metsel
