#pragma once

#include <string>
#include <vector>

#include "metsel/dense.hpp"
#include "metsel/errors.hpp"

namespace metsel {

// Compressed sparse row matrix.
// Invariants: row_offsets has rows+1 nondecreasing entries, col indices are
// sorted within each row, in [0, cols), and free of duplicates.
struct SparseCSR {
    int rows = 0;
    int cols = 0;
    std::vector<int> row_offsets;
    std::vector<int> col_indices;
    std::vector<double> values;

    SparseCSR() = default;
    SparseCSR(int r, int c) : rows(r), cols(c), row_offsets(r + 1, 0) {}

    int nnz() const { return static_cast<int>(col_indices.size()); }

    void validate() const {
        if (static_cast<int>(row_offsets.size()) != rows + 1)
            throw ShapeError("CSR: row_offsets length " + std::to_string(row_offsets.size()) +
                             " for " + std::to_string(rows) + " rows");
        if (row_offsets.front() != 0 || row_offsets.back() != nnz())
            throw ShapeError("CSR: bad offset bounds");
        for (int r = 0; r < rows; ++r) {
            if (row_offsets[r] > row_offsets[r + 1]) throw ShapeError("CSR: decreasing row offsets");
            for (int k = row_offsets[r]; k < row_offsets[r + 1]; ++k) {
                if (col_indices[k] < 0 || col_indices[k] >= cols)
                    throw ShapeError("CSR: column index out of range");
                if (k > row_offsets[r] && col_indices[k] <= col_indices[k - 1])
                    throw ShapeError("CSR: unsorted or duplicate column in row " + std::to_string(r));
            }
        }
    }

    // Build from (row, col, value) triplets; triplets must be unique.
    static SparseCSR from_triplets(int rows, int cols,
                                   std::vector<std::tuple<int, int, double>> trips);

    DenseMatrix densify() const {
        DenseMatrix out(rows, cols);
        for (int r = 0; r < rows; ++r)
            for (int k = row_offsets[r]; k < row_offsets[r + 1]; ++k)
                out.at(r, col_indices[k]) = values[k];
        return out;
    }
};

} // namespace metsel
