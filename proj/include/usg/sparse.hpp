#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "usg/dense.hpp"

namespace usg {

struct Triplet {
    int64_t row = 0;
    int64_t col = 0;
    double value = 0.0;

    bool operator==(const Triplet&) const = default;
};

// Coordinate-format sparse matrix. Houses both the graph construction matrix C
// (nodes x tokens) and the adjacency matrix A (nodes x nodes).
struct SparseMatrix {
    int64_t rows = 0;
    int64_t cols = 0;
    std::vector<Triplet> coo;  // sorted by (row, col), unique coordinates

    void set(int64_t r, int64_t c, double v) { coo.push_back({r, c, v}); }

    // Sort by coordinate, drop explicit zeros, reject duplicate coordinates.
    void normalize();

    bool operator==(const SparseMatrix&) const = default;
};

Matrix to_dense(const SparseMatrix& m);
SparseMatrix to_sparse(const Matrix& m);

// JSON interchange: {"rows","cols","coo":[[i,j,v]...]} with sorted (i,j).
std::string serialize_sparse(const SparseMatrix& m);
SparseMatrix parse_sparse(const std::string& text);

}  // namespace usg
