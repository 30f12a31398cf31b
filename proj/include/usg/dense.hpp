#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace usg {

// Row-major double matrix. Deliberately small and unclever: the kernels in
// this toolkit are desk-scale reference implementations, not production math.
class Matrix {
public:
    Matrix() = default;
    Matrix(size_t rows, size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(size_t n) {
        Matrix m(n, n);
        for (size_t i = 0; i < n; ++i) m.at(i, i) = 1.0;
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    bool empty() const { return data_.empty(); }

    double& at(size_t i, size_t j) { return data_[i * cols_ + j]; }
    double at(size_t i, size_t j) const { return data_[i * cols_ + j]; }

    double* row(size_t i) { return data_.data() + i * cols_; }
    const double* row(size_t i) const { return data_.data() + i * cols_; }

    std::vector<double>& data() { return data_; }
    const std::vector<double>& data() const { return data_; }

    bool operator==(const Matrix& other) const = default;

private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<double> data_;
};

Matrix matmul(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& m);
Matrix add(const Matrix& a, const Matrix& b);
Matrix scale(const Matrix& m, double s);

// Largest absolute elementwise difference; matrices must agree in shape.
double max_abs_diff(const Matrix& a, const Matrix& b);

// Self-describing binary container for dense float64 matrices:
// 8-byte magic "USGDMAT1", uint64 rows, uint64 cols, row-major little-endian data.
void write_matrix(const std::string& path, const Matrix& m);
Matrix read_matrix(const std::string& path);

}  // namespace usg
