#include "linrel/kernels.hpp"

#include <stdexcept>

namespace linrel::kernels {

Mode& mode() {
    static Mode m = Mode::Auto;
    return m;
}

std::size_t& parallel_grain() {
    static std::size_t grain = 4096;
    return grain;
}

namespace {

bool use_parallel(const FieldSpec& field, std::size_t work) {
    switch (mode()) {
        case Mode::ForceSerial: return false;
        case Mode::ForceParallel: return true;
        case Mode::Auto: break;
    }
    return !field.is_rationals() && work >= parallel_grain();
}

void eliminate_one_row(Matrix& w, std::size_t r, std::size_t pivot_row, std::size_t col) {
    const Scalar factor = w.at(r, col);
    if (factor.is_zero()) return;
    Scalar* target = w.row_ptr(r);
    const Scalar* source = w.row_ptr(pivot_row);
    for (std::size_t c = col, nc = w.cols(); c < nc; ++c) {
        target[c] -= factor * source[c];
    }
}

void require_mul_shapes(const Matrix& a, const Matrix& b) {
    if (a.field() != b.field()) throw std::invalid_argument("mul: field mismatch");
    if (a.cols() != b.rows()) {
        throw std::invalid_argument("mul: shape mismatch " + std::to_string(a.rows()) + "x" +
                                    std::to_string(a.cols()) + " * " + std::to_string(b.rows()) +
                                    "x" + std::to_string(b.cols()));
    }
}

void mul_row_range(const Matrix& a, const Matrix& b, Matrix& c, std::size_t i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
        const Scalar& aik = a.at(i, k);
        if (aik.is_zero()) continue;
        const Scalar* brow = b.row_ptr(k);
        Scalar* crow = c.row_ptr(i);
        for (std::size_t j = 0; j < b.cols(); ++j) {
            crow[j] += aik * brow[j];
        }
    }
}

}  // namespace

void eliminate_column_serial(Matrix& w, std::size_t pivot_row, std::size_t col) {
    for (std::size_t r = 0, nr = w.rows(); r < nr; ++r) {
        if (r == pivot_row) continue;
        eliminate_one_row(w, r, pivot_row, col);
    }
}

void eliminate_column_parallel(Matrix& w, std::size_t pivot_row, std::size_t col) {
    const std::size_t nr = w.rows();
#pragma omp parallel for schedule(static)
    for (std::size_t r = 0; r < nr; ++r) {
        if (r == pivot_row) continue;
        eliminate_one_row(w, r, pivot_row, col);
    }
}

void eliminate_column(Matrix& w, std::size_t pivot_row, std::size_t col) {
    if (use_parallel(w.field(), w.rows() * (w.cols() - col))) {
        eliminate_column_parallel(w, pivot_row, col);
    } else {
        eliminate_column_serial(w, pivot_row, col);
    }
}

Matrix mul_serial(const Matrix& a, const Matrix& b) {
    require_mul_shapes(a, b);
    Matrix c(a.field(), a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) mul_row_range(a, b, c, i);
    return c;
}

Matrix mul_parallel(const Matrix& a, const Matrix& b) {
    require_mul_shapes(a, b);
    Matrix c(a.field(), a.rows(), b.cols());
    const std::size_t nr = a.rows();
#pragma omp parallel for schedule(static)
    for (std::size_t i = 0; i < nr; ++i) mul_row_range(a, b, c, i);
    return c;
}

Matrix mul(const Matrix& a, const Matrix& b) {
    if (use_parallel(a.field(), a.rows() * a.cols() * b.cols())) return mul_parallel(a, b);
    return mul_serial(a, b);
}

}  // namespace linrel::kernels
