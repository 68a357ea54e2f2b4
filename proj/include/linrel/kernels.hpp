#pragma once

#include <cstddef>

#include "linrel/matrix.hpp"

namespace linrel::kernels {

/// Dispatch policy for the OpenMP kernels. Auto forks only when the loop is
/// big enough and the field is a prime field: rational row updates allocate
/// per operation and the shared allocator eats the gain, so they stay
/// serial. The forced modes exist for the parity tests and the benchmark.
enum class Mode { Auto, ForceSerial, ForceParallel };

Mode& mode();
std::size_t& parallel_grain();  // minimum scalar-op count before forking

/// Column elimination step: for every row r != pivot_row with a nonzero
/// entry in `col`, subtracts that entry times the pivot row. The pivot
/// entry must be 1 and the pivot row must be zero left of `col`; updates
/// touch columns [col, cols).
void eliminate_column(Matrix& w, std::size_t pivot_row, std::size_t col);
void eliminate_column_serial(Matrix& w, std::size_t pivot_row, std::size_t col);
void eliminate_column_parallel(Matrix& w, std::size_t pivot_row, std::size_t col);

Matrix mul(const Matrix& a, const Matrix& b);
Matrix mul_serial(const Matrix& a, const Matrix& b);
Matrix mul_parallel(const Matrix& a, const Matrix& b);

}  // namespace linrel::kernels
