#pragma once

#include <utility>

#include "linrel/decompose.hpp"

namespace linrel {

/// Simultaneous decomposition of a pair of maps a, b into a common
/// codomain: a = h·d1·p and b = h·d2·q with p, q invertible base changes,
/// d1, d2 fixed 0/1 selectors presenting the wire relation as a cospan, and
/// h the unique injective linking matrix. j = r + k_t + k_s columns of h,
/// blocked (r | k_t | k_s).
struct PairDecomposition {
    Matrix p, q;
    Matrix d1, d2;  // j x m and j x n selectors
    Matrix h;       // k x j, full column rank
    WireShape shape;
};

PairDecomposition pair_decompose(const Matrix& a, const Matrix& b);

/// General form: solves h·hstack(e1, e2) = hstack(a, b) for any jointly
/// surjective presentation (e1, e2) of the same cospan. Throws
/// std::invalid_argument when hstack(e1, e2) lacks full row rank or the
/// system is inconsistent. Only the (d1·p, d2·q) instantiation is exercised
/// by the verification suites.
Matrix linking_map(const Matrix& a, const Matrix& b, const Matrix& e1, const Matrix& e2);

/// Bases (as columns) for every subspace derived from im(a) and im(b);
/// complements are taken inside im(a) + im(b). All are column slices of h.
struct SubspaceReport {
    Matrix im_a, im_b;
    Matrix intersection, sum;
    Matrix complement_of_a, complement_of_b, complement_of_intersection;
};

SubspaceReport subspace_report(const Matrix& a, const Matrix& b);

/// Classical Zassenhaus sum/intersection computation by row-reducing
/// [Aᵀ Aᵀ; Bᵀ 0]; the independent oracle for subspace_report. Returns
/// (sum_basis, intersection_basis) as columns.
std::pair<Matrix, Matrix> zassenhaus(const Matrix& a, const Matrix& b);

}  // namespace linrel
