#include "linrel/pair.hpp"

#include <stdexcept>

namespace linrel {

namespace {

void require_pair(const Matrix& a, const Matrix& b, const char* op) {
    if (a.field() != b.field()) throw std::invalid_argument(std::string(op) + ": field mismatch");
    if (a.rows() != b.rows()) throw std::invalid_argument(std::string(op) + ": codomain mismatch");
}

// d1: (u, v, t) -> (u, t, 0); d2: (u, s, w) -> (u, 0, s). Output blocks
// (r | k_t | k_s).
Matrix selector_d1(const FieldSpec& f, const WireShape& s) {
    const std::size_t j = s.r + s.k_t + s.k_s;
    Matrix d1(f, j, s.m);
    for (std::size_t i = 0; i < s.r; ++i) d1.at(i, i) = Scalar::one(f);
    for (std::size_t i = 0; i < s.k_t; ++i) {
        d1.at(s.r + i, s.r + s.k_i + i) = Scalar::one(f);
    }
    return d1;
}

Matrix selector_d2(const FieldSpec& f, const WireShape& s) {
    const std::size_t j = s.r + s.k_t + s.k_s;
    Matrix d2(f, j, s.n);
    for (std::size_t i = 0; i < s.r; ++i) d2.at(i, i) = Scalar::one(f);
    for (std::size_t i = 0; i < s.k_s; ++i) {
        d2.at(s.r + s.k_t + i, s.r + i) = Scalar::one(f);
    }
    return d2;
}

}  // namespace

Matrix linking_map(const Matrix& a, const Matrix& b, const Matrix& e1, const Matrix& e2) {
    require_pair(a, b, "linking_map");
    const Matrix targets = hstack(e1, e2);
    if (kernel_basis(targets.transpose()).cols() != 0) {
        throw std::invalid_argument("linking_map: presentation is not jointly surjective");
    }
    auto h = solve_left(targets, hstack(a, b));
    if (!h) throw std::invalid_argument("linking_map: pair does not factor through presentation");
    return *h;
}

PairDecomposition pair_decompose(const Matrix& a, const Matrix& b) {
    require_pair(a, b, "pair_decompose");
    const FieldSpec& f = a.field();

    const CospanDecomposition cd = cospan_decompose(LinearRelation::from_cospan(a, b));
    const Matrix d1 = selector_d1(f, cd.shape);
    const Matrix d2 = selector_d2(f, cd.shape);

    Matrix h(f, 0, 0);
    try {
        h = linking_map(a, b, d1 * cd.p, d2 * cd.q);
    } catch (const std::invalid_argument& e) {
        throw std::logic_error(std::string("pair_decompose: ") + e.what());
    }

    if (h * d1 * cd.p != a || h * d2 * cd.q != b) {
        throw std::logic_error("pair_decompose: factorization identities failed");
    }
    if (kernel_basis(h).cols() != 0) {
        throw std::logic_error("pair_decompose: linking matrix not injective");
    }
    return PairDecomposition{cd.p, cd.q, d1, d2, std::move(h), cd.shape};
}

SubspaceReport subspace_report(const Matrix& a, const Matrix& b) {
    const PairDecomposition pd = pair_decompose(a, b);
    const std::size_t r = pd.shape.r, kt = pd.shape.k_t;
    const std::size_t j = r + kt + pd.shape.k_s;
    SubspaceReport rep{
        pd.h.cols_slice(0, r + kt),                              // im a: blocks r, k_t
        hstack(pd.h.cols_slice(0, r), pd.h.cols_slice(r + kt, j)),  // im b: blocks r, k_s
        pd.h.cols_slice(0, r),                                   // intersection
        pd.h,                                                    // sum
        pd.h.cols_slice(r + kt, j),                              // complement of im a
        pd.h.cols_slice(r, r + kt),                              // complement of im b
        pd.h.cols_slice(r, j),                                   // complement of intersection
    };
    return rep;
}

std::pair<Matrix, Matrix> zassenhaus(const Matrix& a, const Matrix& b) {
    require_pair(a, b, "zassenhaus");
    const FieldSpec& f = a.field();
    const std::size_t k = a.rows();

    // rows (aᵢᵀ | aᵢᵀ) for columns of a, (bᵢᵀ | 0) for columns of b
    Matrix z(f, a.cols() + b.cols(), 2 * k);
    for (std::size_t c = 0; c < a.cols(); ++c) {
        for (std::size_t i = 0; i < k; ++i) {
            z.at(c, i) = a.at(i, c);
            z.at(c, k + i) = a.at(i, c);
        }
    }
    for (std::size_t c = 0; c < b.cols(); ++c) {
        for (std::size_t i = 0; i < k; ++i) z.at(a.cols() + c, i) = b.at(i, c);
    }

    const RrefResult rr = rref(z);
    std::vector<std::size_t> sum_rows, meet_rows;
    for (std::size_t i = 0; i < rr.rank; ++i) {
        (rr.pivot_cols[i] < k ? sum_rows : meet_rows).push_back(i);
    }
    Matrix sum(f, k, sum_rows.size());
    for (std::size_t c = 0; c < sum_rows.size(); ++c) {
        for (std::size_t i = 0; i < k; ++i) sum.at(i, c) = rr.rref.at(sum_rows[c], i);
    }
    Matrix meet(f, k, meet_rows.size());
    for (std::size_t c = 0; c < meet_rows.size(); ++c) {
        for (std::size_t i = 0; i < k; ++i) meet.at(i, c) = rr.rref.at(meet_rows[c], k + i);
    }
    return {std::move(sum), std::move(meet)};
}

}  // namespace linrel
