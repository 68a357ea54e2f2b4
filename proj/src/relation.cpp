#include "linrel/relation.hpp"

#include <stdexcept>

namespace linrel {

LinearRelation LinearRelation::from_subspace_basis(const FieldSpec& f, std::size_t m,
                                                   std::size_t n, const Matrix& rows) {
    if (rows.field() != f) throw std::invalid_argument("from_subspace_basis: field mismatch");
    if (rows.cols() != m + n) {
        throw std::invalid_argument("from_subspace_basis: rows have " +
                                    std::to_string(rows.cols()) + " columns, expected " +
                                    std::to_string(m + n));
    }
    return LinearRelation(f, m, n, row_space_basis(rows));
}

LinearRelation LinearRelation::graph_of_map(const Matrix& a) {
    // rows (e_i | column i of a)
    return from_subspace_basis(a.field(), a.cols(), a.rows(),
                               hstack(Matrix::identity(a.field(), a.cols()), a.transpose()));
}

LinearRelation LinearRelation::from_cospan(const Matrix& a, const Matrix& b) {
    if (a.field() != b.field()) throw std::invalid_argument("from_cospan: field mismatch");
    if (a.rows() != b.rows()) {
        throw std::invalid_argument("from_cospan: codomain mismatch (" + std::to_string(a.rows()) +
                                    " vs " + std::to_string(b.rows()) + " rows)");
    }
    const Matrix k = kernel_basis(hstack(a, b.negated()));
    return from_subspace_basis(a.field(), a.cols(), b.cols(), k.transpose());
}

LinearRelation LinearRelation::from_span(const Matrix& c, const Matrix& d) {
    if (c.field() != d.field()) throw std::invalid_argument("from_span: field mismatch");
    if (c.cols() != d.cols()) {
        throw std::invalid_argument("from_span: domain mismatch (" + std::to_string(c.cols()) +
                                    " vs " + std::to_string(d.cols()) + " cols)");
    }
    return from_subspace_basis(c.field(), c.rows(), d.rows(),
                               hstack(c.transpose(), d.transpose()));
}

LinearRelation identity_relation(const FieldSpec& f, std::size_t n) {
    return LinearRelation::graph_of_map(Matrix::identity(f, n));
}

LinearRelation twist_relation(const FieldSpec& f, std::size_t m, std::size_t n) {
    Matrix t(f, n + m, m + n);
    for (std::size_t i = 0; i < m; ++i) t.at(n + i, i) = Scalar::one(f);
    for (std::size_t j = 0; j < n; ++j) t.at(j, m + j) = Scalar::one(f);
    return LinearRelation::graph_of_map(t);
}

LinearRelation zero_relation(const FieldSpec& f, std::size_t n) {
    return LinearRelation::graph_of_map(Matrix(f, n, 0));
}

LinearRelation sum_relation(const FieldSpec& f, std::size_t n) {
    const Matrix id = Matrix::identity(f, n);
    return LinearRelation::graph_of_map(hstack(id, id));
}

LinearRelation discard_relation(const FieldSpec& f, std::size_t n) {
    return LinearRelation::graph_of_map(Matrix(f, 0, n));
}

LinearRelation copy_relation(const FieldSpec& f, std::size_t n) {
    const Matrix id = Matrix::identity(f, n);
    return LinearRelation::graph_of_map(vstack(id, id));
}

LinearRelation full_relation(const FieldSpec& f, std::size_t m, std::size_t n) {
    return LinearRelation::from_subspace_basis(f, m, n, Matrix::identity(f, m + n));
}

LinearRelation opposite(const LinearRelation& r) {
    const std::size_t m = r.left_arity(), n = r.right_arity();
    Matrix rows(r.field(), r.dim(), n + m);
    for (std::size_t i = 0; i < r.dim(); ++i) {
        for (std::size_t j = 0; j < n; ++j) rows.at(i, j) = r.basis().at(i, m + j);
        for (std::size_t j = 0; j < m; ++j) rows.at(i, n + j) = r.basis().at(i, j);
    }
    return LinearRelation::from_subspace_basis(r.field(), n, m, rows);
}

namespace {

/// Intersection of two row spaces inside K^d. Coefficient vectors (a | b)
/// with aᵀ·bu + bᵀ·bv = 0 are exactly the kernel of vstack(bu, bv)ᵀ, and
/// each gives the intersection vector aᵀ·bu.
Matrix row_space_intersection(const Matrix& bu, const Matrix& bv) {
    const std::size_t d = bu.cols();
    if (bu.rows() == 0 || bv.rows() == 0) return Matrix(bu.field(), 0, d);
    const Matrix k = kernel_basis(vstack(bu, bv).transpose());
    const Matrix top = k.rows_slice(0, bu.rows());  // the `a` halves, as columns
    return row_space_basis(top.transpose() * bu);
}

}  // namespace

LinearRelation compose(const LinearRelation& r, const LinearRelation& s) {
    if (r.field() != s.field()) throw std::invalid_argument("compose: field mismatch");
    if (r.right_arity() != s.left_arity()) {
        throw std::invalid_argument("compose: arity mismatch (" +
                                    std::to_string(r.right_arity()) + " vs " +
                                    std::to_string(s.left_arity()) + ")");
    }
    const std::size_t m = r.left_arity(), k = r.right_arity(), n = s.right_arity();
    const FieldSpec& f = r.field();

    // embed into K^m × K^k × K^n
    Matrix e1(f, r.dim() + n, m + k + n);  // {(x, y, z) : (x,y) ∈ r, z free}
    for (std::size_t i = 0; i < r.dim(); ++i) {
        for (std::size_t j = 0; j < m + k; ++j) e1.at(i, j) = r.basis().at(i, j);
    }
    for (std::size_t j = 0; j < n; ++j) e1.at(r.dim() + j, m + k + j) = Scalar::one(f);

    Matrix e2(f, m + s.dim(), m + k + n);  // {(x, y, z) : x free, (y,z) ∈ s}
    for (std::size_t j = 0; j < m; ++j) e2.at(j, j) = Scalar::one(f);
    for (std::size_t i = 0; i < s.dim(); ++i) {
        for (std::size_t j = 0; j < k + n; ++j) e2.at(m + i, m + j) = s.basis().at(i, j);
    }

    const Matrix common = row_space_intersection(e1, e2);

    // project out the middle block
    Matrix rows(f, common.rows(), m + n);
    for (std::size_t i = 0; i < common.rows(); ++i) {
        for (std::size_t j = 0; j < m; ++j) rows.at(i, j) = common.at(i, j);
        for (std::size_t j = 0; j < n; ++j) rows.at(i, m + j) = common.at(i, m + k + j);
    }
    return LinearRelation::from_subspace_basis(f, m, n, rows);
}

LinearRelation direct_product(const LinearRelation& r, const LinearRelation& s) {
    if (r.field() != s.field()) throw std::invalid_argument("direct_product: field mismatch");
    const std::size_t rm = r.left_arity(), rn = r.right_arity();
    const std::size_t sm = s.left_arity(), sn = s.right_arity();
    const FieldSpec& f = r.field();
    Matrix rows(f, r.dim() + s.dim(), rm + sm + rn + sn);
    for (std::size_t i = 0; i < r.dim(); ++i) {
        for (std::size_t j = 0; j < rm; ++j) rows.at(i, j) = r.basis().at(i, j);
        for (std::size_t j = 0; j < rn; ++j) rows.at(i, rm + sm + j) = r.basis().at(i, rm + j);
    }
    for (std::size_t i = 0; i < s.dim(); ++i) {
        for (std::size_t j = 0; j < sm; ++j) rows.at(r.dim() + i, rm + j) = s.basis().at(i, j);
        for (std::size_t j = 0; j < sn; ++j) {
            rows.at(r.dim() + i, rm + sm + rn + j) = s.basis().at(i, sm + j);
        }
    }
    return LinearRelation::from_subspace_basis(f, rm + sm, rn + sn, rows);
}

namespace {

void require_same_arity(const LinearRelation& r, const LinearRelation& s, const char* op) {
    if (r.field() != s.field()) throw std::invalid_argument(std::string(op) + ": field mismatch");
    if (r.left_arity() != s.left_arity() || r.right_arity() != s.right_arity()) {
        throw std::invalid_argument(std::string(op) + ": arity mismatch");
    }
}

}  // namespace

bool includes(const LinearRelation& r, const LinearRelation& s) {
    require_same_arity(r, s, "includes");
    RowSpaceBuilder span(r.field(), r.basis().cols());
    for (std::size_t i = 0; i < r.dim(); ++i) span.insert(r.basis().row(i));
    for (std::size_t i = 0; i < s.dim(); ++i) {
        if (!span.contains(s.basis().row(i))) return false;
    }
    return true;
}

LinearRelation meet(const LinearRelation& r, const LinearRelation& s) {
    require_same_arity(r, s, "meet");
    return LinearRelation::from_subspace_basis(r.field(), r.left_arity(), r.right_arity(),
                                               row_space_intersection(r.basis(), s.basis()));
}

LinearRelation join(const LinearRelation& r, const LinearRelation& s) {
    require_same_arity(r, s, "join");
    return LinearRelation::from_subspace_basis(r.field(), r.left_arity(), r.right_arity(),
                                               vstack(r.basis(), s.basis()));
}

LinearRelation kernel(const LinearRelation& r) {
    return compose(r, opposite(zero_relation(r.field(), r.right_arity())));
}

LinearRelation image(const LinearRelation& r) {
    return compose(opposite(discard_relation(r.field(), r.left_arity())), r);
}

LinearRelation domain(const LinearRelation& r) {
    return compose(r, discard_relation(r.field(), r.right_arity()));
}

LinearRelation indeterminacy(const LinearRelation& r) {
    return compose(zero_relation(r.field(), r.left_arity()), r);
}

PropertyReport properties(const LinearRelation& r) {
    PropertyReport p;
    p.total = domain(r).dim() == r.left_arity();
    p.deterministic = indeterminacy(r).dim() == 0;
    p.surjective = image(r).dim() == r.right_arity();
    p.injective = kernel(r).dim() == 0;
    p.is_map = p.total && p.deterministic;
    p.is_bijective = p.is_map && p.injective && p.surjective;
    return p;
}

}  // namespace linrel
