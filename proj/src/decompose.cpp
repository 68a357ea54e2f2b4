#include "linrel/decompose.hpp"

#include <stdexcept>

namespace linrel {

LinearRelation canonical_wire_relation(const FieldSpec& f, const WireShape& s) {
    if (!s.consistent()) throw std::invalid_argument("canonical_wire_relation: bad shape");
    Matrix rows(f, s.r + s.k_i + s.k_d, s.m + s.n);
    const Scalar one = Scalar::one(f);
    for (std::size_t i = 0; i < s.r; ++i) {  // through-wires: (u | u)
        rows.at(i, i) = one;
        rows.at(i, s.m + i) = one;
    }
    for (std::size_t i = 0; i < s.k_i; ++i) {  // kernel block: (v | 0)
        rows.at(s.r + i, s.r + i) = one;
    }
    for (std::size_t i = 0; i < s.k_d; ++i) {  // indeterminacy block: (0 | w)
        rows.at(s.r + s.k_i + i, s.m + s.r + s.k_s + i) = one;
    }
    return LinearRelation::from_subspace_basis(f, s.m, s.n, rows);
}

namespace {

Matrix columns_from_rows(const FieldSpec& f, const std::vector<std::vector<Scalar>>& rows,
                         std::size_t width) {
    Matrix m(f, width, rows.size());
    for (std::size_t j = 0; j < rows.size(); ++j) {
        for (std::size_t i = 0; i < width; ++i) m.at(i, j) = rows[j][i];
    }
    return m;
}

std::vector<Scalar> unit_row(const FieldSpec& f, std::size_t width, std::size_t at) {
    std::vector<Scalar> row(width, Scalar::zero(f));
    row[at] = Scalar::one(f);
    return row;
}

}  // namespace

CospanDecomposition cospan_decompose(const LinearRelation& rel) {
    const FieldSpec& f = rel.field();
    const std::size_t m = rel.left_arity(), n = rel.right_arity(), d = rel.dim();

    const Matrix left = rel.basis().cols_slice(0, m);       // d x m
    const Matrix right = rel.basis().cols_slice(m, m + n);  // d x n

    // kernel rows {cᵀ·left : cᵀ·right = 0}, indeterminacy rows dually
    const Matrix kc = kernel_basis(right.transpose());
    const Matrix kernel_rows = row_space_basis(kc.transpose() * left);
    const Matrix ic = kernel_basis(left.transpose());
    const Matrix indet_rows = row_space_basis(ic.transpose() * right);
    const Matrix domain_rows = row_space_basis(left);
    const Matrix image_rows = row_space_basis(right);

    // left side: kernel basis, extended through the domain (u-block
    // representatives), then to K^m (t-block)
    RowSpaceBuilder left_span(f, m);
    std::vector<std::vector<Scalar>> v_rows, x_rows, t_rows;
    for (std::size_t i = 0; i < kernel_rows.rows(); ++i) {
        std::vector<Scalar> row = kernel_rows.row(i);
        if (!left_span.insert(row)) throw std::logic_error("cospan_decompose: dependent kernel");
        v_rows.push_back(std::move(row));
    }
    for (std::size_t i = 0; i < domain_rows.rows(); ++i) {
        std::vector<Scalar> row = domain_rows.row(i);
        if (left_span.insert(row)) x_rows.push_back(std::move(row));
    }
    for (std::size_t i = 0; i < m; ++i) {
        std::vector<Scalar> row = unit_row(f, m, i);
        if (left_span.insert(row)) t_rows.push_back(std::move(row));
    }

    const std::size_t r = x_rows.size();
    const std::size_t k_i = v_rows.size();
    const std::size_t k_t = t_rows.size();

    // for each u-representative x, pick a partner y with (x, y) ∈ R
    const LinearSolver through(left.transpose());
    std::vector<std::vector<Scalar>> y_rows;
    for (const auto& x : x_rows) {
        Matrix xcol(f, m, 1);
        for (std::size_t i = 0; i < m; ++i) xcol.at(i, 0) = x[i];
        const auto coeff = through.solve(xcol);
        if (!coeff) throw std::logic_error("cospan_decompose: domain representative unreachable");
        const Matrix ycol = right.transpose() * *coeff;
        std::vector<Scalar> y(n, Scalar::zero(f));
        for (std::size_t i = 0; i < n; ++i) y[i] = ycol.at(i, 0);
        y_rows.push_back(std::move(y));
    }

    // right side: the y partners and the indeterminacy basis must span the
    // image; extend to K^n for the s-block
    RowSpaceBuilder right_span(f, n);
    std::vector<std::vector<Scalar>> w_rows, s_rows;
    for (const auto& y : y_rows) {
        if (!right_span.insert(y)) throw std::logic_error("cospan_decompose: dependent partner");
    }
    for (std::size_t i = 0; i < indet_rows.rows(); ++i) {
        std::vector<Scalar> row = indet_rows.row(i);
        if (!right_span.insert(row)) {
            throw std::logic_error("cospan_decompose: indeterminacy meets partners");
        }
        w_rows.push_back(std::move(row));
    }
    for (std::size_t i = 0; i < image_rows.rows(); ++i) {
        if (!right_span.contains(image_rows.row(i))) {
            throw std::logic_error("cospan_decompose: image not covered");
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Scalar> row = unit_row(f, n, i);
        if (right_span.insert(row)) s_rows.push_back(std::move(row));
    }

    const std::size_t k_d = w_rows.size();
    const std::size_t k_s = s_rows.size();

    const WireShape shape = WireShape::make(r, k_i, k_s, k_t, k_d);
    if (shape.m != m || shape.n != n || d != r + k_i + k_d) {
        throw std::logic_error("cospan_decompose: dimension bookkeeping failed");
    }

    // p_inv columns: (u | v | t); q_inv columns: (u | s | w)
    std::vector<std::vector<Scalar>> p_cols = x_rows;
    p_cols.insert(p_cols.end(), v_rows.begin(), v_rows.end());
    p_cols.insert(p_cols.end(), t_rows.begin(), t_rows.end());
    std::vector<std::vector<Scalar>> q_cols = y_rows;
    q_cols.insert(q_cols.end(), s_rows.begin(), s_rows.end());
    q_cols.insert(q_cols.end(), w_rows.begin(), w_rows.end());

    Matrix p_inv = columns_from_rows(f, p_cols, m);
    Matrix q_inv = columns_from_rows(f, q_cols, n);
    auto p = inverse(p_inv);
    auto q = inverse(q_inv);
    if (!p || !q) throw std::logic_error("cospan_decompose: base change not invertible");

    return CospanDecomposition{std::move(*p), std::move(p_inv), std::move(*q), std::move(q_inv),
                               shape};
}

LinearRelation rebuild(const FieldSpec& f, const CospanDecomposition& d) {
    const LinearRelation w = canonical_wire_relation(f, d.shape);
    return compose(LinearRelation::graph_of_map(d.p),
                   compose(w, opposite(LinearRelation::graph_of_map(d.q))));
}

WireShape wire_shape(const LinearRelation& r) { return cospan_decompose(r).shape; }

PropertyReport classify(const LinearRelation& r) {
    const WireShape s = wire_shape(r);
    PropertyReport p;
    p.injective = s.k_i == 0;
    p.surjective = s.k_s == 0;
    p.total = s.k_t == 0;
    p.deterministic = s.k_d == 0;
    p.is_map = p.total && p.deterministic;
    p.is_bijective = p.is_map && p.injective && p.surjective;
    return p;
}

namespace {

void require_cospan_pair(const Matrix& a, const Matrix& b, const char* op) {
    if (a.field() != b.field()) throw std::invalid_argument(std::string(op) + ": field mismatch");
    if (a.rows() != b.rows()) {
        throw std::invalid_argument(std::string(op) + ": codomain mismatch");
    }
}

/// im(a) ⊆ im(b), by a rank test independent of the solver.
bool image_included(const Matrix& a, const Matrix& b) {
    return rank(hstack(b, a)) == rank(b);
}

}  // namespace

std::optional<Matrix> total_witness(const Matrix& a, const Matrix& b) {
    require_cospan_pair(a, b, "total_witness");
    auto s = solve_right(b, a);
    if (s.has_value() != image_included(a, b)) {
        throw std::logic_error("total_witness: solver disagrees with inclusion test");
    }
    return s;
}

std::optional<Matrix> det_witness(const Matrix& a, const Matrix& b) {
    require_cospan_pair(a, b, "det_witness");
    auto s = solve_right(a, b);
    if (s.has_value() != image_included(b, a)) {
        throw std::logic_error("det_witness: solver disagrees with inclusion test");
    }
    return s;
}

DictReport cospan_dict_rows(const Matrix& a, const Matrix& b) {
    require_cospan_pair(a, b, "cospan_dict_rows");
    const LinearRelation rel = LinearRelation::from_cospan(a, b);
    const PropertyReport direct = properties(rel);
    const WireShape s = wire_shape(rel);

    DictReport rep;
    rep.total.predicate = direct.total;
    rep.deterministic.predicate = direct.deterministic;
    rep.surjective.predicate = direct.surjective;
    rep.injective.predicate = direct.injective;

    rep.total.shape = s.k_t == 0;
    rep.deterministic.shape = s.k_d == 0;
    rep.surjective.shape = s.k_s == 0;
    rep.injective.shape = s.k_i == 0;

    // witnesses: a graph inside the cospan for TOT, an opposite graph for
    // SUR, and left-inverses of b / a for DET / INJ; each is checked against
    // its defining equation before it counts
    const auto wt = total_witness(a, b);
    rep.total.witness = wt && b * *wt == a;
    const auto ws = det_witness(a, b);
    rep.surjective.witness = ws && a * *ws == b;
    const auto wd = left_inverse(b);
    rep.deterministic.witness = wd && *wd * b == Matrix::identity(b.field(), b.cols());
    const auto wi = left_inverse(a);
    rep.injective.witness = wi && *wi * a == Matrix::identity(a.field(), a.cols());

    rep.total.inclusion = image_included(a, b);
    rep.surjective.inclusion = image_included(b, a);
    rep.deterministic.inclusion = kernel_basis(b).cols() == 0;
    rep.injective.inclusion = kernel_basis(a).cols() == 0;

    if (!rep.all_agree()) {
        throw std::logic_error("cospan_dict_rows: equivalent characterizations disagree");
    }
    return rep;
}

}  // namespace linrel
