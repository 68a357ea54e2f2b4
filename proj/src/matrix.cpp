#include "linrel/matrix.hpp"

#include <stdexcept>
#include <utility>

#include "linrel/kernels.hpp"

namespace linrel {

Matrix::Matrix(const FieldSpec& f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), e_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(const FieldSpec& f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
}

Matrix Matrix::from_rows(const FieldSpec& f, std::size_t rows, std::size_t cols,
                         std::vector<Scalar> entries) {
    if (entries.size() != rows * cols) {
        throw std::invalid_argument("from_rows: entry count " + std::to_string(entries.size()) +
                                    " != " + std::to_string(rows) + "*" + std::to_string(cols));
    }
    for (const Scalar& s : entries) {
        if (s.field() != f) throw std::invalid_argument("from_rows: entry field mismatch");
    }
    Matrix m(f, rows, cols);
    m.e_ = std::move(entries);
    return m;
}

Matrix Matrix::from_ints(const FieldSpec& f,
                         std::initializer_list<std::initializer_list<long long>> rows) {
    const std::size_t nr = rows.size();
    const std::size_t nc = nr == 0 ? 0 : rows.begin()->size();
    Matrix m(f, nr, nc);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != nc) throw std::invalid_argument("from_ints: ragged rows");
        std::size_t j = 0;
        for (long long v : row) m.at(i, j++) = Scalar::from_int(f, v);
        ++i;
    }
    return m;
}

std::vector<Scalar> Matrix::row(std::size_t i) const {
    const auto offset = static_cast<std::ptrdiff_t>(i * cols_);
    return std::vector<Scalar>(e_.begin() + offset,
                               e_.begin() + offset + static_cast<std::ptrdiff_t>(cols_));
}

void Matrix::set_row(std::size_t i, const std::vector<Scalar>& values) {
    for (std::size_t j = 0; j < cols_; ++j) at(i, j) = values[j];
}

void Matrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    }
    return t;
}

Matrix Matrix::negated() const {
    Matrix t = *this;
    for (Scalar& s : t.e_) s = -s;
    return t;
}

Matrix Matrix::rows_slice(std::size_t r0, std::size_t r1) const {
    Matrix t(field_, r1 - r0, cols_);
    for (std::size_t i = r0; i < r1; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) t.at(i - r0, j) = at(i, j);
    }
    return t;
}

Matrix Matrix::cols_slice(std::size_t c0, std::size_t c1) const {
    Matrix t(field_, rows_, c1 - c0);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = c0; j < c1; ++j) t.at(i, j - c0) = at(i, j);
    }
    return t;
}

Matrix Matrix::select_cols(const std::vector<std::size_t>& idx) const {
    Matrix t(field_, rows_, idx.size());
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < idx.size(); ++j) t.at(i, j) = at(i, idx[j]);
    }
    return t;
}

bool Matrix::is_zero() const {
    for (const Scalar& s : e_) {
        if (!s.is_zero()) return false;
    }
    return true;
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
        }
    }
    return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) { return kernels::mul(a, b); }

namespace {

void require_same_shape(const Matrix& a, const Matrix& b, const char* op) {
    if (a.field() != b.field()) throw std::invalid_argument(std::string(op) + ": field mismatch");
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument(std::string(op) + ": shape mismatch");
    }
}

}  // namespace

Matrix operator+(const Matrix& a, const Matrix& b) {
    require_same_shape(a, b, "add");
    Matrix c = a;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) += b.at(i, j);
    }
    return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    require_same_shape(a, b, "sub");
    Matrix c = a;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) -= b.at(i, j);
    }
    return c;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
    if (a.field() != b.field()) throw std::invalid_argument("hstack: field mismatch");
    if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row count mismatch");
    Matrix c(a.field(), a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) c.at(i, a.cols() + j) = b.at(i, j);
    }
    return c;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
    if (a.field() != b.field()) throw std::invalid_argument("vstack: field mismatch");
    if (a.cols() != b.cols()) throw std::invalid_argument("vstack: column count mismatch");
    Matrix c(a.field(), a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j);
    }
    for (std::size_t i = 0; i < b.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) c.at(a.rows() + i, j) = b.at(i, j);
    }
    return c;
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
    if (a.field() != b.field()) throw std::invalid_argument("direct_sum: field mismatch");
    Matrix c(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j);
    }
    for (std::size_t i = 0; i < b.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) c.at(a.rows() + i, a.cols() + j) = b.at(i, j);
    }
    return c;
}

RrefResult rref(const Matrix& m) {
    const std::size_t nr = m.rows(), nc = m.cols();
    Matrix w = hstack(m, Matrix::identity(m.field(), nr));
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < nc && lead < nr; ++col) {
        std::size_t p = lead;
        while (p < nr && w.at(p, col).is_zero()) ++p;
        if (p == nr) continue;
        w.swap_rows(lead, p);
        const Scalar inv = w.at(lead, col).inverse();
        for (std::size_t c = col, wc = w.cols(); c < wc; ++c) {
            w.at(lead, c) *= inv;
        }
        kernels::eliminate_column(w, lead, col);
        pivots.push_back(col);
        ++lead;
    }
    return RrefResult{w.cols_slice(0, nc), pivots.size(), std::move(pivots),
                      w.cols_slice(nc, nc + nr)};
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Matrix kernel_basis(const Matrix& m) {
    const RrefResult rr = rref(m);
    const std::size_t nc = m.cols();
    std::vector<bool> is_pivot(nc, false);
    for (std::size_t c : rr.pivot_cols) is_pivot[c] = true;
    Matrix k(m.field(), nc, nc - rr.rank);
    std::size_t out = 0;
    for (std::size_t f = 0; f < nc; ++f) {
        if (is_pivot[f]) continue;
        k.at(f, out) = Scalar::one(m.field());
        for (std::size_t i = 0; i < rr.rank; ++i) {
            k.at(rr.pivot_cols[i], out) = -rr.rref.at(i, f);
        }
        ++out;
    }
    return k;
}

Matrix image_basis(const Matrix& m) { return m.select_cols(rref(m).pivot_cols); }

CanonicalDecomposition canonical_decomposition(const Matrix& m) {
    const std::size_t nc = m.cols();
    const RrefResult rr = rref(m);
    const std::size_t r = rr.rank;

    // q_inv: the nonzero rref rows on top, completed by unit rows at the
    // non-pivot columns.
    Matrix q_inv(m.field(), nc, nc);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < nc; ++j) q_inv.at(i, j) = rr.rref.at(i, j);
    }
    std::vector<bool> is_pivot(nc, false);
    for (std::size_t c : rr.pivot_cols) is_pivot[c] = true;
    std::size_t fill = r;
    for (std::size_t j = 0; j < nc; ++j) {
        if (!is_pivot[j]) q_inv.at(fill++, j) = Scalar::one(m.field());
    }

    auto q = inverse(q_inv);
    auto p_inv = inverse(rr.transform);
    if (!q || !p_inv) throw std::logic_error("canonical_decomposition: base change not invertible");
    return CanonicalDecomposition{rr.transform, std::move(*p_inv), std::move(*q),
                                  std::move(q_inv), r};
}

namespace {

// [I_r | 0] shaped selector, rows x cols.
Matrix rank_block(const FieldSpec& f, std::size_t rows, std::size_t cols, std::size_t r) {
    Matrix b(f, rows, cols);
    for (std::size_t i = 0; i < r; ++i) b.at(i, i) = Scalar::one(f);
    return b;
}

}  // namespace

std::optional<Matrix> left_inverse(const Matrix& m) {
    const CanonicalDecomposition cd = canonical_decomposition(m);
    if (cd.rank != m.cols()) return std::nullopt;
    return cd.q * rank_block(m.field(), m.cols(), m.rows(), cd.rank) * cd.p;
}

std::optional<Matrix> right_inverse(const Matrix& m) {
    const CanonicalDecomposition cd = canonical_decomposition(m);
    if (cd.rank != m.rows()) return std::nullopt;
    return cd.q * rank_block(m.field(), m.cols(), m.rows(), cd.rank) * cd.p;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    const RrefResult rr = rref(m);
    if (rr.rank != m.rows()) return std::nullopt;
    return rr.transform;
}

LinearSolver::LinearSolver(const Matrix& a) : arows_(a.rows()), acols_(a.cols()), rr_(rref(a)) {}

std::optional<Matrix> LinearSolver::solve(const Matrix& b) const {
    if (b.rows() != arows_) throw std::invalid_argument("solve: row count mismatch");
    const Matrix c = rr_.transform * b;
    for (std::size_t i = rr_.rank; i < arows_; ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
            if (!c.at(i, j).is_zero()) return std::nullopt;
        }
    }
    Matrix x(b.field(), acols_, b.cols());
    for (std::size_t i = 0; i < rr_.rank; ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) x.at(rr_.pivot_cols[i], j) = c.at(i, j);
    }
    return x;
}

std::optional<Matrix> solve_right(const Matrix& a, const Matrix& b) {
    return LinearSolver(a).solve(b);
}

std::optional<Matrix> solve_left(const Matrix& a, const Matrix& b) {
    auto xt = LinearSolver(a.transpose()).solve(b.transpose());
    if (!xt) return std::nullopt;
    return xt->transpose();
}

Matrix row_space_basis(const Matrix& m) {
    const RrefResult rr = rref(m);
    return rr.rref.rows_slice(0, rr.rank);
}

RowSpaceBuilder::RowSpaceBuilder(const FieldSpec& f, std::size_t width)
    : field_(f), width_(width) {}

void RowSpaceBuilder::reduce(std::vector<Scalar>& row) const {
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        const Scalar& c = row[pivots_[i]];
        if (c.is_zero()) continue;
        const Scalar factor = c;
        const std::vector<Scalar>& b = basis_[i];
        for (std::size_t j = pivots_[i]; j < width_; ++j) row[j] -= factor * b[j];
    }
}

bool RowSpaceBuilder::insert(std::vector<Scalar> row) {
    if (row.size() != width_) throw std::invalid_argument("RowSpaceBuilder: width mismatch");
    reduce(row);
    std::size_t pivot = width_;
    for (std::size_t j = 0; j < width_; ++j) {
        if (!row[j].is_zero()) {
            pivot = j;
            break;
        }
    }
    if (pivot == width_) return false;
    const Scalar inv = row[pivot].inverse();
    for (std::size_t j = pivot; j < width_; ++j) row[j] *= inv;
    // keep the stored basis fully reduced
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        const Scalar c = basis_[i][pivot];
        if (c.is_zero()) continue;
        for (std::size_t j = pivot; j < width_; ++j) basis_[i][j] -= c * row[j];
    }
    std::ptrdiff_t pos = 0;
    while (pos < static_cast<std::ptrdiff_t>(pivots_.size()) &&
           pivots_[static_cast<std::size_t>(pos)] < pivot) {
        ++pos;
    }
    pivots_.insert(pivots_.begin() + pos, pivot);
    basis_.insert(basis_.begin() + pos, std::move(row));
    return true;
}

bool RowSpaceBuilder::contains(std::vector<Scalar> row) const {
    if (row.size() != width_) throw std::invalid_argument("RowSpaceBuilder: width mismatch");
    reduce(row);
    for (const Scalar& s : row) {
        if (!s.is_zero()) return false;
    }
    return true;
}

Matrix RowSpaceBuilder::basis() const {
    Matrix b(field_, basis_.size(), width_);
    for (std::size_t i = 0; i < basis_.size(); ++i) b.set_row(i, basis_[i]);
    return b;
}

}  // namespace linrel
