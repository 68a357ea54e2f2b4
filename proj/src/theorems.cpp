#include "linrel/theorems.hpp"

#include <atomic>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "linrel/io.hpp"

namespace linrel {

std::uint64_t Rng::next() {
    state_ += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

std::uint64_t Rng::below(std::uint64_t bound) { return bound == 0 ? 0 : next() % bound; }

long long Rng::in_range(long long lo, long long hi) {
    return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
}

Verdict Verdict::fail(std::string message, std::string repro) {
    return Verdict{false, std::move(message), std::move(repro)};
}

Rng InstanceGen::rng_for(std::uint64_t k) const {
    Rng g(seed ^ (0x9e3779b97f4a7c15ull * (k + 1)));
    g.next();
    return g;
}

Scalar InstanceGen::scalar(Rng& g) const {
    if (field.is_rationals()) {
        const long num = static_cast<long>(g.in_range(-9, 9));
        const long den = static_cast<long>(g.in_range(1, 9));
        return Scalar::from_rational(mpq_class(mpz_class(num), mpz_class(den)));
    }
    return Scalar::from_residue(field, g.below(field.modulus()));
}

Scalar InstanceGen::nonzero_scalar(Rng& g) const {
    for (;;) {
        Scalar s = scalar(g);
        if (!s.is_zero()) return s;
    }
}

Matrix InstanceGen::matrix(Rng& g, std::size_t rows, std::size_t cols) const {
    Matrix m(field, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = scalar(g);
    }
    return m;
}

Matrix InstanceGen::invertible(Rng& g, std::size_t n) const {
    Matrix m = Matrix::identity(field, n);
    if (n == 0) return m;
    for (std::size_t step = 0; step < 2 * n + 2; ++step) {
        const std::size_t i = g.below(n);
        switch (g.below(3)) {
            case 0: {  // swap
                m.swap_rows(i, g.below(n));
                break;
            }
            case 1: {  // scale by a unit
                const Scalar c = nonzero_scalar(g);
                for (std::size_t j = 0; j < n; ++j) m.at(i, j) *= c;
                break;
            }
            default: {  // add a multiple of another row
                std::size_t j = g.below(n);
                if (j == i) j = (j + 1) % n;
                if (j == i) break;  // n == 1
                const Scalar c = scalar(g);
                for (std::size_t col = 0; col < n; ++col) {
                    m.at(i, col) += c * m.at(j, col);
                }
                break;
            }
        }
    }
    return m;
}

Matrix InstanceGen::singular_square(Rng& g, std::size_t n) const {
    if (n == 0) throw std::invalid_argument("singular_square: n must be >= 1");
    const std::size_t r = g.below(n);  // target rank bound < n
    return matrix(g, n, r) * matrix(g, r, n);
}

LinearRelation InstanceGen::relation(Rng& g, std::size_t m, std::size_t n) const {
    const std::size_t t = g.below(m + n + 1);
    return LinearRelation::from_subspace_basis(field, m, n, matrix(g, t, m + n));
}

LinearRelation InstanceGen::subrelation(Rng& g, const LinearRelation& r) const {
    const std::size_t t = g.below(r.dim() + 1);
    const Matrix coeff = matrix(g, t, r.dim());
    return LinearRelation::from_subspace_basis(field, r.left_arity(), r.right_arity(),
                                               coeff * r.basis());
}

std::vector<LinearRelation> enumerate_relations(const FieldSpec& f, std::size_t m, std::size_t n) {
    if (f.is_rationals() || f.modulus() != 2) {
        throw std::invalid_argument("enumerate_relations: field must be GF(2)");
    }
    const std::size_t d = m + n;
    if (d > 5) throw std::invalid_argument("enumerate_relations: m + n must be <= 5");

    std::vector<LinearRelation> out;
    std::vector<std::size_t> pivots;
    auto emit = [&]() {
        // free slots: right of a pivot, in a non-pivot column
        std::vector<bool> is_pivot(d, false);
        for (std::size_t p : pivots) is_pivot[p] = true;
        std::vector<std::pair<std::size_t, std::size_t>> slots;
        for (std::size_t i = 0; i < pivots.size(); ++i) {
            for (std::size_t j = pivots[i] + 1; j < d; ++j) {
                if (!is_pivot[j]) slots.emplace_back(i, j);
            }
        }
        for (std::uint64_t mask = 0; mask < (1ull << slots.size()); ++mask) {
            Matrix rows(f, pivots.size(), d);
            for (std::size_t i = 0; i < pivots.size(); ++i) {
                rows.at(i, pivots[i]) = Scalar::one(f);
            }
            for (std::size_t s = 0; s < slots.size(); ++s) {
                if (mask >> s & 1) rows.at(slots[s].first, slots[s].second) = Scalar::one(f);
            }
            out.push_back(LinearRelation::from_subspace_basis(f, m, n, rows));
        }
    };
    auto recurse = [&](auto&& self, std::size_t next, std::size_t remaining) -> void {
        if (remaining == 0) {
            emit();
            return;
        }
        for (std::size_t c = next; c + remaining <= d; ++c) {
            pivots.push_back(c);
            self(self, c + 1, remaining - 1);
            pivots.pop_back();
        }
    };
    for (std::size_t k = 0; k <= d; ++k) recurse(recurse, 0, k);
    return out;
}

std::vector<Matrix> enumerate_gf2_matrices(std::size_t rows, std::size_t cols) {
    if (rows * cols > 16) throw std::invalid_argument("enumerate_gf2_matrices: too many entries");
    const FieldSpec f = FieldSpec::prime_field(2);
    std::vector<Matrix> out;
    out.reserve(1u << (rows * cols));
    for (std::uint64_t mask = 0; mask < (1ull << (rows * cols)); ++mask) {
        Matrix m(f, rows, cols);
        for (std::size_t e = 0; e < rows * cols; ++e) {
            if (mask >> e & 1) m.at(e / cols, e % cols) = Scalar::one(f);
        }
        out.push_back(std::move(m));
    }
    return out;
}

std::uint64_t gf2_subspace_count(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    if (k == 0 || k == n) return 1;
    return gf2_subspace_count(n - 1, k - 1) + (1ull << k) * gf2_subspace_count(n - 1, k);
}

namespace {

std::string repro_relation(const std::string& note, const LinearRelation& r) {
    io::json doc;
    doc["field"] = r.field().to_string();
    doc["matrices"] = {{"R_basis", io::matrix_json(r.basis())}};
    doc["relations"] = {{"R",
                         {{"kind", "subspace"},
                          {"rows", "R_basis"},
                          {"m", r.left_arity()},
                          {"n", r.right_arity()}}}};
    doc["note"] = note;
    return doc.dump(2) + "\n";
}

std::string repro_matrices(const std::string& note, const FieldSpec& f,
                           std::initializer_list<std::pair<const char*, const Matrix*>> mats,
                           bool as_cospan = false) {
    io::json doc;
    doc["field"] = f.to_string();
    io::json m = io::json::object();
    for (const auto& [name, mat] : mats) m[name] = io::matrix_json(*mat);
    doc["matrices"] = std::move(m);
    if (as_cospan) {
        doc["relations"] = {{"R", {{"kind", "cospan"}, {"a", "A"}, {"b", "B"}}}};
    }
    doc["note"] = note;
    return doc.dump(2) + "\n";
}

std::string describe_relation(const LinearRelation& r) { return io::relation_text(r); }

}  // namespace

Verdict check_poset(const LinearRelation& rel) {
    const PropertyReport p = properties(rel);
    const long long m = static_cast<long long>(rel.left_arity());
    const long long n = static_cast<long long>(rel.right_arity());
    struct Implication {
        const char* name;
        bool hypothesis;
        bool conclusion;
    };
    const Implication table[] = {
        {"(i) TOT,INJ,SUR,m>=n => DET", p.total && p.injective && p.surjective && m >= n,
         p.deterministic},
        {"(ii) DET,INJ,SUR,m<=n => TOT", p.deterministic && p.injective && p.surjective && m <= n,
         p.total},
        {"(iii) DET,TOT,INJ,m>=n => SUR", p.deterministic && p.total && p.injective && m >= n,
         p.surjective},
        {"(iv) DET,TOT,SUR,m<=n => INJ", p.deterministic && p.total && p.surjective && m <= n,
         p.injective},
        {"(v) TOT,INJ => m<=n", p.total && p.injective, m <= n},
        {"(vi) DET,SUR => m>=n", p.deterministic && p.surjective, m >= n},
    };
    for (const Implication& imp : table) {
        if (imp.hypothesis && !imp.conclusion) {
            return Verdict::fail("poset implication violated: " + std::string(imp.name) + "\n" +
                                     describe_relation(rel),
                                 repro_relation(std::string("poset ") + imp.name, rel));
        }
    }
    return Verdict::pass();
}

Verdict check_mirror_symmetry(const LinearRelation& rel) {
    const PropertyReport p = properties(rel);
    const PropertyReport q = properties(opposite(rel));
    const bool ok = p.total == q.surjective && p.deterministic == q.injective &&
                    p.injective == q.deterministic && p.surjective == q.total;
    if (ok) return Verdict::pass();
    return Verdict::fail("mirror symmetry violated\n" + describe_relation(rel),
                         repro_relation("mirror symmetry", rel));
}

Verdict check_classification_agreement(const LinearRelation& rel) {
    const PropertyReport direct = properties(rel);
    const PropertyReport shaped = classify(rel);
    if (direct == shaped) return Verdict::pass();
    return Verdict::fail("shape classification disagrees with direct predicates\n" +
                             describe_relation(rel) + "direct:   " + io::properties_text(direct) +
                             "\nvia shape: " + io::properties_text(shaped) + "\n",
                         repro_relation("classification agreement", rel));
}

Verdict check_decomposition_roundtrip(const LinearRelation& rel) {
    const std::size_t m = rel.left_arity(), n = rel.right_arity();
    CospanDecomposition cd = cospan_decompose(rel);
    const WireShape& s = cd.shape;
    if (!s.consistent() || s.m != m || s.n != n || rel.dim() != s.r + s.k_i + s.k_d) {
        return Verdict::fail("wire shape bookkeeping broken\n" + describe_relation(rel),
                             repro_relation("roundtrip shape", rel));
    }
    // the shape is forced by the four derived subspaces; check against the
    // generator-composition route
    const std::size_t ki = kernel(rel).dim(), kd = indeterminacy(rel).dim();
    const std::size_t kt = m - domain(rel).dim(), ks = n - image(rel).dim();
    if (s.k_i != ki || s.k_d != kd || s.k_t != kt || s.k_s != ks) {
        return Verdict::fail("wire shape differs from subspace dimensions\n" +
                                 describe_relation(rel),
                             repro_relation("roundtrip shape uniqueness", rel));
    }
    if (!(cd.p * cd.p_inv).is_identity() || !(cd.q * cd.q_inv).is_identity()) {
        return Verdict::fail("base changes are not inverse pairs\n" + describe_relation(rel),
                             repro_relation("roundtrip base change", rel));
    }
    if (rebuild(rel.field(), cd) != rel) {
        return Verdict::fail("reconstruction failed\n" + describe_relation(rel),
                             repro_relation("roundtrip reconstruction", rel));
    }
    return Verdict::pass();
}

Verdict check_pigeonhole(const Matrix& a, const Matrix& b) {
    const LinearRelation rel = LinearRelation::from_cospan(a, b);
    const PropertyReport p = properties(rel);
    if (p.total && p.injective && rel.left_arity() > rel.right_arity()) {
        return Verdict::fail(
            "pigeonhole violated: TOT+INJ with m > n\n" + describe_relation(rel),
            repro_matrices("pigeonhole", a.field(), {{"A", &a}, {"B", &b}}, true));
    }
    return Verdict::pass();
}

Verdict check_exchange_equivalence(const Matrix& a, const Matrix& b) {
    // (i) by matrix computations only
    const bool a_injective = kernel_basis(a).cols() == 0;
    const bool image_contained = rank(hstack(b, a)) == rank(b);
    const bool lhs = a_injective && image_contained;
    // (ii) by relation predicates
    const PropertyReport p = properties(LinearRelation::from_cospan(a, b));
    const bool rhs = p.total && p.injective;
    if (lhs == rhs) return Verdict::pass();
    return Verdict::fail(
        "exchange-lemma equivalence violated: matrix form " + std::to_string(lhs) +
            ", relation form " + std::to_string(rhs) + "\n",
        repro_matrices("exchange equivalence", a.field(), {{"A", &a}, {"B", &b}}, true));
}

Verdict check_cospan_dict(const Matrix& a, const Matrix& b) {
    try {
        (void)cospan_dict_rows(a, b);
    } catch (const std::logic_error& e) {
        return Verdict::fail(
            std::string("characterization table disagreement: ") + e.what() + "\n",
            repro_matrices("cospan dict", a.field(), {{"A", &a}, {"B", &b}}, true));
    }
    return Verdict::pass();
}

Verdict check_imt(const Matrix& a) {
    auto fail = [&](const std::string& msg) {
        return Verdict::fail(msg + "\n" + io::matrix_text(a),
                             repro_matrices("imt", a.field(), {{"A", &a}}));
    };
    const bool injective = kernel_basis(a).cols() == 0;
    const bool surjective = rank(a) == a.rows();
    const PropertyReport p = properties(LinearRelation::graph_of_map(a));
    if (p.injective != injective || p.surjective != surjective) {
        return fail("graph properties disagree with rank computations");
    }

    const auto li = left_inverse(a);
    const auto ri = right_inverse(a);
    if (li.has_value() != injective) return fail("left inverse existence != injectivity");
    if (ri.has_value() != surjective) return fail("right inverse existence != surjectivity");
    if (li && *li * a != Matrix::identity(a.field(), a.cols())) {
        return fail("left inverse does not satisfy L*A = I");
    }
    if (ri && a * *ri != Matrix::identity(a.field(), a.rows())) {
        return fail("right inverse does not satisfy A*R = I");
    }

    if (a.rows() == a.cols()) {
        const auto inv = inverse(a);
        if (injective != surjective) return fail("square: injective != surjective");
        if (inv.has_value() != injective) return fail("square: inverse existence mismatch");
        if (inv) {
            if (*inv * a != Matrix::identity(a.field(), a.cols()) ||
                a * *inv != Matrix::identity(a.field(), a.rows())) {
                return fail("inverse products are not the identity");
            }
            if (*li != *inv || *ri != *inv) return fail("one-sided inverses differ from inverse");
        }
    }
    return Verdict::pass();
}

Verdict check_pair_identities(const Matrix& a, const Matrix& b) {
    auto fail = [&](const std::string& msg) {
        return Verdict::fail(msg, repro_matrices("pair decomposition", a.field(),
                                                 {{"A", &a}, {"B", &b}}, true));
    };
    PairDecomposition pd{Matrix(a.field(), 0, 0), Matrix(a.field(), 0, 0),
                         Matrix(a.field(), 0, 0), Matrix(a.field(), 0, 0),
                         Matrix(a.field(), 0, 0), WireShape{}};
    try {
        pd = pair_decompose(a, b);
    } catch (const std::logic_error& e) {
        return fail(std::string("pair_decompose failed: ") + e.what());
    }
    if (pd.h * pd.d1 * pd.p != a || pd.h * pd.d2 * pd.q != b) {
        return fail("factorization identities A = H*D1*P, B = H*D2*Q violated");
    }
    if (kernel_basis(pd.h).cols() != 0) return fail("H is not injective");
    const bool h_surjective = rank(pd.h) == pd.h.rows();
    const bool stacked_full = rank(hstack(a, b)) == a.rows();
    if (h_surjective != stacked_full) {
        return fail("H surjectivity does not match rank of [A | B]");
    }
    // uniqueness: the homogeneous system X * [D1*P | D2*Q] = 0 only has the
    // zero solution, i.e. the stacked presentation has full row rank
    if (kernel_basis(hstack(pd.d1 * pd.p, pd.d2 * pd.q).transpose()).cols() != 0) {
        return fail("linking system admits a nonzero homogeneous solution");
    }
    // the selectors present the wire relation as a cospan
    if (LinearRelation::from_cospan(pd.d1, pd.d2) !=
        canonical_wire_relation(a.field(), pd.shape)) {
        return fail("selectors do not present the canonical wire relation");
    }
    const WireShape expect = wire_shape(LinearRelation::from_cospan(a, b));
    if (!(pd.shape == expect)) return fail("pair shape differs from cospan shape");
    return Verdict::pass();
}

namespace {

LinearRelation column_span(const Matrix& m) {
    return LinearRelation::from_subspace_basis(m.field(), 0, m.rows(), m.transpose());
}

}  // namespace

Verdict check_subspace_calculator(const Matrix& a, const Matrix& b) {
    auto fail = [&](const std::string& msg) {
        return Verdict::fail(msg,
                             repro_matrices("subspaces", a.field(), {{"A", &a}, {"B", &b}}));
    };
    SubspaceReport rep{Matrix(a.field(), 0, 0), Matrix(a.field(), 0, 0), Matrix(a.field(), 0, 0),
                       Matrix(a.field(), 0, 0), Matrix(a.field(), 0, 0), Matrix(a.field(), 0, 0),
                       Matrix(a.field(), 0, 0)};
    try {
        rep = subspace_report(a, b);
    } catch (const std::logic_error& e) {
        return fail(std::string("subspace_report failed: ") + e.what());
    }

    // every emitted basis must actually be one
    for (const Matrix* basis :
         {&rep.im_a, &rep.im_b, &rep.intersection, &rep.sum, &rep.complement_of_a,
          &rep.complement_of_b, &rep.complement_of_intersection}) {
        if (rank(*basis) != basis->cols()) return fail("reported basis has dependent columns");
    }

    const LinearRelation ia = column_span(rep.im_a), ib = column_span(rep.im_b);
    const LinearRelation isect = column_span(rep.intersection), sum = column_span(rep.sum);
    if (ia != column_span(image_basis(a)) || ib != column_span(image_basis(b))) {
        return fail("im(A)/im(B) blocks span the wrong subspaces");
    }
    if (isect != meet(ia, ib)) return fail("intersection block is not im(A) ∩ im(B)");
    if (sum != join(ia, ib)) return fail("sum block is not im(A) + im(B)");
    if (!includes(ia, isect) || !includes(sum, ia)) return fail("inclusion chain broken");

    const std::size_t k = a.rows();
    const LinearRelation zero_sub =
        LinearRelation::from_subspace_basis(a.field(), 0, k, Matrix(a.field(), 0, k));
    struct Claim {
        const LinearRelation* base;
        const Matrix* comp;
        const char* what;
    };
    const Claim claims[] = {
        {&ia, &rep.complement_of_a, "complement of im(A)"},
        {&ib, &rep.complement_of_b, "complement of im(B)"},
        {&isect, &rep.complement_of_intersection, "complement of the intersection"},
    };
    for (const Claim& c : claims) {
        const LinearRelation comp = column_span(*c.comp);
        if (join(*c.base, comp) != sum || meet(*c.base, comp) != zero_sub) {
            return fail(std::string(c.what) + " fails the complement laws");
        }
    }

    // Zassenhaus oracle agreement and the dimension identity
    const auto [zsum, zmeet] = zassenhaus(a, b);
    if (column_span(zsum) != sum || column_span(zmeet) != isect) {
        return fail("Zassenhaus oracle disagrees");
    }
    if (sum.dim() + isect.dim() != ia.dim() + ib.dim()) {
        return fail("Grassmann dimension identity violated");
    }
    return Verdict::pass();
}

Verdict check_left_inverse_laws(const Matrix& a, const LinearRelation& r,
                                const LinearRelation& s) {
    auto fail = [&](const std::string& msg) {
        return Verdict::fail(msg, repro_matrices("left inverse laws", a.field(), {{"A", &a}}));
    };
    const LinearRelation ga = LinearRelation::graph_of_map(a);
    const auto li = left_inverse(a);
    if (!li) {
        if (properties(ga).injective) return fail("injective map without left inverse");
        return Verdict::pass();
    }
    const LinearRelation gb = LinearRelation::graph_of_map(*li);
    if (!properties(ga).injective) return fail("(i) left-invertible map not injective");
    if (!includes(opposite(gb), ga)) return fail("(ii) graph(A) not inside opposite graph(B)");
    const LinearRelation s0 = compose(r, ga);
    if (compose(s0, gb) != r) return fail("(iii) solve-back law failed");
    const bool eq_before = r == s;
    const bool eq_after = compose(r, ga) == compose(s, ga);
    if (eq_before != eq_after) return fail("(iv) cancellation law failed");
    return Verdict::pass();
}

Verdict check_right_inverse_laws(const Matrix& a, const LinearRelation& u,
                                 const LinearRelation& v) {
    auto fail = [&](const std::string& msg) {
        return Verdict::fail(msg, repro_matrices("right inverse laws", a.field(), {{"A", &a}}));
    };
    const LinearRelation ga = LinearRelation::graph_of_map(a);
    const auto ri = right_inverse(a);
    if (!ri) {
        if (properties(ga).surjective) return fail("surjective map without right inverse");
        return Verdict::pass();
    }
    const LinearRelation gb = LinearRelation::graph_of_map(*ri);
    if (!properties(ga).surjective) return fail("(i) right-invertible map not surjective");
    if (!includes(ga, opposite(gb))) return fail("(ii) opposite graph(B) not inside graph(A)");
    const LinearRelation s0 = compose(ga, u);
    if (compose(gb, s0) != u) return fail("(iii) solve-back law failed");
    const bool eq_before = u == v;
    const bool eq_after = compose(ga, u) == compose(ga, v);
    if (eq_before != eq_after) return fail("(iv) cancellation law failed");
    return Verdict::pass();
}

Verdict check_props_inverse_laws(const Matrix& a, const LinearRelation& r,
                                 const LinearRelation& s, const LinearRelation& u,
                                 const LinearRelation& v) {
    Verdict left = check_left_inverse_laws(a, r, s);
    if (!left.ok) return left;
    Verdict right = check_right_inverse_laws(a, u, v);
    if (!right.ok) return right;
    const auto li = left_inverse(a), ri = right_inverse(a), inv = inverse(a);
    if (li && ri) {
        if (!inv || *li != *ri || *li != *inv) {
            return Verdict::fail("two-sided inverse should equal both one-sided inverses",
                                 repro_matrices("inverse laws", a.field(), {{"A", &a}}));
        }
    }
    return Verdict::pass();
}

Verdict check_associativity(const LinearRelation& a, const LinearRelation& b,
                            const LinearRelation& c) {
    if (compose(compose(a, b), c) != compose(a, compose(b, c))) {
        return Verdict::fail("composition associativity violated\n" + describe_relation(a) +
                             describe_relation(b) + describe_relation(c));
    }
    if (direct_product(direct_product(a, b), c) != direct_product(a, direct_product(b, c))) {
        return Verdict::fail("product associativity violated\n" + describe_relation(a) +
                             describe_relation(b) + describe_relation(c));
    }
    return Verdict::pass();
}

Verdict check_interchange(const LinearRelation& a, const LinearRelation& b,
                          const LinearRelation& c, const LinearRelation& d) {
    if (direct_product(compose(a, b), compose(c, d)) ==
        compose(direct_product(a, c), direct_product(b, d))) {
        return Verdict::pass();
    }
    return Verdict::fail("interchange law violated\n" + describe_relation(a) +
                         describe_relation(b) + describe_relation(c) + describe_relation(d));
}

Verdict check_contravariance(const LinearRelation& r, const LinearRelation& s) {
    if (opposite(compose(r, s)) == compose(opposite(s), opposite(r))) return Verdict::pass();
    return Verdict::fail("opposite contravariance violated\n" + describe_relation(r) +
                         describe_relation(s));
}

Verdict check_monotonicity(const LinearRelation& r, const LinearRelation& s_small,
                           const LinearRelation& s_big, const LinearRelation& t) {
    if (!includes(s_big, s_small)) {
        return Verdict::fail("monotonicity precondition broken: s_small not inside s_big");
    }
    if (!includes(compose(r, s_big), compose(r, s_small))) {
        return Verdict::fail("post-composition monotonicity violated\n" + describe_relation(r) +
                             describe_relation(s_small) + describe_relation(s_big));
    }
    if (!includes(compose(s_big, t), compose(s_small, t))) {
        return Verdict::fail("pre-composition monotonicity violated\n" + describe_relation(t) +
                             describe_relation(s_small) + describe_relation(s_big));
    }
    return Verdict::pass();
}

namespace {

template <typename Fn>
SuiteResult run_indexed_suite(const std::string& name, std::size_t count, Fn&& fn) {
    SuiteResult sr{name, count, Verdict::pass()};
    std::atomic<bool> failed{false};
#pragma omp parallel for schedule(dynamic, 8)
    for (std::size_t k = 0; k < count; ++k) {
        if (failed.load(std::memory_order_relaxed)) continue;
        Verdict v = Verdict::pass();
        try {
            v = fn(k);
        } catch (const std::exception& e) {
            v = Verdict::fail(std::string("exception: ") + e.what());
        }
        if (!v.ok) {
#pragma omp critical(linrel_suite_fail)
            {
                if (sr.verdict.ok) sr.verdict = std::move(v);
            }
            failed.store(true, std::memory_order_relaxed);
        }
    }
    return sr;
}

struct ArityPair {
    std::size_t m, n;
};

std::vector<ArityPair> arity_splits(std::size_t max_total) {
    std::vector<ArityPair> out;
    for (std::size_t total = 0; total <= max_total; ++total) {
        for (std::size_t m = 0; m <= total; ++m) out.push_back({m, total - m});
    }
    return out;
}

}  // namespace

SelftestResult run_selftest(const SelftestOptions& opts) {
    SelftestResult result;
    const FieldSpec gf2 = FieldSpec::prime_field(2);

    // exhaustive GF(2) relation set, m + n <= 4
    std::vector<LinearRelation> rels;
    for (const ArityPair& ap : arity_splits(4)) {
        auto batch = enumerate_relations(gf2, ap.m, ap.n);
        rels.insert(rels.end(), batch.begin(), batch.end());
    }

    result.suites.push_back(run_indexed_suite("enumeration counts", 5, [&](std::size_t d) {
        std::uint64_t expect = 0;
        for (std::size_t k = 0; k <= d; ++k) expect += gf2_subspace_count(d, k);
        const std::size_t got = enumerate_relations(gf2, d, 0).size();
        if (got == expect) return Verdict::pass();
        return Verdict::fail("subspace count of GF(2)^" + std::to_string(d) + " is " +
                             std::to_string(got) + ", expected " + std::to_string(expect));
    }));

    result.suites.push_back(run_indexed_suite(
        "poset implications [GF(2) exhaustive]", rels.size(),
        [&](std::size_t k) { return check_poset(rels[k]); }));
    result.suites.push_back(run_indexed_suite(
        "mirror symmetry [GF(2) exhaustive]", rels.size(),
        [&](std::size_t k) { return check_mirror_symmetry(rels[k]); }));
    result.suites.push_back(run_indexed_suite(
        "classification agreement [GF(2) exhaustive]", rels.size(),
        [&](std::size_t k) { return check_classification_agreement(rels[k]); }));
    result.suites.push_back(run_indexed_suite(
        "decomposition roundtrip [GF(2) exhaustive]", rels.size(),
        [&](std::size_t k) { return check_decomposition_roundtrip(rels[k]); }));

    // exhaustive GF(2) cospan pairs, k, m, n <= 2
    std::vector<std::pair<Matrix, Matrix>> pairs;
    for (std::size_t k = 0; k <= 2; ++k) {
        for (std::size_t m = 0; m <= 2; ++m) {
            for (std::size_t n = 0; n <= 2; ++n) {
                for (const Matrix& a : enumerate_gf2_matrices(k, m)) {
                    for (const Matrix& b : enumerate_gf2_matrices(k, n)) {
                        pairs.emplace_back(a, b);
                    }
                }
            }
        }
    }
    result.suites.push_back(run_indexed_suite(
        "characterization table [GF(2) exhaustive]", pairs.size(), [&](std::size_t k) {
            return check_cospan_dict(pairs[k].first, pairs[k].second);
        }));
    result.suites.push_back(run_indexed_suite(
        "exchange + pigeonhole [GF(2) exhaustive]", pairs.size(), [&](std::size_t k) {
            Verdict v = check_exchange_equivalence(pairs[k].first, pairs[k].second);
            if (!v.ok) return v;
            return check_pigeonhole(pairs[k].first, pairs[k].second);
        }));

    if (!opts.quick) {
        const std::size_t trials = opts.trials;
        const InstanceGen gens[] = {
            {FieldSpec::prime_field(5), 5, opts.seed},
            {FieldSpec::rationals(), 5, opts.seed + 1},
        };
        auto pick = [&](std::size_t k) -> const InstanceGen& { return gens[k % 2]; };

        result.suites.push_back(run_indexed_suite(
            "poset + classification + roundtrip [random GF(5)/QQ]", trials, [&](std::size_t k) {
                const InstanceGen& gen = pick(k);
                Rng g = gen.rng_for(k);
                const std::size_t m = g.below(gen.max_dim + 1), n = g.below(gen.max_dim + 1);
                const LinearRelation rel = gen.relation(g, m, n);
                Verdict v = check_poset(rel);
                if (!v.ok) return v;
                v = check_mirror_symmetry(rel);
                if (!v.ok) return v;
                v = check_classification_agreement(rel);
                if (!v.ok) return v;
                return check_decomposition_roundtrip(rel);
            }));

        result.suites.push_back(run_indexed_suite(
            "characterization table [random GF(5)/QQ]", trials, [&](std::size_t k) {
                const InstanceGen& gen = pick(k);
                Rng g = gen.rng_for(k * 2 + 1);
                const std::size_t kk = g.below(4), m = g.below(4), n = g.below(4);
                const Matrix a = gen.matrix(g, kk, m), b = gen.matrix(g, kk, n);
                Verdict v = check_cospan_dict(a, b);
                if (!v.ok) return v;
                v = check_exchange_equivalence(a, b);
                if (!v.ok) return v;
                return check_pigeonhole(a, b);
            }));

        const InstanceGen imt_gens[] = {
            {FieldSpec::prime_field(7), 5, opts.seed + 2},
            {FieldSpec::rationals(), 5, opts.seed + 3},
        };
        result.suites.push_back(
            run_indexed_suite("invertible matrix theorem [random GF(7)/QQ]", trials,
                              [&](std::size_t k) {
                                  const InstanceGen& gen = imt_gens[k % 2];
                                  Rng g = gen.rng_for(k);
                                  const std::size_t n = 1 + g.below(gen.max_dim);
                                  Matrix a(gen.field, 0, 0);
                                  switch (g.below(3)) {
                                      case 0: a = gen.invertible(g, n); break;
                                      case 1: a = gen.singular_square(g, n); break;
                                      default: a = gen.matrix(g, n, n); break;
                                  }
                                  return check_imt(a);
                              }));

        result.suites.push_back(run_indexed_suite(
            "inverse interaction laws [random GF(7)/QQ]", trials, [&](std::size_t k) {
                const InstanceGen& gen = imt_gens[k % 2];
                Rng g = gen.rng_for(k * 3 + 1);
                // mix injective-tall, surjective-wide and invertible maps
                const std::size_t small = 1 + g.below(3), extra = g.below(3);
                Matrix a(gen.field, 0, 0);
                switch (g.below(3)) {
                    case 0:  // injective: invertible tall slice
                        a = gen.invertible(g, small + extra).cols_slice(0, small);
                        break;
                    case 1:  // surjective: invertible wide slice
                        a = gen.invertible(g, small + extra).rows_slice(0, small);
                        break;
                    default: a = gen.invertible(g, small); break;
                }
                const std::size_t w = g.below(3);
                const LinearRelation r = gen.relation(g, w, a.cols());
                const LinearRelation s = gen.relation(g, w, a.cols());
                const LinearRelation u = gen.relation(g, a.rows(), w);
                const LinearRelation v = gen.relation(g, a.rows(), w);
                return check_props_inverse_laws(a, r, s, u, v);
            }));

        result.suites.push_back(run_indexed_suite(
            "algebra laws [random GF(5)/QQ]", trials, [&](std::size_t k) {
                const InstanceGen& gen = pick(k);
                Rng g = gen.rng_for(k * 5 + 3);
                auto dim = [&] { return g.below(4); };
                const std::size_t m = dim(), k1 = dim(), k2 = dim(), n = dim();
                const LinearRelation a = gen.relation(g, m, k1);
                const LinearRelation b = gen.relation(g, k1, k2);
                const LinearRelation c = gen.relation(g, k2, n);
                Verdict v = check_associativity(a, b, c);
                if (!v.ok) return v;
                const LinearRelation d = gen.relation(g, n, dim());
                v = check_interchange(a, b, c, d);
                if (!v.ok) return v;
                v = check_contravariance(a, b);
                if (!v.ok) return v;
                const LinearRelation s_big = gen.relation(g, k1, k2);
                return check_monotonicity(a, gen.subrelation(g, s_big), s_big, c);
            }));

        result.suites.push_back(run_indexed_suite(
            "pair decomposition + subspaces [random GF(5)/QQ]", trials, [&](std::size_t k) {
                const InstanceGen& gen = pick(k);
                Rng g = gen.rng_for(k * 7 + 5);
                const std::size_t kk = g.below(gen.max_dim + 1);
                const std::size_t m = g.below(gen.max_dim + 1), n = g.below(gen.max_dim + 1);
                const Matrix a = gen.matrix(g, kk, m), b = gen.matrix(g, kk, n);
                Verdict v = check_pair_identities(a, b);
                if (!v.ok) return v;
                return check_subspace_calculator(a, b);
            }));
    }

    if (opts.inject_fault) {
        result.suites.push_back(run_indexed_suite("fault injection", 1, [&](std::size_t) {
            // deliberately wrong expectation, to prove failures surface
            const LinearRelation id = identity_relation(gf2, 1);
            if (properties(id).total) {
                return Verdict::fail("injected fault: pretending identity(1) must not be total",
                                     repro_relation("fault injection", id));
            }
            return Verdict::pass();
        }));
    }

    for (SuiteResult& sr : result.suites) {
        if (!sr.verdict.ok) {
            result.ok = false;
            if (!sr.verdict.repro.empty() && result.repro_file.empty()) {
                std::ofstream out(opts.repro_path);
                if (out) {
                    out << sr.verdict.repro;
                    result.repro_file = opts.repro_path;
                }
            }
        }
    }
    return result;
}

}  // namespace linrel
