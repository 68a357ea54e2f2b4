#pragma once

#include <optional>

#include "linrel/relation.hpp"

namespace linrel {

/// The five invariants of the wire normal form: r through-wires plus the
/// kernel / surjectivity / totality / indeterminacy defect counts. The
/// arities m = r + k_i + k_t and n = r + k_s + k_d are kept redundantly.
struct WireShape {
    std::size_t r{}, k_i{}, k_s{}, k_t{}, k_d{};
    std::size_t m{}, n{};

    static WireShape make(std::size_t r, std::size_t k_i, std::size_t k_s, std::size_t k_t,
                          std::size_t k_d) {
        return WireShape{r, k_i, k_s, k_t, k_d, r + k_i + k_t, r + k_s + k_d};
    }
    bool consistent() const { return m == r + k_i + k_t && n == r + k_s + k_d; }

    bool operator==(const WireShape&) const = default;
};

/// Invertible base changes p, q such that (x, y) ∈ R ⇔ (p·x, q·y) ∈ W(shape);
/// equivalently R = graph(p) ; W(shape) ; graph(q)ᵒᵖ.
struct CospanDecomposition {
    Matrix p, p_inv, q, q_inv;
    WireShape shape;
};

/// The normal-form relation W = {((u, v, 0), (u, 0, w))} with left
/// coordinates (u, v, t) and right coordinates (u, s, w);
/// dim W = r + k_i + k_d.
LinearRelation canonical_wire_relation(const FieldSpec& f, const WireShape& shape);

CospanDecomposition cospan_decompose(const LinearRelation& r);

/// compose(graph p, compose(W(shape), opposite(graph q))) — the relation a
/// decomposition denotes; used to verify reconstruction.
LinearRelation rebuild(const FieldSpec& f, const CospanDecomposition& d);

WireShape wire_shape(const LinearRelation& r);

/// Classification through the wire shape: INJ ⇔ k_i = 0, SUR ⇔ k_s = 0,
/// TOT ⇔ k_t = 0, DET ⇔ k_d = 0. Independent of properties(), which goes
/// through generator composition.
PropertyReport classify(const LinearRelation& r);

/// A map S with b·S = a, present iff the cospan {(x,y) : ax = by} is total
/// (iff im a ⊆ im b); the graph of S is then contained in the cospan.
std::optional<Matrix> total_witness(const Matrix& a, const Matrix& b);

/// A map S with a·S = b, present iff the cospan is surjective (iff
/// im b ⊆ im a); the opposite of the graph of S is then contained in the
/// cospan. Note this witnesses surjectivity, not determinism: solvability
/// of a·S = b is equivalent to im b ⊆ im a.
std::optional<Matrix> det_witness(const Matrix& a, const Matrix& b);

/// One fundamental property, evaluated through every implemented equivalent
/// form; the forms must agree.
struct DictRow {
    bool predicate{};  // direct property of from_cospan(a, b)
    bool shape{};      // the matching defect count vanishes
    bool witness{};    // the witness map exists (and checks out)
    bool inclusion{};  // image-inclusion / kernel-vanishing form
    bool agree() const {
        return predicate == shape && shape == witness && witness == inclusion;
    }
};

struct DictReport {
    DictRow total, deterministic, surjective, injective;
    bool all_agree() const {
        return total.agree() && deterministic.agree() && surjective.agree() && injective.agree();
    }
};

/// Evaluates the characterization table for the cospan of (a, b) and throws
/// std::logic_error if any two forms of the same property disagree.
DictReport cospan_dict_rows(const Matrix& a, const Matrix& b);

}  // namespace linrel
