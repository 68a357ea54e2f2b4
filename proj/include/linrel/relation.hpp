#pragma once

#include "linrel/matrix.hpp"

namespace linrel {

struct PropertyReport {
    bool total{};
    bool deterministic{};
    bool injective{};
    bool surjective{};
    bool is_map{};        // total && deterministic
    bool is_bijective{};  // all four

    bool operator==(const PropertyReport&) const = default;
};

/// A linear relation R ⊆ K^m × K^n: the central value of the library.
/// Stored as the canonical RREF basis of the subspace, rows (x | y) with
/// the K^m block first, so structural equality is subspace equality.
class LinearRelation {
public:
    /// Canonicalizes an arbitrary generating set (rows with m+n entries);
    /// dependent rows are dropped.
    static LinearRelation from_subspace_basis(const FieldSpec& f, std::size_t m, std::size_t n,
                                              const Matrix& rows);
    /// Gr(a) = {(x, a·x)}; arity (cols a, rows a). Always total and
    /// deterministic.
    static LinearRelation graph_of_map(const Matrix& a);
    /// {(x, y) : a·x = b·y} for maps into a shared codomain.
    static LinearRelation from_cospan(const Matrix& a, const Matrix& b);
    /// {(c·z, d·z) : z} for maps out of a shared domain.
    static LinearRelation from_span(const Matrix& c, const Matrix& d);

    const FieldSpec& field() const { return field_; }
    std::size_t left_arity() const { return m_; }
    std::size_t right_arity() const { return n_; }
    std::size_t dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }

    bool operator==(const LinearRelation&) const = default;

private:
    LinearRelation(FieldSpec f, std::size_t m, std::size_t n, Matrix basis)
        : field_(f), m_(m), n_(n), basis_(std::move(basis)) {}

    FieldSpec field_;
    std::size_t m_, n_;
    Matrix basis_;
};

// The structural generator relations: graphs of the maps in the usual
// identity / twist / zero / sum / discard / copy family.
LinearRelation identity_relation(const FieldSpec& f, std::size_t n);
LinearRelation twist_relation(const FieldSpec& f, std::size_t m, std::size_t n);  // (x,y) -> (y,x)
LinearRelation zero_relation(const FieldSpec& f, std::size_t n);     // K^0 -> K^n, () -> 0
LinearRelation sum_relation(const FieldSpec& f, std::size_t n);      // (x,y) -> x+y
LinearRelation discard_relation(const FieldSpec& f, std::size_t n);  // x -> () in K^0
LinearRelation copy_relation(const FieldSpec& f, std::size_t n);     // x -> (x,x)
/// All of K^m × K^n.
LinearRelation full_relation(const FieldSpec& f, std::size_t m, std::size_t n);

LinearRelation opposite(const LinearRelation& r);
/// {(x, z) : ∃y (x,y) ∈ r, (y,z) ∈ s}. Computed by embedding both into
/// K^m × K^k × K^n, intersecting, and projecting out the middle block.
LinearRelation compose(const LinearRelation& r, const LinearRelation& s);
/// {((x,w), (y,z)) : (x,y) ∈ r, (w,z) ∈ s}, blocks of r first on both sides.
LinearRelation direct_product(const LinearRelation& r, const LinearRelation& s);
/// s ⊆ r.
bool includes(const LinearRelation& r, const LinearRelation& s);
LinearRelation meet(const LinearRelation& r, const LinearRelation& s);  // intersection
LinearRelation join(const LinearRelation& r, const LinearRelation& s);  // subspace sum

// The four derived subspaces, computed by composing with the generator
// relations. kernel/domain have arity (m, 0); image/indeterminacy (0, n).
LinearRelation kernel(const LinearRelation& r);         // {x : (x,0) ∈ R}
LinearRelation image(const LinearRelation& r);          // {y : ∃x (x,y) ∈ R}
LinearRelation domain(const LinearRelation& r);         // {x : ∃y (x,y) ∈ R}
LinearRelation indeterminacy(const LinearRelation& r);  // {y : (0,y) ∈ R}

/// Direct per-property evaluation: total ⇔ domain full, deterministic ⇔
/// indeterminacy zero, surjective ⇔ image full, injective ⇔ kernel zero.
PropertyReport properties(const LinearRelation& r);

}  // namespace linrel
