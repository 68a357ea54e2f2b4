#include <doctest.h>

#include <set>
#include <stdexcept>

#include "linrel/theorems.hpp"
#include "oracle.hpp"

using namespace linrel;

namespace {
const FieldSpec qq = FieldSpec::rationals();
const FieldSpec gf2 = FieldSpec::prime_field(2);
const FieldSpec gf7 = FieldSpec::prime_field(7);
}  // namespace

TEST_CASE("construction from a generating set canonicalizes") {
    const LinearRelation zero = LinearRelation::from_subspace_basis(qq, 1, 1, Matrix(qq, 0, 2));
    CHECK(zero.dim() == 0);

    const LinearRelation id1 =
        LinearRelation::from_subspace_basis(qq, 1, 1, Matrix::from_ints(qq, {{1, 1}}));
    CHECK(id1 == identity_relation(qq, 1));

    const LinearRelation dup =
        LinearRelation::from_subspace_basis(qq, 1, 1, Matrix::from_ints(qq, {{1, 0}, {1, 0}}));
    CHECK(dup.dim() == 1);

    CHECK_THROWS_AS(LinearRelation::from_subspace_basis(qq, 1, 2, Matrix(qq, 0, 2)),
                    std::invalid_argument);

    // any generating set of the same subspace gives a structurally equal value
    InstanceGen gen{gf7, 4, 11};
    Rng g = gen.rng_for(0);
    for (int t = 0; t < 40; ++t) {
        const LinearRelation r = gen.relation(g, g.below(4), g.below(4));
        const Matrix coeff = gen.invertible(g, r.dim());
        const LinearRelation again = LinearRelation::from_subspace_basis(
            gf7, r.left_arity(), r.right_arity(), coeff * r.basis());
        CHECK(again == r);
    }
}

TEST_CASE("graphs of maps") {
    CHECK(LinearRelation::graph_of_map(Matrix::identity(qq, 2)) == identity_relation(qq, 2));
    const LinearRelation z = LinearRelation::graph_of_map(Matrix::from_ints(qq, {{0}}));
    CHECK(z.dim() == 1);
    CHECK(properties(z).is_map);

    const LinearRelation sum2 = LinearRelation::graph_of_map(Matrix::from_ints(gf2, {{1, 1}}));
    CHECK(sum2.dim() == 2);
    const oracle::Rel pts = oracle::points_of(sum2);
    for (unsigned x = 0; x < 4; ++x) {
        CHECK(pts.pts.count({x, ((x & 1) ^ (x >> 1)) & 1}) == 1);
    }

    // graphs are always maps
    InstanceGen gen{gf7, 4, 12};
    Rng g = gen.rng_for(0);
    for (int t = 0; t < 30; ++t) {
        const Matrix a = gen.matrix(g, g.below(4), g.below(4));
        const PropertyReport p = properties(LinearRelation::graph_of_map(a));
        CHECK(p.is_map);
    }
}

TEST_CASE("cospan and span forms") {
    const Matrix id2 = Matrix::identity(qq, 2);
    CHECK(LinearRelation::from_cospan(id2, id2) == identity_relation(qq, 2));

    const Matrix proj = Matrix::from_ints(qq, {{1, 0}, {0, 0}});
    CHECK(LinearRelation::from_cospan(proj, id2) == LinearRelation::graph_of_map(proj));

    const Matrix ones = Matrix::from_ints(gf2, {{1, 1}});
    const LinearRelation parity = LinearRelation::from_cospan(ones, ones);
    CHECK(parity.dim() == 3);
    const oracle::Rel pts = oracle::points_of(parity);
    for (unsigned x = 0; x < 4; ++x) {
        for (unsigned y = 0; y < 4; ++y) {
            const bool in = ((x ^ (x >> 1)) & 1) == ((y ^ (y >> 1)) & 1);
            CHECK(pts.pts.count({x, y}) == (in ? 1u : 0u));
        }
    }

    CHECK(LinearRelation::from_span(id2, id2) == identity_relation(qq, 2));
    const LinearRelation graph_like =
        LinearRelation::from_span(Matrix::from_ints(qq, {{1}, {0}}), Matrix::from_ints(qq, {{1}}));
    CHECK(graph_like ==
          opposite(LinearRelation::graph_of_map(Matrix::from_ints(qq, {{1}, {0}}))));
    CHECK(graph_like.dim() == 1);
    CHECK(graph_like.left_arity() == 2);
    CHECK(graph_like.right_arity() == 1);

    CHECK(LinearRelation::from_span(Matrix::identity(qq, 1), Matrix(qq, 1, 1)) ==
          LinearRelation::graph_of_map(Matrix(qq, 1, 1)));

    CHECK_THROWS_AS(LinearRelation::from_cospan(id2, Matrix::identity(qq, 1)),
                    std::invalid_argument);
    CHECK_THROWS_AS(LinearRelation::from_span(id2, Matrix(qq, 1, 1)), std::invalid_argument);

    // from_cospan(a, I) is always the graph of a
    InstanceGen gen{gf7, 4, 13};
    Rng g = gen.rng_for(0);
    for (int t = 0; t < 30; ++t) {
        const Matrix a = gen.matrix(g, g.below(4), g.below(4));
        CHECK(LinearRelation::from_cospan(a, Matrix::identity(gf7, a.rows())) ==
              LinearRelation::graph_of_map(a));
    }
}

TEST_CASE("generator relations match their maps") {
    CHECK(identity_relation(qq, 2) == LinearRelation::graph_of_map(Matrix::identity(qq, 2)));

    const LinearRelation s = sum_relation(gf2, 1);
    CHECK(s.dim() == 2);
    const oracle::Rel spts = oracle::points_of(s);
    CHECK(spts.pts == std::set<oracle::Point>{{0, 0}, {1, 1}, {2, 1}, {3, 0}});

    const LinearRelation d = discard_relation(qq, 1);
    CHECK(d.left_arity() == 1);
    CHECK(d.right_arity() == 0);
    CHECK(d.dim() == 1);

    const LinearRelation z = zero_relation(qq, 2);
    CHECK(z.left_arity() == 0);
    CHECK(z.dim() == 0);

    const LinearRelation tw = twist_relation(qq, 1, 2);
    // (x, y1, y2) -> (y1, y2, x)
    const Matrix expect = Matrix::from_ints(qq, {{0, 1, 0}, {0, 0, 1}, {1, 0, 0}});
    CHECK(tw == LinearRelation::graph_of_map(expect));

    const LinearRelation cp = copy_relation(qq, 1);
    CHECK(compose(cp, direct_product(identity_relation(qq, 1), discard_relation(qq, 1))) ==
          identity_relation(qq, 1));
}

TEST_CASE("opposite") {
    CHECK(opposite(identity_relation(qq, 2)) == identity_relation(qq, 2));
    const LinearRelation g = LinearRelation::graph_of_map(Matrix::from_ints(qq, {{1}, {0}}));
    const LinearRelation og = opposite(g);
    CHECK(og.left_arity() == 2);
    CHECK(og.right_arity() == 1);
    CHECK(opposite(og) == g);

    InstanceGen gen{gf7, 4, 14};
    Rng rng = gen.rng_for(0);
    for (int t = 0; t < 30; ++t) {
        const LinearRelation r = gen.relation(rng, rng.below(4), rng.below(4));
        CHECK(opposite(opposite(r)) == r);
        // mirror symmetry of the fundamental properties
        const PropertyReport p = properties(r), q = properties(opposite(r));
        CHECK(p.total == q.surjective);
        CHECK(p.deterministic == q.injective);
        CHECK(p.injective == q.deterministic);
        CHECK(p.surjective == q.total);
    }
}

TEST_CASE("composition") {
    // functoriality on graphs: compose(graph f, graph g) = graph(g*f)
    InstanceGen gen{gf7, 4, 15};
    Rng rng = gen.rng_for(0);
    for (int t = 0; t < 30; ++t) {
        const std::size_t a = rng.below(4), b = rng.below(4), c = rng.below(4);
        const Matrix f = gen.matrix(rng, b, a), g = gen.matrix(rng, c, b);
        CHECK(compose(LinearRelation::graph_of_map(f), LinearRelation::graph_of_map(g)) ==
              LinearRelation::graph_of_map(g * f));
    }

    const LinearRelation r = LinearRelation::from_cospan(Matrix::from_ints(qq, {{1, 1}}),
                                                         Matrix::from_ints(qq, {{2}}));
    CHECK(compose(r, identity_relation(qq, 1)) == r);
    CHECK(compose(identity_relation(qq, 2), r) == r);

    // copy ; sum doubles, which over GF(2) is the zero map
    CHECK(compose(copy_relation(gf2, 1), sum_relation(gf2, 1)) ==
          LinearRelation::graph_of_map(Matrix::from_ints(gf2, {{0}})));
    CHECK(compose(copy_relation(qq, 1), sum_relation(qq, 1)) ==
          LinearRelation::graph_of_map(Matrix::from_ints(qq, {{2}})));

    CHECK_THROWS_AS(compose(identity_relation(qq, 2), identity_relation(qq, 1)),
                    std::invalid_argument);
}

TEST_CASE("direct product") {
    CHECK(direct_product(identity_relation(qq, 1), identity_relation(qq, 2)) ==
          identity_relation(qq, 3));
    const LinearRelation unit = LinearRelation::from_subspace_basis(qq, 0, 0, Matrix(qq, 0, 0));
    const LinearRelation r = LinearRelation::graph_of_map(Matrix::from_ints(qq, {{1}, {2}}));
    CHECK(direct_product(unit, r) == r);
    CHECK(direct_product(r, unit) == r);

    const LinearRelation left = LinearRelation::from_subspace_basis(
        gf2, 1, 1, Matrix::from_ints(gf2, {{1, 0}}));  // {(x, 0)}
    const LinearRelation right = LinearRelation::from_subspace_basis(
        gf2, 1, 1, Matrix::from_ints(gf2, {{0, 1}}));  // {(0, y)}
    const oracle::Rel pts = oracle::points_of(direct_product(left, right));
    CHECK(pts.pts.size() == 4);
    for (unsigned x = 0; x < 2; ++x) {
        for (unsigned z = 0; z < 2; ++z) {
            CHECK(pts.pts.count({x, z << 1}) == 1);  // ((x, 0), (0, z))
        }
    }
}

TEST_CASE("lattice order") {
    const LinearRelation full = full_relation(qq, 1, 1);
    const LinearRelation zero = LinearRelation::from_subspace_basis(qq, 1, 1, Matrix(qq, 0, 2));
    const LinearRelation id = identity_relation(qq, 1);
    CHECK(includes(id, id));
    CHECK(includes(full, id));
    CHECK(includes(full, zero));
    CHECK(!includes(zero, id));
    CHECK_THROWS_AS(includes(id, identity_relation(qq, 2)), std::invalid_argument);

    const LinearRelation e1 = LinearRelation::from_subspace_basis(
        qq, 2, 0, Matrix::from_ints(qq, {{1, 0}}));
    const LinearRelation e2 = LinearRelation::from_subspace_basis(
        qq, 2, 0, Matrix::from_ints(qq, {{0, 1}}));
    CHECK(meet(e1, e2).dim() == 0);
    CHECK(join(e1, e2) == full_relation(qq, 2, 0));
    CHECK(meet(id, id) == id);
    CHECK(join(id, id) == id);

    // modular dimension law; zero and full relations bound the lattice
    InstanceGen gen{gf7, 4, 16};
    Rng g = gen.rng_for(0);
    for (int t = 0; t < 40; ++t) {
        const std::size_t m = g.below(4), n = g.below(4);
        const LinearRelation r = gen.relation(g, m, n), s = gen.relation(g, m, n);
        CHECK(join(r, s).dim() + meet(r, s).dim() == r.dim() + s.dim());
        CHECK(includes(join(r, s), r));
        CHECK(includes(r, meet(r, s)));
        CHECK(includes(full_relation(gf7, m, n), r));
        CHECK(includes(r, LinearRelation::from_subspace_basis(gf7, m, n, Matrix(gf7, 0, m + n))));
    }
}

TEST_CASE("derived subspaces") {
    const LinearRelation id = identity_relation(qq, 2);
    CHECK(kernel(id).dim() == 0);
    CHECK(image(id).dim() == 2);
    CHECK(domain(id).dim() == 2);
    CHECK(indeterminacy(id).dim() == 0);

    const LinearRelation proj = LinearRelation::graph_of_map(Matrix::from_ints(qq, {{1, 0}, {0, 0}}));
    const LinearRelation ker = kernel(proj);
    CHECK(ker.dim() == 1);
    CHECK(ker.basis().at(0, 1).is_one());  // span e2
    const LinearRelation img = image(proj);
    CHECK(img.dim() == 1);
    CHECK(img.basis().at(0, 0).is_one());  // span e1

    const LinearRelation full = full_relation(gf2, 1, 1);
    const PropertyReport p = properties(full);
    CHECK(p.total);
    CHECK(p.surjective);
    CHECK(!p.injective);
    CHECK(!p.deterministic);
}

TEST_CASE("property report examples") {
    CHECK(properties(identity_relation(qq, 3)).is_bijective);

    const PropertyReport d = properties(discard_relation(qq, 1));
    CHECK(d.total);
    CHECK(d.deterministic);
    CHECK(d.surjective);
    CHECK(!d.injective);

    const LinearRelation zero = LinearRelation::from_subspace_basis(qq, 1, 1, Matrix(qq, 0, 2));
    const PropertyReport z = properties(zero);
    CHECK(z.deterministic);
    CHECK(z.injective);
    CHECK(!z.total);
    CHECK(!z.surjective);
}

TEST_CASE("composing a subspace with a graph applies the map") {
    InstanceGen gen{gf7, 4, 20};
    Rng g = gen.rng_for(0);
    for (int t = 0; t < 30; ++t) {
        const std::size_t m = g.below(4), n = g.below(4);
        const Matrix f = gen.matrix(g, n, m);
        const LinearRelation v = gen.relation(g, 0, m);  // subspace of K^m
        const LinearRelation pushed = compose(v, LinearRelation::graph_of_map(f));
        const LinearRelation expect = LinearRelation::from_subspace_basis(
            gf7, 0, n, (f * v.basis().transpose()).transpose());
        CHECK(pushed == expect);
    }
}

TEST_CASE("every relation admits span and cospan presentations") {
    for (const FieldSpec& f : {qq, FieldSpec::prime_field(5)}) {
        InstanceGen gen{f, 4, 17};
        Rng g = gen.rng_for(0);
        for (int t = 0; t < 40; ++t) {
            const std::size_t m = g.below(4), n = g.below(4);
            const LinearRelation r = gen.relation(g, m, n);
            const Matrix left = r.basis().cols_slice(0, m);
            const Matrix right = r.basis().cols_slice(m, m + n);

            // span form straight from the basis rows
            CHECK(LinearRelation::from_span(left.transpose(), right.transpose()) == r);

            // cospan form from the annihilator of the basis row space
            const Matrix ann = kernel_basis(r.basis()).transpose();
            CHECK(LinearRelation::from_cospan(ann.cols_slice(0, m),
                                              ann.cols_slice(m, m + n).negated()) == r);
        }
    }
}

TEST_CASE("graph inclusion between maps forces equality") {
    InstanceGen gen{gf7, 3, 18};
    Rng g = gen.rng_for(0);
    for (int t = 0; t < 30; ++t) {
        const Matrix a = gen.matrix(g, g.below(4), g.below(4));
        const Matrix b = gen.matrix(g, a.rows(), a.cols());
        const bool included =
            includes(LinearRelation::graph_of_map(b), LinearRelation::graph_of_map(a));
        CHECK(included == (a == b));
    }
}

TEST_CASE("relation-route kernel and image match the matrix route") {
    InstanceGen gen{gf7, 4, 19};
    Rng g = gen.rng_for(0);
    for (int t = 0; t < 30; ++t) {
        const Matrix a = gen.matrix(g, g.below(5), g.below(5));
        const LinearRelation ga = LinearRelation::graph_of_map(a);
        const LinearRelation ker_rel = opposite(kernel(ga));  // as a (0, m) subspace
        const LinearRelation ker_mat = LinearRelation::from_subspace_basis(
            gf7, 0, a.cols(), kernel_basis(a).transpose());
        CHECK(ker_rel == ker_mat);
        const LinearRelation im_rel = image(ga);
        const LinearRelation im_mat = LinearRelation::from_subspace_basis(
            gf7, 0, a.rows(), image_basis(a).transpose());
        CHECK(im_rel == im_mat);
    }
}

TEST_CASE("the five GF(2) relations on K^1 x K^1") {
    const auto rels = enumerate_relations(gf2, 1, 1);
    CHECK(rels.size() == 5);
    std::set<std::set<oracle::Point>> distinct;
    for (const LinearRelation& r : rels) distinct.insert(oracle::points_of(r).pts);
    CHECK(distinct.size() == 5);

    const LinearRelation diag = LinearRelation::from_subspace_basis(
        gf2, 1, 1, Matrix::from_ints(gf2, {{1, 1}}));
    const LinearRelation axis = LinearRelation::from_subspace_basis(
        gf2, 1, 1, Matrix::from_ints(gf2, {{1, 0}}));
    CHECK(diag != axis);
}
