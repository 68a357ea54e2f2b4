#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "linrel/theorems.hpp"

using namespace linrel;

namespace {
const FieldSpec qq = FieldSpec::rationals();
const FieldSpec gf2 = FieldSpec::prime_field(2);
const FieldSpec gf7 = FieldSpec::prime_field(7);
}  // namespace

TEST_CASE("rng streams are deterministic") {
    Rng a(42), b(42), c(43);
    for (int i = 0; i < 20; ++i) {
        const std::uint64_t x = a.next();
        CHECK(x == b.next());
        CHECK(x != c.next());
    }
    InstanceGen gen{gf7, 4, 5};
    Rng g1 = gen.rng_for(7), g2 = gen.rng_for(7);
    CHECK(gen.matrix(g1, 3, 3) == gen.matrix(g2, 3, 3));
}

TEST_CASE("subspace enumeration counts") {
    CHECK(enumerate_relations(gf2, 1, 1).size() == 5);
    CHECK(enumerate_relations(gf2, 1, 0).size() == 2);
    CHECK(enumerate_relations(gf2, 2, 2).size() == 67);
    CHECK(gf2_subspace_count(4, 2) == 35);
    CHECK(gf2_subspace_count(5, 2) == 155);
    CHECK_THROWS_AS(enumerate_relations(gf2, 3, 3), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_relations(qq, 1, 1), std::invalid_argument);
}

TEST_CASE("poset implications") {
    CHECK(check_poset(identity_relation(qq, 3)).ok);
    CHECK(check_poset(LinearRelation::graph_of_map(Matrix::from_ints(qq, {{1}, {0}}))).ok);
    for (std::size_t m = 0; m <= 3; ++m) {
        for (std::size_t n = 0; n + m <= 3; ++n) {
            for (const LinearRelation& r : enumerate_relations(gf2, m, n)) {
                CHECK(check_poset(r).ok);
                CHECK(check_mirror_symmetry(r).ok);
            }
        }
    }
}

TEST_CASE("pigeonhole and exchange equivalence") {
    const Matrix tall = Matrix::from_ints(qq, {{1}, {0}});
    const Matrix id2 = Matrix::identity(qq, 2);
    CHECK(check_pigeonhole(tall, id2).ok);
    CHECK(check_pigeonhole(Matrix::identity(qq, 1), Matrix::identity(qq, 1)).ok);
    CHECK(check_exchange_equivalence(tall, id2).ok);
    CHECK(check_exchange_equivalence(Matrix::identity(qq, 1), Matrix(qq, 1, 1)).ok);

    for (std::size_t k = 0; k <= 2; ++k) {
        for (std::size_t m = 0; m <= 2; ++m) {
            for (std::size_t n = 0; n <= 2; ++n) {
                for (const Matrix& a : enumerate_gf2_matrices(k, m)) {
                    for (const Matrix& b : enumerate_gf2_matrices(k, n)) {
                        CHECK(check_exchange_equivalence(a, b).ok);
                        CHECK(check_pigeonhole(a, b).ok);
                    }
                }
            }
        }
    }
}

TEST_CASE("invertible matrix theorem checks") {
    CHECK(check_imt(Matrix::identity(qq, 4)).ok);
    CHECK(check_imt(Matrix::from_ints(gf2, {{1, 1}, {1, 1}})).ok);
    CHECK(check_imt(Matrix(qq, 0, 0)).ok);

    InstanceGen gen{qq, 4, 51};
    Rng g = gen.rng_for(0);
    for (int t = 0; t < 20; ++t) {
        const Matrix a = gen.invertible(g, 4);
        REQUIRE(inverse(a).has_value());
        CHECK(*inverse(a) * a == Matrix::identity(qq, 4));
        CHECK(check_imt(a).ok);
        CHECK(check_imt(gen.singular_square(g, 1 + g.below(4))).ok);
    }
}

TEST_CASE("inverse interaction laws") {
    // identity: everything trivial
    const Matrix id1 = Matrix::identity(gf2, 1);
    for (const LinearRelation& r : enumerate_relations(gf2, 1, 1)) {
        for (const LinearRelation& s : enumerate_relations(gf2, 1, 1)) {
            CHECK(check_props_inverse_laws(id1, r, s, r, s).ok);
        }
    }

    // a = [[1],[0]] is injective; distinct relations stay distinct after
    // composing with its graph
    const Matrix tall = Matrix::from_ints(gf2, {{1}, {0}});
    const LinearRelation ga = LinearRelation::graph_of_map(tall);
    const auto rels = enumerate_relations(gf2, 1, 1);
    for (const LinearRelation& r : rels) {
        for (const LinearRelation& s : rels) {
            CHECK(check_left_inverse_laws(tall, r, s).ok);
            if (!(r == s)) CHECK(compose(r, ga) != compose(s, ga));
        }
    }

    // solve-back with random invertible maps over GF(7)
    InstanceGen gen{gf7, 3, 52};
    Rng g = gen.rng_for(0);
    for (int t = 0; t < 40; ++t) {
        const std::size_t n = 1 + g.below(3);
        const Matrix a = gen.invertible(g, n);
        const LinearRelation r = gen.relation(g, g.below(3), n);
        const LinearRelation s = gen.relation(g, g.below(3), n);
        const LinearRelation u = gen.relation(g, n, g.below(3));
        const LinearRelation v = gen.relation(g, n, g.below(3));
        CHECK(check_props_inverse_laws(a, r, s, u, v).ok);
    }
}

TEST_CASE("algebra law checkers") {
    InstanceGen gen{gf7, 3, 53};
    Rng g = gen.rng_for(0);
    for (int t = 0; t < 40; ++t) {
        const std::size_t m = g.below(3), k1 = g.below(3), k2 = g.below(3), n = g.below(3);
        const LinearRelation a = gen.relation(g, m, k1);
        const LinearRelation b = gen.relation(g, k1, k2);
        const LinearRelation c = gen.relation(g, k2, n);
        const LinearRelation d = gen.relation(g, n, g.below(3));
        CHECK(check_associativity(a, b, c).ok);
        CHECK(check_interchange(a, b, c, d).ok);
        CHECK(check_contravariance(a, b).ok);
        const LinearRelation big = gen.relation(g, k1, k2);
        CHECK(check_monotonicity(a, gen.subrelation(g, big), big, c).ok);
    }
}

TEST_CASE("selftest quick run passes") {
    SelftestOptions opts;
    opts.quick = true;
    const SelftestResult res = run_selftest(opts);
    CHECK(res.ok);
    CHECK(res.suites.size() >= 6);
    for (const SuiteResult& sr : res.suites) CHECK_MESSAGE(sr.verdict.ok, sr.name);
}

TEST_CASE("fault injection surfaces as a counterexample") {
    SelftestOptions opts;
    opts.quick = true;
    opts.inject_fault = true;
    opts.repro_path = "fault_injection_repro.json";
    const SelftestResult res = run_selftest(opts);
    CHECK(!res.ok);
    CHECK(res.repro_file == opts.repro_path);
    std::ifstream in(opts.repro_path);
    CHECK(in.good());
    in.close();
    std::remove(opts.repro_path.c_str());
}
