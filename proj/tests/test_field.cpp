#include <doctest.h>

#include <stdexcept>

#include "linrel/theorems.hpp"

using namespace linrel;

namespace {
const FieldSpec qq = FieldSpec::rationals();
const FieldSpec gf5 = FieldSpec::prime_field(5);
const FieldSpec gf7 = FieldSpec::prime_field(7);
}  // namespace

TEST_CASE("exact rational arithmetic") {
    CHECK((Scalar::parse(qq, "1/2") + Scalar::parse(qq, "1/3")).to_string() == "5/6");
    CHECK((Scalar::parse(qq, "2/3")).inverse().to_string() == "3/2");
    CHECK(Scalar::parse(qq, "2/4") == Scalar::parse(qq, "1/2"));  // canonical form
    CHECK(Scalar::parse(qq, "-4/6").to_string() == "-2/3");
    CHECK(Scalar::one(qq).inverse() == Scalar::one(qq));
}

TEST_CASE("prime field arithmetic") {
    CHECK((Scalar::from_int(gf5, 3) * Scalar::from_int(gf5, 4)).to_string() == "2");
    CHECK(Scalar::from_int(gf7, 3).inverse() == Scalar::from_int(gf7, 5));
    CHECK(Scalar::from_int(gf5, -1) == Scalar::from_int(gf5, 4));
    CHECK(Scalar::parse(gf5, "-3") == Scalar::from_int(gf5, 2));
    CHECK(Scalar::one(gf5).inverse() == Scalar::one(gf5));
}

TEST_CASE("field axioms hold on random triples") {
    for (const FieldSpec& f : {qq, gf7}) {
        InstanceGen gen{f, 0, 99};
        Rng g = gen.rng_for(0);
        for (int t = 0; t < 200; ++t) {
            const Scalar a = gen.scalar(g), b = gen.scalar(g), c = gen.scalar(g);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + (-a) == Scalar::zero(f));
            if (!a.is_zero()) CHECK(a * a.inverse() == Scalar::one(f));
        }
    }
}

TEST_CASE("field errors") {
    CHECK_THROWS_AS(Scalar::one(qq) / Scalar::zero(qq), std::invalid_argument);
    CHECK_THROWS_AS(Scalar::zero(gf5).inverse(), std::invalid_argument);
    CHECK_THROWS_AS(Scalar::one(qq) + Scalar::one(gf5), std::invalid_argument);
    CHECK_THROWS_AS(FieldSpec::prime_field(4), std::invalid_argument);
    CHECK_THROWS_AS(FieldSpec::prime_field(1), std::invalid_argument);
    CHECK_THROWS_AS(Scalar::parse(qq, "1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Scalar::parse(qq, "x"), std::invalid_argument);
    CHECK_THROWS_AS(Scalar::parse(qq, "1.5"), std::invalid_argument);
    CHECK_THROWS_AS(Scalar::parse(gf5, "1/2"), std::invalid_argument);
}

TEST_CASE("field spec text form") {
    CHECK(FieldSpec::parse("QQ") == qq);
    CHECK(FieldSpec::parse("GF(5)") == gf5);
    CHECK(gf7.to_string() == "GF(7)");
    CHECK_THROWS_AS(FieldSpec::parse("GF(6)"), std::invalid_argument);
    CHECK_THROWS_AS(FieldSpec::parse("RR"), std::invalid_argument);
}
