#include "doctest.h"

#include "gqc/error.hpp"
#include "gqc/field.hpp"
#include "oracles.hpp"

using namespace gqc;

namespace {

ErrorKind kind_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error raised");
    return ErrorKind::InvariantViolation;
}

}  // namespace

TEST_SUITE("field") {

TEST_CASE("prime field creation") {
    const Field f = Field::create(5, 1);
    CHECK(f.q() == 5);
    CHECK(f.elements() == std::vector<Elem>{0, 1, 2, 3, 4});
    CHECK(Field::create(3, 1).elements() == std::vector<Elem>{0, 1, 2});
}

TEST_CASE("GF(9) with omega^2 = -1") {
    const Field f = Field::create(3, 2, std::vector<unsigned>{1, 0, 1});
    const Elem w = 3;  // coefficients (0, 1)
    CHECK(f.mul(w, w) == 2);
    CHECK(f.elements().size() == 9);
    CHECK(f.coefficients(7) == std::vector<unsigned>{1, 2});
    CHECK(f.conjugate(1) == 1);
    CHECK(f.conjugate(w) == f.neg(w));
    CHECK(f.conjugate(w) == f.pow(w, 3));
}

TEST_CASE("GF(4) from x^2+x+1") {
    const Field f = Field::create(2, 2, std::vector<unsigned>{1, 1, 1});
    CHECK(f.q() == 4);
    CHECK(f.elements() == std::vector<Elem>{0, 1, 2, 3});
    CHECK(f.conjugate(2) == f.mul(2, 2));
    CHECK(f.mul(2, 2) == 3);
}

TEST_CASE("small arithmetic examples") {
    CHECK(Field::of_order(5).mul(3, 4) == 2);
    CHECK(Field::of_order(7).inv(3) == 5);
    CHECK(Field::of_order(7).pow(3, -1) == 5);
    CHECK(Field::of_order(7).from_int(-1) == 6);
}

TEST_CASE("creation errors") {
    CHECK(kind_of([] { Field::create(4, 1); }) == ErrorKind::NonPrimeCharacteristic);
    CHECK(kind_of([] { Field::create(2, 2, std::vector<unsigned>{1, 0, 1}); }) == ErrorKind::ReducibleModulus);
    CHECK(kind_of([] { Field::of_order(6); }) == ErrorKind::UnsupportedOrder);
    CHECK(kind_of([] { Field::of_order(2u << 12); }) == ErrorKind::UnsupportedOrder);
    CHECK(kind_of([] { Field::of_order(5).inv(0); }) == ErrorKind::DivisionByZero);
    CHECK(kind_of([] { Field::of_order(5).div(1, 0); }) == ErrorKind::DivisionByZero);
    CHECK(kind_of([] { Field::of_order(8).conjugate(2); }) == ErrorKind::NonSquareOrder);
    CHECK(kind_of([] { Field::parse("q=banana"); }) == ErrorKind::ParseError);
}

TEST_CASE("field strings round-trip") {
    for (const char* s : {"q=2", "q=5", "q=9", "q=49", "p=3,e=2,mod=2,2,1"}) {
        const Field f = Field::parse(s);
        CHECK(Field::parse(f.spec_string()) == f);
    }
    CHECK(Field::parse("p=3,e=2,mod=1,0,1").spec_string() == "q=9");
}

TEST_CASE("irreducibility") {
    CHECK(is_irreducible_mod_p({1, 1, 1}, 2));
    CHECK_FALSE(is_irreducible_mod_p({1, 0, 1}, 2));
    CHECK(is_irreducible_mod_p({1, 0, 1}, 3));
    CHECK(is_irreducible_mod_p({1, 1, 0, 1}, 2));
}

TEST_CASE("multiplication agrees with schoolbook polynomial arithmetic") {
    for (unsigned q : {4u, 8u, 9u, 16u, 25u, 27u, 49u}) {
        const Field f = Field::of_order(q);
        oracle::NaiveField nf{f.p(), f.e(), f.modulus()};
        for (Elem a = 0; a < q; ++a)
            for (Elem b = 0; b < q; ++b) {
                REQUIRE(f.mul(a, b) == nf.mul(a, b));
                REQUIRE(f.add(a, b) == nf.add(a, b));
            }
    }
}

TEST_CASE("generator, log and exp") {
    for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 25u, 64u, 125u}) {
        const Field f = Field::of_order(q);
        std::vector<int> hit(q, 0);
        for (unsigned k = 0; k + 1 < q; ++k) ++hit[f.exp(k)];
        CHECK(hit[0] == 0);
        for (Elem a = 1; a < q; ++a) {
            CHECK(hit[a] == 1);
            CHECK(f.exp(f.log(a)) == a);
        }
    }
}

TEST_CASE("frobenius fixes the prime field") {
    const Field f = Field::of_order(27);
    for (Elem a = 0; a < 3; ++a) CHECK(f.frobenius(a) == a);
    for (Elem a = 0; a < 27; ++a) CHECK(f.frobenius(a) == f.pow(a, 3));
}

}  // TEST_SUITE
