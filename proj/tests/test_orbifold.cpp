#include "doctest.h"

#include "codes.hpp"
#include "gqc/chain.hpp"
#include "gqc/error.hpp"
#include "gqc/orbifold.hpp"

using namespace gqc;

namespace {

OrbifoldData census(std::vector<int> orders) {
    OrbifoldData d;
    for (int o : orders) d.entries.push_back({{}, o});
    return d;
}

}  // namespace

TEST_SUITE("orbifold") {

TEST_CASE("epsilon") {
    CHECK(epsilon(census({2, 2})) == Rational(1, 2));
    CHECK(epsilon(census({})) == 0);
    CHECK(epsilon(census({4})) == Rational(3, 8));
    try {
        epsilon(census({1}));
        FAIL("order 1 accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InvalidStabilizer);
    }
}

TEST_CASE("orbifold Euler characteristic") {
    CHECK(chi_orb(2, census({2, 2})) == 3);
    CHECK(chi_orb(2, census({})) == 2);
    CHECK(chi_orb(0, census({3})) == Rational(2, 3));
}

TEST_CASE("refined bound") {
    auto b = refined_bound(10, 2, Rational(1, 2));
    CHECK(b.plain == 5);
    CHECK(b.refined == Rational(19, 4));
    b = refined_bound(64, 16, 4);
    CHECK(b.plain == 25);
    CHECK(b.refined == 23);
    CHECK(refined_bound(64, 16, 2).refined == 24);
    b = refined_bound(9, 9, 0);
    CHECK(b.plain == 1);
    CHECK(b.refined == 1);
    CHECK_THROWS_AS(refined_bound(3, 4, 0), Error);
    CHECK_THROWS_AS(refined_bound(3, 1, -1), Error);
}

TEST_CASE("reports") {
    CssCode steane = css_from_self_orthogonal(testcodes::simplex());
    apply_distance(steane, quantum_distance(steane));
    auto r = bound_report(steane, census({}));
    CHECK(r.plain == 4);
    CHECK(r.refined == 4);
    CHECK(r.satisfies_plain == true);
    CHECK(r.satisfies_refined == true);

    CssCode toric = homological_code(toric_complex(2), 1);
    apply_distance(toric, quantum_distance(toric));
    r = bound_report(toric, census({}), 0);
    CHECK(r.plain == 4);
    CHECK(r.refined == 4);
    CHECK(r.satisfies_refined == true);
    REQUIRE(r.chi_orb);
    CHECK(*r.chi_orb == 0);

    r = bound_report(toric, Rational(1, 2));
    CHECK(r.eps_source == "manual");
    CHECK(r.refined == Rational(15, 4));

    CssCode unknown = homological_code(toric_complex(2), 1);
    r = bound_report(unknown, census({2}));
    CHECK_FALSE(r.satisfies_plain.has_value());
}

}  // TEST_SUITE
