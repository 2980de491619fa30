#include "doctest.h"

#include "gqc/error.hpp"
#include "gqc/gpoly.hpp"

using namespace gqc;

namespace {

const char* k112 = "x0^10+x1^5+x2^2+x3";

}  // namespace

TEST_SUITE("gpoly") {

TEST_CASE("monomial counts") {
    CHECK(den(WeightSystem({2, 4, 6, 10}), 20) == 20);
    CHECK(den(WeightSystem({1, 3, 7}), 0) == 1);
    CHECK(den(WeightSystem({1, 1, 2}), 4) == 9);
    CHECK(den(WeightSystem({2, 4}), 3) == 0);
    const auto ms = enumerate_monomials(WeightSystem({1, 1, 2}), 4);
    CHECK(ms.size() == 9);
    for (const auto& m : ms) CHECK(m.weighted_degree(WeightSystem({1, 1, 2})) == 4);
    CHECK(ms.front().exps == Exponents{4, 0, 0});
}

TEST_CASE("parsing and printing") {
    const Field f = Field::of_order(5);
    const Polynomial p = Polynomial::parse("x2^2 - x0^4 + x1^4", f);
    CHECK(p.nvars() == 3);
    CHECK(p.terms().size() == 3);
    CHECK(Polynomial::parse(p.to_string(), f, 3).terms() == p.terms());
    const Polynomial q = Polynomial::parse("y^3-x^4-x-1", Field::of_order(7));
    CHECK(q.nvars() == 2);
    CHECK(q.evaluate({0, 1}) == 0);
    CHECK(Polynomial::parse("3*x0*x1 + 2", f).evaluate({1, 1}) == 0);
    CHECK_THROWS_AS(Polynomial::parse("x0^^2", f), Error);
    CHECK_THROWS_AS(Polynomial::parse("", f), Error);
}

TEST_CASE("ring operations") {
    const Field f = Field::of_order(3);
    const Polynomial x = Polynomial::variable(f, 2, 0);
    const Polynomial y = Polynomial::variable(f, 2, 1);
    const Polynomial s = (x + y).pow(3);
    CHECK(s.terms().size() == 2);  // freshman's dream in characteristic 3
    CHECK((s - x.pow(3) - y.pow(3)).is_zero());
    CHECK(((x + y) * (x - y)).evaluate({2, 1}) == f.sub(f.mul(2, 2), 1));
}

TEST_CASE("weighted homogeneity") {
    const Field f = Field::of_order(5);
    auto v = is_weighted_homogeneous(Polynomial::parse("x2^2 - x0^4 + x1^4", f), WeightSystem({1, 1, 2}));
    CHECK(v.degree == 4);
    v = is_weighted_homogeneous(Polynomial::parse(k112, f), WeightSystem({2, 4, 6, 10}));
    CHECK_FALSE(v.degree);
    CHECK(v.degrees == std::vector<int>{10, 12, 20});
    v = is_weighted_homogeneous(Polynomial::parse("x0 + x1", f), WeightSystem({1, 2}));
    CHECK_FALSE(v.degree);
    CHECK(v.degrees == std::vector<int>{1, 2});
    try {
        is_weighted_homogeneous(Polynomial(f, 2), WeightSystem({1, 2}));
        FAIL("zero polynomial accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ZeroPolynomial);
    }
}

TEST_CASE("evaluation") {
    const Field f = Field::of_order(5);
    CHECK(Polynomial::constant(f, 3, 1).evaluate({4, 2, 3}) == 1);
    CHECK(Polynomial::parse(k112, f).evaluate({1, 1, 1, 2}) == 0);
    CHECK(Polynomial::parse("x2^2 - x0^4 + x1^4", f).evaluate({1, 0, 1}) == 0);
}

TEST_CASE("projective hypersurfaces") {
    const Field f = Field::of_order(5);
    const WeightSystem ws({2, 4, 6, 10});
    try {
        Hypersurface(ws, Polynomial::parse(k112, f));
        FAIL("inhomogeneous polynomial accepted in strict mode");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NonHomogeneous);
    }
    const Hypersurface h(ws, Polynomial::parse(k112, f), false);
    CHECK_FALSE(h.homogeneous());
    CHECK(h.degree() == 20);
    CHECK(h.point_model() == "orbits-meeting-zero-set");
    const auto pts = hypersurface_points(h);
    CHECK(pts.size() == 112);
    CHECK(std::is_sorted(pts.begin(), pts.end()));

    const Field f7 = Field::of_order(7);
    const Hypersurface line(WeightSystem({1, 1}), Polynomial::parse("x0", f7, 2));
    const auto lp = hypersurface_points(line);
    REQUIRE(lp.size() == 1);
    CHECK(lp[0].rep == Tuple{0, 1});

    const Hypersurface conic(WeightSystem({1, 1, 2}), Polynomial::parse("x2^2 - x0^4 + x1^4", f));
    CHECK(conic.homogeneous());
    CHECK(conic.point_model() == "zero-set");
    for (const auto& p : hypersurface_points(conic)) CHECK(conic.polynomial().evaluate(p.rep) == 0);

    CHECK_THROWS_AS(hypersurface_points(h, 10), Error);
}

TEST_CASE("affine points and orbits") {
    const Field f = Field::of_order(7);
    const auto pts = affine_points(Polynomial::parse("y^3-x^4-x-1", f));
    CHECK(pts.size() == 12);
    const auto orbits = scaling_orbits(pts, f, 1, 3);
    CHECK(orbits.size() == 4);
    for (const auto& o : orbits) CHECK(o.size() == 3);

    // chart x0 = 1 of the conic above over GF(5)
    const auto chart = affine_points(Polynomial::parse("x2^2 - x0^4 + x1^4", Field::of_order(5)), 0);
    for (const auto& p : chart) CHECK(p[0] == 1);

    const Field f9 = Field::parse("p=3,e=2,mod=1,0,1");
    CHECK(affine_points(Polynomial::parse("y^2-x^5+2*x^3-x^2-1", f9)).size() == 11);
}

TEST_CASE("zeta counts") {
    const Field f2 = Field::of_order(2);
    const Hypersurface pt(WeightSystem({1, 1}), Polynomial::parse("x0", f2, 2));
    CHECK(zeta_counts(pt, 4) == std::vector<std::uint64_t>{1, 1, 1, 1});
    const auto series = zeta_series({1, 1, 1, 1});
    REQUIRE(series.size() == 5);
    for (const auto& c : series) CHECK(c == 1);
    CHECK(zeta_counts_space(WeightSystem({1, 1}), f2, 3) == std::vector<std::uint64_t>{3, 5, 9});
    const auto s = zeta_series({3, 5, 9});
    CHECK(s == std::vector<Rational>{1, 3, 7, 15});
    const Hypersurface h(WeightSystem({2, 4, 6, 10}), Polynomial::parse(k112, Field::of_order(5)), false);
    CHECK(zeta_counts(h, 2) == std::vector<std::uint64_t>{112, 13352});
    try {
        zeta_counts(pt, 20);
        FAIL("extension too large accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::UnsupportedOrder);
    }
}

}  // TEST_SUITE
