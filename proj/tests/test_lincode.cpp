#include "doctest.h"

#include "codes.hpp"
#include "gqc/error.hpp"
#include "gqc/gpoly.hpp"
#include "gqc/lincode.hpp"

using namespace gqc;
using testcodes::from_rows;
using testcodes::hamming;
using testcodes::simplex;

TEST_SUITE("lincode") {

TEST_CASE("matrix basics") {
    const Field f = Field::of_order(3);
    const Matrix m = Matrix::from_rows(f, {{1, 2, 0}, {2, 1, 0}, {0, 0, 1}});
    CHECK(m.rank() == 2);
    const Matrix k = m.nullspace();
    CHECK(k.rows() == 1);
    CHECK((m * k.transpose()).is_zero());
    CHECK(Matrix::identity(f, 3).rank() == 3);
    CHECK(m.transpose().transpose() == m);
    RowSpace rs(m);
    CHECK(rs.dimension() == 2);
    CHECK(rs.contains(std::vector<Elem>{0, 0, 2}));
    CHECK_FALSE(rs.contains(std::vector<Elem>{1, 0, 0}));
    CHECK(same_row_space(m, m.rref()));
    CHECK_THROWS_AS(Matrix::from_rows(f, {{1, 2}, {1}}), Error);
    CHECK_THROWS_AS(m * Matrix(f, 2, 2), Error);
}

TEST_CASE("evaluation codes on the projective line") {
    const Field f = Field::of_order(7);
    const WeightSystem ws({1, 1});
    const auto pts = enumerate_wp_points(ws, f);
    REQUIRE(pts.size() == 8);
    const LinearCode c = evaluation_code(ws, 1, pts, f);
    CHECK(c.length() == 8);
    CHECK(c.dimension() == 2);
    CHECK(min_distance(c) == Distance{7, DistanceKind::Exact});
    CHECK(footprint_distance(ws, 1, pts, f) == Distance{7, DistanceKind::Exact});
    const LinearCode rep = evaluation_code(ws, 0, pts, f);
    CHECK(rep.dimension() == 1);
    CHECK(min_distance(rep).value == 8);
    CHECK(evaluation_matrix(ws, 1, pts, f).rows() == 2);
    try {
        evaluation_code(ws, 1, {}, f);
        FAIL("empty point set accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::EmptyPointSet);
    }
}

TEST_CASE("the 112-point surface code") {
    const Field f = Field::of_order(5);
    const WeightSystem ws({2, 4, 6, 10});
    const Hypersurface h(ws, Polynomial::parse("x0^10+x1^5+x2^2+x3", f), false);
    const auto pts = hypersurface_points(h);
    const LinearCode c = evaluation_code(ws, 20, pts, f);
    CHECK(c.length() == 112);
    CHECK(c.dimension() == 20);
    CHECK(c.provenance().at("den") == 20);
    CHECK(dual_code(c).dimension() == 92);
    CHECK_FALSE(is_self_orthogonal(c).holds);
}

TEST_CASE("duals") {
    const LinearCode r3 = from_rows(2, {{1, 1, 1}});
    const LinearCode p3 = dual_code(r3);
    CHECK(p3.dimension() == 2);
    CHECK(p3 == from_rows(2, {{1, 1, 0}, {0, 1, 1}}));
    CHECK(dual_code(hamming()) == simplex());
    CHECK(dual_code(dual_code(hamming())) == hamming());
    const LinearCode g4 = from_rows(4, {{1, 1}});
    CHECK(contains(dual_code(g4, InnerProduct::Hermitian), g4).holds);
    try {
        dual_code(from_rows(2, {{1, 1}}), InnerProduct::Hermitian);
        FAIL("Hermitian dual over GF(2) accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NonSquareOrder);
    }
}

TEST_CASE("distance and weights") {
    const LinearCode r3 = from_rows(2, {{1, 1, 1}});
    CHECK(min_distance(r3) == Distance{3, DistanceKind::Exact});
    CHECK(weight_distribution(r3) == WeightDistribution{{0, 1}, {3, 1}});
    CHECK(min_distance(hamming()) == Distance{3, DistanceKind::Exact});
    CHECK(weight_distribution(hamming()) == WeightDistribution{{0, 1}, {3, 7}, {4, 7}, {7, 1}});
    CHECK(weight_distribution(simplex()) == WeightDistribution{{0, 1}, {4, 7}});
    const LinearCode zero(Matrix(Field::of_order(2), 0, 4));
    CHECK(min_distance(zero).kind == DistanceKind::Undefined);
    const Distance ub = min_distance(hamming(), 4);
    CHECK(ub.kind == DistanceKind::UpperBound);
    CHECK(*ub.value >= 3);
    try {
        weight_distribution(hamming(), 4);
        FAIL("budget ignored");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::BudgetExceeded);
    }
}

TEST_CASE("self-orthogonality and containment") {
    CHECK(is_self_orthogonal(from_rows(2, {{1, 1}})).holds);
    CHECK(is_self_orthogonal(from_rows(4, {{1, 1}}), InnerProduct::Hermitian).holds);
    CHECK(is_self_orthogonal(simplex()).holds);
    const auto v = is_self_orthogonal(hamming());
    CHECK_FALSE(v.holds);
    REQUIRE(v.witness);
    const LinearCode h = hamming();
    const auto& g = h.generator();
    CHECK(dot(g.field(), g.row(v.witness->first), g.row(v.witness->second)) != 0);
    CHECK(contains(hamming(), simplex()).holds);
    const auto c = contains(simplex(), hamming());
    CHECK_FALSE(c.holds);
    REQUIRE(c.witness);
    CHECK_FALSE(RowSpace(simplex().generator()).contains(*c.witness));
    CHECK_THROWS_AS(is_self_orthogonal(from_rows(5, {{1, 2}}), InnerProduct::Hermitian), Error);
}

TEST_CASE("encoding") {
    const LinearCode h = hamming();
    const Vector w = encode(h, std::vector<Elem>{1, 0, 1, 1});
    CHECK(RowSpace(h.generator()).contains(w));
    CHECK_THROWS_AS(encode(h, std::vector<Elem>{1, 0}), Error);
}

TEST_CASE("plane dimension") {
    for (unsigned q : {3u, 5u}) {
        const auto z = wprm_plane_dimension(1, 1, 0, q);
        CHECK(z.rank == 1);
        CHECK(z.closed_form == 1);
        CHECK(z.agrees);
    }
    const auto a = wprm_plane_dimension(1, 1, 1, 5);
    CHECK(a.rank == 3);
    CHECK(a.agrees);
    const auto b = wprm_plane_dimension(1, 2, 4, 5);
    // 9 monomials; the closed form subtracts an overlap term of q - 1 once d reaches w1 (q - 1)
    CHECK(b.closed_form == 5);
    CHECK(b.rank == 9);
    CHECK_FALSE(b.agrees);
    const auto below = wprm_plane_dimension(1, 2, 3, 5);
    CHECK(below.closed_form == 6);
    CHECK(below.rank == 6);
}

TEST_CASE("names round-trip") {
    for (auto k : {DistanceKind::Exact, DistanceKind::LowerBound, DistanceKind::UpperBound, DistanceKind::Undefined})
        CHECK(parse_distance_kind(to_string(k)) == k);
    CHECK(parse_inner_product("hermitian") == InnerProduct::Hermitian);
    CHECK_THROWS_AS(parse_inner_product("symplectic"), Error);
}

}  // TEST_SUITE
