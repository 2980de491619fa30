#include "doctest.h"

#include "codes.hpp"
#include "gqc/chain.hpp"
#include "gqc/error.hpp"
#include "gqc/gpoly.hpp"
#include "gqc/quantum.hpp"
#include "oracles.hpp"

using namespace gqc;
using testcodes::from_rows;
using testcodes::hamming;
using testcodes::simplex;

namespace {

std::vector<std::vector<unsigned>> rows_of(const Matrix& m) {
    std::vector<std::vector<unsigned>> r;
    for (const auto& v : m.to_rows()) r.emplace_back(v.begin(), v.end());
    return r;
}

/// Brute-force min(d_X, d_Z) over GF(2).
int brute_distance(const CssCode& q) {
    const oracle::NaiveField f2{2, 1, {0, 1}};
    const auto kz = oracle::kernel(f2, rows_of(q.hx), q.n);
    const auto kx = oracle::kernel(f2, rows_of(q.hz), q.n);
    const auto sz = oracle::span(f2, rows_of(q.hz), q.n);
    const auto sx = oracle::span(f2, rows_of(q.hx), q.n);
    return std::min(oracle::min_weight_outside(kz, sz), oracle::min_weight_outside(kx, sx));
}

}  // namespace

TEST_SUITE("quantum") {

TEST_CASE("Steane from the simplex code") {
    CssCode q = css_from_self_orthogonal(simplex());
    CHECK(q.n == 7);
    CHECK(q.k == 1);
    CHECK(commutation_check(q).holds);
    const auto d = quantum_distance(q);
    CHECK(d.distance == Distance{3, DistanceKind::Exact});
    CHECK(brute_distance(q) == 3);
    apply_distance(q, d);
    CHECK(q.distance.value == 3);
    // lower bound min(d_C, d_C^perp) from the lift theorem
    const int dc = *min_distance(simplex()).value;
    const int dd = *min_distance(dual_code(simplex())).value;
    CHECK(*d.distance.value >= std::min(dc, dd));
}

TEST_CASE("trivial lifts") {
    const CssCode q = css_from_self_orthogonal(from_rows(2, {{1, 1}}));
    CHECK(q.n == 2);
    CHECK(q.k == 0);
    CHECK(quantum_distance(q).distance.kind == DistanceKind::Undefined);
    try {
        css_from_self_orthogonal(hamming());
        FAIL("non self-orthogonal code lifted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotSelfOrthogonal);
    }
}

TEST_CASE("Hermitian lift over GF(4)") {
    const LinearCode c = from_rows(4, {{1, 1, 0, 0}, {0, 0, 1, 1}});
    const CssCode q = css_from_self_orthogonal(c, InnerProduct::Hermitian);
    CHECK(q.k == 0);
    CHECK(commutation_check(q).holds);
}

TEST_CASE("pairs") {
    const CssCode s = css_from_pair(hamming(), hamming());
    CHECK(s.n == 7);
    CHECK(s.k == 1);
    CHECK(quantum_distance(s).distance == Distance{3, DistanceKind::Exact});

    const LinearCode full(Matrix::identity(Field::of_order(2), 5));
    const CssCode free = css_from_pair(full, full);
    CHECK(free.k == 5);
    CHECK(free.hx.rows() == 0);
    CHECK(quantum_distance(free).distance == Distance{1, DistanceKind::Exact});

    // the parity pair needs odd characteristic: over GF(2) the all-ones dual word has odd weight
    const LinearCode parity3 = from_rows(3, {{1, 2, 0}, {0, 1, 2}});
    const CssCode p = css_from_pair(parity3, parity3);
    CHECK(p.n == 3);
    CHECK(p.k == 1);
    const LinearCode parity2 = from_rows(2, {{1, 1, 0}, {0, 1, 1}});
    try {
        css_from_pair(parity2, parity2);
        FAIL("containment violation accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ContainmentViolated);
    }
}

TEST_CASE("commutation witness") {
    const Field f = Field::of_order(2);
    const CssCode bad(f, Matrix::from_rows(f, {{1, 0}}), Matrix::from_rows(f, {{1, 0}}));
    const auto w = commutation_check(bad);
    CHECK_FALSE(w.holds);
    REQUIRE(w.witness);
    CHECK(*w.witness == std::pair<std::size_t, std::size_t>{0, 0});
    const Matrix x = Matrix::from_rows(f, {{1, 1, 0}});
    const Matrix z = Matrix::from_rows(f, {{1, 0, 0}});
    const CssCode q(f, x, z);
    const auto v = commutation_check(q);
    CHECK_FALSE(v.holds);
    CHECK(v.witness);
    CHECK_THROWS_AS(CssCode(f, Matrix(f, 1, 3), Matrix(f, 1, 4)), Error);
}

TEST_CASE("toric distances against brute force") {
    for (int L : {2, 3}) {
        const CssCode q = homological_code(toric_complex(L), 1);
        CHECK(commutation_check(q).holds);
        const auto d = quantum_distance(q);
        CHECK(d.distance == Distance{L, DistanceKind::Exact});
        if (L == 2) CHECK(brute_distance(q) == 2);
    }
}

TEST_CASE("circuit search path") {
    const CssCode q = homological_code(toric_complex(3), 1);
    const auto d = quantum_distance(q, kDefaultDistanceBudget, false);
    CHECK(d.method == "circuit");
    CHECK(d.distance == Distance{3, DistanceKind::Exact});
    const auto big = quantum_distance(homological_code(toric_complex(5), 1));
    CHECK(big.method == "circuit");
    CHECK(big.distance == Distance{5, DistanceKind::Exact});
    const auto lb = quantum_distance(q, 1);
    CHECK(lb.distance.kind != DistanceKind::Exact);
    if (lb.lower) CHECK(*lb.lower <= 3);
    if (lb.upper) CHECK(*lb.upper >= 3);
}

TEST_CASE("isotropic subcode of the 112-point code") {
    const Field f = Field::of_order(5);
    const WeightSystem ws({2, 4, 6, 10});
    const Hypersurface h(ws, Polynomial::parse("x0^10+x1^5+x2^2+x3", f), false);
    const auto pts = hypersurface_points(h);
    const LinearCode c = evaluation_code(ws, 20, pts, f);
    // candidates in monomial order, as the command line tool does
    const LinearCode sub = isotropic_subcode(evaluation_matrix(ws, 20, pts, f), InnerProduct::Euclidean, 10);
    CHECK(sub.dimension() == 10);
    CHECK(is_self_orthogonal(sub).holds);
    CHECK(contains(c, sub).holds);
    const CssCode q = css_from_self_orthogonal(sub);
    CHECK(q.n == 112);
    CHECK(q.k == 92);
    CHECK(commutation_check(q).holds);
    const auto d = quantum_distance(q);
    CHECK(d.distance == Distance{2, DistanceKind::Exact});
}

}  // TEST_SUITE
