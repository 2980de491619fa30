#include "doctest.h"

#include "codes.hpp"
#include "gqc/chain.hpp"
#include "gqc/error.hpp"
#include "gqc/io.hpp"

using namespace gqc;
using nlohmann::json;

TEST_SUITE("io") {

TEST_CASE("points round trip") {
    const Field f = Field::of_order(9);
    const WeightSystem ws({1, 2, 3});
    const auto pts = enumerate_wp_points(ws, f);
    const json j = points_to_json(pts, ws, f);
    CHECK(j.at("count") == pts.size());
    const PointSet back = points_from_json(j);
    CHECK(back.field == f);
    CHECK(back.ws == ws);
    CHECK(back.points == pts);
    json bad = j;
    bad["points"][0]["rep"] = json::array({2, 0, 0});
    CHECK_THROWS_AS(points_from_json(bad), Error);
}

TEST_CASE("codes round trip") {
    LinearCode c = testcodes::hamming();
    c.analysis().distance = min_distance(c);
    c.analysis().weights = weight_distribution(c);
    c.analysis().weights_exact = true;
    const LinearCode back = code_from_json(code_to_json(c));
    CHECK(back == c);
    CHECK(back.analysis().distance == c.analysis().distance);
    CHECK(back.analysis().weights == c.analysis().weights);
    try {
        code_from_json(json::parse(R"({"field":"q=2","length":3})"));
        FAIL("missing generator accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ParseError);
    }
}

TEST_CASE("css round trip and k check") {
    CssCode q = css_from_self_orthogonal(testcodes::simplex());
    apply_distance(q, quantum_distance(q));
    json j = css_to_json(q);
    const CssCode back = css_from_json(j);
    CHECK(back.k == 1);
    CHECK(back.distance == q.distance);
    CHECK(back.hx == q.hx);
    j["k"] = 3;
    try {
        css_from_json(j);
        FAIL("inconsistent k accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InvariantViolation);
    }
}

TEST_CASE("census and reports") {
    OrbifoldData d;
    d.entries.push_back({{0, 1}, 2});
    const OrbifoldData back = census_from_json(census_to_json(d));
    REQUIRE(back.entries.size() == 1);
    CHECK(back.entries[0].order == 2);
    CHECK(back.entries[0].rep == Tuple{0, 1});
    const auto h = homology_to_json(homology(toric_complex(2)));
    CHECK(h.at("betti").at("1") == 2);
    const auto f = filtration_to_json(height_filtration({{1, 1}, {3, 1}}, {Rational(1), std::nullopt}));
    CHECK(f.at("levels")[1].at("threshold") == "inf");
    CHECK(distance_from_json(distance_to_json({std::nullopt, DistanceKind::Undefined})).kind ==
          DistanceKind::Undefined);
}

}  // TEST_SUITE
