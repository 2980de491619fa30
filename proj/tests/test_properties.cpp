#include "doctest.h"

#include "properties.hpp"

namespace {

void report(const props::Tally& t) {
    INFO("first violation: " << t.first);
    CHECK(t.cases > 0);
    CHECK(t.violations == 0);
}

}  // namespace

TEST_SUITE("properties") {

TEST_CASE("field axioms") { report(props::field_axioms(11)); }

TEST_CASE("duality on generated codes") {
    const auto t = props::duality(12, 80);
    CHECK(t.cases >= 50);
    report(t);
}

TEST_CASE("distance cross-checks") { report(props::distance_crosscheck(13, 80)); }

TEST_CASE("chain complexes") { report(props::chain_checks(14, 60)); }

TEST_CASE("quantum Singleton and distance search") { report(props::quantum_checks(15, 60)); }

}  // TEST_SUITE
