#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "gqc/quantum.hpp"
#include "gqc/rational.hpp"
#include "gqc/wgeom.hpp"

namespace gqc {

/// 1/2 sum (1 - 1/|G_p|). Throws InvalidStabilizer for orders below 2.
Rational epsilon(const OrbifoldData& data);

/// chi + sum (1 - 1/|G_p|).
Rational chi_orb(long long chi, const OrbifoldData& data);

struct SingletonBounds {
    Rational plain;    // (n - k + 2) / 2
    Rational refined;  // plain - eps / 2
};

SingletonBounds refined_bound(std::size_t n, std::size_t k, const Rational& eps);

struct BoundReport {
    std::size_t n = 0;
    std::size_t k = 0;
    Distance distance;
    Rational plain;
    Rational eps;
    Rational refined;
    std::string convention;
    std::string eps_source;  // "census" or "manual"
    std::optional<bool> satisfies_plain;
    std::optional<bool> satisfies_refined;
    std::optional<Rational> chi_orb;
    nlohmann::json provenance = nlohmann::json::object();
    std::vector<std::string> findings;
};

/// Both bounds against the code's recorded distance. Verdicts stay empty
/// unless the distance is exact.
BoundReport bound_report(const CssCode& q, const OrbifoldData& data, std::optional<long long> chi = std::nullopt);

/// Same with a manually supplied epsilon.
BoundReport bound_report(const CssCode& q, const Rational& eps);

}  // namespace gqc
