#include "gqc/orbifold.hpp"

#include "gqc/error.hpp"

namespace gqc {

namespace {

Rational defect_sum(const OrbifoldData& data) {
    Rational s = 0;
    for (const auto& e : data.entries) {
        if (e.order < 2) throw Error(ErrorKind::InvalidStabilizer, "stabilizer order " + std::to_string(e.order));
        s += Rational(1) - Rational(1, e.order);
    }
    return s;
}

BoundReport base_report(const CssCode& q, const Rational& eps) {
    BoundReport r;
    r.n = q.n;
    r.k = q.k;
    r.distance = q.distance;
    r.eps = eps;
    const auto b = refined_bound(q.n, q.k, eps);
    r.plain = b.plain;
    r.refined = b.refined;
    if (q.distance.exact() && q.distance.value) {
        const Rational d = *q.distance.value;
        r.satisfies_plain = d <= r.plain;
        r.satisfies_refined = d <= r.refined;
        if (!*r.satisfies_plain) r.findings.push_back("observed distance exceeds the plain quantum Singleton bound");
        if (!*r.satisfies_refined) r.findings.push_back("observed distance exceeds the refined bound");
    }
    r.provenance["code"] = q.provenance;
    return r;
}

}  // namespace

Rational epsilon(const OrbifoldData& data) { return defect_sum(data) / 2; }

Rational chi_orb(long long chi, const OrbifoldData& data) { return Rational(chi) + defect_sum(data); }

SingletonBounds refined_bound(std::size_t n, std::size_t k, const Rational& eps) {
    if (k > n) throw Error(ErrorKind::InvalidArgument, "k exceeds n");
    if (eps < 0) throw Error(ErrorKind::InvalidArgument, "epsilon must be nonnegative");
    SingletonBounds b;
    b.plain = Rational(static_cast<long long>(n) - static_cast<long long>(k) + 2, 2);
    b.refined = b.plain - eps / 2;
    return b;
}

BoundReport bound_report(const CssCode& q, const OrbifoldData& data, std::optional<long long> chi) {
    BoundReport r = base_report(q, epsilon(data));
    r.convention = to_string(data.convention);
    r.eps_source = data.source;
    if (chi) r.chi_orb = chi_orb(*chi, data);
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& e : data.entries) entries.push_back({{"rep", e.rep}, {"order", e.order}});
    r.provenance["census"] = {{"convention", r.convention}, {"source", data.source}, {"entries", entries}};
    return r;
}

BoundReport bound_report(const CssCode& q, const Rational& eps) {
    BoundReport r = base_report(q, eps);
    r.convention = "none";
    r.eps_source = "manual";
    return r;
}

}  // namespace gqc
