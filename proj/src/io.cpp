#include "gqc/io.hpp"

#include "gqc/error.hpp"

namespace gqc {

using nlohmann::json;

namespace {

template <class F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const json::exception& e) {
        throw Error(ErrorKind::ParseError, std::string(what) + ": " + e.what());
    }
}

json optional_int(const std::optional<int>& v) { return v ? json(*v) : json(nullptr); }

std::optional<int> read_optional_int(const json& j, const char* key) {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return j.at(key).get<int>();
}

}  // namespace

Matrix matrix_from_json(const Field& field, const json& rows, std::size_t cols) {
    return guarded("matrix", [&] {
        if (!rows.is_array()) throw Error(ErrorKind::ParseError, "matrix must be an array of rows");
        std::vector<Vector> r;
        for (const auto& row : rows) r.push_back(row.get<Vector>());
        return Matrix::from_rows(field, r, cols);
    });
}

json point_to_json(const WPoint& p, const WeightSystem& ws, HeightConvention hc) {
    const Height h = weighted_height(p, ws, hc);
    return {{"rep", p.rep},
            {"support", p.support},
            {"kS", p.k_s},
            {"stab_arith", p.stab_arith},
            {"orbit", p.orbit},
            {"height", {{"lift", h.lift}, {"w", h.w}}}};
}

json points_to_json(const std::vector<WPoint>& pts, const WeightSystem& ws, const Field& field) {
    json arr = json::array();
    for (const auto& p : pts) arr.push_back(point_to_json(p, ws));
    return {{"field", field.spec_string()}, {"weights", ws.weights()}, {"count", pts.size()}, {"points", arr}};
}

PointSet points_from_json(const json& j) {
    return guarded("point set", [&] {
        PointSet s{Field::parse(j.at("field").get<std::string>()), WeightSystem(j.at("weights").get<std::vector<int>>()),
                   {}, {}};
        for (const auto& rec : j.at("points")) {
            const Tuple rep = rec.at("rep").get<Tuple>();
            if (rep.size() != s.ws.size()) throw Error(ErrorKind::ShapeMismatch, "point has wrong number of coordinates");
            for (auto x : rep)
                if (!s.field.contains(x)) throw Error(ErrorKind::InvalidArgument, "coordinate outside the field");
            WPoint p = canonical_rep(rep, s.ws, s.field);
            if (p.rep != rep) throw Error(ErrorKind::InvalidArgument, "point is not a canonical representative");
            Height h = weighted_height(p, s.ws);
            if (rec.contains("height")) h = {rec["height"].at("lift").get<std::uint64_t>(), rec["height"].at("w").get<int>()};
            s.points.push_back(std::move(p));
            s.heights.push_back(h);
        }
        return s;
    });
}

json census_to_json(const OrbifoldData& data) {
    json entries = json::array();
    for (const auto& e : data.entries) entries.push_back({{"rep", e.rep}, {"order", e.order}});
    return {{"convention", to_string(data.convention)}, {"source", data.source}, {"entries", entries}};
}

OrbifoldData census_from_json(const json& j) {
    return guarded("census", [&] {
        OrbifoldData d;
        if (j.contains("convention")) d.convention = parse_stabilizer_convention(j.at("convention").get<std::string>());
        if (j.contains("source")) d.source = j.at("source").get<std::string>();
        for (const auto& e : j.at("entries")) {
            OrbifoldEntry entry;
            if (e.contains("rep")) entry.rep = e.at("rep").get<Tuple>();
            entry.order = e.at("order").get<int>();
            d.entries.push_back(std::move(entry));
        }
        return d;
    });
}

json distance_to_json(const Distance& d) { return {{"value", optional_int(d.value)}, {"kind", to_string(d.kind)}}; }

Distance distance_from_json(const json& j) {
    return guarded("distance", [&] {
        return Distance{read_optional_int(j, "value"), parse_distance_kind(j.at("kind").get<std::string>())};
    });
}

json code_to_json(const LinearCode& c) {
    json j;
    j["field"] = c.field().spec_string();
    j["length"] = c.length();
    j["dimension"] = c.dimension();
    j["generator"] = c.generator().to_rows();
    j["provenance"] = c.provenance();
    json a = json::object();
    if (c.analysis().distance) a["distance"] = distance_to_json(*c.analysis().distance);
    if (c.analysis().weights) {
        json w = json::object();
        for (const auto& [weight, count] : *c.analysis().weights) w[std::to_string(weight)] = count;
        a["weights"] = w;
        a["weights_exact"] = c.analysis().weights_exact;
    }
    j["analysis"] = a;
    return j;
}

LinearCode code_from_json(const json& j) {
    return guarded("code", [&] {
        const Field field = Field::parse(j.at("field").get<std::string>());
        const std::size_t m = j.at("length").get<std::size_t>();
        LinearCode c(matrix_from_json(field, j.at("generator"), m), j.value("provenance", json::object()));
        if (c.length() != m) throw Error(ErrorKind::ShapeMismatch, "generator width differs from length");
        if (j.contains("analysis")) {
            const auto& a = j.at("analysis");
            if (a.contains("distance")) c.analysis().distance = distance_from_json(a.at("distance"));
            if (a.contains("weights")) {
                WeightDistribution w;
                for (const auto& [key, count] : a.at("weights").items()) w[std::stoi(key)] = count.get<std::uint64_t>();
                c.analysis().weights = w;
                c.analysis().weights_exact = a.value("weights_exact", false);
            }
        }
        return c;
    });
}

json css_to_json(const CssCode& q) {
    json j;
    j["field"] = q.field.spec_string();
    j["n"] = q.n;
    j["k"] = q.k;
    j["H_X"] = q.hx.to_rows();
    j["H_Z"] = q.hz.to_rows();
    json d = distance_to_json(q.distance);
    d["lower"] = optional_int(q.distance_lower);
    d["upper"] = optional_int(q.distance_upper);
    d["method"] = q.distance_method;
    j["distance"] = d;
    j["provenance"] = q.provenance;
    return j;
}

CssCode css_from_json(const json& j) {
    return guarded("css code", [&] {
        const Field field = Field::parse(j.at("field").get<std::string>());
        const std::size_t n = j.at("n").get<std::size_t>();
        CssCode q(field, matrix_from_json(field, j.at("H_X"), n), matrix_from_json(field, j.at("H_Z"), n),
                  j.value("provenance", json::object()));
        if (q.n != n) throw Error(ErrorKind::ShapeMismatch, "stabilizer width differs from n");
        if (j.contains("k") && j.at("k").get<std::size_t>() != q.k)
            throw Error(ErrorKind::InvariantViolation, "stored k disagrees with the stabilizer ranks");
        if (j.contains("distance")) {
            const auto& d = j.at("distance");
            q.distance = distance_from_json(d);
            q.distance_lower = read_optional_int(d, "lower");
            q.distance_upper = read_optional_int(d, "upper");
            q.distance_method = d.value("method", "");
        }
        return q;
    });
}

json homology_to_json(const HomologyReport& h) {
    json betti = json::object();
    json rank = json::object();
    for (const auto& [d, b] : h.betti) betti[std::to_string(d)] = b;
    for (const auto& [d, r] : h.rank) rank[std::to_string(d)] = r;
    return {{"betti", betti}, {"rank", rank}, {"euler_chain", h.euler_chain}, {"euler_homology", h.euler_homology}};
}

json filtration_to_json(const Filtration& f) {
    json levels = json::array();
    for (const auto& l : f.levels) {
        levels.push_back({{"threshold", l.threshold ? json(to_string(*l.threshold)) : json("inf")},
                          {"dimension", l.members.size()},
                          {"members", l.members}});
    }
    return {{"levels", levels}};
}

json bound_report_to_json(const BoundReport& r) {
    auto verdict = [](const std::optional<bool>& v) { return v ? json(*v) : json(nullptr); };
    json j;
    j["n"] = r.n;
    j["k"] = r.k;
    j["distance"] = distance_to_json(r.distance);
    j["plain"] = to_string(r.plain);
    j["epsilon"] = to_string(r.eps);
    j["refined"] = to_string(r.refined);
    j["convention"] = r.convention;
    j["epsilon_source"] = r.eps_source;
    j["satisfies_plain"] = verdict(r.satisfies_plain);
    j["satisfies_refined"] = verdict(r.satisfies_refined);
    j["chi_orb"] = r.chi_orb ? json(to_string(*r.chi_orb)) : json(nullptr);
    j["findings"] = r.findings;
    j["provenance"] = r.provenance;
    return j;
}

}  // namespace gqc
