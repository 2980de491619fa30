#include "gqc/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "gqc/chain.hpp"
#include "gqc/error.hpp"
#include "gqc/gpoly.hpp"
#include "gqc/io.hpp"
#include "gqc/lincode.hpp"
#include "gqc/orbifold.hpp"
#include "gqc/quantum.hpp"
#include "gqc/wgeom.hpp"

namespace gqc::cli {

using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep)) out.push_back(cur);
    return out;
}

long long parse_int(const std::string& s, const std::string& what) {
    try {
        std::size_t used = 0;
        const long long v = std::stoll(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw UsageError(what + ": '" + s + "' is not an integer");
    }
}

std::vector<int> parse_int_list(const std::string& s, const std::string& what) {
    std::vector<int> out;
    for (const auto& part : split(s, ',')) out.push_back(static_cast<int>(parse_int(part, what)));
    if (out.empty()) throw UsageError(what + " is empty");
    return out;
}

std::uint64_t budget_from_env(const char* name, std::uint64_t fallback) {
    const char* v = std::getenv(name);
    if (!v || !*v) return fallback;
    const long long b = parse_int(v, name);
    if (b <= 0) throw UsageError(std::string(name) + " must be positive");
    return static_cast<std::uint64_t>(b);
}

struct Budgets {
    std::uint64_t enumeration = kDefaultEnumerationBudget;
    std::uint64_t distance = kDefaultDistanceBudget;
};

std::string slurp(std::istream& is) {
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

json read_json(const std::string& path, std::istream& in) {
    std::string text;
    if (path.empty() || path == "-") {
        text = slurp(in);
    } else {
        std::ifstream f(path);
        if (!f) throw UsageError("cannot open '" + path + "'");
        text = slurp(f);
    }
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw Error(ErrorKind::ParseError, "invalid JSON in " + (path.empty() ? std::string("stdin") : path) + ": " +
                                               e.what());
    }
}

void emit(std::ostream& out, const json& j, const std::string& path = "") {
    if (path.empty()) {
        out << j.dump(2) << "\n";
        return;
    }
    std::ofstream f(path);
    if (!f) throw UsageError("cannot write '" + path + "'");
    f << j.dump(2) << "\n";
}

std::vector<Threshold> parse_thresholds(const std::string& s) {
    std::vector<Threshold> out;
    for (const auto& part : split(s, ',')) {
        if (part == "inf" || part == "oo") {
            out.emplace_back(std::nullopt);
        } else {
            out.emplace_back(parse_rational(part));
        }
    }
    if (out.empty()) throw UsageError("no thresholds");
    return out;
}

Matrix parse_generator(const Field& field, const std::string& s) {
    std::vector<Vector> rows;
    for (const auto& r : split(s, ';')) {
        Vector v;
        for (const auto& x : split(r, ',')) {
            const long long e = parse_int(x, "generator entry");
            if (e < 0 || e >= static_cast<long long>(field.q())) throw UsageError("generator entry outside the field");
            v.push_back(static_cast<Elem>(e));
        }
        rows.push_back(std::move(v));
    }
    return Matrix::from_rows(field, rows);
}

/// Runs one fixture file; returns the number of failures.
struct FixtureOutcome {
    bool failed = false;
    std::vector<std::string> lines;
};

bool subset_matches(const json& expected, const json& actual, const std::string& where, std::string& why) {
    if (expected.is_object()) {
        if (!actual.is_object()) {
            why = where + ": expected an object";
            return false;
        }
        for (const auto& [k, v] : expected.items()) {
            if (!actual.contains(k)) {
                why = where + "/" + k + ": missing";
                return false;
            }
            if (!subset_matches(v, actual.at(k), where + "/" + k, why)) return false;
        }
        return true;
    }
    if (expected != actual) {
        why = where + ": expected " + expected.dump() + ", got " + actual.dump();
        return false;
    }
    return true;
}

FixtureOutcome run_fixture(const json& fx, std::ostream& err) {
    FixtureOutcome res;
    const std::string name = fx.value("name", "?");
    const auto dir = std::filesystem::temp_directory_path() / ("gqc-fixture-" + name + "-" +
                                                              std::to_string(std::hash<std::string>{}(fx.dump())));
    std::filesystem::create_directories(dir);
    std::map<std::string, std::string> saved;
    const auto start = std::chrono::steady_clock::now();
    int index = 0;
    for (const auto& step : fx.at("steps")) {
        ++index;
        std::vector<std::string> args;
        for (const auto& a : step.at("args")) {
            std::string s = a.get<std::string>();
            if (!s.empty() && s[0] == '@') {
                const auto it = saved.find(s.substr(1));
                if (it == saved.end()) throw UsageError("fixture " + name + " refers to unknown output " + s);
                const auto p = dir / (s.substr(1) + ".json");
                std::ofstream(p) << it->second;
                s = p.string();
            }
            args.push_back(s);
        }
        std::istringstream in;
        if (step.contains("stdin")) {
            const std::string ref = step.at("stdin").get<std::string>();
            in.str(saved.at(ref.substr(1)));
        }
        std::ostringstream out;
        std::ostringstream step_err;
        const int code = run(args, out, step_err, in);
        const int want = step.value("exit", 0);
        const std::string label = name + " step " + std::to_string(index);
        if (code != want) {
            res.failed = true;
            res.lines.push_back("FAIL " + label + ": exit " + std::to_string(code) + ", expected " +
                                std::to_string(want) + " " + step_err.str());
            break;
        }
        if (step.contains("save")) saved[step.at("save").get<std::string>()] = out.str();
        json output;
        if (step.contains("expect") || step.contains("claims")) {
            try {
                output = json::parse(out.str());
            } catch (const json::exception&) {
                res.failed = true;
                res.lines.push_back("FAIL " + label + ": output is not JSON");
                break;
            }
        }
        if (step.contains("expect")) {
            std::string why;
            if (!subset_matches(step.at("expect"), output, "", why)) {
                res.failed = true;
                res.lines.push_back("FAIL " + label + ": " + why);
            }
        }
        if (step.contains("claims")) {
            for (const auto& claim : step.at("claims")) {
                const json::json_pointer ptr(claim.at("pointer").get<std::string>());
                const json got = output.contains(ptr) ? output.at(ptr) : json(nullptr);
                const json& claimed = claim.at("claimed");
                std::string text = claim.value("claim", "");
                if (got == claimed) {
                    res.lines.push_back("  claim holds " + claim.at("pointer").get<std::string>() + " = " +
                                        claimed.dump() + (text.empty() ? "" : " (" + text + ")"));
                } else {
                    res.lines.push_back("FINDING " + name + ": " + claim.at("pointer").get<std::string>() +
                                        " computed " + got.dump() + ", claimed " + claimed.dump() +
                                        (text.empty() ? "" : " (" + text + ")"));
                }
            }
        }
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (fx.contains("max_seconds") && secs > fx.at("max_seconds").get<double>()) {
        res.failed = true;
        std::ostringstream s;
        s << "FAIL " << name << ": took " << secs << " s, limit " << fx.at("max_seconds").get<double>() << " s";
        res.lines.push_back(s.str());
    }
    std::error_code ec;
    std::filesystem::remove_all(dir, ec);
    (void)err;
    return res;
}

int cmd_fixtures(const std::string& dir, const std::vector<std::string>& only, std::ostream& out, std::ostream& err) {
    namespace fs = std::filesystem;
    std::vector<fs::path> files;
    if (fs::is_directory(dir))
        for (const auto& e : fs::directory_iterator(dir))
            if (e.path().extension() == ".json") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    if (files.empty()) throw UsageError("no fixtures in '" + dir + "'");
    int passed = 0;
    int failed = 0;
    int findings = 0;
    int selected = 0;
    for (const auto& path : files) {
        std::ifstream f(path);
        json fx;
        try {
            fx = json::parse(f);
        } catch (const json::exception& e) {
            throw Error(ErrorKind::ParseError, path.string() + ": " + e.what());
        }
        const std::string name = fx.value("name", path.stem().string());
        if (!only.empty() && std::find(only.begin(), only.end(), name) == only.end()) continue;
        ++selected;
        FixtureOutcome r;
        try {
            r = run_fixture(fx, err);
        } catch (const json::exception& e) {
            throw Error(ErrorKind::ParseError, "fixture " + name + ": " + e.what());
        }
        for (const auto& l : r.lines)
            if (l.rfind("FINDING", 0) == 0) ++findings;
        out << (r.failed ? "FAIL " : "PASS ") << name << "\n";
        for (const auto& l : r.lines) out << "  " << l << "\n";
        (r.failed ? failed : passed)++;
    }
    if (selected == 0) throw UsageError("no fixture matches the selection");
    out << "fixtures: " << passed << " passed, " << failed << " failed, " << findings << " findings\n";
    return failed == 0 ? 0 : 1;
}

/// Placeholder code carrying only declared parameters: n columns, n - k
/// independent Z checks and no X checks.
CssCode declared_code(std::size_t n, std::size_t k, int d) {
    const Field f2 = Field::of_order(2);
    Matrix hz(f2, n - k, n);
    for (std::size_t i = 0; i < n - k; ++i) hz.at(i, i) = 1;
    CssCode q(f2, Matrix(f2, 0, n), hz, {{"source", "declared"}});
    q.distance = {d, DistanceKind::Exact};
    q.distance_method = "declared";
    return q;
}

json surface_summary(const Hypersurface& h) {
    return {{"polynomial", h.polynomial().to_string()},
            {"homogeneous", h.homogeneous()},
            {"degrees", h.degrees()},
            {"point_model", h.point_model()}};
}

void warn_inhomogeneous(const Hypersurface& h, std::ostream& err) {
    if (h.homogeneous()) return;
    std::string list;
    for (int d : h.degrees()) list += (list.empty() ? "" : ",") + std::to_string(d);
    err << "warning: polynomial is not weighted homogeneous (degrees " << list
        << "); counting orbits that contain a zero\n";
}

std::vector<WPoint> surface_or_space_points(const WeightSystem& ws, const Field& field, const std::string& poly,
                                            const Budgets& b, json* prov) {
    if (poly.empty()) return enumerate_wp_points(ws, field, b.enumeration);
    Hypersurface h(ws, Polynomial::parse(poly, field, ws.size()), false);
    if (prov) (*prov)["surface"] = surface_summary(h);
    return hypersurface_points(h, b.enumeration);
}

}  // namespace

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err, std::istream& in) {
    CLI::App app{"Weighted projective codes: point counts, evaluation codes, CSS lifts and bounds", "gqc"};
    app.require_subcommand(1);

    std::string weights_s;
    std::string field_s;
    std::string poly;
    bool as_json = false;
    std::uint64_t budget = 0;
    std::uint64_t dist_budget = 0;

    // count
    auto* count = app.add_subcommand("count", "number of rational points of WP(w) over GF(q)");
    count->add_option("--weights", weights_s, "comma-separated weights")->required();
    count->add_option("--field", field_s, "q=<int> or p=..,e=..,mod=..")->required();
    count->add_flag("--json", as_json);
    bool count_enumerate = false;
    count->add_flag("--enumerate", count_enumerate, "also enumerate orbits and compare");

    // points
    auto* points = app.add_subcommand("points", "canonical representatives of WP(w)(GF(q))");
    points->add_option("--weights", weights_s)->required();
    points->add_option("--field", field_s)->required();
    points->add_flag("--json", as_json);
    bool census = false;
    std::string convention_s = "geometric";
    std::string height_s = "index-lift";
    points->add_flag("--census", census, "print the singular census instead");
    points->add_option("--convention", convention_s, "geometric|arithmetic");
    points->add_option("--height", height_s, "index-lift|trivial");
    points->add_option("--budget", budget);

    // surface
    auto* surface = app.add_subcommand("surface", "points of a weighted hypersurface or affine variety");
    surface->add_option("--weights", weights_s);
    surface->add_option("--field", field_s)->required();
    surface->add_option("--poly", poly)->required();
    bool s_count = false;
    bool s_points = false;
    bool s_affine = false;
    int s_nvars = 0;
    std::optional<int> s_chart;
    std::string s_orbits;
    surface->add_flag("--count", s_count);
    surface->add_flag("--points", s_points);
    surface->add_flag("--affine", s_affine, "affine zeros instead of projective points");
    surface->add_option("--nvars", s_nvars, "number of affine variables");
    surface->add_option("--chart", s_chart, "fix coordinate i to 1 (affine mode)");
    surface->add_option("--orbits", s_orbits, "coord,r: orbits of x_coord -> zeta_r x_coord (affine mode)");
    surface->add_flag("--json", as_json);
    surface->add_option("--budget", budget);

    // zeta
    auto* zeta = app.add_subcommand("zeta", "point counts over extensions and the zeta series");
    zeta->add_option("--weights", weights_s)->required();
    zeta->add_option("--field", field_s)->required();
    bool z_space = false;
    int depth = 3;
    auto* z_space_opt = zeta->add_flag("--space", z_space, "the whole weighted projective space");
    zeta->add_option("--poly", poly)->excludes(z_space_opt);
    zeta->add_option("--depth", depth)->check(CLI::Range(1, 12));
    zeta->add_flag("--json", as_json);
    zeta->add_option("--budget", budget);

    // code
    auto* code = app.add_subcommand("code", "classical evaluation codes");
    code->require_subcommand(1);
    auto* code_build = code->add_subcommand("build", "evaluation code or literal generator");
    int degree = 0;
    std::string out_path;
    std::string generator_s;
    code_build->add_option("--weights", weights_s);
    code_build->add_option("--field", field_s)->required();
    code_build->add_option("--degree", degree);
    code_build->add_option("--surface", poly, "restrict to the hypersurface poly = 0");
    code_build->add_option("--generator", generator_s, "literal rows 'a,b,c;d,e,f'");
    std::string functions_s;
    code_build->add_option("--functions", functions_s,
                           "affine mode: 'f1;f2;...' evaluated at the affine zeros of --surface");
    code_build->add_option("--nvars", s_nvars, "number of affine variables");
    code_build->add_option("--out", out_path);
    code_build->add_option("--budget", budget);
    code_build->add_flag("--json", as_json);

    auto* code_analyze = code->add_subcommand("analyze", "distance, weights, orthogonality");
    std::string file1;
    std::string file2;
    std::string ip_s = "euclidean";
    code_analyze->add_option("file", file1, "code JSON (default stdin)");
    code_analyze->add_option("--distance-budget", dist_budget);
    code_analyze->add_option("--ip", ip_s, "euclidean|hermitian");
    code_analyze->add_option("--out", out_path, "write the code with cached analyses");
    code_analyze->add_flag("--json", as_json);

    auto* code_dual = code->add_subcommand("dual", "orthogonal complement");
    code_dual->add_option("file", file1);
    code_dual->add_option("--ip", ip_s);
    code_dual->add_option("--out", out_path);
    code_dual->add_flag("--json", as_json);

    auto* code_iso = code->add_subcommand("isotropic", "greedy self-orthogonal subcode of an evaluation code");
    std::size_t target = 10;
    code_iso->add_option("--weights", weights_s)->required();
    code_iso->add_option("--field", field_s)->required();
    code_iso->add_option("--degree", degree)->required();
    code_iso->add_option("--surface", poly);
    code_iso->add_option("--target", target);
    code_iso->add_option("--ip", ip_s);
    code_iso->add_option("--out", out_path);
    code_iso->add_option("--budget", budget);
    code_iso->add_flag("--json", as_json);

    auto* code_plane = code->add_subcommand("plane", "closed-form WPRM dimension on WP(1,w1,w2) beside the rank");
    int w1 = 1;
    int w2 = 1;
    code_plane->add_option("--w1", w1)->required()->check(CLI::PositiveNumber);
    code_plane->add_option("--w2", w2)->required()->check(CLI::PositiveNumber);
    code_plane->add_option("--degree", degree)->required()->check(CLI::NonNegativeNumber);
    code_plane->add_option("--field", field_s)->required();
    code_plane->add_flag("--json", as_json);

    // css
    auto* css = app.add_subcommand("css", "CSS quantum codes");
    css->require_subcommand(1);
    auto* css_lift = css->add_subcommand("lift", "CSS code of a self-orthogonal code");
    css_lift->add_option("file", file1);
    css_lift->add_option("--ip", ip_s);
    css_lift->add_option("--budget", dist_budget);
    css_lift->add_option("--out", out_path);
    css_lift->add_flag("--json", as_json);
    auto* css_pair = css->add_subcommand("pair", "CSS code of C1, C2 with dual(C2) inside C1");
    css_pair->add_option("c1", file1)->required();
    css_pair->add_option("c2", file2)->required();
    css_pair->add_option("--budget", dist_budget);
    css_pair->add_option("--out", out_path);
    css_pair->add_flag("--json", as_json);
    auto* css_dist = css->add_subcommand("distance", "recompute the quantum distance");
    css_dist->add_option("file", file1);
    css_dist->add_option("--budget", dist_budget);
    css_dist->add_option("--out", out_path);
    css_dist->add_flag("--json", as_json);

    // chain
    auto* chain = app.add_subcommand("chain", "chain complexes and homological codes");
    chain->require_subcommand(1);
    auto* ch_validate = chain->add_subcommand("validate", "check shapes and d^2 = 0");
    ch_validate->add_option("file", file1);
    ch_validate->add_flag("--json", as_json);
    auto* ch_hom = chain->add_subcommand("homology", "betti numbers");
    ch_hom->add_option("file", file1);
    ch_hom->add_flag("--json", as_json);
    auto* ch_code = chain->add_subcommand("code", "homological CSS code in one degree");
    ch_code->add_option("file", file1);
    ch_code->add_option("--degree", degree)->required();
    ch_code->add_option("--budget", dist_budget);
    ch_code->add_option("--out", out_path);
    ch_code->add_flag("--json", as_json);
    auto* ch_toric = chain->add_subcommand("toric", "square torus complex over GF(2)");
    int L = 2;
    ch_toric->add_option("--L", L)->required()->check(CLI::Range(2, 64));
    ch_toric->add_option("--out", out_path);
    ch_toric->add_flag("--json", as_json);
    auto* ch_filter = chain->add_subcommand("filter", "height filtration of a point set");
    std::string thresholds_s;
    std::optional<int> filter_degree;
    ch_filter->add_option("file", file1, "points JSON from `points --json`");
    ch_filter->add_option("--thresholds", thresholds_s)->required();
    ch_filter->add_option("--degree", filter_degree, "also build the nested evaluation codes");
    ch_filter->add_flag("--json", as_json);
    auto* ch_trunc = chain->add_subcommand("truncate", "keep basis vectors of grade j <= k");
    int grade = 0;
    ch_trunc->add_option("file", file1);
    ch_trunc->add_option("--grade", grade)->required();
    ch_trunc->add_option("--out", out_path);
    ch_trunc->add_flag("--json", as_json);

    // bound
    auto* bound = app.add_subcommand("bound", "plain and refined Singleton bounds for a CSS code");
    std::string census_path;
    std::string eps_s;
    std::optional<long long> chi;
    std::string params_s;
    auto* css_opt = bound->add_option("--css", file1);
    bound->add_option("--params", params_s, "declared n,k,d instead of a CSS file")->excludes(css_opt);
    auto* census_opt = bound->add_option("--census", census_path);
    bound->add_option("--epsilon", eps_s)->excludes(census_opt);
    bound->add_option("--chi", chi);
    bound->add_flag("--json", as_json);

    // fixtures
    auto* fixtures = app.add_subcommand("fixtures", "replay the regression fixtures");
    std::string fixture_dir = GQC_FIXTURE_DIR;
    std::vector<std::string> only;
    fixtures->add_option("--dir", fixture_dir);
    fixtures->add_option("--only", only)->delimiter(',');

    std::vector<std::string> args(raw_args.rbegin(), raw_args.rend());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        Budgets b;
        b.enumeration = budget_from_env("GQC_ENUM_BUDGET", b.enumeration);
        b.distance = budget_from_env("GQC_DISTANCE_BUDGET", b.distance);
        if (budget) b.enumeration = budget;
        if (dist_budget) b.distance = dist_budget;

        auto need_weights = [&] {
            if (weights_s.empty()) throw UsageError("--weights is required");
            return WeightSystem(parse_int_list(weights_s, "--weights"));
        };
        auto field = [&] { return Field::parse(field_s); };

        if (count->parsed()) {
            const WeightSystem ws = need_weights();
            const Field f = field();
            const std::uint64_t n = count_wp_points_formula(ws, f.q());
            std::optional<std::size_t> enumerated;
            if (count_enumerate) {
                enumerated = enumerate_wp_points(ws, f, b.enumeration).size();
                if (*enumerated != n) throw Error(ErrorKind::InvariantViolation, "formula and enumeration disagree");
            }
            if (as_json) {
                json j{{"weights", ws.weights()}, {"field", f.spec_string()}, {"count", n},
                       {"well_formed", ws.well_formed()}};
                if (enumerated) j["enumerated"] = *enumerated;
                emit(out, j);
            } else {
                out << n << "\n";
            }
            return 0;
        }

        if (points->parsed()) {
            const WeightSystem ws = need_weights();
            const Field f = field();
            const auto pts = enumerate_wp_points(ws, f, b.enumeration);
            if (census) {
                emit(out, census_to_json(singular_census(pts, ws, f, parse_stabilizer_convention(convention_s))));
                return 0;
            }
            const HeightConvention hc = parse_height_convention(height_s);
            if (as_json) {
                json j = points_to_json(pts, ws, f);
                if (hc != HeightConvention::IndexLift) {
                    for (std::size_t i = 0; i < pts.size(); ++i) {
                        const Height h = weighted_height(pts[i], ws, hc);
                        j["points"][i]["height"] = {{"lift", h.lift}, {"w", h.w}};
                    }
                }
                j["height_convention"] = to_string(hc);
                emit(out, j);
            } else {
                for (const auto& p : pts) {
                    out << "(";
                    for (std::size_t i = 0; i < p.rep.size(); ++i) out << (i ? "," : "") << p.rep[i];
                    const Height h = weighted_height(p, ws, hc);
                    out << ") kS=" << p.k_s << " stab=" << p.stab_arith << " orbit=" << p.orbit
                        << " height=" << h.lift << "^(1/" << h.w << ")\n";
                }
            }
            return 0;
        }

        if (surface->parsed()) {
            const Field f = field();
            json j;
            j["field"] = f.spec_string();
            j["budget"] = b.enumeration;
            if (s_affine) {
                const Polynomial p = Polynomial::parse(poly, f, static_cast<std::size_t>(std::max(0, s_nvars)));
                std::optional<std::size_t> chart;
                if (s_chart) chart = static_cast<std::size_t>(*s_chart);
                const auto pts = affine_points(p, chart, b.enumeration);
                j["mode"] = "affine";
                j["polynomial"] = p.to_string();
                j["nvars"] = p.nvars();
                j["count"] = pts.size();
                if (chart) j["chart"] = *chart;
                if (s_points || as_json) j["points"] = pts;
                if (!s_orbits.empty()) {
                    const auto spec = parse_int_list(s_orbits, "--orbits");
                    if (spec.size() != 2 || spec[0] < 0 || spec[1] < 1) throw UsageError("--orbits expects coord,r");
                    const auto orbits = scaling_orbits(pts, f, static_cast<std::size_t>(spec[0]),
                                                       static_cast<unsigned>(spec[1]));
                    json sizes = json::array();
                    for (const auto& o : orbits) sizes.push_back(o.size());
                    j["orbits"] = {{"count", orbits.size()}, {"sizes", sizes}, {"members", orbits}};
                }
                if (as_json) {
                    emit(out, j);
                } else if (s_points) {
                    for (const auto& t : pts) {
                        for (std::size_t i = 0; i < t.size(); ++i) out << (i ? " " : "") << t[i];
                        out << "\n";
                    }
                } else {
                    out << pts.size() << "\n";
                }
                return 0;
            }
            const WeightSystem ws = need_weights();
            Hypersurface h(ws, Polynomial::parse(poly, f, ws.size()), false);
            warn_inhomogeneous(h, err);
            const auto pts = hypersurface_points(h, b.enumeration);
            j["mode"] = "projective";
            j["weights"] = ws.weights();
            j["well_formed"] = ws.well_formed();
            j.update(surface_summary(h));
            j["count"] = pts.size();
            j["residues"] = {{"mod_p", pts.size() % f.p()}, {"mod_q", pts.size() % f.q()}};
            const SerreBound sb = serre_bound(ws, h.degree(), f.q());
            j["serre"] = (sb.applicable && h.homogeneous()) ? json{{"value", sb.value},
                                              {"projective_term", sb.projective_term},
                                              {"degree_term", sb.degree_term},
                                              {"satisfied", pts.size() <= sb.value}}
                                       : json(nullptr);
            if (s_points || as_json) {
                json arr = json::array();
                for (const auto& p : pts) arr.push_back(point_to_json(p, ws));
                j["points"] = arr;
            }
            if (as_json) {
                emit(out, j);
            } else if (s_points) {
                for (const auto& p : pts) {
                    for (std::size_t i = 0; i < p.rep.size(); ++i) out << (i ? " " : "") << p.rep[i];
                    out << "\n";
                }
            } else {
                out << pts.size() << "\n";
            }
            return 0;
        }

        if (zeta->parsed()) {
            const WeightSystem ws = need_weights();
            const Field f = field();
            if (!z_space && poly.empty()) throw UsageError("zeta needs --space or --poly");
            std::vector<std::uint64_t> counts;
            json j;
            if (z_space) {
                counts = zeta_counts_space(ws, f, depth);
                j["mode"] = "space";
            } else {
                Hypersurface h(ws, Polynomial::parse(poly, f, ws.size()), false);
                warn_inhomogeneous(h, err);
                counts = zeta_counts(h, depth, b.enumeration);
                j["mode"] = "hypersurface";
                j.update(surface_summary(h));
            }
            const auto series = zeta_series(counts);
            json ser = json::array();
            for (const auto& r : series) ser.push_back(to_string(r));
            j["field"] = f.spec_string();
            j["weights"] = ws.weights();
            j["well_formed"] = ws.well_formed();
            j["counts"] = counts;
            j["series"] = ser;
            j["budget"] = b.enumeration;
            if (as_json) {
                emit(out, j);
            } else {
                for (std::size_t r = 0; r < counts.size(); ++r) out << "N_" << r + 1 << " = " << counts[r] << "\n";
                out << "Z(T) = ";
                for (std::size_t r = 0; r < series.size(); ++r)
                    out << (r ? " + " : "") << to_string(series[r]) << (r ? " T^" + std::to_string(r) : "");
                out << " + ...\n";
            }
            return 0;
        }

        if (code_build->parsed()) {
            const Field f = field();
            if (!generator_s.empty()) {
                json prov{{"source", "literal"}};
                emit(out, code_to_json(LinearCode(parse_generator(f, generator_s), prov)), out_path);
                return 0;
            }
            if (!functions_s.empty()) {
                if (poly.empty()) throw UsageError("--functions needs --surface");
                const std::size_t nv = static_cast<std::size_t>(std::max(0, s_nvars));
                const Polynomial curve = Polynomial::parse(poly, f, nv);
                std::vector<Polynomial> fs;
                for (const auto& text : split(functions_s, ';'))
                    fs.push_back(Polynomial::parse(text, f, curve.nvars()).with_nvars(curve.nvars()));
                std::size_t width = curve.nvars();
                for (const auto& g : fs) width = std::max(width, g.nvars());
                for (auto& g : fs) g = g.with_nvars(width);
                const auto pts = affine_points(curve.with_nvars(width), std::nullopt, b.enumeration);
                LinearCode c = affine_evaluation_code(fs, pts);
                c.provenance()["curve"] = curve.to_string();
                emit(out, code_to_json(c), out_path);
                return 0;
            }
            const WeightSystem ws = need_weights();
            json prov;
            const auto pts = surface_or_space_points(ws, f, poly, b, &prov);
            LinearCode c = evaluation_code(ws, degree, pts, f);
            for (const auto& [k, v] : prov.items()) c.provenance()[k] = v;
            emit(out, code_to_json(c), out_path);
            return 0;
        }

        if (code_analyze->parsed()) {
            LinearCode c = code_from_json(read_json(file1, in));
            const InnerProduct ip = parse_inner_product(ip_s);
            const Distance d = min_distance(c, b.distance);
            c.analysis().distance = d;
            json j;
            j["field"] = c.field().spec_string();
            j["length"] = c.length();
            j["dimension"] = c.dimension();
            j["distance"] = distance_to_json(d);
            try {
                const auto w = weight_distribution(c, b.distance);
                json wj = json::object();
                for (const auto& [weight, n] : w) wj[std::to_string(weight)] = n;
                j["weights"] = wj;
                c.analysis().weights = w;
                c.analysis().weights_exact = true;
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::BudgetExceeded) throw;
                j["weights"] = nullptr;
            }
            const LinearCode dual = dual_code(c, ip);
            j["inner_product"] = to_string(ip);
            j["dual_dimension"] = dual.dimension();
            const auto so = is_self_orthogonal(c, ip);
            j["self_orthogonal"] = so.holds;
            if (so.witness) j["self_orthogonal_witness"] = {so.witness->first, so.witness->second};
            j["dual_containing"] = contains(c, dual).holds;
            if (d.exact() && d.value)
                j["singleton_ok"] = c.dimension() + static_cast<std::size_t>(*d.value) <= c.length() + 1;
            if (!out_path.empty()) emit(out, code_to_json(c), out_path);
            emit(out, j);
            return 0;
        }

        if (code_dual->parsed()) {
            const LinearCode c = code_from_json(read_json(file1, in));
            emit(out, code_to_json(dual_code(c, parse_inner_product(ip_s))), out_path);
            return 0;
        }

        if (code_iso->parsed()) {
            const WeightSystem ws = need_weights();
            const Field f = field();
            json prov;
            const auto pts = surface_or_space_points(ws, f, poly, b, &prov);
            const Matrix ev = evaluation_matrix(ws, degree, pts, f);
            LinearCode sub = isotropic_subcode(ev, parse_inner_product(ip_s), target);
            sub.provenance()["weights"] = ws.weights();
            sub.provenance()["degree"] = degree;
            sub.provenance()["ambient_rank"] = ev.rank();
            for (const auto& [k, v] : prov.items()) sub.provenance()[k] = v;
            emit(out, code_to_json(sub), out_path);
            return 0;
        }

        if (code_plane->parsed()) {
            const Field f = field();
            const PlaneDimension pd = wprm_plane_dimension(w1, w2, degree, f.q());
            emit(out, {{"weights", {1, w1, w2}},
                       {"degree", degree},
                       {"field", f.spec_string()},
                       {"closed_form", pd.closed_form},
                       {"rank", pd.rank},
                       {"agrees", pd.agrees},
                       {"experimental", true}});
            return 0;
        }

        auto finish_css = [&](CssCode q) {
            apply_distance(q, quantum_distance(q, b.distance));
            json j = css_to_json(q);
            j["commutes"] = commutation_check(q).holds;
            emit(out, j, out_path);
            return 0;
        };

        if (css_lift->parsed()) {
            return finish_css(css_from_self_orthogonal(code_from_json(read_json(file1, in)), parse_inner_product(ip_s)));
        }
        if (css_pair->parsed()) {
            return finish_css(css_from_pair(code_from_json(read_json(file1, in)), code_from_json(read_json(file2, in))));
        }
        if (css_dist->parsed()) return finish_css(css_from_json(read_json(file1, in)));

        if (ch_validate->parsed()) {
            const ChainComplex x = ChainComplex::from_json(read_json(file1, in));
            json dims = json::object();
            for (int d = x.lo(); d <= x.hi(); ++d) dims[std::to_string(d)] = x.dim(d);
            emit(out, {{"valid", true}, {"field", x.field().spec_string()}, {"dims", dims}});
            return 0;
        }
        if (ch_hom->parsed()) {
            emit(out, homology_to_json(homology(ChainComplex::from_json(read_json(file1, in)))));
            return 0;
        }
        if (ch_code->parsed()) return finish_css(homological_code(ChainComplex::from_json(read_json(file1, in)), degree));
        if (ch_toric->parsed()) {
            emit(out, toric_complex(L).to_json(), out_path);
            return 0;
        }
        if (ch_filter->parsed()) {
            const PointSet ps = points_from_json(read_json(file1, in));
            const Filtration filt = height_filtration(ps.heights, parse_thresholds(thresholds_s));
            json j = filtration_to_json(filt);
            j["field"] = ps.field.spec_string();
            j["weights"] = ps.ws.weights();
            for (auto& level : j["levels"]) {
                json labels = json::array();
                for (auto i : level["members"]) labels.push_back(ps.points[i.get<std::size_t>()].rep);
                level["labels"] = labels;
            }
            if (filter_degree) {
                const auto codes = filtration_codes(filt, ps.ws, *filter_degree, ps.points, ps.field);
                for (std::size_t i = 0; i < codes.size(); ++i) {
                    j["levels"][i]["code"] =
                        codes[i] ? json{{"length", codes[i]->length()}, {"dimension", codes[i]->dimension()}}
                                 : json(nullptr);
                }
                j["degree"] = *filter_degree;
            }
            emit(out, j);
            return 0;
        }
        if (ch_trunc->parsed()) {
            emit(out, filter_by_grade(ChainComplex::from_json(read_json(file1, in)), grade).to_json(), out_path);
            return 0;
        }

        if (bound->parsed()) {
            std::optional<CssCode> declared;
            if (!params_s.empty()) {
                const auto v = parse_int_list(params_s, "--params");
                if (v.size() != 3 || v[0] < 0 || v[1] < 0 || v[1] > v[0] || v[2] < 1)
                    throw UsageError("--params expects n,k,d with 0 <= k <= n and d >= 1");
                declared = declared_code(static_cast<std::size_t>(v[0]), static_cast<std::size_t>(v[1]), v[2]);
            } else if (file1.empty()) {
                throw UsageError("bound needs --css or --params");
            }
            const CssCode q = declared ? *declared : css_from_json(read_json(file1, in));
            BoundReport r;
            if (!eps_s.empty()) {
                r = bound_report(q, parse_rational(eps_s));
            } else if (!census_path.empty()) {
                r = bound_report(q, census_from_json(read_json(census_path, in)), chi);
            } else {
                OrbifoldData empty;
                empty.source = "none";
                r = bound_report(q, empty, chi);
            }
            emit(out, bound_report_to_json(r));
            return 0;
        }

        if (fixtures->parsed()) return cmd_fixtures(fixture_dir, only, out, err);

        throw UsageError("no subcommand");
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        switch (e.kind()) {
            case ErrorKind::ParseError: return 2;
            case ErrorKind::BudgetExceeded: return 3;
            case ErrorKind::InvariantViolation: return 4;
            default: return 1;
        }
    }
}

}  // namespace gqc::cli
