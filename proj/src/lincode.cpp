#include "gqc/lincode.hpp"

#include <algorithm>
#include <climits>
#include <cmath>

#include "enumerate.hpp"
#include "gqc/error.hpp"

namespace gqc {

std::string to_string(InnerProduct ip) { return ip == InnerProduct::Euclidean ? "euclidean" : "hermitian"; }

InnerProduct parse_inner_product(const std::string& s) {
    if (s == "euclidean") return InnerProduct::Euclidean;
    if (s == "hermitian") return InnerProduct::Hermitian;
    throw Error(ErrorKind::ParseError, "unknown inner product '" + s + "'");
}

std::string to_string(DistanceKind k) {
    switch (k) {
        case DistanceKind::Exact: return "exact";
        case DistanceKind::LowerBound: return "lower-bound";
        case DistanceKind::UpperBound: return "upper-bound";
        case DistanceKind::Undefined: return "undefined";
    }
    return "undefined";
}

DistanceKind parse_distance_kind(const std::string& s) {
    if (s == "exact") return DistanceKind::Exact;
    if (s == "lower-bound") return DistanceKind::LowerBound;
    if (s == "upper-bound") return DistanceKind::UpperBound;
    if (s == "undefined") return DistanceKind::Undefined;
    throw Error(ErrorKind::ParseError, "unknown distance kind '" + s + "'");
}

LinearCode::LinearCode(const Matrix& generator, nlohmann::json provenance)
    : generator_(generator.rref()), provenance_(std::move(provenance)) {}

namespace {

bool fits_budget(unsigned q, std::size_t k, std::uint64_t budget) {
    long double total = std::pow(static_cast<long double>(q), static_cast<long double>(k));
    return total <= static_cast<long double>(budget);
}

}  // namespace

Matrix evaluation_matrix(const WeightSystem& ws, int d, const std::vector<WPoint>& points, const Field& field) {
    const auto monomials = enumerate_monomials(ws, d);
    Matrix m(field, monomials.size(), points.size());
    for (std::size_t r = 0; r < monomials.size(); ++r) {
        for (std::size_t c = 0; c < points.size(); ++c) {
            Elem v = 1;
            for (std::size_t i = 0; i < ws.size() && v != 0; ++i)
                if (monomials[r].exps[i] != 0) v = field.mul(v, field.pow(points[c].rep[i], monomials[r].exps[i]));
            m.at(r, c) = v;
        }
    }
    return m;
}

LinearCode evaluation_code(const WeightSystem& ws, int d, const std::vector<WPoint>& points, const Field& field) {
    if (points.empty()) throw Error(ErrorKind::EmptyPointSet, "evaluation code needs at least one point");
    nlohmann::json prov;
    prov["source"] = "evaluation";
    prov["weights"] = ws.weights();
    prov["well_formed"] = ws.well_formed();
    prov["degree"] = d;
    prov["den"] = den(ws, d);
    prov["representatives"] = "lexicographic orbit minimum";
    nlohmann::json reps = nlohmann::json::array();
    nlohmann::json caveat = nlohmann::json::array();
    for (std::size_t i = 0; i < points.size(); ++i) {
        reps.push_back(points[i].rep);
        if (d % points[i].k_s != 0) caveat.push_back(i);
    }
    prov["points"] = std::move(reps);
    // Columns at these points depend on the representative chosen for the orbit.
    prov["stabilizer_caveat"] = std::move(caveat);
    return LinearCode(evaluation_matrix(ws, d, points, field), std::move(prov));
}

LinearCode affine_evaluation_code(const std::vector<Polynomial>& polys, const std::vector<Tuple>& points) {
    if (points.empty()) throw Error(ErrorKind::EmptyPointSet, "evaluation code needs at least one point");
    if (polys.empty()) throw Error(ErrorKind::InvalidArgument, "no functions to evaluate");
    const Field& field = polys.front().field();
    Matrix m(field, polys.size(), points.size());
    nlohmann::json prov;
    prov["source"] = "affine-evaluation";
    nlohmann::json fs = nlohmann::json::array();
    for (std::size_t r = 0; r < polys.size(); ++r) {
        fs.push_back(polys[r].to_string());
        for (std::size_t c = 0; c < points.size(); ++c) m.at(r, c) = polys[r].evaluate(points[c]);
    }
    prov["functions"] = std::move(fs);
    prov["points"] = points;
    return LinearCode(m, std::move(prov));
}

LinearCode dual_code(const LinearCode& c, InnerProduct ip) {
    const Matrix& g = c.generator();
    Matrix basis = (ip == InnerProduct::Hermitian) ? g.conjugate().nullspace() : g.nullspace();
    if (g.rows() == 0) basis = Matrix::identity(c.field(), c.length());
    nlohmann::json prov;
    prov["source"] = "dual";
    prov["inner_product"] = to_string(ip);
    return LinearCode(basis, std::move(prov));
}

std::optional<int> min_weight_outside(const Field& field, const std::vector<Vector>& extra,
                                      const std::vector<Vector>& inside, std::uint64_t budget) {
    if (extra.empty()) return std::nullopt;
    if (!fits_budget(field.q(), extra.size() + inside.size(), budget))
        throw Error(ErrorKind::BudgetExceeded, "span enumeration exceeds budget");
    const auto units = detail::normalized_units(field, extra.size(), inside.size());
    std::vector<int> best(units.size(), INT_MAX);
    detail::parallel_for(units.size(), [&](std::size_t u) {
        int local = INT_MAX;
        detail::run_unit(field, extra, inside, units[u], [&](const Vector&, int w) {
            if (w < local) local = w;
        });
        best[u] = local;
    });
    return *std::min_element(best.begin(), best.end());
}

Distance min_distance(const LinearCode& c, std::uint64_t budget) {
    const std::size_t k = c.dimension();
    if (k == 0) return {std::nullopt, DistanceKind::Undefined};
    if (fits_budget(c.field().q(), k, budget)) {
        auto w = min_weight_outside(c.field(), c.generator().to_rows(), {}, budget);
        return {w, DistanceKind::Exact};
    }
    int best = static_cast<int>(c.length() - k + 1);
    for (std::size_t i = 0; i < k; ++i) best = std::min(best, hamming_weight(c.generator().row(i)));
    return {best, DistanceKind::UpperBound};
}

WeightDistribution weight_distribution(const LinearCode& c, std::uint64_t budget) {
    const Field& field = c.field();
    const std::size_t k = c.dimension();
    if (!fits_budget(field.q(), k, budget))
        throw Error(ErrorKind::BudgetExceeded, "q^k codewords exceed budget " + std::to_string(budget));
    WeightDistribution dist;
    dist[0] = 1;
    if (k == 0) return dist;
    const auto rows = c.generator().to_rows();
    const auto units = detail::normalized_units(field, k, 0);
    std::vector<std::vector<std::uint64_t>> hist(units.size(), std::vector<std::uint64_t>(c.length() + 1, 0));
    detail::parallel_for(units.size(), [&](std::size_t u) {
        auto& h = hist[u];
        detail::run_unit(field, rows, {}, units[u], [&](const Vector&, int w) { ++h[static_cast<std::size_t>(w)]; });
    });
    // Each normalized codeword stands for its q - 1 nonzero multiples.
    for (const auto& h : hist)
        for (std::size_t w = 1; w < h.size(); ++w)
            if (h[w]) dist[static_cast<int>(w)] += h[w] * (field.q() - 1);
    return dist;
}

Distance footprint_distance(const WeightSystem& ws, int d, const std::vector<WPoint>& points, const Field& field,
                            std::uint64_t budget) {
    const Matrix ev = evaluation_matrix(ws, d, points, field);
    const std::size_t n_mono = ev.rows();
    if (!fits_budget(field.q(), n_mono, budget))
        throw Error(ErrorKind::BudgetExceeded, "q^den exceeds budget " + std::to_string(budget));
    const std::size_t m = points.size();
    int max_zeros = -1;
    Vector coeffs(n_mono, 0);
    Vector values(m, 0);
    while (true) {
        // advance the coefficient odometer; values tracks coeffs . ev
        std::size_t j = 0;
        for (; j < n_mono; ++j) {
            const Elem old = coeffs[j];
            const Elem next = (old + 1 == field.q()) ? 0 : old + 1;
            const Elem delta = field.sub(next, old);
            for (std::size_t c = 0; c < m; ++c) values[c] = field.add(values[c], field.mul(delta, ev.at(j, c)));
            coeffs[j] = next;
            if (next != 0) break;
        }
        if (j == n_mono) break;
        const int zeros = static_cast<int>(std::count(values.begin(), values.end(), Elem{0}));
        if (zeros < static_cast<int>(m)) max_zeros = std::max(max_zeros, zeros);
    }
    if (max_zeros < 0) return {std::nullopt, DistanceKind::Undefined};
    return {static_cast<int>(m) - max_zeros, DistanceKind::Exact};
}

OrthogonalityVerdict is_self_orthogonal(const LinearCode& c, InnerProduct ip) {
    const Matrix& g = c.generator();
    const Matrix other = (ip == InnerProduct::Hermitian) ? g.conjugate() : g;
    OrthogonalityVerdict v;
    for (std::size_t i = 0; i < g.rows(); ++i) {
        for (std::size_t j = 0; j < g.rows(); ++j) {
            if (dot(c.field(), g.row(i), other.row(j)) != 0) {
                v.holds = false;
                v.witness = std::make_pair(i, j);
                return v;
            }
        }
    }
    return v;
}

ContainmentVerdict contains(const LinearCode& outer, const LinearCode& inner) {
    if (outer.length() != inner.length()) throw Error(ErrorKind::ShapeMismatch, "codes have different lengths");
    RowSpace space(outer.generator());
    ContainmentVerdict v;
    std::size_t bad = 0;
    if (!space.contains_all(inner.generator(), &bad)) {
        v.holds = false;
        v.witness = inner.generator().row_vector(bad);
    }
    return v;
}

Vector encode(const LinearCode& c, std::span<const Elem> message) {
    if (message.size() != c.dimension()) throw Error(ErrorKind::ShapeMismatch, "message length must equal k");
    const Field& f = c.field();
    Vector out(c.length(), 0);
    for (std::size_t i = 0; i < message.size(); ++i) {
        if (message[i] == 0) continue;
        for (std::size_t j = 0; j < out.size(); ++j)
            out[j] = f.add(out[j], f.mul(message[i], c.generator().at(i, j)));
    }
    return out;
}

namespace {

long long floor_div(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

}  // namespace

PlaneDimension wprm_plane_dimension(int w1, int w2, int d, unsigned q) {
    PlaneDimension out;
    const long long qm1 = static_cast<long long>(q) - 1;
    const long long mu1 = std::min<long long>(floor_div(d, w1), qm1);
    long long k = 0;
    for (long long i = 0; i <= mu1; ++i) k += floor_div(d - w1 * i, w2) + 1;
    // The overlap sum only starts once d reaches w1 (q - 1).
    const long long excess = d - static_cast<long long>(w1) * qm1;
    if (excess >= 0) {
        const long long ell = std::max<long long>(0, std::min<long long>(qm1, floor_div(excess, w2)));
        for (long long i = 0; i <= ell; ++i) k -= (qm1 - i);
    }
    out.closed_form = k;
    const Field field = Field::of_order(q);
    const WeightSystem ws({1, w1, w2});
    const auto points = enumerate_wp_points(ws, field);
    out.rank = evaluation_code(ws, d, points, field).dimension();
    out.agrees = (out.closed_form == static_cast<long long>(out.rank));
    return out;
}

}  // namespace gqc
