#include "gqc/chain.hpp"

#include <algorithm>

#include "gqc/error.hpp"

namespace gqc {

ChainComplex::ChainComplex(Field field, int lo, int hi, std::map<int, std::size_t> dims, std::map<int, Matrix> diff,
                           std::map<int, nlohmann::json> grades)
    : field_(std::move(field)), lo_(lo), hi_(hi), dims_(std::move(dims)), diff_(std::move(diff)),
      grades_(std::move(grades)) {
    if (lo_ > hi_) throw Error(ErrorKind::ShapeMismatch, "degree range is empty");
    for (int d = lo_; d <= hi_; ++d)
        if (!dims_.count(d)) throw Error(ErrorKind::ShapeMismatch, "no dimension for degree " + std::to_string(d));
    for (const auto& [d, _] : dims_)
        if (d < lo_ || d > hi_) throw Error(ErrorKind::ShapeMismatch, "dimension given outside the degree range");
    for (const auto& [d, m] : diff_) {
        if (d <= lo_ || d > hi_)
            throw Error(ErrorKind::ShapeMismatch, "differential " + std::to_string(d) + " leaves the degree range");
        if (m.rows() != dim(d - 1) || m.cols() != dim(d))
            throw Error(ErrorKind::ShapeMismatch, "differential " + std::to_string(d) + " should be " +
                                                      std::to_string(dim(d - 1)) + "x" + std::to_string(dim(d)));
    }
    for (const auto& [d, g] : grades_) {
        if (d < lo_ || d > hi_ || !g.is_array() || g.size() != dim(d))
            throw Error(ErrorKind::ShapeMismatch, "grade labels for degree " + std::to_string(d) + " do not match");
    }
    for (int d = lo_ + 2; d <= hi_; ++d) {
        const Matrix prod = this->diff(d - 1) * this->diff(d);
        for (std::size_t i = 0; i < prod.rows(); ++i)
            for (std::size_t j = 0; j < prod.cols(); ++j)
                if (prod.at(i, j) != 0)
                    throw Error(ErrorKind::DifferentialSquareNonzero,
                                "d" + std::to_string(d - 1) + " . d" + std::to_string(d) + " has entry (" +
                                    std::to_string(i) + "," + std::to_string(j) + ") = " +
                                    std::to_string(prod.at(i, j)));
    }
}

std::size_t ChainComplex::dim(int d) const {
    auto it = dims_.find(d);
    return it == dims_.end() ? 0 : it->second;
}

Matrix ChainComplex::diff(int d) const {
    auto it = diff_.find(d);
    if (it != diff_.end()) return it->second;
    return Matrix(field_, dim(d - 1), dim(d));
}

namespace {

int parse_degree(const std::string& key) {
    try {
        std::size_t used = 0;
        int d = std::stoi(key, &used);
        if (used != key.size()) throw std::invalid_argument(key);
        return d;
    } catch (const std::exception&) {
        throw Error(ErrorKind::ParseError, "degree key '" + key + "' is not an integer");
    }
}

Elem entry(const Field& f, const nlohmann::json& v) {
    if (!v.is_number_integer()) throw Error(ErrorKind::ParseError, "matrix entries must be integers");
    const long long x = v.get<long long>();
    if (f.e() == 1) {
        const long long p = f.p();
        return static_cast<Elem>(((x % p) + p) % p);
    }
    if (x < 0 || x >= static_cast<long long>(f.q()))
        throw Error(ErrorKind::ParseError, "element index " + std::to_string(x) + " outside the field");
    return static_cast<Elem>(x);
}

}  // namespace

ChainComplex ChainComplex::from_json(const nlohmann::json& j) {
    try {
        const Field field = Field::parse(j.at("field").get<std::string>());
        const auto& deg = j.at("degrees");
        if (!deg.is_array() || deg.size() != 2) throw Error(ErrorKind::ParseError, "degrees must be [lo, hi]");
        const int lo = deg[0].get<int>();
        const int hi = deg[1].get<int>();
        std::map<int, std::size_t> dims;
        for (const auto& [k, v] : j.at("dims").items()) {
            if (!v.is_number_integer() || v.get<long long>() < 0)
                throw Error(ErrorKind::ParseError, "dimension must be a nonnegative integer");
            dims[parse_degree(k)] = v.get<std::size_t>();
        }
        std::map<int, Matrix> diff;
        if (j.contains("diff")) {
            for (const auto& [k, rows] : j.at("diff").items()) {
                const int d = parse_degree(k);
                auto dit = dims.find(d);
                const std::size_t cols = dit == dims.end() ? 0 : dit->second;
                if (!rows.is_array()) throw Error(ErrorKind::ParseError, "differential must be an array of rows");
                Matrix m(field, 0, cols);
                for (const auto& row : rows) {
                    if (!row.is_array()) throw Error(ErrorKind::ParseError, "matrix row must be an array");
                    Vector r;
                    for (const auto& v : row) r.push_back(entry(field, v));
                    m.append_row(r);
                }
                diff.emplace(d, std::move(m));
            }
        }
        std::map<int, nlohmann::json> grades;
        if (j.contains("grades"))
            for (const auto& [k, v] : j.at("grades").items()) grades[parse_degree(k)] = v;
        return ChainComplex(field, lo, hi, std::move(dims), std::move(diff), std::move(grades));
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::ParseError, std::string("complex description: ") + e.what());
    }
}

nlohmann::json ChainComplex::to_json() const {
    nlohmann::json j;
    j["field"] = field_.spec_string();
    j["degrees"] = {lo_, hi_};
    j["dims"] = nlohmann::json::object();
    for (const auto& [d, n] : dims_) j["dims"][std::to_string(d)] = n;
    if (!grades_.empty()) {
        j["grades"] = nlohmann::json::object();
        for (const auto& [d, g] : grades_) j["grades"][std::to_string(d)] = g;
    }
    j["diff"] = nlohmann::json::object();
    for (const auto& [d, m] : diff_) j["diff"][std::to_string(d)] = m.to_rows();
    return j;
}

HomologyReport homology(const ChainComplex& x) {
    HomologyReport r;
    for (int d = x.lo(); d <= x.hi() + 1; ++d) r.rank[d] = (d > x.lo() && d <= x.hi()) ? x.diff(d).rank() : 0;
    for (int d = x.lo(); d <= x.hi(); ++d) {
        const std::size_t kernel = x.dim(d) - r.rank[d];
        if (kernel < r.rank[d + 1]) throw Error(ErrorKind::InvariantViolation, "image exceeds kernel");
        r.betti[d] = kernel - r.rank[d + 1];
        const long long sign = (d % 2 == 0) ? 1 : -1;
        r.euler_chain += sign * static_cast<long long>(x.dim(d));
        r.euler_homology += sign * static_cast<long long>(r.betti[d]);
    }
    r.rank.erase(x.hi() + 1);
    if (r.euler_chain != r.euler_homology) throw Error(ErrorKind::InvariantViolation, "Euler characteristics differ");
    return r;
}

CssCode homological_code(const ChainComplex& x, int d) {
    if (d < x.lo() || d > x.hi())
        throw Error(ErrorKind::DegreeOutOfRange, "degree " + std::to_string(d) + " outside [" +
                                                     std::to_string(x.lo()) + ", " + std::to_string(x.hi()) + "]");
    nlohmann::json prov;
    prov["source"] = "chain-complex";
    prov["degree"] = d;
    prov["dims"] = {x.dim(d + 1), x.dim(d), x.dim(d - 1)};
    CssCode q(x.field(), x.diff(d + 1).transpose(), x.diff(d), std::move(prov));
    if (!commutation_check(q).holds) throw Error(ErrorKind::InvariantViolation, "homological stabilizers do not commute");
    return q;
}

ChainComplex toric_complex(int L) {
    if (L < 2) throw Error(ErrorKind::InvalidArgument, "toric complex needs L >= 2");
    const Field f2 = Field::of_order(2);
    const std::size_t n = static_cast<std::size_t>(L) * L;
    auto vertex = [&](int i, int j) { return static_cast<std::size_t>(((i + L) % L) * L + (j + L) % L); };
    auto hedge = [&](int i, int j) { return vertex(i, j); };
    auto vedge = [&](int i, int j) { return n + vertex(i, j); };
    Matrix d2(f2, 2 * n, n);
    Matrix d1(f2, n, 2 * n);
    for (int i = 0; i < L; ++i) {
        for (int j = 0; j < L; ++j) {
            const std::size_t p = vertex(i, j);
            d2.at(hedge(i, j), p) = 1;
            d2.at(hedge(i + 1, j), p) = 1;
            d2.at(vedge(i, j), p) = 1;
            d2.at(vedge(i, j + 1), p) = 1;
            d1.at(vertex(i, j), hedge(i, j)) = 1;
            d1.at(vertex(i, j + 1), hedge(i, j)) = 1;
            d1.at(vertex(i, j), vedge(i, j)) = 1;
            d1.at(vertex(i + 1, j), vedge(i, j)) = 1;
        }
    }
    std::map<int, Matrix> diff;
    diff.emplace(1, std::move(d1));
    diff.emplace(2, std::move(d2));
    return ChainComplex(f2, 0, 2, {{0, n}, {1, 2 * n}, {2, n}}, std::move(diff));
}

ToricWitness toric_witness(int L) {
    const std::size_t n = static_cast<std::size_t>(L) * L;
    ToricWitness w{Vector(2 * n, 0), Vector(2 * n, 0)};
    for (int j = 0; j < L; ++j) {
        w.z_logical[n + static_cast<std::size_t>(j)] = 1;  // vertical edges leaving row 0
        w.x_logical[static_cast<std::size_t>(j)] = 1;      // horizontal edges along row 0
    }
    return w;
}

namespace {

std::vector<std::size_t> kept_indices(const ChainComplex& x, int d, int k) {
    std::vector<std::size_t> keep;
    auto it = x.grades().find(d);
    for (std::size_t i = 0; i < x.dim(d); ++i) {
        if (it == x.grades().end()) {
            keep.push_back(i);
            continue;
        }
        const auto& label = it->second[i];
        int j = 0;
        if (label.is_number_integer()) {
            j = label.get<int>();
        } else if (label.is_array() && label.size() == 2 && label[1].is_number_integer()) {
            j = label[1].get<int>();
        } else {
            throw Error(ErrorKind::ParseError, "grade label must be an integer or a pair of integers");
        }
        if (j <= k) keep.push_back(i);
    }
    return keep;
}

}  // namespace

ChainComplex filter_by_grade(const ChainComplex& x, int k) {
    std::map<int, std::vector<std::size_t>> keep;
    std::map<int, std::size_t> dims;
    std::map<int, nlohmann::json> grades;
    for (int d = x.lo(); d <= x.hi(); ++d) {
        keep[d] = kept_indices(x, d, k);
        dims[d] = keep[d].size();
        auto it = x.grades().find(d);
        if (it != x.grades().end()) {
            nlohmann::json g = nlohmann::json::array();
            for (auto i : keep[d]) g.push_back(it->second[i]);
            grades[d] = std::move(g);
        }
    }
    std::map<int, Matrix> diff;
    for (int d = x.lo() + 1; d <= x.hi(); ++d) {
        const Matrix full = x.diff(d);
        const auto& rows = keep[d - 1];
        std::vector<bool> row_kept(full.rows(), false);
        for (auto r : rows) row_kept[r] = true;
        Matrix m(x.field(), rows.size(), keep[d].size());
        for (std::size_t c = 0; c < keep[d].size(); ++c) {
            const std::size_t col = keep[d][c];
            for (std::size_t r = 0; r < full.rows(); ++r)
                if (!row_kept[r] && full.at(r, col) != 0)
                    throw Error(ErrorKind::NotSubcomplex, "d" + std::to_string(d) + " sends kept basis vector " +
                                                              std::to_string(col) + " outside the filtration");
            for (std::size_t r = 0; r < rows.size(); ++r) m.at(r, c) = full.at(rows[r], col);
        }
        diff.emplace(d, std::move(m));
    }
    return ChainComplex(x.field(), x.lo(), x.hi(), std::move(dims), std::move(diff), std::move(grades));
}

namespace {

bool within(const Height& h, const Threshold& t) {
    if (!t) return true;
    if (*t < 0) return false;
    const BigInt num = numerator(*t);
    const BigInt den = denominator(*t);
    if (num > BigInt(std::numeric_limits<std::uint64_t>::max()) ||
        den > BigInt(std::numeric_limits<std::uint64_t>::max()))
        throw Error(ErrorKind::InvalidArgument, "threshold too large");
    return height_at_most(h, static_cast<std::uint64_t>(num), static_cast<std::uint64_t>(den));
}

}  // namespace

Filtration height_filtration(const std::vector<Height>& heights, const std::vector<Threshold>& thresholds) {
    if (heights.empty()) throw Error(ErrorKind::EmptyFiltration, "no points to filter");
    if (thresholds.empty()) throw Error(ErrorKind::EmptyFiltration, "no thresholds given");
    for (std::size_t i = 1; i < thresholds.size(); ++i) {
        const auto& a = thresholds[i - 1];
        const auto& b = thresholds[i];
        if (!a || (b && *b < *a)) throw Error(ErrorKind::InvalidArgument, "thresholds must be ascending");
    }
    Filtration f;
    for (const auto& t : thresholds) {
        FiltrationLevel level{t, {}};
        for (std::size_t i = 0; i < heights.size(); ++i)
            if (within(heights[i], t)) level.members.push_back(i);
        f.levels.push_back(std::move(level));
    }
    return f;
}

std::vector<std::optional<LinearCode>> filtration_codes(const Filtration& filt, const WeightSystem& ws, int d,
                                                        const std::vector<WPoint>& points, const Field& field) {
    std::vector<std::optional<LinearCode>> out;
    for (const auto& level : filt.levels) {
        if (level.members.empty()) {
            out.emplace_back(std::nullopt);
            continue;
        }
        std::vector<WPoint> sub;
        for (auto i : level.members) sub.push_back(points.at(i));
        out.emplace_back(evaluation_code(ws, d, sub, field));
    }
    return out;
}

}  // namespace gqc
