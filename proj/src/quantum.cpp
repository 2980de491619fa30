#include "gqc/quantum.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <cmath>

#include "enumerate.hpp"
#include "gqc/error.hpp"

namespace gqc {

CssCode::CssCode(Field f, Matrix x, Matrix z, nlohmann::json prov)
    : field(std::move(f)), hx(std::move(x)), hz(std::move(z)), provenance(std::move(prov)) {
    if (hx.cols() != hz.cols()) throw Error(ErrorKind::ShapeMismatch, "H_X and H_Z have different lengths");
    n = hx.cols();
    const std::size_t rx = hx.rank();
    const std::size_t rz = hz.rank();
    if (rx + rz > n) throw Error(ErrorKind::InvariantViolation, "stabilizer ranks exceed n");
    k = n - rx - rz;
}

CommutationVerdict commutation_check(const CssCode& q) {
    CommutationVerdict v;
    for (std::size_t i = 0; i < q.hx.rows(); ++i) {
        for (std::size_t j = 0; j < q.hz.rows(); ++j) {
            if (dot(q.field, q.hx.row(i), q.hz.row(j)) != 0) {
                v.holds = false;
                v.witness = std::make_pair(i, j);
                return v;
            }
        }
    }
    return v;
}

CssCode css_from_self_orthogonal(const LinearCode& c, InnerProduct ip) {
    const auto verdict = is_self_orthogonal(c, ip);
    if (!verdict.holds) {
        throw Error(ErrorKind::NotSelfOrthogonal, "rows " + std::to_string(verdict.witness->first) + " and " +
                                                      std::to_string(verdict.witness->second) +
                                                      " have nonzero inner product");
    }
    const Matrix& g = c.generator();
    nlohmann::json prov;
    prov["source"] = "self-orthogonal";
    prov["inner_product"] = to_string(ip);
    prov["classical"] = {{"length", c.length()}, {"dimension", c.dimension()}};
    if (!c.provenance().empty()) prov["classical"]["provenance"] = c.provenance();
    CssCode q(c.field(), g, ip == InnerProduct::Hermitian ? g.conjugate() : g, std::move(prov));
    if (!commutation_check(q).holds) throw Error(ErrorKind::InvariantViolation, "lifted stabilizers do not commute");
    return q;
}

CssCode css_from_pair(const LinearCode& c1, const LinearCode& c2) {
    if (c1.length() != c2.length()) throw Error(ErrorKind::ShapeMismatch, "codes have different lengths");
    const LinearCode d2 = dual_code(c2);
    const auto verdict = contains(c1, d2);
    if (!verdict.holds) {
        std::string w;
        for (auto x : *verdict.witness) w += (w.empty() ? "" : ",") + std::to_string(x);
        throw Error(ErrorKind::ContainmentViolated, "dual of C2 not inside C1, witness [" + w + "]");
    }
    nlohmann::json prov;
    prov["source"] = "pair";
    prov["c1"] = {{"length", c1.length()}, {"dimension", c1.dimension()}};
    prov["c2"] = {{"length", c2.length()}, {"dimension", c2.dimension()}};
    CssCode q(c1.field(), dual_code(c1).generator(), d2.generator(), std::move(prov));
    if (!commutation_check(q).holds) throw Error(ErrorKind::InvariantViolation, "pair stabilizers do not commute");
    return q;
}

namespace {

bool fits(unsigned q, std::size_t k, std::uint64_t budget) {
    return std::pow(static_cast<long double>(q), static_cast<long double>(k)) <= static_cast<long double>(budget);
}

/// Incremental echelon basis of chosen columns that can express a new
/// column in terms of the chosen ones.
class ColumnBasis {
public:
    ColumnBasis(const Field& f, std::size_t dim) : f_(f), dim_(dim) {}

    std::size_t size() const { return pivots_.size(); }

    /// Reduces v; returns true if v lies in the span, filling coef with the
    /// coefficients on the chosen columns.
    bool express(const Vector& v, Vector& coef) const {
        Vector r = v;
        coef.assign(size(), 0);
        for (std::size_t i = 0; i < size(); ++i) {
            const Elem c = r[pivots_[i]];
            if (c == 0) continue;
            const Elem neg = f_.neg(c);
            for (std::size_t t = 0; t < dim_; ++t)
                if (basis_[i][t] != 0) r[t] = f_.add(r[t], f_.mul(neg, basis_[i][t]));
            for (std::size_t l = 0; l < comb_[i].size(); ++l)
                if (comb_[i][l] != 0) coef[l] = f_.add(coef[l], f_.mul(c, comb_[i][l]));
        }
        return std::all_of(r.begin(), r.end(), [](Elem x) { return x == 0; });
    }

    /// Adds an independent column.
    void push(const Vector& v) {
        Vector r = v;
        Vector comb(size() + 1, 0);
        comb[size()] = 1;
        for (std::size_t i = 0; i < size(); ++i) {
            const Elem c = r[pivots_[i]];
            if (c == 0) continue;
            const Elem neg = f_.neg(c);
            for (std::size_t t = 0; t < dim_; ++t)
                if (basis_[i][t] != 0) r[t] = f_.add(r[t], f_.mul(neg, basis_[i][t]));
            for (std::size_t l = 0; l < comb_[i].size(); ++l)
                if (comb_[i][l] != 0) comb[l] = f_.add(comb[l], f_.mul(neg, comb_[i][l]));
        }
        std::size_t p = 0;
        while (r[p] == 0) ++p;
        const Elem inv = f_.inv(r[p]);
        for (auto& x : r) x = f_.mul(x, inv);
        for (auto& x : comb) x = f_.mul(x, inv);
        basis_.push_back(std::move(r));
        comb_.push_back(std::move(comb));
        pivots_.push_back(p);
    }

    void pop() {
        basis_.pop_back();
        comb_.pop_back();
        pivots_.pop_back();
    }

private:
    const Field& f_;
    std::size_t dim_;
    std::vector<Vector> basis_;
    std::vector<Vector> comb_;  // basis_[i] = sum_l comb_[i][l] . chosen column l
    std::vector<std::size_t> pivots_;
};

struct CircuitSearch {
    const Field& field;
    std::vector<Vector> cols;  // columns of the reduced check matrix
    const RowSpace& stabilizers;
    std::size_t n;
    std::atomic<std::uint64_t> work{0};
    std::uint64_t budget;

    /// Looks for a circuit of exactly `size` columns that is a logical.
    /// Returns 1 if found, 0 if none exists, -1 when the budget ran out.
    int search(std::size_t size) {
        if (size == 1) {
            for (std::size_t j = 0; j < n; ++j) {
                if (std::all_of(cols[j].begin(), cols[j].end(), [](Elem x) { return x == 0; })) {
                    Vector x(n, 0);
                    x[j] = 1;
                    if (!stabilizers.contains(x)) return 1;
                }
            }
            return 0;
        }
        std::vector<int> outcome(n, 0);
        detail::parallel_for(n, [&](std::size_t first) {
            ColumnBasis basis(field, cols.empty() ? 0 : cols[0].size());
            std::vector<std::size_t> chosen;
            outcome[first] = extend(basis, chosen, first, size);
        });
        if (std::find(outcome.begin(), outcome.end(), 1) != outcome.end()) return 1;
        if (std::find(outcome.begin(), outcome.end(), -1) != outcome.end()) return -1;
        return 0;
    }

    int extend(ColumnBasis& basis, std::vector<std::size_t>& chosen, std::size_t j, std::size_t size) {
        Vector coef;
        if (basis.express(cols[j], coef)) return 0;  // chosen + j must stay independent
        basis.push(cols[j]);
        chosen.push_back(j);
        int result = 0;
        if (chosen.size() + 1 == size) {
            for (std::size_t c = j + 1; c < n && result != 1; ++c) {
                if (++work > budget) {
                    result = -1;
                    break;
                }
                if (!basis.express(cols[c], coef)) continue;
                if (std::any_of(coef.begin(), coef.end(), [](Elem x) { return x == 0; })) continue;
                Vector x(n, 0);
                for (std::size_t l = 0; l < chosen.size(); ++l) x[chosen[l]] = coef[l];
                x[c] = field.neg(1);
                if (!stabilizers.contains(x)) result = 1;
            }
        } else {
            for (std::size_t c = j + 1; c < n && result != 1; ++c) {
                const int r = extend(basis, chosen, c, size);
                if (r == 1) result = 1;
                if (r == -1) {
                    result = -1;
                    break;
                }
            }
        }
        basis.pop();
        chosen.pop_back();
        return result;
    }
};

}  // namespace

QuantumDistance logical_weight(const Matrix& h, const Matrix& s, std::uint64_t budget, bool allow_span) {
    QuantumDistance out;
    const Field& field = h.field();
    const RowSpace stab(s);
    const Matrix kernel = h.nullspace();
    std::vector<Vector> extra;
    RowSpace grow(s);
    for (std::size_t i = 0; i < kernel.rows(); ++i) {
        Vector r = grow.reduce(kernel.row(i));
        if (hamming_weight(r) == 0) continue;
        extra.push_back(r);
        Matrix m = grow.basis();
        m.append_row(r);
        grow = RowSpace(m);
    }
    if (extra.empty()) {
        out.method = "none";
        return out;
    }
    int upper = INT_MAX;
    for (const auto& r : extra) upper = std::min(upper, hamming_weight(r));
    out.upper = upper;
    out.lower = 1;

    if (allow_span && fits(field.q(), kernel.rows(), budget)) {
        out.distance = {min_weight_outside(field, extra, stab.basis().to_rows(), budget), DistanceKind::Exact};
        out.lower = out.upper = out.distance.value;
        out.method = "span";
        return out;
    }

    const Matrix reduced = h.rref();
    CircuitSearch cs{field, reduced.transpose().to_rows(), stab, h.cols(), {}, budget};
    if (reduced.rows() == 0) cs.cols.assign(h.cols(), Vector{});
    for (int t = 1; t < upper; ++t) {
        const int r = cs.search(static_cast<std::size_t>(t));
        if (r == 1) {
            out.distance = {t, DistanceKind::Exact};
            out.lower = out.upper = t;
            out.method = "circuit";
            return out;
        }
        if (r == -1) {
            out.distance = {out.lower, DistanceKind::LowerBound};
            out.method = "bounds";
            return out;
        }
        out.lower = t + 1;
    }
    out.distance = {upper, DistanceKind::Exact};
    out.lower = upper;
    out.method = "circuit";
    return out;
}

QuantumDistance quantum_distance(const CssCode& q, std::uint64_t budget, bool allow_span) {
    const QuantumDistance z = logical_weight(q.hx, q.hz, budget, allow_span);
    const QuantumDistance x = logical_weight(q.hz, q.hx, budget, allow_span);
    QuantumDistance out;
    if (z.method == "none" && x.method == "none") {
        out.method = "none";
        return out;
    }
    auto min_opt = [](std::optional<int> a, std::optional<int> b) -> std::optional<int> {
        if (!a) return b;
        if (!b) return a;
        return std::min(*a, *b);
    };
    out.lower = min_opt(z.lower, x.lower);
    out.upper = min_opt(z.upper, x.upper);
    const bool exact = z.distance.exact() && x.distance.exact();
    if (exact) {
        out.distance = {min_opt(z.distance.value, x.distance.value), DistanceKind::Exact};
    } else if (out.lower && out.upper && *out.lower >= *out.upper) {
        // a finished side already reaches the other side's lower bound
        out.distance = {out.upper, DistanceKind::Exact};
    } else {
        out.distance = {out.lower, DistanceKind::LowerBound};
    }
    out.method = (z.method == x.method) ? z.method : z.method + "+" + x.method;
    return out;
}

void apply_distance(CssCode& q, const QuantumDistance& d) {
    q.distance = d.distance;
    q.distance_lower = d.lower;
    q.distance_upper = d.upper;
    q.distance_method = d.method;
}

namespace {

Elem form(const Field& f, std::span<const Elem> a, std::span<const Elem> b, InnerProduct ip) {
    if (ip == InnerProduct::Euclidean) return dot(f, a, b);
    Elem s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0) s = f.add(s, f.mul(a[i], f.conjugate(b[i])));
    return s;
}

}  // namespace

LinearCode isotropic_subcode(const Matrix& candidates, InnerProduct ip, std::size_t target) {
    const Field& f = candidates.field();
    if (ip == InnerProduct::Hermitian && !f.has_conjugation())
        throw Error(ErrorKind::NonSquareOrder, "Hermitian form needs a square field order");
    const std::size_t m = candidates.cols();
    Matrix accepted(f, 0, m);
    std::size_t tried = 0;

    auto try_add = [&](const Vector& v) {
        ++tried;
        if (hamming_weight(v) == 0 || form(f, v, v, ip) != 0) return;
        for (std::size_t i = 0; i < accepted.rows(); ++i)
            if (form(f, v, accepted.row(i), ip) != 0) return;
        if (accepted.rows() > 0 && RowSpace(accepted).contains(v)) return;
        accepted.append_row(v);
    };
    auto combine = [&](const std::vector<std::size_t>& idx, const std::vector<Elem>& coef) {
        Vector v = candidates.row_vector(idx[0]);
        for (std::size_t t = 1; t < idx.size(); ++t)
            for (std::size_t j = 0; j < m; ++j)
                v[j] = f.add(v[j], f.mul(coef[t - 1], candidates.at(idx[t], j)));
        return v;
    };

    const std::size_t r = candidates.rows();
    for (std::size_t i = 0; i < r && accepted.rows() < target; ++i) try_add(candidates.row_vector(i));
    for (std::size_t i = 0; i < r && accepted.rows() < target; ++i)
        for (std::size_t j = i + 1; j < r && accepted.rows() < target; ++j)
            for (Elem c = 1; c < f.q() && accepted.rows() < target; ++c) try_add(combine({i, j}, {c}));
    for (std::size_t i = 0; i < r && accepted.rows() < target; ++i)
        for (std::size_t j = i + 1; j < r && accepted.rows() < target; ++j)
            for (std::size_t l = j + 1; l < r && accepted.rows() < target; ++l)
                for (Elem c = 1; c < f.q() && accepted.rows() < target; ++c)
                    for (Elem c2 = 1; c2 < f.q() && accepted.rows() < target; ++c2)
                        try_add(combine({i, j, l}, {c, c2}));

    nlohmann::json prov;
    prov["source"] = "isotropic-subcode";
    prov["inner_product"] = to_string(ip);
    prov["target"] = target;
    prov["found"] = accepted.rows();
    prov["candidates_tried"] = tried;
    return LinearCode(accepted, std::move(prov));
}

}  // namespace gqc
