#include "gqc/wgeom.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include <boost/multiprecision/cpp_int.hpp>

#include "gqc/error.hpp"

namespace gqc {

using boost::multiprecision::cpp_int;

WeightSystem::WeightSystem(std::vector<int> weights) : weights_(std::move(weights)) {
    if (weights_.empty()) throw Error(ErrorKind::InvalidArgument, "weight system is empty");
    int g = 0;
    for (int w : weights_) {
        if (w < 1) throw Error(ErrorKind::InvalidArgument, "weights must be positive");
        g = std::gcd(g, w);
    }
    well_formed_ = (g == 1);
}

int WeightSystem::gcd_over(const std::vector<int>& support) const {
    int g = 0;
    for (int i : support) g = std::gcd(g, weights_.at(static_cast<std::size_t>(i)));
    return g;
}

std::string to_string(HeightConvention c) {
    return c == HeightConvention::IndexLift ? "index-lift" : "trivial";
}

HeightConvention parse_height_convention(const std::string& s) {
    if (s == "index-lift") return HeightConvention::IndexLift;
    if (s == "trivial") return HeightConvention::Trivial;
    throw Error(ErrorKind::ParseError, "unknown height convention '" + s + "'");
}

double Height::value() const { return std::pow(static_cast<double>(lift), 1.0 / w); }

std::strong_ordering operator<=>(const Height& a, const Height& b) {
    // a.lift^{1/a.w} vs b.lift^{1/b.w}  <=>  a.lift^{b.w} vs b.lift^{a.w}
    const cpp_int lhs = boost::multiprecision::pow(cpp_int(a.lift), static_cast<unsigned>(b.w));
    const cpp_int rhs = boost::multiprecision::pow(cpp_int(b.lift), static_cast<unsigned>(a.w));
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

bool height_at_most(const Height& h, std::uint64_t num, std::uint64_t den) {
    const auto w = static_cast<unsigned>(h.w);
    return cpp_int(h.lift) * boost::multiprecision::pow(cpp_int(den), w) <=
           boost::multiprecision::pow(cpp_int(num), w);
}

Tuple scale(const Tuple& x, Elem lambda, const WeightSystem& ws, const Field& field) {
    Tuple y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) y[i] = field.mul(field.pow(lambda, ws[i]), x[i]);
    return y;
}

namespace {

WPoint describe(Tuple rep, const WeightSystem& ws, const Field& field) {
    WPoint pt;
    pt.rep = std::move(rep);
    for (std::size_t i = 0; i < pt.rep.size(); ++i)
        if (pt.rep[i] != 0) pt.support.push_back(static_cast<int>(i));
    pt.k_s = ws.gcd_over(pt.support);
    const auto order = static_cast<int>(field.q() - 1);
    pt.stab_arith = std::gcd(pt.k_s, order);
    pt.orbit = static_cast<std::uint64_t>(order / pt.stab_arith);
    return pt;
}

void check_tuple(const Tuple& x, const WeightSystem& ws, const Field& field) {
    if (x.size() != ws.size()) throw Error(ErrorKind::ShapeMismatch, "tuple length does not match weights");
    for (Elem v : x)
        if (!field.contains(v)) throw Error(ErrorKind::InvalidArgument, "coordinate outside the field");
}

}  // namespace

WPoint canonical_rep(const Tuple& x, const WeightSystem& ws, const Field& field) {
    check_tuple(x, ws, field);
    if (std::all_of(x.begin(), x.end(), [](Elem v) { return v == 0; }))
        throw Error(ErrorKind::ZeroTuple, "the zero tuple is not a projective point");
    Tuple best = x;
    for (Elem lambda = 2; lambda < field.q(); ++lambda) {
        Tuple y = scale(x, lambda, ws, field);
        if (y < best) best = std::move(y);
    }
    return describe(std::move(best), ws, field);
}

std::vector<WPoint> enumerate_wp_points(const WeightSystem& ws, const Field& field, std::uint64_t budget) {
    const unsigned q = field.q();
    long double tuples = std::pow(static_cast<long double>(q), static_cast<long double>(ws.size()));
    if (tuples > static_cast<long double>(budget))
        throw Error(ErrorKind::BudgetExceeded, "q^(n+1) = " + std::to_string(static_cast<double>(tuples)) +
                                                   " tuples exceeds budget " + std::to_string(budget));

    // A tuple is an orbit minimum iff every coordinate is minimal under the
    // stabilizer of the preceding prefix. Stabilizers are subgroups <g^m> of
    // the cyclic group GF(q)^*, so each level is a coset-minimum test.
    const unsigned order = q - 1;
    std::map<unsigned, std::vector<Elem>> coset_minima;  // keyed by h: H = <g^h>
    auto minima_for = [&](unsigned h) -> const std::vector<Elem>& {
        auto it = coset_minima.find(h);
        if (it != coset_minima.end()) return it->second;
        std::vector<Elem> mins;
        for (Elem y = 1; y < q; ++y) {
            const unsigned ly = field.log(y);
            bool minimal = true;
            for (unsigned j = h; j < order && minimal; j += h)
                if (field.exp(ly + j) < y) minimal = false;
            if (minimal) mins.push_back(y);
        }
        return coset_minima.emplace(h, std::move(mins)).first->second;
    };

    std::vector<WPoint> out;
    Tuple cur(ws.size(), 0);
    auto rec = [&](auto&& self, std::size_t i, unsigned m, bool nonzero) -> void {
        if (i == ws.size()) {
            if (nonzero) out.push_back(describe(cur, ws, field));
            return;
        }
        cur[i] = 0;
        self(self, i + 1, m, nonzero);
        // K = <g^m>; its image under lambda -> lambda^w is <g^h>, and the part of
        // K fixing a nonzero y_i is <g^next_m>. Both exponents divide q - 1.
        const auto w = static_cast<unsigned>(ws[i]);
        const unsigned h = std::gcd(m * w, order);
        const unsigned next_m = std::lcm(m, order / std::gcd(w, order));
        for (Elem y : minima_for(h)) {
            cur[i] = y;
            self(self, i + 1, next_m, true);
        }
        cur[i] = 0;
    };
    rec(rec, 0, 1, false);
    return out;
}

std::uint64_t count_wp_points_formula(const WeightSystem& ws, unsigned q) {
    const std::size_t n1 = ws.size();
    const std::uint64_t order = q - 1;
    std::uint64_t total = 0;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n1); ++mask) {
        std::uint64_t k = 0;
        int size = 0;
        for (std::size_t i = 0; i < n1; ++i) {
            if (mask >> i & 1) {
                k = std::gcd(k, static_cast<std::uint64_t>(ws[i]));
                ++size;
            }
        }
        std::uint64_t term = std::gcd(k, order);
        for (int j = 1; j < size; ++j) term *= order;
        total += term;
    }
    return total;
}

Height weighted_height(const WPoint& pt, const WeightSystem& ws, HeightConvention convention) {
    Height best{1, 1};
    if (convention == HeightConvention::Trivial) return best;
    bool first = true;
    for (int i : pt.support) {
        Height h{pt.rep[static_cast<std::size_t>(i)], ws[static_cast<std::size_t>(i)]};
        if (first || h > best) {
            best = h;
            first = false;
        }
    }
    return best;
}

std::string to_string(StabilizerConvention c) {
    return c == StabilizerConvention::Geometric ? "geometric" : "arithmetic";
}

StabilizerConvention parse_stabilizer_convention(const std::string& s) {
    if (s == "geometric") return StabilizerConvention::Geometric;
    if (s == "arithmetic") return StabilizerConvention::Arithmetic;
    throw Error(ErrorKind::ParseError, "unknown stabilizer convention '" + s + "'");
}

bool geometrically_equivalent(const WPoint& a, const WPoint& b, const WeightSystem& ws, const Field& field) {
    if (a.support != b.support) return false;
    if (a.rep == b.rep) return true;
    // Any lambda with lambda^{w_i} = b_i / a_i satisfies lambda^{k(q-1)} = 1, so it
    // lives in the cyclic group mu_N, N = k'(q-1), k' the p-free part of k.
    // Fix a generator zeta of mu_N with zeta^{k'} = g and solve t w_i = k' e_i mod N.
    std::uint64_t k_free = static_cast<std::uint64_t>(a.k_s);
    while (k_free % field.p() == 0) k_free /= field.p();
    const std::uint64_t order = field.q() - 1;
    const std::uint64_t big_n = k_free * order;
    for (std::uint64_t t = 0; t < big_n; ++t) {
        bool ok = true;
        for (int i : a.support) {
            const auto idx = static_cast<std::size_t>(i);
            const Elem ratio = field.div(b.rep[idx], a.rep[idx]);
            const std::uint64_t rhs = k_free * field.log(ratio) % big_n;
            const std::uint64_t lhs = t * static_cast<std::uint64_t>(ws[idx]) % big_n;
            if (lhs != rhs) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

OrbifoldData singular_census(const std::vector<WPoint>& points, const WeightSystem& ws, const Field& field,
                             StabilizerConvention convention) {
    OrbifoldData data;
    data.convention = convention;
    const bool geometric = convention == StabilizerConvention::Geometric;
    std::vector<const WPoint*> classes;
    for (const WPoint& pt : points) {
        const int order = pt.stabilizer(geometric);
        if (order < 2) continue;
        if (geometric) {
            const bool seen = std::any_of(classes.begin(), classes.end(), [&](const WPoint* c) {
                return geometrically_equivalent(*c, pt, ws, field);
            });
            if (seen) continue;
            classes.push_back(&pt);
        }
        data.entries.push_back({pt.rep, order});
    }
    return data;
}

std::uint64_t projective_count(int k, unsigned q) {
    if (k < 0) return 0;
    std::uint64_t total = 0, power = 1;
    for (int i = 0; i <= k; ++i) {
        total += power;
        power *= q;
    }
    return total;
}

SerreBound serre_bound(const WeightSystem& ws, int degree, unsigned q) {
    SerreBound b;
    std::vector<int> w = ws.weights();
    std::sort(w.begin(), w.end());
    if (w.size() < 2 || w[1] != 1) return b;
    const int n = static_cast<int>(w.size()) - 1;
    std::uint64_t qpow = 1;
    for (int i = 0; i < n - 1; ++i) qpow *= q;
    b.applicable = true;
    b.projective_term = projective_count(n - 1, q);
    b.degree_term = static_cast<std::uint64_t>(degree) * qpow / static_cast<std::uint64_t>(w[1]) +
                    projective_count(n - 3, q);
    b.value = std::min(b.projective_term, b.degree_term);
    return b;
}

}  // namespace gqc
