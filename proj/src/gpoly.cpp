#include "gqc/gpoly.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

#include "gqc/error.hpp"

namespace gqc {

int Monomial::weighted_degree(const WeightSystem& ws) const {
    int d = 0;
    for (std::size_t i = 0; i < exps.size(); ++i) d += ws[i] * exps[i];
    return d;
}

std::vector<Monomial> enumerate_monomials(const WeightSystem& ws, int d) {
    std::vector<Monomial> out;
    if (d < 0) return out;
    Exponents cur(ws.size(), 0);
    auto rec = [&](auto&& self, std::size_t i, int remaining) -> void {
        if (i + 1 == ws.size()) {
            if (remaining % ws[i] == 0) {
                cur[i] = remaining / ws[i];
                out.push_back({cur});
            }
            return;
        }
        for (int a = remaining / ws[i]; a >= 0; --a) {
            cur[i] = a;
            self(self, i + 1, remaining - a * ws[i]);
        }
        cur[i] = 0;
    };
    rec(rec, 0, d);
    return out;
}

std::uint64_t den(const WeightSystem& ws, int d) {
    if (d < 0) return 0;
    std::vector<std::uint64_t> ways(static_cast<std::size_t>(d) + 1, 0);
    ways[0] = 1;
    for (int w : ws.weights())
        for (int s = w; s <= d; ++s) ways[static_cast<std::size_t>(s)] += ways[static_cast<std::size_t>(s - w)];
    return ways[static_cast<std::size_t>(d)];
}

bool GrlexGreater::operator()(const Exponents& a, const Exponents& b) const {
    const int da = std::accumulate(a.begin(), a.end(), 0);
    const int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da > db;
    return a > b;
}

Polynomial::Polynomial(Field field, std::size_t nvars) : field_(std::move(field)), nvars_(nvars) {}

Polynomial Polynomial::constant(Field field, std::size_t nvars, Elem c) {
    Polynomial p(std::move(field), nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
}

Polynomial Polynomial::variable(Field field, std::size_t nvars, std::size_t i) {
    Polynomial p(std::move(field), nvars);
    Exponents e(nvars, 0);
    e.at(i) = 1;
    p.add_term(e, 1);
    return p;
}

void Polynomial::add_term(const Exponents& e, Elem c) {
    if (e.size() != nvars_) throw Error(ErrorKind::ShapeMismatch, "exponent vector length mismatch");
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
        return;
    }
    it->second = field_.add(it->second, c);
    if (it->second == 0) terms_.erase(it);
}

Polynomial Polynomial::with_nvars(std::size_t nvars) const {
    if (nvars < nvars_) {
        for (const auto& [e, c] : terms_)
            for (std::size_t i = nvars; i < nvars_; ++i)
                if (e[i] != 0) throw Error(ErrorKind::ShapeMismatch, "polynomial uses more variables than allowed");
    }
    Polynomial out(field_, nvars);
    for (const auto& [e, c] : terms_) {
        Exponents ne(nvars, 0);
        std::copy_n(e.begin(), std::min(nvars, nvars_), ne.begin());
        out.add_term(ne, c);
    }
    return out;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, c);
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    Polynomial out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, field_.neg(c));
    return out;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    Polynomial out(field_, nvars_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            Exponents e(nvars_);
            for (std::size_t i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, field_.mul(ca, cb));
        }
    }
    return out;
}

Polynomial Polynomial::pow(unsigned n) const {
    Polynomial result = constant(field_, nvars_, 1);
    Polynomial base = *this;
    while (n) {
        if (n & 1) result = result * base;
        n >>= 1;
        if (n) base = base * base;
    }
    return result;
}

Elem Polynomial::evaluate(const Tuple& x) const {
    if (x.size() != nvars_) throw Error(ErrorKind::ShapeMismatch, "evaluation point has wrong length");
    Elem sum = 0;
    for (const auto& [e, c] : terms_) {
        Elem t = c;
        for (std::size_t i = 0; i < nvars_ && t != 0; ++i)
            if (e[i] != 0) t = field_.mul(t, field_.pow(x[i], e[i]));
        sum = field_.add(sum, t);
    }
    return sum;
}

bool Polynomial::has_prime_coefficients() const {
    return std::all_of(terms_.begin(), terms_.end(), [&](const auto& t) { return t.second < field_.p(); });
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        const bool is_const = std::all_of(e.begin(), e.end(), [](int a) { return a == 0; });
        bool need_star = false;
        if (c != 1 || is_const) {
            os << c;
            need_star = true;
        }
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (need_star) os << "*";
            os << "x" << i;
            if (e[i] != 1) os << "^" << e[i];
            need_star = true;
        }
    }
    return os.str();
}

namespace {

// Recursive-descent parser. The AST is built directly as polynomials over
// the target field; variable count grows as new indices appear.
class Parser {
public:
    Parser(std::string_view text, const Field& field) : text_(text), field_(field) {}

    Polynomial run(std::size_t min_vars) {
        // First pass: find the largest variable index so every subterm shares nvars.
        nvars_ = std::max<std::size_t>(min_vars, scan_nvars());
        pos_ = 0;
        Polynomial p = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return p;
    }

private:
    std::size_t scan_nvars() {
        std::size_t n = 0;
        for (pos_ = 0; pos_ < text_.size();) {
            const char c = text_[pos_];
            if (c == 'x' || c == 'y' || c == 'z') {
                ++pos_;
                std::size_t idx = 0;
                if (c == 'x' && pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                    idx = read_uint();
                } else {
                    idx = static_cast<std::size_t>(c == 'x' ? 0 : c == 'y' ? 1 : 2);
                }
                n = std::max(n, idx + 1);
            } else {
                ++pos_;
            }
        }
        return std::max<std::size_t>(n, 1);
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw Error(ErrorKind::ParseError, msg + " at position " + std::to_string(pos_) + " in '" +
                                               std::string(text_) + "'");
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    std::size_t read_uint() {
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("expected integer");
        std::size_t v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + static_cast<std::size_t>(text_[pos_] - '0');
            if (v > 1'000'000'000) fail("integer too large");
            ++pos_;
        }
        return v;
    }

    bool starts_factor() {
        skip_ws();
        if (pos_ >= text_.size()) return false;
        const char c = text_[pos_];
        return std::isdigit(static_cast<unsigned char>(c)) || c == 'x' || c == 'y' || c == 'z' || c == '(';
    }

    Polynomial expr() {
        Polynomial acc(field_, nvars_);
        bool negate = false;
        if (peek('+')) {
            ++pos_;
        } else if (peek('-')) {
            ++pos_;
            negate = true;
        }
        Polynomial t = term();
        acc = negate ? acc - t : acc + t;
        while (true) {
            if (peek('+')) {
                ++pos_;
                acc = acc + term();
            } else if (peek('-')) {
                ++pos_;
                acc = acc - term();
            } else {
                break;
            }
        }
        return acc;
    }

    Polynomial term() {
        Polynomial acc = factor();
        while (true) {
            if (peek('*')) {
                ++pos_;
                acc = acc * factor();
            } else if (starts_factor()) {
                acc = acc * factor();  // implicit product such as 2x0
            } else {
                break;
            }
        }
        return acc;
    }

    Polynomial factor() {
        Polynomial base = primary();
        if (peek('^')) {
            ++pos_;
            skip_ws();
            base = base.pow(static_cast<unsigned>(read_uint()));
        }
        return base;
    }

    Polynomial primary() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of expression");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Polynomial inner = expr();
            if (!peek(')')) fail("expected ')'");
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const auto v = static_cast<long long>(read_uint());
            return Polynomial::constant(field_, nvars_, field_.from_int(v));
        }
        if (c == 'x' || c == 'y' || c == 'z') {
            ++pos_;
            std::size_t idx;
            if (c == 'x' && pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                idx = read_uint();
            } else {
                idx = static_cast<std::size_t>(c == 'x' ? 0 : c == 'y' ? 1 : 2);
            }
            return Polynomial::variable(field_, nvars_, idx);
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view text_;
    const Field& field_;
    std::size_t pos_ = 0;
    std::size_t nvars_ = 1;
};

}  // namespace

Polynomial Polynomial::parse(std::string_view text, const Field& field, std::size_t nvars) {
    return Parser(text, field).run(nvars);
}

HomogeneityVerdict is_weighted_homogeneous(const Polynomial& f, const WeightSystem& ws) {
    if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "zero polynomial has no degree");
    if (f.nvars() != ws.size())
        throw Error(ErrorKind::ShapeMismatch, "polynomial has " + std::to_string(f.nvars()) + " variables, weights " +
                                                  std::to_string(ws.size()));
    std::set<int> degrees;
    for (const auto& [e, c] : f.terms()) degrees.insert(Monomial{e}.weighted_degree(ws));
    HomogeneityVerdict v;
    v.degrees.assign(degrees.begin(), degrees.end());
    if (degrees.size() == 1) v.degree = *degrees.begin();
    return v;
}

Hypersurface::Hypersurface(WeightSystem ws, Polynomial f, bool strict) : ws_(std::move(ws)), f_(std::move(f)) {
    if (f_.nvars() < ws_.size()) f_ = f_.with_nvars(ws_.size());
    const HomogeneityVerdict v = is_weighted_homogeneous(f_, ws_);
    if (!v.degree && strict) {
        std::string list;
        for (int d : v.degrees) list += (list.empty() ? "" : ",") + std::to_string(d);
        throw Error(ErrorKind::NonHomogeneous, "polynomial mixes weighted degrees {" + list + "}");
    }
    degrees_ = v.degrees;
}

std::vector<WPoint> hypersurface_points(const Hypersurface& h, std::uint64_t budget) {
    std::vector<WPoint> all = enumerate_wp_points(h.weights(), h.field(), budget);
    std::vector<WPoint> out;
    const Field& f = h.field();
    for (auto& pt : all) {
        bool hit = h.polynomial().evaluate(pt.rep) == 0;
        for (Elem lambda = 2; !hit && !h.homogeneous() && lambda < f.q(); ++lambda)
            hit = h.polynomial().evaluate(scale(pt.rep, lambda, h.weights(), f)) == 0;
        if (hit) out.push_back(std::move(pt));
    }
    return out;
}

std::vector<Tuple> affine_points(const Polynomial& f, std::optional<std::size_t> chart, std::uint64_t budget) {
    const std::size_t n = f.nvars();
    const unsigned q = f.field().q();
    if (chart && *chart >= n) throw Error(ErrorKind::InvalidArgument, "chart index out of range");
    const std::size_t free = chart ? n - 1 : n;
    const long double total = std::pow(static_cast<long double>(q), static_cast<long double>(free));
    if (total > static_cast<long double>(budget))
        throw Error(ErrorKind::BudgetExceeded, "affine enumeration of " + std::to_string(static_cast<double>(total)) +
                                                   " tuples exceeds budget " + std::to_string(budget));
    std::vector<Tuple> out;
    Tuple x(n, 0);
    if (chart) x[*chart] = 1;
    std::vector<std::size_t> slots;
    for (std::size_t i = 0; i < n; ++i)
        if (!chart || i != *chart) slots.push_back(i);
    while (true) {
        if (f.evaluate(x) == 0) out.push_back(x);
        // lexicographic increment over the free slots
        std::size_t k = slots.size();
        while (k > 0) {
            const std::size_t s = slots[k - 1];
            if (++x[s] < q) break;
            x[s] = 0;
            --k;
        }
        if (k == 0) break;
    }
    return out;
}

std::vector<std::vector<std::size_t>> scaling_orbits(const std::vector<Tuple>& points, const Field& field,
                                                     std::size_t coord, unsigned r) {
    if (r == 0 || (field.q() - 1) % r != 0)
        throw Error(ErrorKind::InvalidArgument, "r must divide q - 1 for the roots of unity to be rational");
    const Elem zeta = field.exp((field.q() - 1) / r);
    std::map<Tuple, std::size_t> index;
    for (std::size_t i = 0; i < points.size(); ++i) index.emplace(points[i], i);
    std::vector<bool> seen(points.size(), false);
    std::vector<std::vector<std::size_t>> orbits;
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (seen[i]) continue;
        std::vector<std::size_t> orbit;
        Tuple y = points[i];
        for (unsigned j = 0; j < r; ++j) {
            auto it = index.find(y);
            if (it == index.end()) throw Error(ErrorKind::InvalidArgument, "point set is not closed under the action");
            if (!seen[it->second]) {
                seen[it->second] = true;
                orbit.push_back(it->second);
            }
            y.at(coord) = field.mul(y[coord], zeta);
        }
        std::sort(orbit.begin(), orbit.end());
        orbits.push_back(std::move(orbit));
    }
    return orbits;
}

std::vector<std::uint64_t> zeta_counts(const Hypersurface& h, int depth, std::uint64_t budget) {
    if (!h.polynomial().has_prime_coefficients())
        throw Error(ErrorKind::InvalidArgument, "zeta counts need prime-field coefficients");
    std::vector<std::uint64_t> counts;
    const Field& base = h.field();
    for (int r = 1; r <= depth; ++r) {
        const Field ext = (r == 1) ? base : Field::create(base.p(), base.e() * static_cast<unsigned>(r));
        Polynomial f(ext, h.polynomial().nvars());
        for (const auto& [e, c] : h.polynomial().terms()) f.add_term(e, c);
        counts.push_back(hypersurface_points(Hypersurface(h.weights(), f, h.homogeneous()), budget).size());
    }
    return counts;
}

std::vector<std::uint64_t> zeta_counts_space(const WeightSystem& ws, const Field& field, int depth) {
    std::vector<std::uint64_t> counts;
    std::uint64_t qr = 1;
    for (int r = 1; r <= depth; ++r) {
        qr *= field.q();
        counts.push_back(count_wp_points_formula(ws, static_cast<unsigned>(qr)));
    }
    return counts;
}

std::vector<Rational> zeta_series(const std::vector<std::uint64_t>& counts) {
    // Z' = L' Z with L = sum N_r T^r / r gives n z_n = sum_{k=1}^n N_k z_{n-k}.
    std::vector<Rational> z(counts.size() + 1);
    z[0] = 1;
    for (std::size_t n = 1; n <= counts.size(); ++n) {
        Rational acc = 0;
        for (std::size_t k = 1; k <= n; ++k) acc += Rational(counts[k - 1]) * z[n - k];
        z[n] = acc / Rational(n);
    }
    return z;
}

}  // namespace gqc
