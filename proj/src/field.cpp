#include "gqc/field.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

#include "gqc/error.hpp"

namespace gqc {

namespace {

// Table moduli, constant term first. Conway polynomials except for q = 9,
// where x^2 + 1 is used so that the default GF(9) matches the usual
// F_3[w]/(w^2 + 1) presentation.
const std::map<unsigned, std::vector<unsigned>>& modulus_table() {
    static const std::map<unsigned, std::vector<unsigned>> table = {
        {4, {1, 1, 1}},
        {8, {1, 1, 0, 1}},
        {9, {1, 0, 1}},
        {16, {1, 1, 0, 0, 1}},
        {25, {2, 4, 1}},
        {27, {1, 2, 0, 1}},
        {32, {1, 0, 1, 0, 0, 1}},
        {49, {3, 6, 1}},
        {64, {1, 1, 0, 1, 1, 0, 1}},
        {81, {2, 0, 0, 2, 1}},
        {121, {2, 7, 1}},
        {125, {3, 3, 0, 1}},
        {169, {2, 12, 1}},
    };
    return table;
}

constexpr unsigned kMaxDegree = 6;

using Poly = std::vector<unsigned>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo a monic b over GF(p).
Poly poly_rem(Poly a, const Poly& b, unsigned p) {
    trim(a);
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        const unsigned lead = a.back();
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i <= db; ++i) {
            a[shift + i] = (a[shift + i] + p - (lead * b[i]) % p) % p;
        }
        trim(a);
    }
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& mod, unsigned p) {
    Poly r(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    return poly_rem(std::move(r), mod, p);
}

unsigned ipow(unsigned b, unsigned e) {
    unsigned r = 1;
    while (e--) r *= b;
    return r;
}

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else if (c != ' ') {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

unsigned parse_uint(std::string_view s, std::string_view what) {
    unsigned v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
        throw Error(ErrorKind::ParseError, "bad integer for " + std::string(what) + ": '" + std::string(s) + "'");
    }
    return v;
}

}  // namespace

bool is_prime(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

bool is_irreducible_mod_p(const std::vector<unsigned>& poly, unsigned p) {
    Poly f = poly;
    trim(f);
    if (f.size() < 2) return false;
    const unsigned deg = static_cast<unsigned>(f.size() - 1);
    for (unsigned k = 1; k <= deg / 2; ++k) {
        const unsigned count = ipow(p, k);
        for (unsigned idx = 0; idx < count; ++idx) {
            Poly g(k + 1, 0);
            unsigned t = idx;
            for (unsigned i = 0; i < k; ++i) {
                g[i] = t % p;
                t /= p;
            }
            g[k] = 1;
            if (poly_rem(f, g, p).empty()) return false;
        }
    }
    return true;
}

struct Field::Tables {
    unsigned p = 0;
    unsigned e = 0;
    unsigned q = 0;
    Poly modulus;
    Elem generator = 1;
    std::vector<Elem> exp;       // size 2(q-1)
    std::vector<unsigned> log;   // size q, log[0] unused
    std::vector<Elem> neg;
    std::vector<std::uint16_t> add;  // q*q table for small extension fields
    unsigned sqrt_q = 0;             // 0 when q is not a square
};

Field Field::create(unsigned p, unsigned e, std::optional<std::vector<unsigned>> modulus) {
    if (!is_prime(p)) throw Error(ErrorKind::NonPrimeCharacteristic, std::to_string(p) + " is not prime");
    if (e < 1 || e > kMaxDegree) throw Error(ErrorKind::UnsupportedOrder, "extension degree " + std::to_string(e));
    unsigned long long qq = 1;
    for (unsigned i = 0; i < e; ++i) qq *= p;
    if (qq > kMaxFieldOrder) throw Error(ErrorKind::UnsupportedOrder, "q = " + std::to_string(qq) + " exceeds limit");
    const auto q = static_cast<unsigned>(qq);

    auto t = std::make_shared<Tables>();
    t->p = p;
    t->e = e;
    t->q = q;

    if (e == 1) {
        if (modulus) {
            Poly m = *modulus;
            trim(m);
            if (m.size() != 2 || m[1] != 1) throw Error(ErrorKind::ReducibleModulus, "degree-1 modulus must be monic linear");
        }
        t->modulus = {0, 1};
    } else {
        Poly m;
        if (modulus) {
            m = *modulus;
            for (auto& c : m) {
                if (c >= p) throw Error(ErrorKind::ReducibleModulus, "modulus coefficient out of range");
            }
            trim(m);
            if (m.size() != e + 1 || m.back() != 1) {
                throw Error(ErrorKind::ReducibleModulus, "modulus must be monic of degree " + std::to_string(e));
            }
        } else {
            auto tm = table_modulus(q);
            if (!tm) throw Error(ErrorKind::UnsupportedOrder, "no built-in modulus for q = " + std::to_string(q));
            m = *tm;
        }
        if (!is_irreducible_mod_p(m, p)) throw Error(ErrorKind::ReducibleModulus, "modulus is reducible over GF(p)");
        t->modulus = m;
    }

    auto to_poly = [&](Elem a) {
        Poly c(e, 0);
        for (unsigned i = 0; i < e; ++i) {
            c[i] = a % p;
            a /= p;
        }
        trim(c);
        return c;
    };
    auto from_poly = [&](const Poly& c) {
        Elem a = 0;
        for (std::size_t i = c.size(); i-- > 0;) a = a * p + c[i];
        return a;
    };

    // Smallest primitive element, found by brute-force order computation.
    const unsigned order = q - 1;
    t->exp.assign(2 * static_cast<std::size_t>(order), 0);
    t->log.assign(q, 0);
    bool found = false;
    for (Elem g = (q == 2 ? 1 : 2); g < q && !found; ++g) {
        std::vector<Elem> powers;
        powers.reserve(order);
        Poly cur{1};
        const Poly gp = to_poly(g);
        for (unsigned k = 0; k < order; ++k) {
            const Elem v = from_poly(cur);
            if (k > 0 && v == 1) break;
            powers.push_back(v);
            cur = poly_mulmod(cur, gp, t->modulus, p);
        }
        if (powers.size() == order) {
            found = true;
            t->generator = g;
            for (unsigned k = 0; k < order; ++k) {
                t->exp[k] = powers[k];
                t->exp[k + order] = powers[k];
                t->log[powers[k]] = k;
            }
        }
    }
    if (!found) throw Error(ErrorKind::ReducibleModulus, "no primitive element found");

    t->neg.resize(q);
    for (Elem a = 0; a < q; ++a) {
        Elem r = 0, mult = 1, x = a;
        for (unsigned i = 0; i < e; ++i) {
            r += ((p - x % p) % p) * mult;
            x /= p;
            mult *= p;
        }
        t->neg[a] = r;
    }
    if (e > 1 && q <= 1024) {
        t->add.resize(static_cast<std::size_t>(q) * q);
        for (Elem a = 0; a < q; ++a) {
            for (Elem b = 0; b < q; ++b) {
                Elem r = 0, mult = 1, x = a, y = b;
                for (unsigned i = 0; i < e; ++i) {
                    r += ((x % p + y % p) % p) * mult;
                    x /= p;
                    y /= p;
                    mult *= p;
                }
                t->add[static_cast<std::size_t>(a) * q + b] = static_cast<std::uint16_t>(r);
            }
        }
    }
    if (e % 2 == 0) t->sqrt_q = ipow(p, e / 2);
    return Field(std::move(t));
}

Field Field::of_order(unsigned q) {
    if (q < 2) throw Error(ErrorKind::UnsupportedOrder, "q = " + std::to_string(q));
    for (unsigned p = 2; p <= q; ++p) {
        if (q % p != 0) continue;
        if (!is_prime(p)) throw Error(ErrorKind::UnsupportedOrder, "q = " + std::to_string(q) + " is not a prime power");
        unsigned e = 0, r = q;
        while (r % p == 0) {
            r /= p;
            ++e;
        }
        if (r != 1) throw Error(ErrorKind::UnsupportedOrder, "q = " + std::to_string(q) + " is not a prime power");
        return create(p, e);
    }
    throw Error(ErrorKind::UnsupportedOrder, "q = " + std::to_string(q));
}

Field Field::parse(std::string_view spec) {
    auto parts = split(spec, ',');
    if (parts.size() == 1 && parts[0].rfind("q=", 0) == 0) {
        return of_order(parse_uint(std::string_view(parts[0]).substr(2), "q"));
    }
    if (parts.size() >= 2 && parts[0].rfind("p=", 0) == 0 && parts[1].rfind("e=", 0) == 0) {
        const unsigned p = parse_uint(std::string_view(parts[0]).substr(2), "p");
        const unsigned e = parse_uint(std::string_view(parts[1]).substr(2), "e");
        if (parts.size() == 2) return create(p, e);
        if (parts[2].rfind("mod=", 0) != 0) throw Error(ErrorKind::ParseError, "expected mod= in field spec");
        std::vector<unsigned> m;
        m.push_back(parse_uint(std::string_view(parts[2]).substr(4), "mod"));
        for (std::size_t i = 3; i < parts.size(); ++i) m.push_back(parse_uint(parts[i], "mod"));
        return create(p, e, m);
    }
    throw Error(ErrorKind::ParseError, "field spec must be 'q=<int>' or 'p=<int>,e=<int>,mod=<c0,...>': '" +
                                           std::string(spec) + "'");
}

std::optional<std::vector<unsigned>> Field::table_modulus(unsigned q) {
    const auto& table = modulus_table();
    if (auto it = table.find(q); it != table.end()) return it->second;
    return std::nullopt;
}

unsigned Field::p() const { return t_->p; }
unsigned Field::e() const { return t_->e; }
unsigned Field::q() const { return t_->q; }
const std::vector<unsigned>& Field::modulus() const { return t_->modulus; }

std::string Field::spec_string() const {
    if (t_->e == 1 || table_modulus(t_->q) == t_->modulus) return "q=" + std::to_string(t_->q);
    std::ostringstream os;
    os << "p=" << t_->p << ",e=" << t_->e << ",mod=";
    for (std::size_t i = 0; i < t_->modulus.size(); ++i) os << (i ? "," : "") << t_->modulus[i];
    return os.str();
}

Elem Field::from_int(long long n) const {
    const long long p = t_->p;
    return static_cast<Elem>(((n % p) + p) % p);
}

Elem Field::add(Elem a, Elem b) const {
    const Tables& t = *t_;
    if (t.e == 1) {
        const Elem s = a + b;
        return s >= t.p ? s - t.p : s;
    }
    if (!t.add.empty()) return t.add[static_cast<std::size_t>(a) * t.q + b];
    Elem r = 0, mult = 1;
    for (unsigned i = 0; i < t.e; ++i) {
        r += ((a % t.p + b % t.p) % t.p) * mult;
        a /= t.p;
        b /= t.p;
        mult *= t.p;
    }
    return r;
}

Elem Field::neg(Elem a) const { return t_->neg[a]; }

Elem Field::sub(Elem a, Elem b) const { return add(a, t_->neg[b]); }

Elem Field::mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    return t_->exp[t_->log[a] + t_->log[b]];
}

Elem Field::inv(Elem a) const {
    if (a == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
    const unsigned order = t_->q - 1;
    return t_->exp[(order - t_->log[a]) % order];
}

Elem Field::div(Elem a, Elem b) const { return mul(a, inv(b)); }

Elem Field::pow(Elem a, long long n) const {
    if (a == 0) {
        if (n > 0) return 0;
        if (n == 0) return 1;
        throw Error(ErrorKind::DivisionByZero, "zero to a negative power");
    }
    const long long order = t_->q - 1;
    long long k = (static_cast<long long>(t_->log[a]) * (n % order)) % order;
    if (k < 0) k += order;
    return t_->exp[static_cast<std::size_t>(k)];
}

Elem Field::frobenius(Elem a) const { return pow(a, t_->p); }

bool Field::has_conjugation() const { return t_->sqrt_q != 0; }

Elem Field::conjugate(Elem a) const {
    if (t_->sqrt_q == 0) throw Error(ErrorKind::NonSquareOrder, "q = " + std::to_string(t_->q) + " is not a square");
    return pow(a, t_->sqrt_q);
}

Elem Field::generator() const { return t_->generator; }

unsigned Field::log(Elem a) const {
    if (a == 0) throw Error(ErrorKind::DivisionByZero, "log of zero");
    return t_->log[a];
}

Elem Field::exp(unsigned long long k) const { return t_->exp[k % (t_->q - 1)]; }

std::vector<Elem> Field::elements() const {
    std::vector<Elem> out(t_->q);
    for (Elem a = 0; a < t_->q; ++a) out[a] = a;
    return out;
}

std::vector<unsigned> Field::coefficients(Elem a) const {
    std::vector<unsigned> c(t_->e);
    for (unsigned i = 0; i < t_->e; ++i) {
        c[i] = a % t_->p;
        a /= t_->p;
    }
    return c;
}

Elem Field::from_coefficients(const std::vector<unsigned>& c) const {
    if (c.size() > t_->e) throw Error(ErrorKind::InvalidArgument, "too many coefficients");
    Elem a = 0;
    for (std::size_t i = c.size(); i-- > 0;) a = a * t_->p + (c[i] % t_->p);
    return a;
}

bool operator==(const Field& a, const Field& b) {
    return a.t_ == b.t_ || (a.p() == b.p() && a.e() == b.e() && a.modulus() == b.modulus());
}

}  // namespace gqc
