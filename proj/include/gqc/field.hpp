#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gqc {

/// A field element is its canonical index: the base-p integer
/// c0 + c1*p + ... + c_{e-1}*p^{e-1} of its power-basis coefficients.
/// Index 0 is zero, index 1 is one, and integer order on indices is the
/// element order used everywhere a "smallest" element is needed.
using Elem = std::uint32_t;

/// Largest field order accepted.
inline constexpr unsigned kMaxFieldOrder = 10000;

bool is_prime(unsigned n);

/// GF(p^e) with a fixed monic irreducible modulus. Cheap to copy; all
/// lookup tables are shared and immutable.
class Field {
public:
    /// Builds GF(p^e). When `modulus` is omitted and e > 1 the built-in
    /// table is consulted. Coefficients are given constant term first.
    static Field create(unsigned p, unsigned e,
                        std::optional<std::vector<unsigned>> modulus = std::nullopt);

    /// Field of order q using the built-in modulus table.
    static Field of_order(unsigned q);

    /// Parses "q=<int>" or "p=<int>,e=<int>,mod=<c0,...,ce>".
    static Field parse(std::string_view spec);

    /// Built-in modulus for q = p^e, e > 1, if the table has one.
    static std::optional<std::vector<unsigned>> table_modulus(unsigned q);

    unsigned p() const;
    unsigned e() const;
    unsigned q() const;
    const std::vector<unsigned>& modulus() const;

    /// Round-trips through parse(); uses the short form when the modulus
    /// is the table default.
    std::string spec_string() const;

    Elem zero() const { return 0; }
    Elem one() const { return 1; }

    /// Embeds an integer through the prime subfield.
    Elem from_int(long long n) const;

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const;
    /// Negative exponents invert first.
    Elem pow(Elem a, long long n) const;

    /// x -> x^p.
    Elem frobenius(Elem a) const;
    bool has_conjugation() const;
    /// x -> x^{sqrt(q)}; requires q to be a square.
    Elem conjugate(Elem a) const;

    /// Fixed primitive element (smallest index generating GF(q)^*).
    Elem generator() const;
    /// Discrete log to the base generator(); a must be nonzero.
    unsigned log(Elem a) const;
    /// generator()^k for any k >= 0.
    Elem exp(unsigned long long k) const;

    std::vector<Elem> elements() const;
    bool contains(Elem a) const { return a < q(); }

    /// Power-basis coefficient vector of an element.
    std::vector<unsigned> coefficients(Elem a) const;
    Elem from_coefficients(const std::vector<unsigned>& c) const;

    friend bool operator==(const Field& a, const Field& b);

private:
    struct Tables;
    explicit Field(std::shared_ptr<const Tables> t) : t_(std::move(t)) {}
    std::shared_ptr<const Tables> t_;
};

/// Irreducibility over GF(p) of a monic polynomial (constant term first),
/// by trial division against every monic polynomial of degree <= deg/2.
bool is_irreducible_mod_p(const std::vector<unsigned>& poly, unsigned p);

}  // namespace gqc
