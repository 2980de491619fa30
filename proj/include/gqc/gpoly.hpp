#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gqc/field.hpp"
#include "gqc/rational.hpp"
#include "gqc/wgeom.hpp"

namespace gqc {

using Exponents = std::vector<int>;

struct Monomial {
    Exponents exps;

    int weighted_degree(const WeightSystem& ws) const;
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// All monomials of weighted degree d, in graded-lex order (for a fixed
/// degree this is descending lexicographic order on exponent vectors).
std::vector<Monomial> enumerate_monomials(const WeightSystem& ws, int d);

/// Number of exponent vectors with sum w_i a_i = d.
std::uint64_t den(const WeightSystem& ws, int d);

/// Term order for serialization: total degree descending, then
/// lexicographically descending exponents.
struct GrlexGreater {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

class Polynomial {
public:
    using Terms = std::map<Exponents, Elem, GrlexGreater>;

    Polynomial(Field field, std::size_t nvars);

    static Polynomial constant(Field field, std::size_t nvars, Elem c);
    static Polynomial variable(Field field, std::size_t nvars, std::size_t i);

    /// Integer-coefficient expression in x0, x1, ... using + - * ^ and
    /// parentheses; coefficients are reduced mod p. The bare names x, y, z
    /// stand for x0, x1, x2. `nvars` pads the variable count.
    static Polynomial parse(std::string_view text, const Field& field, std::size_t nvars = 0);

    const Field& field() const { return field_; }
    std::size_t nvars() const { return nvars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Exponents& e, Elem c);
    Polynomial with_nvars(std::size_t nvars) const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial pow(unsigned n) const;

    Elem evaluate(const Tuple& x) const;

    /// True when every coefficient lies in the prime subfield, so the
    /// polynomial makes sense over every extension.
    bool has_prime_coefficients() const;

    std::string to_string() const;

private:
    Field field_;
    std::size_t nvars_;
    Terms terms_;
};

struct HomogeneityVerdict {
    std::optional<int> degree;  // set when homogeneous
    std::vector<int> degrees;   // distinct weighted degrees, ascending
};

HomogeneityVerdict is_weighted_homogeneous(const Polynomial& f, const WeightSystem& ws);

/// A weighted hypersurface f = 0. Strict construction requires f to be
/// weighted homogeneous. The lenient form also accepts inhomogeneous f;
/// its zero set is then not a union of orbits, and the point model
/// becomes "orbits containing at least one zero".
class Hypersurface {
public:
    Hypersurface(WeightSystem ws, Polynomial f, bool strict = true);

    const WeightSystem& weights() const { return ws_; }
    const Polynomial& polynomial() const { return f_; }
    const Field& field() const { return f_.field(); }
    bool homogeneous() const { return degrees_.size() == 1; }
    /// The common degree, or the largest one when f is inhomogeneous.
    int degree() const { return degrees_.back(); }
    const std::vector<int>& degrees() const { return degrees_; }
    std::string point_model() const { return homogeneous() ? "zero-set" : "orbits-meeting-zero-set"; }

private:
    WeightSystem ws_;
    Polynomial f_;
    std::vector<int> degrees_;
};

/// Canonical orbit representatives of the nonzero zeros of f (for
/// inhomogeneous f: of the orbits that contain a zero).
std::vector<WPoint> hypersurface_points(const Hypersurface& h,
                                        std::uint64_t budget = kDefaultEnumerationBudget);

/// Affine zeros of f. With a chart index i, x_i is fixed to 1 and the
/// remaining coordinates range over the field; otherwise all q^n tuples.
std::vector<Tuple> affine_points(const Polynomial& f, std::optional<std::size_t> chart = std::nullopt,
                                 std::uint64_t budget = kDefaultEnumerationBudget);

/// Orbits of the group generated by x_coord -> zeta x_coord, zeta a primitive
/// r-th root of unity in the field; r must divide q - 1. Orbits are lists of
/// indices into `points`, ordered by first member.
std::vector<std::vector<std::size_t>> scaling_orbits(const std::vector<Tuple>& points, const Field& field,
                                                     std::size_t coord, unsigned r);

/// N_r = |X(GF(q^r))| for r = 1..depth. Requires prime-field coefficients.
std::vector<std::uint64_t> zeta_counts(const Hypersurface& h, int depth,
                                       std::uint64_t budget = kDefaultEnumerationBudget);

/// N_r for the whole weighted projective space, by the closed form.
std::vector<std::uint64_t> zeta_counts_space(const WeightSystem& ws, const Field& field, int depth);

/// Coefficients z_0..z_R of exp(sum N_r T^r / r), R = counts.size().
std::vector<Rational> zeta_series(const std::vector<std::uint64_t>& counts);

}  // namespace gqc
