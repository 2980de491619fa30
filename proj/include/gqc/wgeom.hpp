#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gqc/field.hpp"

namespace gqc {

inline constexpr std::uint64_t kDefaultEnumerationBudget = 100'000'000;

/// Weights (w0, ..., wn) of a weighted projective space. Non-well-formed
/// systems (overall gcd > 1) are allowed; well_formed() reports it.
class WeightSystem {
public:
    explicit WeightSystem(std::vector<int> weights);

    const std::vector<int>& weights() const { return weights_; }
    std::size_t size() const { return weights_.size(); }
    int operator[](std::size_t i) const { return weights_[i]; }
    bool well_formed() const { return well_formed_; }

    /// gcd of the weights indexed by `support`.
    int gcd_over(const std::vector<int>& support) const;

    friend bool operator==(const WeightSystem&, const WeightSystem&) = default;

private:
    std::vector<int> weights_;
    bool well_formed_ = true;
};

using Tuple = std::vector<Elem>;

/// How a weighted height is read off a point over a finite field.
enum class HeightConvention {
    IndexLift,  // lift x_i to its element index
    Trivial,    // every nonzero coordinate has height 1
};

std::string to_string(HeightConvention c);
HeightConvention parse_height_convention(const std::string& s);

/// lift^{1/w} kept exactly; comparisons cross-exponentiate in integers.
struct Height {
    std::uint64_t lift = 1;
    int w = 1;

    double value() const;
    friend std::strong_ordering operator<=>(const Height& a, const Height& b);
    friend bool operator==(const Height& a, const Height& b) { return (a <=> b) == 0; }
};

/// True iff lift^{1/w} <= bound, with bound given as the rational num/den.
bool height_at_most(const Height& h, std::uint64_t num, std::uint64_t den = 1);

/// A rational point of a weighted projective space, stored as the
/// lexicographically smallest tuple of its orbit.
struct WPoint {
    Tuple rep;
    std::vector<int> support;
    int k_s = 1;         // gcd of the weights on the support (geometric stabilizer order)
    int stab_arith = 1;  // gcd(k_s, q - 1)
    std::uint64_t orbit = 1;

    int stabilizer(bool geometric) const { return geometric ? k_s : stab_arith; }
    friend bool operator==(const WPoint& a, const WPoint& b) { return a.rep == b.rep; }
    friend auto operator<=>(const WPoint& a, const WPoint& b) { return a.rep <=> b.rep; }
};

/// lambda . x = (lambda^{w_i} x_i).
Tuple scale(const Tuple& x, Elem lambda, const WeightSystem& ws, const Field& field);

/// Orbit minimum of a nonzero tuple under the weighted scaling action.
WPoint canonical_rep(const Tuple& x, const WeightSystem& ws, const Field& field);

/// One point per orbit, sorted by representative. Throws BudgetExceeded
/// when q^{n+1} exceeds `budget`.
std::vector<WPoint> enumerate_wp_points(const WeightSystem& ws, const Field& field,
                                        std::uint64_t budget = kDefaultEnumerationBudget);

/// Closed-form count: sum over nonempty supports S of (q-1)^{|S|-1} gcd(k_S, q-1).
std::uint64_t count_wp_points_formula(const WeightSystem& ws, unsigned q);

Height weighted_height(const WPoint& pt, const WeightSystem& ws,
                       HeightConvention convention = HeightConvention::IndexLift);

enum class StabilizerConvention { Geometric, Arithmetic };

std::string to_string(StabilizerConvention c);
StabilizerConvention parse_stabilizer_convention(const std::string& s);

struct OrbifoldEntry {
    Tuple rep;
    int order = 2;
};

struct OrbifoldData {
    StabilizerConvention convention = StabilizerConvention::Geometric;
    std::vector<OrbifoldEntry> entries;
    std::string source = "census";
};

/// True iff the two rational points coincide over the algebraic closure,
/// i.e. some lambda in an extension field maps one onto the other.
bool geometrically_equivalent(const WPoint& a, const WPoint& b, const WeightSystem& ws, const Field& field);

/// Points with nontrivial stabilizer. Under the geometric convention the
/// rational points that merge over the algebraic closure form one entry
/// of order k_S; under the arithmetic convention every rational point
/// with gcd(k_S, q-1) > 1 is its own entry.
OrbifoldData singular_census(const std::vector<WPoint>& points, const WeightSystem& ws, const Field& field,
                             StabilizerConvention convention = StabilizerConvention::Geometric);

/// Serre-type bound on hypersurface points. Absent when the second
/// smallest weight is not 1.
struct SerreBound {
    bool applicable = false;
    std::uint64_t value = 0;
    std::uint64_t projective_term = 0;  // p_{n-1}
    std::uint64_t degree_term = 0;      // floor(e q^{n-1} / w_1) + p_{n-3}
};

/// |P^k(F_q)| with p_{-1} = p_{-2} = 0.
std::uint64_t projective_count(int k, unsigned q);

SerreBound serre_bound(const WeightSystem& ws, int degree, unsigned q);

}  // namespace gqc
