#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "gqc/gpoly.hpp"
#include "gqc/matrix.hpp"
#include "gqc/wgeom.hpp"

namespace gqc {

inline constexpr std::uint64_t kDefaultDistanceBudget = 10'000'000;

enum class InnerProduct { Euclidean, Hermitian };

std::string to_string(InnerProduct ip);
InnerProduct parse_inner_product(const std::string& s);

enum class DistanceKind { Exact, LowerBound, UpperBound, Undefined };

std::string to_string(DistanceKind k);
DistanceKind parse_distance_kind(const std::string& s);

/// A distance value with its provenance. Undefined carries no value (used
/// for codes without logical operators).
struct Distance {
    std::optional<int> value;
    DistanceKind kind = DistanceKind::Undefined;

    bool exact() const { return kind == DistanceKind::Exact; }
    friend bool operator==(const Distance&, const Distance&) = default;
};

using WeightDistribution = std::map<int, std::uint64_t>;

/// Cached analyses attached to a code.
struct CodeAnalysis {
    std::optional<Distance> distance;
    std::optional<WeightDistribution> weights;
    bool weights_exact = false;
};

/// Linear [m, k] code over GF(q) stored by its reduced row-echelon generator.
class LinearCode {
public:
    explicit LinearCode(const Matrix& generator, nlohmann::json provenance = nlohmann::json::object());

    const Field& field() const { return generator_.field(); }
    std::size_t length() const { return generator_.cols(); }
    std::size_t dimension() const { return generator_.rows(); }
    const Matrix& generator() const { return generator_; }
    const nlohmann::json& provenance() const { return provenance_; }
    nlohmann::json& provenance() { return provenance_; }

    const CodeAnalysis& analysis() const { return analysis_; }
    CodeAnalysis& analysis() { return analysis_; }

    /// Row-space equality.
    friend bool operator==(const LinearCode& a, const LinearCode& b) { return a.generator_ == b.generator_; }

private:
    Matrix generator_;
    nlohmann::json provenance_;
    CodeAnalysis analysis_;
};

/// Rows of the den(ws, d) x m matrix of monomial evaluations at the given
/// representatives, in graded-lex monomial order.
Matrix evaluation_matrix(const WeightSystem& ws, int d, const std::vector<WPoint>& points, const Field& field);

/// Image of S_d under evaluation at the points' canonical representatives.
LinearCode evaluation_code(const WeightSystem& ws, int d, const std::vector<WPoint>& points, const Field& field);

/// Image of span(polys) under evaluation at affine points.
LinearCode affine_evaluation_code(const std::vector<Polynomial>& polys, const std::vector<Tuple>& points);

/// Euclidean or Hermitian orthogonal complement.
LinearCode dual_code(const LinearCode& c, InnerProduct ip = InnerProduct::Euclidean);

/// Exact minimum weight by enumeration when q^k <= budget, otherwise the
/// smaller of the Singleton ceiling m - k + 1 and the lightest generator
/// row, flagged as an upper bound.
Distance min_distance(const LinearCode& c, std::uint64_t budget = kDefaultDistanceBudget);

/// Full weight enumerator; BudgetExceeded when q^k > budget.
WeightDistribution weight_distribution(const LinearCode& c, std::uint64_t budget = kDefaultDistanceBudget);

/// Minimum distance via zero counting over the whole graded piece S_d:
/// m - max |Z(f)| over f in S_d whose evaluation vector is nonzero.
Distance footprint_distance(const WeightSystem& ws, int d, const std::vector<WPoint>& points, const Field& field,
                            std::uint64_t budget = kDefaultDistanceBudget);

struct OrthogonalityVerdict {
    bool holds = true;
    std::optional<std::pair<std::size_t, std::size_t>> witness;  // generator rows with nonzero product
};

OrthogonalityVerdict is_self_orthogonal(const LinearCode& c, InnerProduct ip = InnerProduct::Euclidean);

struct ContainmentVerdict {
    bool holds = true;
    std::optional<Vector> witness;  // a generator of the inner code outside the outer one
};

/// inner ⊆ outer.
ContainmentVerdict contains(const LinearCode& outer, const LinearCode& inner);

/// Codeword with the given message (message . G).
Vector encode(const LinearCode& c, std::span<const Elem> message);

struct PlaneDimension {
    long long closed_form = 0;  // without any overlap correction term
    std::size_t rank = 0;       // authoritative, from the evaluation code
    bool agrees = false;
};

/// Dimension of the degree-d WPRM code on WP(1, w1, w2) over GF(q): the
/// closed-form monomial count beside the computed rank.
PlaneDimension wprm_plane_dimension(int w1, int w2, int d, unsigned q);

/// Minimum weight over vectors b.B + a.A with b != 0 (a arbitrary), by
/// enumeration. Used for classical distance (A empty) and for quantum
/// distances (A = stabilizers, B = logical representatives).
std::optional<int> min_weight_outside(const Field& field, const std::vector<Vector>& extra,
                                      const std::vector<Vector>& inside, std::uint64_t budget);

}  // namespace gqc
