#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "gqc/lincode.hpp"
#include "gqc/matrix.hpp"

namespace gqc {

/// CSS stabilizer code. Rows of hx / hz are the supports of the X- and
/// Z-type generators; commutation means hx . hz^T = 0 over GF(q).
struct CssCode {
    Field field;
    std::size_t n = 0;
    std::size_t k = 0;
    Matrix hx;
    Matrix hz;
    Distance distance;
    std::optional<int> distance_lower;
    std::optional<int> distance_upper;
    std::string distance_method;
    nlohmann::json provenance = nlohmann::json::object();

    CssCode(Field f, Matrix x, Matrix z, nlohmann::json prov = nlohmann::json::object());
};

/// H_X = H_Z = G (Hermitian: H_Z = conj(G)); k = m - 2 dim C.
CssCode css_from_self_orthogonal(const LinearCode& c, InnerProduct ip = InnerProduct::Euclidean);

/// Requires dual(c2) ⊆ c1. H_X checks c1, H_Z checks c2.
CssCode css_from_pair(const LinearCode& c1, const LinearCode& c2);

struct CommutationVerdict {
    bool holds = true;
    std::optional<std::pair<std::size_t, std::size_t>> witness;  // (X row, Z row)
};

CommutationVerdict commutation_check(const CssCode& q);

/// Distance search outcome. `lower` and `upper` bracket the true value
/// whenever the exact search did not finish.
struct QuantumDistance {
    Distance distance;
    std::optional<int> lower;
    std::optional<int> upper;
    std::string method;  // "span", "circuit", "bounds" or "none"
};

/// Minimum weight of ker(H) outside rowspace(S): Z-type logicals for
/// (H_X, H_Z), X-type for (H_Z, H_X).
/// `allow_span = false` skips straight to the circuit search.
QuantumDistance logical_weight(const Matrix& h, const Matrix& s, std::uint64_t budget, bool allow_span = true);

/// min(d_X, d_Z). Exact by span enumeration when q^{dim ker} fits the
/// budget, otherwise by a circuit search over the check matrix columns
/// (a minimum-weight logical is always supported on a minimal dependent
/// column set). When neither finishes the result is a lower bound.
QuantumDistance quantum_distance(const CssCode& q, std::uint64_t budget = kDefaultDistanceBudget,
                                 bool allow_span = true);

/// Stores a search result on the code.
void apply_distance(CssCode& q, const QuantumDistance& d);

/// Deterministic greedy extraction of an isotropic subspace from the
/// span of `candidates` (rows taken in the given order): single rows,
/// then pairs, then triples of rows combined with all nonzero scalars.
/// Stops at `target` dimensions. The result may be smaller than target.
LinearCode isotropic_subcode(const Matrix& candidates, InnerProduct ip, std::size_t target);

}  // namespace gqc
