#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "gqc/lincode.hpp"
#include "gqc/matrix.hpp"
#include "gqc/quantum.hpp"
#include "gqc/rational.hpp"
#include "gqc/wgeom.hpp"

namespace gqc {

/// Graded complex C_lo .. C_hi over GF(q). diff(d) is the dim C_{d-1} x
/// dim C_d matrix of the boundary map acting on column vectors; degrees
/// outside [lo, hi] are zero spaces.
class ChainComplex {
public:
    /// Validates shapes and d^2 = 0. Missing differentials are zero maps.
    ChainComplex(Field field, int lo, int hi, std::map<int, std::size_t> dims, std::map<int, Matrix> diff,
                 std::map<int, nlohmann::json> grades = {});

    static ChainComplex from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;

    const Field& field() const { return field_; }
    int lo() const { return lo_; }
    int hi() const { return hi_; }
    std::size_t dim(int d) const;
    /// Zero matrix of the right shape when the map was not supplied.
    Matrix diff(int d) const;
    const std::map<int, nlohmann::json>& grades() const { return grades_; }

private:
    Field field_;
    int lo_;
    int hi_;
    std::map<int, std::size_t> dims_;
    std::map<int, Matrix> diff_;
    std::map<int, nlohmann::json> grades_;
};

struct HomologyReport {
    std::map<int, std::size_t> betti;
    std::map<int, std::size_t> rank;  // rank of diff(d)
    long long euler_chain = 0;        // sum (-1)^d dim C_d
    long long euler_homology = 0;     // sum (-1)^d betti_d
};

HomologyReport homology(const ChainComplex& x);

/// H_X = diff(d+1)^T, H_Z = diff(d); k = betti_d. The distance is left
/// unset; callers run quantum_distance.
CssCode homological_code(const ChainComplex& x, int d);

/// Cellular complex of the L x L square torus over GF(2), degrees 0..2.
/// Horizontal edge (i,j) -> (i,j+1) has index i L + j, vertical edge
/// (i,j) -> (i+1,j) has index L^2 + i L + j.
ChainComplex toric_complex(int L);

/// Weight-L logical representatives of the toric code in degree 1: a
/// non-contractible cocycle (Z type) and cycle (X type).
struct ToricWitness {
    Vector z_logical;
    Vector x_logical;
};

ToricWitness toric_witness(int L);

/// Subcomplex spanned by basis vectors whose grade label has j <= k. A
/// label is either an integer j or a pair [i, j]; degrees without labels
/// are kept whole. Throws NotSubcomplex if the differentials leave it.
ChainComplex filter_by_grade(const ChainComplex& x, int k);

/// nullopt threshold stands for infinity.
using Threshold = std::optional<Rational>;

struct FiltrationLevel {
    Threshold threshold;
    std::vector<std::size_t> members;  // indices into the input points
};

struct Filtration {
    std::vector<FiltrationLevel> levels;
};

/// Nested point sets {p : height(p) <= t}, one per ascending threshold.
Filtration height_filtration(const std::vector<Height>& heights, const std::vector<Threshold>& thresholds);

/// Evaluation code of degree d on each level; nullopt for empty levels.
std::vector<std::optional<LinearCode>> filtration_codes(const Filtration& filt, const WeightSystem& ws, int d,
                                                        const std::vector<WPoint>& points, const Field& field);

}  // namespace gqc
