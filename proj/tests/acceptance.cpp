// Acceptance run: one PASS/FAIL line per criterion, each under a fixed
// wall-clock ceiling. Mismatches against published claims that are not
// criteria of their own print as FINDING lines and do not fail the run.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "gqc/chain.hpp"
#include "gqc/gpoly.hpp"
#include "gqc/lincode.hpp"
#include "gqc/orbifold.hpp"
#include "gqc/quantum.hpp"
#include "oracles.hpp"
#include "properties.hpp"

using namespace gqc;

namespace {

struct Outcome {
    bool ok = true;
    std::vector<std::string> notes;     // printed under the criterion line
    std::vector<std::string> findings;  // disagreements with published claims

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            notes.push_back("violated: " + what);
        }
    }
};

int failures = 0;

void criterion(int id, const std::string& title, double limit_s, const std::function<void(Outcome&)>& body) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(o);
    } catch (const std::exception& e) {
        o.ok = false;
        o.notes.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > limit_s) {
        o.ok = false;
        std::ostringstream s;
        s << "exceeded time limit of " << limit_s << " s";
        o.notes.push_back(s.str());
    }
    if (!o.ok) ++failures;
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << id << ": " << title << " (" << std::fixed
              << std::setprecision(3) << secs << " s, limit " << std::setprecision(0) << limit_s << " s)\n";
    for (const auto& n : o.notes) std::cout << "    " << n << "\n";
    for (const auto& f : o.findings) std::cout << "FINDING criterion " << id << ": " << f << "\n";
}

std::string str(std::uint64_t v) { return std::to_string(v); }

const char* k112 = "x0^10+x1^5+x2^2+x3";

Hypersurface surface_112() {
    return Hypersurface(WeightSystem({2, 4, 6, 10}), Polynomial::parse(k112, Field::of_order(5)), false);
}

LinearCode hamming() {
    return LinearCode(Matrix::from_rows(
        Field::of_order(2), {{1, 0, 0, 0, 0, 1, 1}, {0, 1, 0, 0, 1, 0, 1}, {0, 0, 1, 0, 1, 1, 0}, {0, 0, 0, 1, 1, 1, 1}}));
}

}  // namespace

int main() {
    criterion(1, "WP(1,2) point counts", 1, [](Outcome& o) {
        for (unsigned q : {2u, 3u, 4u, 5u, 7u, 9u}) {
            const std::uint64_t want = q % 2 ? q + 2 : q + 1;
            const WeightSystem ws({1, 2});
            const auto formula = count_wp_points_formula(ws, q);
            const auto enumerated = enumerate_wp_points(ws, Field::of_order(q)).size();
            o.require(formula == want, "formula q=" + str(q) + " gave " + str(formula));
            o.require(enumerated == want, "enumeration q=" + str(q) + " gave " + str(enumerated));
        }
    });

    criterion(2, "formula equals enumeration for lengths <= 3, weights <= 6", 60, [](Outcome& o) {
        std::size_t cases = 0;
        for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
            const Field f = Field::of_order(q);
            const oracle::NaiveField nf{f.p(), f.e(), f.modulus()};
            std::vector<std::vector<int>> systems;
            for (int a = 1; a <= 6; ++a) {
                systems.push_back({a});
                for (int b = 1; b <= 6; ++b) {
                    systems.push_back({a, b});
                    for (int c = 1; c <= 6; ++c) systems.push_back({a, b, c});
                }
            }
            for (const auto& w : systems) {
                ++cases;
                const WeightSystem ws(w);
                const auto formula = count_wp_points_formula(ws, q);
                const auto enumerated = enumerate_wp_points(ws, f).size();
                if (formula != enumerated || (w.size() == 3 && formula != oracle::wp_orbit_count(nf, w))) {
                    std::ostringstream s;
                    s << "q=" << q << " weights";
                    for (int x : w) s << " " << x;
                    s << ": formula " << formula << ", enumeration " << enumerated;
                    o.require(false, s.str());
                }
            }
        }
        o.notes.push_back(str(cases) + " cases");
    });

    criterion(3, "112-point surface over GF(5)", 5, [](Outcome& o) {
        const Hypersurface h = surface_112();
        const auto pts = hypersurface_points(h);
        o.require(pts.size() == 112, "point count " + str(pts.size()));
        const WeightSystem& ws = h.weights();
        o.require(den(ws, 20) == 20, "den(20) = " + str(den(ws, 20)));
        const LinearCode c = evaluation_code(ws, 20, pts, h.field());
        o.require(c.length() == 112, "length " + str(c.length()));
        o.notes.push_back("evaluation code rank " + str(c.dimension()));
        if (c.dimension() != 20) o.findings.push_back("rank " + str(c.dimension()) + ", claimed dimension 20");
    });

    criterion(4, "superelliptic curve y^3 = x^4+x+1 over GF(7)", 1, [](Outcome& o) {
        const Field f = Field::of_order(7);
        const Polynomial curve = Polynomial::parse("y^3-x^4-x-1", f);
        const auto pts = affine_points(curve);
        o.require(pts.size() == 12, "affine count " + str(pts.size()));
        // brute-force oracle over all 49 pairs
        std::size_t brute = 0;
        for (unsigned x = 0; x < 7; ++x)
            for (unsigned y = 0; y < 7; ++y) brute += (y * y * y + 6 * (x * x * x * x + x + 1)) % 7 == 0;
        o.require(brute == 12, "oracle count " + str(brute));
        const auto orbits = scaling_orbits(pts, f, 1, 3);
        o.require(orbits.size() == 4, "orbit count " + str(orbits.size()));
        for (const auto& orb : orbits) o.require(orb.size() == 3, "orbit of size " + str(orb.size()));
        const std::vector<Polynomial> fs{Polynomial::parse("1", f, 2), Polynomial::parse("x", f, 2),
                                         Polynomial::parse("x^2", f, 2)};
        const LinearCode c = affine_evaluation_code(fs, pts);
        const Distance d = min_distance(c);
        o.require(c.dimension() == 3 && d.exact(), "invariant code is not an exact-distance [12,3] code");
        o.notes.push_back("invariant code span{1,x,x^2}: [12," + str(c.dimension()) + "," + str(*d.value) + "]");
        if (d.value != 7) o.findings.push_back("invariant code distance " + str(*d.value) + ", claimed [12,3,7]");
        if (!is_self_orthogonal(c).holds)
            o.findings.push_back("invariant code is not self-orthogonal, claimed self-orthogonal");
    });

    criterion(5, "genus-2 curve over GF(9)", 1, [](Outcome& o) {
        const Field f = Field::parse("p=3,e=2,mod=1,0,1");
        const auto pts = affine_points(Polynomial::parse("y^2-x^5+2*x^3-x^2-1", f));
        o.notes.push_back("affine points: " + str(pts.size()) + " of 81 pairs");
        // schoolbook GF(9) oracle: y^2 + 2x^5 + 2x^3 + 2x^2 + 2 = 0
        const oracle::NaiveField nf{3, 2, {1, 0, 1}};
        std::size_t brute = 0;
        for (unsigned x = 0; x < 9; ++x)
            for (unsigned y = 0; y < 9; ++y) {
                unsigned v = nf.pow(y, 2);
                for (unsigned k : {5u, 3u, 2u}) v = nf.add(v, nf.mul(2, nf.pow(x, k)));
                brute += nf.add(v, 2) == 0;
            }
        o.require(brute == pts.size(), "oracle count " + str(brute));
        o.require(pts.size() == 11, "enumerated count changed from the committed 11");
        if (pts.size() != 8) o.findings.push_back("affine count " + str(pts.size()) + ", claimed 8 rational places");
    });

    criterion(6, "Steane pipeline", 1, [](Outcome& o) {
        const LinearCode h = hamming();
        o.require(min_distance(h) == Distance{3, DistanceKind::Exact}, "Hamming distance");
        o.require(weight_distribution(h) == WeightDistribution{{0, 1}, {3, 7}, {4, 7}, {7, 1}},
                  "Hamming weight distribution");
        const LinearCode s = dual_code(h);
        o.require(is_self_orthogonal(s).holds, "simplex self-orthogonality");
        const CssCode q = css_from_pair(h, h);
        o.require(q.n == 7 && q.k == 1, "[[7,1]] parameters");
        o.require(commutation_check(q).holds, "commutation");
        o.require(quantum_distance(q).distance == Distance{3, DistanceKind::Exact}, "quantum distance 3");
    });

    criterion(7, "toric codes [[2L^2, 2, L]]", 30, [](Outcome& o) {
        for (int L : {2, 3, 4}) {
            const CssCode q = homological_code(toric_complex(L), 1);
            o.require(q.n == static_cast<std::size_t>(2 * L * L) && q.k == 2, "L=" + std::to_string(L) + " n,k");
            o.require(commutation_check(q).holds, "L=" + std::to_string(L) + " commutation");
            if (L <= 3) {
                o.require(quantum_distance(q).distance == Distance{L, DistanceKind::Exact},
                          "L=" + std::to_string(L) + " exact distance");
            } else {
                const auto w = toric_witness(L);
                const bool logical = RowSpace(q.hx.nullspace()).contains(w.z_logical) &&
                                     !RowSpace(q.hz).contains(w.z_logical);
                o.require(logical && hamming_weight(w.z_logical) == L, "L=4 witness cycle");
                o.notes.push_back("L=4: witness gives d <= 4");
            }
        }
    });

    criterion(8, "bound arithmetic", 1, [](Outcome& o) {
        OrbifoldData two;
        two.entries = {{{}, 2}, {{}, 2}};
        o.require(epsilon(two) == Rational(1, 2), "epsilon of two order-2 points");
        const auto castle = refined_bound(10, 2, Rational(1, 2));
        o.require(castle.plain == 5 && castle.refined == Rational(19, 4), "refined_bound(10,2,1/2)");
        const auto ldpc = refined_bound(64, 16, 4);
        o.require(ldpc.plain == 25 && ldpc.refined == 23, "refined_bound(64,16,4)");
        const auto approx2 = refined_bound(64, 16, 2);
        o.require(approx2.refined == 24, "refined_bound(64,16,2)");
        if (approx2.refined != 23)
            o.findings.push_back("epsilon = 2 gives refined bound " + to_string(approx2.refined) +
                                 " for [[64,16]], claimed 25 -> 23; the table value needs epsilon = 4");
    });

    criterion(9, "property suites", 120, [](Outcome& o) {
        const std::vector<std::pair<std::string, props::Tally>> runs{
            {"field axioms", props::field_axioms(101)},
            {"duality", props::duality(102, 80)},
            {"distance cross-checks", props::distance_crosscheck(103, 80)},
            {"chain complexes", props::chain_checks(104, 60)},
            {"quantum codes", props::quantum_checks(105, 60)},
        };
        for (const auto& [name, t] : runs) {
            o.notes.push_back(name + ": " + str(t.cases) + " cases, " + str(t.violations) + " violations");
            o.require(t.violations == 0, name + ": " + t.first);
            o.require(t.cases > 0, name + ": no cases ran");
        }
        o.require(runs[1].second.cases >= 50, "fewer than 50 duality cases");
    });

    criterion(10, "zeta counts", 60, [](Outcome& o) {
        const auto p1 = zeta_counts_space(WeightSystem({1, 1}), Field::of_order(2), 3);
        o.require(p1 == std::vector<std::uint64_t>{3, 5, 9}, "P^1 over GF(2)");
        const auto a = zeta_counts(surface_112(), 2);
        const auto b = zeta_counts(surface_112(), 2);
        o.require(a == b, "repeat run differs");
        o.require(a.size() == 2 && a[0] == 112 && a[1] == 13352, "surface counts differ from the committed (112, 13352)");
        if (a.size() == 2) o.notes.push_back("N1 = " + str(a[0]) + ", N2 = " + str(a[1]));
    });

    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << "\n";
    return failures == 0 ? 0 : 1;
}
