#pragma once

// Internal: odometer enumeration of affine spans used by the distance and
// weight-distribution searches.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <thread>
#include <utility>
#include <vector>

#include "gqc/field.hpp"
#include "gqc/matrix.hpp"

namespace gqc::detail {

/// Visits base + sum_j c_j rows[j] for every c in GF(q)^{rows}. Each step
/// changes one digit (amortized), so the vector and its weight are updated
/// through sparse precomputed differences.
template <class Visit>
void for_each_in_span(const Field& field, const Vector& base, const std::vector<Vector>& rows, Visit&& visit) {
    const unsigned q = field.q();
    using Sparse = std::vector<std::pair<std::uint32_t, Elem>>;
    std::vector<std::vector<Sparse>> diffs(rows.size(), std::vector<Sparse>(q));
    for (std::size_t j = 0; j < rows.size(); ++j) {
        for (Elem u = 0; u < q; ++u) {
            const Elem next = (u + 1 == q) ? 0 : u + 1;
            const Elem delta = field.sub(next, u);
            for (std::size_t pos = 0; pos < rows[j].size(); ++pos)
                if (rows[j][pos] != 0)
                    diffs[j][u].emplace_back(static_cast<std::uint32_t>(pos), field.mul(delta, rows[j][pos]));
        }
    }
    Vector v = base;
    int weight = hamming_weight(v);
    std::vector<Elem> digit(rows.size(), 0);
    while (true) {
        visit(v, weight);
        std::size_t j = 0;
        for (; j < rows.size(); ++j) {
            for (const auto& [pos, val] : diffs[j][digit[j]]) {
                const bool was = v[pos] != 0;
                v[pos] = field.add(v[pos], val);
                weight += static_cast<int>(v[pos] != 0) - static_cast<int>(was);
            }
            digit[j] = (digit[j] + 1 == q) ? 0 : digit[j] + 1;
            if (digit[j] != 0) break;
        }
        if (j == rows.size()) break;
    }
}

/// Runs fn(i) for i in [0, n) across hardware threads. Callers write
/// results into per-index slots, so the reduction order stays fixed.
inline void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
    const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(n, std::thread::hardware_concurrency()));
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < n; i = next++) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

/// Work unit of a normalized enumeration: the leading nonzero coefficient
/// of the `extra` part is 1 at position `lead`, and the first free row (if
/// any) is pinned to coefficient `top`.
struct SpanUnit {
    std::size_t lead;
    Elem top;
};

/// Splits {b.B + a.A : b != 0, leading nonzero b is 1} into units.
inline std::vector<SpanUnit> normalized_units(const Field& field, std::size_t n_extra, std::size_t n_inside) {
    std::vector<SpanUnit> units;
    for (std::size_t t = 0; t < n_extra; ++t) {
        const std::size_t free = (n_extra - 1 - t) + n_inside;
        if (free == 0) {
            units.push_back({t, 0});
        } else {
            for (Elem c = 0; c < field.q(); ++c) units.push_back({t, c});
        }
    }
    return units;
}

/// Enumerates one unit, calling visit(v, weight).
template <class Visit>
void run_unit(const Field& field, const std::vector<Vector>& extra, const std::vector<Vector>& inside,
              const SpanUnit& unit, Visit&& visit) {
    std::vector<Vector> free_rows;
    for (std::size_t j = unit.lead + 1; j < extra.size(); ++j) free_rows.push_back(extra[j]);
    for (const auto& r : inside) free_rows.push_back(r);
    Vector base = extra[unit.lead];
    if (!free_rows.empty()) {
        for (std::size_t pos = 0; pos < base.size(); ++pos)
            base[pos] = field.add(base[pos], field.mul(unit.top, free_rows.front()[pos]));
        free_rows.erase(free_rows.begin());
    }
    for_each_in_span(field, base, free_rows, visit);
}

}  // namespace gqc::detail
