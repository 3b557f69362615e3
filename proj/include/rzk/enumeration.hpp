#pragma once

// Exhaustive generators for small instances: every simplicial complex on a
// given vertex set (no ghost vertices) and every subtorus of (Z/2)^m.  Both
// walks are deterministic, so downstream property suites see a stable order.

#include <bit>
#include <cstdint>
#include <functional>
#include <vector>

#include "rzk/errors.hpp"
#include "rzk/simplicial_complex.hpp"
#include "rzk/two_torus.hpp"
#include "rzk/vertex_set.hpp"

namespace rzk {

// Enumeration beyond 6 vertices is out of scope for a property suite (the
// count on 7 already exceeds 2 * 10^9).
inline constexpr int kMaxEnumerationWidth = 6;

// Every complex whose vertex set is exactly [m], as a facet antichain walk.
// Candidate facets are scanned in increasing mask order; a subset relation
// can only point from a smaller mask to a larger one, so a candidate only
// has to be checked against containing no previously chosen facet.
inline void for_each_complex_on(int m,
                                const std::function<void(const SimplicialComplex&)>& fn) {
    if (m < 1 || m > kMaxEnumerationWidth)
        throw input_error("complex enumeration supports 1.." +
                          std::to_string(kMaxEnumerationWidth) + " vertices, got " +
                          std::to_string(m));
    const std::uint64_t full = VertexSet::full(m).mask();
    std::vector<std::uint64_t> chosen;
    std::uint64_t covered = 0;

    const std::function<void(std::uint64_t)> walk = [&](std::uint64_t next) {
        if (covered == full) {
            std::vector<VertexSet> facets;
            facets.reserve(chosen.size());
            for (std::uint64_t c : chosen) facets.push_back(VertexSet(c));
            fn(SimplicialComplex(m, facets));
        }
        for (std::uint64_t cand = next; cand <= full; ++cand) {
            bool antichain = true;
            for (std::uint64_t c : chosen)
                if ((c & cand) == c) {
                    antichain = false;
                    break;
                }
            if (!antichain) continue;
            chosen.push_back(cand);
            const std::uint64_t saved = covered;
            covered |= cand;
            walk(cand + 1);
            covered = saved;
            chosen.pop_back();
        }
    };
    walk(1);
}

inline std::vector<SimplicialComplex> all_complexes_on(int m) {
    std::vector<SimplicialComplex> out;
    for_each_complex_on(m, [&](const SimplicialComplex& K) { out.push_back(K); });
    return out;
}

// Every linear subspace of GF(2)^m, each exactly once via its reduced
// echelon basis: pick the pivot bits, then fill the free positions (bits
// that are neither pivots nor left of the row's own pivot).
inline std::vector<Subtorus> all_subtori(int m, int min_rank = 0) {
    if (m < 1 || m > kMaxEnumerationWidth)
        throw input_error("subtorus enumeration supports 1.." +
                          std::to_string(kMaxEnumerationWidth) + " bits, got " +
                          std::to_string(m));
    std::vector<Subtorus> out;
    const std::uint64_t full = VertexSet::full(m).mask();
    for (std::uint64_t pivots = 0; pivots <= full; ++pivots) {
        const int rank = std::popcount(pivots);
        if (rank < min_rank) continue;

        std::vector<int> pivot_bits;
        for (int b = 0; b < m; ++b)
            if ((pivots >> b) & 1) pivot_bits.push_back(b);

        // Free positions of row i: non-pivot bits above the row's pivot.
        std::vector<std::vector<int>> free_bits(pivot_bits.size());
        int total_free = 0;
        for (std::size_t i = 0; i < pivot_bits.size(); ++i) {
            for (int b = pivot_bits[i] + 1; b < m; ++b)
                if (((pivots >> b) & 1) == 0) free_bits[i].push_back(b);
            total_free += static_cast<int>(free_bits[i].size());
        }

        for (std::uint64_t fill = 0; fill < (std::uint64_t{1} << total_free);
             ++fill) {
            std::vector<GroupElement> rows;
            rows.reserve(pivot_bits.size());
            int consumed = 0;
            for (std::size_t i = 0; i < pivot_bits.size(); ++i) {
                std::uint64_t bits = std::uint64_t{1} << pivot_bits[i];
                for (int b : free_bits[i]) {
                    if ((fill >> consumed) & 1) bits |= std::uint64_t{1} << b;
                    ++consumed;
                }
                rows.emplace_back(bits, m);
            }
            out.push_back(Subtorus::from_generators(m, rows));
        }
    }
    return out;
}

}  // namespace rzk
