#pragma once

// Elementary collapses.  A collapse step removes a pair (facet, free_face)
// where free_face is properly contained in the facet and in no other face;
// that forces |facet| = |free_face| + 1 and leaves a downward-closed family,
// so the result is again a simplicial complex (possibly with ghost
// vertices).  The search below looks for a sequence of steps that lowers
// the dimension, a certificate consumed by the index upper bound.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "rzk/errors.hpp"
#include "rzk/simplicial_complex.hpp"
#include "rzk/vertex_set.hpp"

namespace rzk {

struct CollapseStep {
    VertexSet facet;      // removed together with free_face
    VertexSet free_face;  // contained in no other face

    friend bool operator==(CollapseStep a, CollapseStep b) {
        return a.facet == b.facet && a.free_face == b.free_face;
    }
    std::string to_string() const {
        return "(" + facet.to_string() + "," + free_face.to_string() + ")";
    }
};

struct CollapseCertificate {
    std::vector<CollapseStep> steps;  // applied first to last
    int final_dim;                    // dimension after the last step

    friend bool operator==(const CollapseCertificate& a,
                           const CollapseCertificate& b) {
        return a.steps == b.steps && a.final_dim == b.final_dim;
    }
};

inline constexpr int kDefaultCollapseRestarts = 8;

namespace detail {

// Mutable face family used by the search; keyed by mask.
struct FaceFamily {
    int m;
    std::unordered_set<std::uint64_t> faces;

    explicit FaceFamily(const SimplicialComplex& K) : m(K.width()) {
        faces.reserve(K.faces().size() * 2);
        for (VertexSet f : K.faces()) faces.insert(f.mask());
    }

    bool contains(std::uint64_t mask) const { return faces.count(mask) > 0; }

    // A non-empty face is free iff it has exactly one coface one dimension
    // up; any larger coface would supply two different such cofaces.
    // Returns the unique coface mask, or nullopt.
    std::optional<std::uint64_t> unique_coface(std::uint64_t tau) const {
        const std::uint64_t outside = VertexSet(tau).complement_in(m).mask();
        std::uint64_t found = 0;
        int count = 0;
        for (std::uint64_t b = outside; b != 0; b &= b - 1) {
            const std::uint64_t cand = tau | (b & (~b + 1));
            if (contains(cand)) {
                if (++count > 1) return std::nullopt;
                found = cand;
            }
        }
        if (count == 1) return found;
        return std::nullopt;
    }

    void remove_pair(std::uint64_t facet, std::uint64_t tau) {
        faces.erase(facet);
        faces.erase(tau);
    }

    int dim() const {
        int best = -1;
        for (std::uint64_t f : faces)
            best = std::max(best, std::popcount(f) - 1);
        return best;
    }
};

}  // namespace detail

// All free pairs of K, sorted by (facet size, facet mask, face mask).
// Pairs with an empty free face are excluded: removing the last vertex of a
// point complex is never useful for a dimension drop.
inline std::vector<CollapseStep> free_pairs(const SimplicialComplex& K) {
    detail::FaceFamily family(K);
    std::vector<CollapseStep> out;
    for (std::uint64_t tau : family.faces) {
        if (tau == 0) continue;
        if (auto facet = family.unique_coface(tau))
            out.push_back(CollapseStep{VertexSet(*facet), VertexSet(tau)});
    }
    std::sort(out.begin(), out.end(), [](CollapseStep a, CollapseStep b) {
        if (a.facet.size() != b.facet.size())
            return a.facet.size() < b.facet.size();
        if (a.facet.mask() != b.facet.mask())
            return a.facet.mask() < b.facet.mask();
        return a.free_face.mask() < b.free_face.mask();
    });
    return out;
}

// Applies one collapse step, validating it from scratch.  The result may
// have ghost vertices (it keeps the width of K).
inline SimplicialComplex apply_collapse(const SimplicialComplex& K,
                                        CollapseStep step) {
    detail::FaceFamily family(K);
    const std::uint64_t tau = step.free_face.mask();
    const std::uint64_t sigma = step.facet.mask();
    if (tau == 0 || !family.contains(tau) || !family.contains(sigma) ||
        !step.free_face.proper_subset_of(step.facet) ||
        family.unique_coface(tau) != std::optional<std::uint64_t>{sigma})
        throw not_a_free_pair_error(step.to_string());

    family.remove_pair(sigma, tau);
    std::vector<VertexSet> remaining;
    remaining.reserve(family.faces.size());
    for (std::uint64_t f : family.faces) remaining.push_back(VertexSet(f));
    return SimplicialComplex(K.width(), remaining, GhostPolicy::allow);
}

// Greedy search for a collapse sequence lowering the dimension of K.
//
//   budget    max steps per restart; defaults to 2 * (face count of K)
//   restarts  additional randomized attempts after the deterministic one
//   seed      drives the randomized tie-breaks
//
// Attempt 0 always picks the free pair with the largest facet, smallest
// (facet mask, face mask); later attempts pick uniformly among the
// largest-facet pairs.  The first attempt that drops the dimension wins, so
// the result depends only on (budget, restarts, seed).  A nullopt result
// ("exhausted") says nothing about whether K can collapse.
inline std::optional<CollapseCertificate> search_dim_reduction(
    const SimplicialComplex& K,
    std::optional<unsigned long long> budget = std::nullopt,
    int restarts = kDefaultCollapseRestarts, std::uint64_t seed = 0) {
    if (K.dim() < 1)
        throw input_error("collapse search needs a complex of dimension >= 1");
    const unsigned long long max_steps =
        budget.value_or(2 * static_cast<unsigned long long>(K.faces().size()));
    const int top_size = K.dim() + 1;

    for (int attempt = 0; attempt <= restarts; ++attempt) {
        detail::FaceFamily family(K);
        std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ull *
                                       static_cast<std::uint64_t>(attempt));
        std::vector<CollapseStep> steps;
        long long remaining_top = 0;
        for (std::uint64_t f : family.faces)
            if (std::popcount(f) == top_size) ++remaining_top;

        while (static_cast<unsigned long long>(steps.size()) < max_steps) {
            // Candidates with the largest facet available right now.
            std::vector<CollapseStep> best;
            int best_size = 0;
            for (std::uint64_t tau : family.faces) {
                if (tau == 0) continue;
                const int facet_size = std::popcount(tau) + 1;
                if (facet_size < best_size) continue;
                if (auto facet = family.unique_coface(tau)) {
                    if (facet_size > best_size) {
                        best.clear();
                        best_size = facet_size;
                    }
                    best.push_back(
                        CollapseStep{VertexSet(*facet), VertexSet(tau)});
                }
            }
            if (best.empty()) break;  // dead end for this attempt

            // Canonical candidate order; hash-set iteration must not leak
            // into the choice.
            std::sort(best.begin(), best.end(),
                      [](CollapseStep a, CollapseStep b) {
                          return std::pair{a.facet.mask(), a.free_face.mask()} <
                                 std::pair{b.facet.mask(), b.free_face.mask()};
                      });
            std::size_t pick = 0;
            if (attempt != 0)
                pick = static_cast<std::size_t>(rng() % best.size());
            const CollapseStep step = best[pick];
            if (step.facet.size() == top_size) --remaining_top;
            family.remove_pair(step.facet.mask(), step.free_face.mask());
            steps.push_back(step);
            if (remaining_top == 0)
                return CollapseCertificate{std::move(steps), family.dim()};
        }
    }
    return std::nullopt;
}

// Definitional replay of a certificate against K: every step must be a free
// pair at its stage and the end dimension must match and be below dim K.
// Deliberately re-derives everything from a plain sorted face set.
inline bool validate_collapse(const SimplicialComplex& K,
                              const CollapseCertificate& cert) {
    std::set<std::uint64_t> faces;
    for (VertexSet f : K.faces()) faces.insert(f.mask());
    for (const CollapseStep& step : cert.steps) {
        const std::uint64_t sigma = step.facet.mask();
        const std::uint64_t tau = step.free_face.mask();
        if (tau == 0 || faces.count(tau) == 0 || faces.count(sigma) == 0)
            return false;
        if (!step.free_face.proper_subset_of(step.facet)) return false;
        if (step.facet.size() != step.free_face.size() + 1) return false;
        for (std::uint64_t f : faces)
            if (f != sigma && f != tau && (tau & ~f) == 0 && std::popcount(f) >
                                                                 std::popcount(tau))
                return false;  // another proper coface: not free
        faces.erase(sigma);
        faces.erase(tau);
    }
    int final_dim = -1;
    for (std::uint64_t f : faces)
        final_dim = std::max(final_dim, std::popcount(f) - 1);
    return final_dim == cert.final_dim && final_dim < K.dim();
}

}  // namespace rzk
