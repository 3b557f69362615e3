#pragma once

// Brute-force reference implementations used only by tests.  These avoid the
// library's algorithms on purpose: the face family is built by closing the
// facet list under single-vertex deletion, and every invariant is read off a
// full scan of all 2^m subsets.  Usable for small m only.

#include <cstdint>
#include <set>
#include <vector>

#include "rzk/simplicial_complex.hpp"

namespace rzk::testing {

// Face family as raw masks, via deletion closure of the facets.
inline std::set<std::uint64_t> brute_face_set(const SimplicialComplex& K) {
    std::set<std::uint64_t> faces;
    std::vector<std::uint64_t> frontier;
    for (VertexSet f : K.facets()) {
        if (faces.insert(f.mask()).second) frontier.push_back(f.mask());
    }
    while (!frontier.empty()) {
        std::uint64_t cur = frontier.back();
        frontier.pop_back();
        for (std::uint64_t b = cur; b != 0; b &= b - 1) {
            std::uint64_t smaller = cur & ~(b & (~b + 1));
            if (faces.insert(smaller).second) frontier.push_back(smaller);
        }
    }
    return faces;
}

inline bool brute_is_face(const SimplicialComplex& K, VertexSet s) {
    return brute_face_set(K).count(s.mask()) > 0;
}

// Smallest size of a non-face, or 0 if every subset is a face.
inline int brute_min_non_face_size(const SimplicialComplex& K) {
    const auto faces = brute_face_set(K);
    const std::uint64_t all = VertexSet::full(K.width()).mask();
    int best = 0;
    for (std::uint64_t s = 0; s <= all; ++s) {
        if (faces.count(s)) continue;
        int size = std::popcount(s);
        if (best == 0 || size < best) best = size;
    }
    return best;
}

inline ExtendedNat brute_delta(const SimplicialComplex& K) {
    int s = brute_min_non_face_size(K);
    if (s == 0) return ExtendedNat::infinity();
    return ExtendedNat(static_cast<std::uint64_t>(s - 1));
}

// Minimal non-faces by direct definition: a non-face all of whose
// one-smaller subsets are faces.  Sorted by (size, mask) for comparisons.
inline std::vector<VertexSet> brute_minimal_non_faces(
    const SimplicialComplex& K) {
    const auto faces = brute_face_set(K);
    const std::uint64_t all = VertexSet::full(K.width()).mask();
    std::vector<VertexSet> out;
    for (std::uint64_t s = 1; s <= all; ++s) {
        if ((s & ~all) != 0 || faces.count(s)) continue;
        bool minimal = true;
        for (std::uint64_t b = s; b != 0 && minimal; b &= b - 1)
            minimal = faces.count(s & ~(b & (~b + 1))) > 0;
        if (minimal) out.push_back(VertexSet(s));
    }
    std::sort(out.begin(), out.end(), [](VertexSet a, VertexSet b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.mask() < b.mask();
    });
    return out;
}

inline ExtendedNat brute_flag(const SimplicialComplex& K) {
    const auto mnf = brute_minimal_non_faces(K);
    if (mnf.empty()) return ExtendedNat::infinity();
    int best = 0;
    for (VertexSet s : mnf) best = std::max(best, s.dimension());
    return ExtendedNat(static_cast<std::uint64_t>(best));
}

inline bool brute_is_q_neighborly(const SimplicialComplex& K, int q) {
    const auto faces = brute_face_set(K);
    const std::uint64_t all = VertexSet::full(K.width()).mask();
    for (std::uint64_t s = 0; s <= all; ++s) {
        if (std::popcount(s) <= q + 1 && faces.count(s) == 0) return false;
    }
    return true;
}

// Faces of K_I in original labels: faces of K contained in I.
inline std::set<std::uint64_t> brute_full_subcomplex_faces(
    const SimplicialComplex& K, VertexSet I) {
    std::set<std::uint64_t> out;
    for (std::uint64_t f : brute_face_set(K))
        if ((f & ~I.mask()) == 0) out.insert(f);
    return out;
}

}  // namespace rzk::testing
