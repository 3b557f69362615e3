#pragma once

// Abstract simplicial complexes on {1, ..., m}, stored as the antichain of
// facets.  The empty set is always a face.  A "ghost vertex" is a label in
// 1..m that lies in no facet; the ordinary constructor rejects ghosts, but
// complexes produced by elementary collapses are allowed to carry them.
//
// The combinatorial invariants computed here:
//   delta_number     smallest dimension of a non-face (infinity for a full
//                    simplex, which has no non-face),
//   flag_number      largest dimension of a *minimal* non-face (infinity for
//                    a full simplex),
// together with minimal non-face enumeration and full subcomplexes K_I.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_set>
#include <vector>

#include "rzk/errors.hpp"
#include "rzk/extended_nat.hpp"
#include "rzk/vertex_set.hpp"

namespace rzk {

enum class GhostPolicy { reject, allow };

class SimplicialComplex {
  public:
    // Builds the complex generated by `generators` (any list of faces; they
    // are reduced to the facet antichain).  Throws vertex_out_of_range_error
    // for labels outside 1..m and, under GhostPolicy::reject, a
    // ghost_vertex_error naming the smallest uncovered vertex.
    SimplicialComplex(int m, const std::vector<VertexSet>& generators,
                      GhostPolicy ghosts = GhostPolicy::reject)
        : m_(m), cache_(std::make_shared<FaceCache>()) {
        if (m < 1 || m > kMaxWidth)
            throw vertex_out_of_range_error(m, kMaxWidth);
        const VertexSet ground = VertexSet::full(m);
        for (VertexSet g : generators) {
            if (!g.subset_of(ground)) {
                const VertexSet out = g - ground;
                throw vertex_out_of_range_error(out.lowest(), m);
            }
        }
        facets_ = reduce_to_antichain(generators);
        if (facets_.empty()) facets_.push_back(VertexSet{});
        if (ghosts == GhostPolicy::reject) {
            const VertexSet covered = vertex_support();
            if (covered != ground)
                throw ghost_vertex_error((ground - covered).lowest());
        }
    }

    static SimplicialComplex from_vertex_lists(
        int m, const std::vector<std::vector<int>>& facets) {
        std::vector<VertexSet> gen;
        gen.reserve(facets.size());
        for (const auto& f : facets) gen.push_back(VertexSet::of(f));
        return SimplicialComplex(m, gen);
    }

    int width() const { return m_; }

    // Canonical facet list: sorted by cardinality, then by mask.
    const std::vector<VertexSet>& facets() const { return facets_; }

    // Union of all facets; equal to {1..m} exactly when there are no ghosts.
    VertexSet vertex_support() const {
        VertexSet u;
        for (VertexSet f : facets_) u = u | f;
        return u;
    }

    int dim() const { return facets_.back().dimension(); }

    bool is_face(VertexSet s) const {
        for (VertexSet f : facets_)
            if (s.subset_of(f)) return true;
        return false;
    }

    bool is_full_simplex() const { return is_face(VertexSet::full(m_)); }

    // All faces, empty set included, sorted by (cardinality, mask).  Built
    // once on first use; concurrent callers share the same cache.  Throws
    // too_many_faces_error when the subset expansion would exceed the cap.
    const std::vector<VertexSet>& faces() const {
        std::call_once(cache_->built, [this] { build_faces(); });
        return cache_->faces;
    }

    std::size_t face_count() const { return faces().size(); }

    friend bool operator==(const SimplicialComplex& a,
                           const SimplicialComplex& b) {
        return a.m_ == b.m_ && a.facets_ == b.facets_;
    }

    std::string to_string() const {
        std::string s;
        for (VertexSet f : facets_) {
            if (!s.empty()) s += " ";
            s += f.to_string();
        }
        return "m=" + std::to_string(m_) + " facets: " + s;
    }

  private:
    struct FaceCache {
        std::once_flag built;
        std::vector<VertexSet> faces;
    };

    static std::vector<VertexSet> reduce_to_antichain(
        std::vector<VertexSet> sets) {
        std::sort(sets.begin(), sets.end(), size_then_mask);
        sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
        std::vector<VertexSet> maximal;
        for (std::size_t i = 0; i < sets.size(); ++i) {
            bool dominated = false;
            // Only later entries can be proper supersets (sorted by size).
            for (std::size_t j = i + 1; j < sets.size() && !dominated; ++j)
                dominated = sets[i].proper_subset_of(sets[j]);
            if (!dominated) maximal.push_back(sets[i]);
        }
        return maximal;
    }

    static bool size_then_mask(VertexSet a, VertexSet b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.mask() < b.mask();
    }

    void build_faces() const {
        static constexpr unsigned long long kWorkCap = 1ull << 26;
        unsigned long long work = 0;
        for (VertexSet f : facets_) {
            work += 1ull << f.size();
            if (work > kWorkCap) throw too_many_faces_error(work, kWorkCap);
        }
        std::unordered_set<std::uint64_t> seen;
        seen.reserve(static_cast<std::size_t>(work));
        for (VertexSet f : facets_) {
            const std::uint64_t top = f.mask();
            std::uint64_t sub = top;
            while (true) {
                seen.insert(sub);
                if (sub == 0) break;
                sub = (sub - 1) & top;
            }
        }
        std::vector<VertexSet> out;
        out.reserve(seen.size());
        for (std::uint64_t mask : seen) out.push_back(VertexSet(mask));
        std::sort(out.begin(), out.end(), size_then_mask);
        cache_->faces = std::move(out);
    }

    int m_;
    std::vector<VertexSet> facets_;
    std::shared_ptr<FaceCache> cache_;
};

/* ------------------------------------------------------------------ */
/* constructors                                                       */
/* ------------------------------------------------------------------ */

// The full simplex on m vertices.
inline SimplicialComplex full_simplex(int m) {
    return SimplicialComplex(m, {VertexSet::full(m)});
}

// The boundary of the full simplex on m vertices: all proper subsets of
// {1..m}.  Needs m >= 2; for m = 1 the result would have a ghost vertex.
inline SimplicialComplex boundary_simplex(int m) {
    if (m < 1 || m > kMaxWidth) throw vertex_out_of_range_error(m, kMaxWidth);
    std::vector<VertexSet> facets;
    const VertexSet ground = VertexSet::full(m);
    for (int v : vertices_of(ground)) facets.push_back(ground.without(v));
    return SimplicialComplex(m, facets);
}

// Cone over K with the new apex vertex m+1.
inline SimplicialComplex cone(const SimplicialComplex& K) {
    const int apex = K.width() + 1;
    if (apex > kMaxWidth) throw vertex_out_of_range_error(apex, kMaxWidth);
    std::vector<VertexSet> facets;
    facets.reserve(K.facets().size());
    for (VertexSet f : K.facets()) facets.push_back(f.with(apex));
    return SimplicialComplex(apex, facets);
}

/* ------------------------------------------------------------------ */
/* invariants                                                         */
/* ------------------------------------------------------------------ */

// Smallest dimension of a non-face, infinity iff K is a full simplex.
// A non-face of minimum size is minimal, so this scans cardinality layers
// upward and stops at the first layer containing any non-face.  Every
// complex that is not a full simplex has a non-face of size dim K + 2
// (a maximum facet plus one vertex), which bounds the scan.
inline ExtendedNat delta_number(const SimplicialComplex& K) {
    if (K.is_full_simplex()) return ExtendedNat::infinity();
    const VertexSet ground = VertexSet::full(K.width());
    for (int c = 1; c <= K.dim() + 2; ++c) {
        bool all_faces = for_each_subset_of_size(
            ground, c, [&](VertexSet s) { return K.is_face(s); });
        if (!all_faces) return ExtendedNat(static_cast<std::uint64_t>(c - 1));
    }
    throw error("delta_number: no non-face found below the size bound");
}

// All minimal non-faces (non-faces whose proper subsets are all faces),
// sorted by (cardinality, mask).  Empty iff K is a full simplex.  Scans
// cardinality layers upward, pruning supersets of minimal non-faces already
// found; a surviving non-face at layer c has all proper subsets faces.
inline std::vector<VertexSet> minimal_non_faces(const SimplicialComplex& K) {
    std::vector<VertexSet> found;
    if (K.is_full_simplex()) return found;
    const VertexSet ground = VertexSet::full(K.width());
    for (int c = 1; c <= K.dim() + 2; ++c) {
        for_each_subset_of_size(ground, c, [&](VertexSet s) {
            for (VertexSet n : found)
                if (n.subset_of(s)) return true;
            if (!K.is_face(s)) found.push_back(s);
            return true;
        });
    }
    return found;
}

// Largest dimension of a minimal non-face, infinity iff K is a full simplex.
inline ExtendedNat flag_number(const SimplicialComplex& K) {
    const auto mnf = minimal_non_faces(K);
    if (mnf.empty()) return ExtendedNat::infinity();
    int best = 0;
    for (VertexSet s : mnf) best = std::max(best, s.dimension());
    return ExtendedNat(static_cast<std::uint64_t>(best));
}

// Flag complexes are exactly those whose minimal non-faces are all edges;
// full simplices count as flag.
inline bool is_flag(const SimplicialComplex& K) {
    const ExtendedNat f = flag_number(K);
    return f == ExtendedNat(1) || f.is_infinite();
}

// Definitional scan: K is q-neighborly iff every vertex subset with at most
// q+1 elements is a face.  Equivalent to delta_number(K) >= q+1.
inline bool is_q_neighborly(const SimplicialComplex& K, int q) {
    const VertexSet ground = VertexSet::full(K.width());
    const int top = std::min(q + 1, K.width());
    for (int c = 1; c <= top; ++c) {
        bool all_faces = for_each_subset_of_size(
            ground, c, [&](VertexSet s) { return K.is_face(s); });
        if (!all_faces) return false;
    }
    return true;
}

/* ------------------------------------------------------------------ */
/* full subcomplexes                                                  */
/* ------------------------------------------------------------------ */

// K_I relabelled to the ground set {1..|I|}; `vertex_labels` maps new labels
// back to the originals (new label j is vertex_labels[j-1], ascending).
struct FullSubcomplex {
    SimplicialComplex complex;
    std::vector<int> vertex_labels;

    // Original labels for a set in the relabelled complex.
    VertexSet original_set(VertexSet sub) const {
        VertexSet out;
        for (int v : vertices_of(sub)) out = out.with(vertex_labels[v - 1]);
        return out;
    }

    // Relabelled image of a set of original labels; the set must lie inside
    // the selected vertices.
    VertexSet relabelled_set(VertexSet original) const {
        VertexSet out;
        int next = 1;
        for (int v : vertex_labels) {
            if (original.contains(v)) out = out.with(next);
            ++next;
        }
        return out;
    }
};

// Full subcomplex on a non-empty I <= {1..m}: all faces of K contained in I.
// Its facets are the maximal sets among {F intersect I : F facet of K}.
inline FullSubcomplex full_subcomplex(const SimplicialComplex& K, VertexSet I) {
    if (I.empty()) throw empty_index_set_error();
    if (!I.subset_of(VertexSet::full(K.width())))
        throw vertex_out_of_range_error((I - VertexSet::full(K.width())).lowest(),
                                        K.width());
    std::vector<int> labels = I.to_vertices();
    std::vector<VertexSet> restricted;
    restricted.reserve(K.facets().size());
    for (VertexSet f : K.facets()) {
        VertexSet cut = f & I;
        VertexSet relabelled;
        int next = 1;
        for (int v : labels) {
            if (cut.contains(v)) relabelled = relabelled.with(next);
            ++next;
        }
        restricted.push_back(relabelled);
    }
    // Ghosts can only appear if K itself had them inside I.
    const GhostPolicy policy = I.subset_of(K.vertex_support())
                                   ? GhostPolicy::reject
                                   : GhostPolicy::allow;
    SimplicialComplex sub(static_cast<int>(labels.size()), restricted, policy);
    return FullSubcomplex{std::move(sub), std::move(labels)};
}

inline FullSubcomplex full_subcomplex(const SimplicialComplex& K,
                                      const std::vector<int>& I) {
    return full_subcomplex(K, VertexSet::of(I));
}

}  // namespace rzk
