#pragma once

// Certified bounds for the three equivariant invariants of the real
// moment-angle complex of K under a subtorus G: index, coindex and weight.
//
// Everything is first restricted to K' = K_supp(G); the invariants of the
// ambient action and of the restricted one coincide, and all bounds below
// are computed on K'.  With delta_g short for delta(K_supp(g)):
//
//   rank 1            index = coindex = weight = delta(K')  (index only
//                     when the action is free)
//   any rank          delta(K') <= coindex <= weight <= min_g delta_g
//   any rank, free    max_g delta_g <= index <= dim K' + 1, improved to
//                     dim K' by a collapse certificate for K'
//
// Two side conditions upgrade an interval to an exact value: delta(K') = 1
// (a covering element pins the upper bound) and all minimal non-faces of K'
// sharing one order while some element support is a non-face.  Both come
// with explicit witnesses.  Every bound carries the tag of the rule that
// justifies it; the tags are part of the report format.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rzk/collapse.hpp"
#include "rzk/errors.hpp"
#include "rzk/extended_nat.hpp"
#include "rzk/simplicial_complex.hpp"
#include "rzk/two_torus.hpp"
#include "rzk/vertex_set.hpp"

namespace rzk {

inline constexpr const char* kTagRankOne = "Theorem 1.1";
inline constexpr const char* kTagIndexBounds = "Theorem 1.2(i)";
inline constexpr const char* kTagCoindexBounds = "Theorem 1.2(ii)";
inline constexpr const char* kTagCollapse = "Proposition 1.3";
inline constexpr const char* kTagFlagOne = "Corollary 1.4";
inline constexpr const char* kTagSameOrder = "Corollary 1.5";

struct Certificate {
    std::string tag;
    std::optional<GroupElement> element;  // witnessing group element
    std::optional<VertexSet> subset;      // witnessing vertex set, original labels
};

struct BoundInterval {
    ExtendedNat lower;
    ExtendedNat upper;
    bool exact = false;  // lower == upper
    Certificate lower_certificate;
    Certificate upper_certificate;
};

struct ElementDelta {
    GroupElement element;
    VertexSet support;
    ExtendedNat delta;
};

// delta(K') = 1 forces coindex = weight = 1: a missing edge {i,j} inside
// supp(G) is covered by some element, whose restriction realizes the bound.
struct FlagOneCertificate {
    bool fires = false;
    VertexSet missing_edge;                 // non-face {i,j} <= supp(G)
    std::optional<GroupElement> covering;   // element with i,j in its support
};

// All minimal non-faces of K' of one order plus one element support outside
// K force coindex = weight = delta(K').
struct SameOrderCertificate {
    bool fires = false;
    std::optional<GroupElement> witness;  // element with a non-face support
};

struct InvariantReport {
    int width = 0;
    int rank = 0;
    VertexSet support;  // supp(G)

    ExtendedNat delta_K, flag_K;
    int dim_K = 0;
    ExtendedNat delta_support, flag_support;  // of K_supp(G)
    int dim_support = 0;

    bool free = false;
    std::optional<GroupElement> freeness_witness;  // set iff not free

    std::vector<ElementDelta> element_deltas;  // Gray-code order

    std::optional<BoundInterval> index;  // nullopt iff the action is not free
    BoundInterval coindex;
    BoundInterval weight;

    FlagOneCertificate flag_one;
    SameOrderCertificate same_order;

    bool collapse_attempted = false;
    std::optional<CollapseCertificate> collapse;  // steps in original labels
};

struct AnalyzeOptions {
    bool attempt_collapse = false;
    // nullopt: 2 * (face count of the restricted complex).
    std::optional<unsigned long long> collapse_budget;
    int collapse_restarts = kDefaultCollapseRestarts;
    std::uint64_t seed = 0;
};

/* ------------------------------------------------------------------ */
/* corollary certificates                                             */
/* ------------------------------------------------------------------ */

inline FlagOneCertificate check_corollary_flag_one(const SimplicialComplex& K,
                                                   const Subtorus& G) {
    if (G.width() != K.width()) throw width_mismatch_error(G.width(), K.width());
    if (G.rank() == 0) throw trivial_group_error();
    FlagOneCertificate out;
    // delta(K_supp(G)) = 1 iff some pair inside supp(G) is a non-face of K;
    // take the lexicographically first one.
    const auto supp = G.support().to_vertices();
    for (std::size_t a = 0; a < supp.size() && !out.fires; ++a)
        for (std::size_t b = a + 1; b < supp.size() && !out.fires; ++b) {
            const VertexSet pair = VertexSet::of({supp[a], supp[b]});
            if (!K.is_face(pair)) {
                out.fires = true;
                out.missing_edge = pair;
                out.covering = find_covering_element(G, supp[a], supp[b]);
            }
        }
    return out;
}

inline SameOrderCertificate check_corollary_same_order(
    const SimplicialComplex& K, const Subtorus& G) {
    if (G.width() != K.width()) throw width_mismatch_error(G.width(), K.width());
    if (G.rank() == 0) throw trivial_group_error();
    SameOrderCertificate out;
    const auto sub = full_subcomplex(K, G.support());
    const auto mnf = minimal_non_faces(sub.complex);
    if (mnf.empty()) return out;  // full simplex: every support is a face
    for (VertexSet s : mnf)
        if (s.size() != mnf.front().size()) return out;  // mixed orders
    G.for_each_element(false, [&](GroupElement g) {
        if (!K.is_face(g.support())) {
            out.witness = g;
            return false;
        }
        return true;
    });
    // Vacuously equal orders (full simplex) never fire: every support is a
    // face then, so no witness exists.
    out.fires = out.witness.has_value();
    return out;
}

/* ------------------------------------------------------------------ */
/* the analyzer                                                       */
/* ------------------------------------------------------------------ */

namespace detail {

// K restricted to the vertices of I but kept on the ambient label set, so
// collapse certificates stay readable; vertices outside I become ghosts.
inline SimplicialComplex aligned_restriction(const SimplicialComplex& K,
                                             VertexSet I) {
    std::vector<VertexSet> cut;
    cut.reserve(K.facets().size());
    for (VertexSet f : K.facets()) cut.push_back(f & I);
    return SimplicialComplex(K.width(), cut, GhostPolicy::allow);
}

}  // namespace detail

inline InvariantReport analyze(const SimplicialComplex& K, const Subtorus& G,
                               const AnalyzeOptions& options = {}) {
    if (G.width() != K.width()) throw width_mismatch_error(G.width(), K.width());
    if (G.rank() == 0) throw trivial_group_error();

    InvariantReport report;
    report.width = K.width();
    report.rank = G.rank();
    report.support = G.support();
    report.delta_K = delta_number(K);
    report.flag_K = flag_number(K);
    report.dim_K = K.dim();

    const FullSubcomplex sub = full_subcomplex(K, report.support);
    report.delta_support = delta_number(sub.complex);
    report.flag_support = flag_number(sub.complex);
    report.dim_support = sub.complex.dim();

    // Per-element deltas, Gray-code order, memoized per support.
    std::map<std::uint64_t, ExtendedNat> delta_cache;
    const auto delta_of_support = [&](VertexSet supp) {
        auto it = delta_cache.find(supp.mask());
        if (it != delta_cache.end()) return it->second;
        const ExtendedNat d =
            supp == report.support
                ? report.delta_support
                : delta_number(full_subcomplex(K, supp).complex);
        delta_cache.emplace(supp.mask(), d);
        return d;
    };
    G.for_each_element(false, [&](GroupElement g) {
        report.element_deltas.push_back(
            ElementDelta{g, g.support(), delta_of_support(g.support())});
        return true;
    });

    const FreenessCheck freeness = acts_freely(K, G);
    report.free = freeness.free;
    report.freeness_witness = freeness.witness;

    // Extremes over the nontrivial elements; ties keep the first witness in
    // enumeration order.
    ExtendedNat min_delta = ExtendedNat::infinity();
    ExtendedNat max_delta(0);
    std::optional<GroupElement> argmin, argmax;
    for (const ElementDelta& e : report.element_deltas) {
        if (!argmin || e.delta < min_delta) {
            min_delta = e.delta;
            argmin = e.element;
        }
        if (!argmax || e.delta > max_delta) {
            max_delta = e.delta;
            argmax = e.element;
        }
    }

    // A minimum-size non-face inside supp(G) witnesses the lower bound.
    std::optional<VertexSet> small_non_face;
    if (report.delta_support.is_finite()) {
        for_each_subset_of_size(
            report.support,
            static_cast<int>(report.delta_support.value()) + 1,
            [&](VertexSet s) {
                if (!K.is_face(s)) {
                    small_non_face = s;
                    return false;
                }
                return true;
            });
    }

    const char* chain_tag = report.rank == 1 ? kTagRankOne : kTagCoindexBounds;
    BoundInterval chain;
    chain.lower = report.delta_support;
    chain.upper = min_delta;
    if (chain.upper < chain.lower)
        throw error("per-element delta fell below delta of the support");
    chain.exact = chain.lower == chain.upper;
    chain.lower_certificate = Certificate{chain_tag, std::nullopt, small_non_face};
    chain.upper_certificate = Certificate{chain_tag, argmin, std::nullopt};
    report.coindex = chain;
    report.weight = chain;

    report.flag_one = check_corollary_flag_one(K, G);
    report.same_order = check_corollary_same_order(K, G);

    if (report.free) {
        BoundInterval index;
        if (report.rank == 1) {
            index.lower = index.upper = report.delta_support;
            index.exact = true;
            index.lower_certificate =
                Certificate{kTagRankOne, std::nullopt, small_non_face};
            index.upper_certificate = Certificate{kTagRankOne, argmin, {}};
        } else {
            index.lower = max_delta;
            index.upper =
                ExtendedNat(static_cast<std::uint64_t>(report.dim_support) + 1);
            index.lower_certificate =
                Certificate{kTagIndexBounds, argmax, std::nullopt};
            index.upper_certificate =
                Certificate{kTagIndexBounds, std::nullopt, std::nullopt};
            if (options.attempt_collapse && report.dim_support >= 1) {
                report.collapse_attempted = true;
                const SimplicialComplex restricted =
                    detail::aligned_restriction(K, report.support);
                report.collapse = search_dim_reduction(
                    restricted, options.collapse_budget,
                    options.collapse_restarts, options.seed);
                if (report.collapse) {
                    index.upper =
                        ExtendedNat(static_cast<std::uint64_t>(report.dim_support));
                    index.upper_certificate =
                        Certificate{kTagCollapse, std::nullopt, std::nullopt};
                }
            }
            if (index.upper < index.lower)
                throw error("index bounds crossed");
            index.exact = index.lower == index.upper;
        }
        report.index = index;
    }

    return report;
}

}  // namespace rzk
