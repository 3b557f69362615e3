#pragma once

// Property suites over the exhaustive enumerations.  Each suite scans every
// instance in a fixed order, stops at the first violation and reports it as
// a human-readable counterexample; a clean run reports how many instances
// it checked.  The suites back the exhaustive CLI mode and the acceptance
// battery, so their names are stable identifiers.

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "rzk/collapse.hpp"
#include "rzk/cw_oracle.hpp"
#include "rzk/enumeration.hpp"
#include "rzk/errors.hpp"
#include "rzk/invariants.hpp"
#include "rzk/simplicial_complex.hpp"
#include "rzk/two_torus.hpp"

namespace rzk {

struct SuiteResult {
    std::string name;
    bool passed = true;
    unsigned long long checked = 0;
    std::string counterexample;  // empty when passed
    double seconds = 0.0;
};

// Checks return a description of the violation, or nothing when satisfied.
using ComplexCheck =
    std::function<std::optional<std::string>(const SimplicialComplex&)>;
using PairCheck = std::function<std::optional<std::string>(
    const SimplicialComplex&, const Subtorus&)>;
using GroupCheck = std::function<std::optional<std::string>(const Subtorus&)>;

namespace detail {

inline std::string group_to_string(const Subtorus& G) {
    std::string s = "<";
    bool first = true;
    for (const GroupElement& g : G.basis()) {
        if (!first) s += ",";
        s += g.to_string();
        first = false;
    }
    return s + ">";
}

class SuiteTimer {
  public:
    SuiteTimer(std::string name, SuiteResult& out)
        : out_(out), start_(std::chrono::steady_clock::now()) {
        out_.name = std::move(name);
    }
    ~SuiteTimer() {
        out_.seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                          start_)
                .count();
    }

  private:
    SuiteResult& out_;
    std::chrono::steady_clock::time_point start_;
};

// delta of every full subcomplex of K at once: subset-minimum DP over the
// face indicator, O(2^m * m).
inline std::vector<int> delta_table(const SimplicialComplex& K) {
    const int m = K.width();
    const std::size_t n = std::size_t{1} << m;
    std::vector<char> face(n, 0);
    for (VertexSet f : K.faces()) face[f.mask()] = 1;
    // entry: minimum cardinality of a non-face inside the subset, or m+1
    std::vector<int> best(n, m + 1);
    for (std::uint64_t s = 1; s < n; ++s) {
        if (!face[s]) best[s] = std::popcount(s);
        for (int b = 0; b < m; ++b)
            if ((s >> b) & 1)
                best[s] = std::min(best[s],
                                   best[s & ~(std::uint64_t{1} << b)]);
    }
    return best;  // delta(K_S) = best[S] - 1, infinite when best[S] == m + 1
}

}  // namespace detail

// Every complex on exactly 1..max_m vertices.
inline SuiteResult run_complex_suite(const std::string& name, int max_m,
                                     const ComplexCheck& check) {
    SuiteResult out;
    detail::SuiteTimer timer(name, out);
    for (int m = 1; m <= max_m && out.passed; ++m)
        for_each_complex_on(m, [&](const SimplicialComplex& K) {
            if (!out.passed) return;
            ++out.checked;
            if (auto violation = check(K)) {
                out.passed = false;
                out.counterexample = "K = " + K.to_string() + ": " + *violation;
            }
        });
    return out;
}

// Every (complex, nontrivial subtorus) pair of equal width, 1..max_m.
inline SuiteResult run_pair_suite(const std::string& name, int max_m,
                                  const PairCheck& check) {
    SuiteResult out;
    detail::SuiteTimer timer(name, out);
    for (int m = 1; m <= max_m && out.passed; ++m) {
        const auto groups = all_subtori(m, 1);
        for_each_complex_on(m, [&](const SimplicialComplex& K) {
            for (const Subtorus& G : groups) {
                if (!out.passed) return;
                ++out.checked;
                if (auto violation = check(K, G)) {
                    out.passed = false;
                    out.counterexample = "K = " + K.to_string() +
                                         ", G = " + detail::group_to_string(G) +
                                         ": " + *violation;
                }
            }
        });
    }
    return out;
}

// Every subtorus of (Z/2)^max_m, trivial included.
inline SuiteResult run_group_suite(const std::string& name, int max_m,
                                   const GroupCheck& check) {
    SuiteResult out;
    detail::SuiteTimer timer(name, out);
    for (const Subtorus& G : all_subtori(max_m)) {
        if (!out.passed) break;
        ++out.checked;
        if (auto violation = check(G)) {
            out.passed = false;
            out.counterexample =
                "G = " + detail::group_to_string(G) + ": " + *violation;
        }
    }
    return out;
}

/* ------------------------------------------------------------------ */
/* the standard battery                                               */
/* ------------------------------------------------------------------ */

namespace suites {

using DeltaFn = std::function<ExtendedNat(const SimplicialComplex&)>;

// The delta implementation is swappable so the harness itself can be put
// under test with a deliberately broken one.
inline SuiteResult delta_le_flag(int max_m, const DeltaFn& delta = {}) {
    const DeltaFn d_of =
        delta ? delta
              : DeltaFn([](const SimplicialComplex& K) { return delta_number(K); });
    return run_complex_suite("delta-le-flag", max_m,
                             [&](const SimplicialComplex& K)
                                 -> std::optional<std::string> {
                                 ExtendedNat d = d_of(K);
                                 ExtendedNat f = flag_number(K);
                                 if (d <= f) return std::nullopt;
                                 return "delta " + d.to_string() + " > flag " +
                                        f.to_string();
                             });
}

inline SuiteResult subcomplex_monotonicity(int max_m) {
    return run_complex_suite(
        "subcomplex-monotonicity", max_m,
        [](const SimplicialComplex& K) -> std::optional<std::string> {
            const ExtendedNat d = delta_number(K);
            const ExtendedNat f = flag_number(K);
            const std::uint64_t full = VertexSet::full(K.width()).mask();
            for (std::uint64_t s = 1; s <= full; ++s) {
                const VertexSet I{s};
                if (K.is_face(I)) continue;  // restriction to a non-face
                const auto sub = full_subcomplex(K, I).complex;
                if (!(d <= delta_number(sub)))
                    return "delta rises after restricting to " + I.to_string();
                if (!(flag_number(sub) <= f))
                    return "flag grows after restricting to " + I.to_string();
            }
            return std::nullopt;
        });
}

inline SuiteResult equal_orders_iff_delta_eq_flag(int max_m) {
    return run_complex_suite(
        "equal-orders-iff-delta-eq-flag", max_m,
        [](const SimplicialComplex& K) -> std::optional<std::string> {
            const auto mnf = minimal_non_faces(K);
            bool equal_orders = true;
            for (VertexSet s : mnf)
                if (s.size() != mnf.front().size()) equal_orders = false;
            const bool invariants_agree = delta_number(K) == flag_number(K);
            if (equal_orders == invariants_agree) return std::nullopt;
            return std::string("equal-order test disagrees: orders ") +
                   (equal_orders ? "uniform" : "mixed") + ", delta " +
                   delta_number(K).to_string() + ", flag " +
                   flag_number(K).to_string();
        });
}

inline SuiteResult neighborliness(int max_m) {
    return run_complex_suite(
        "neighborliness", max_m,
        [](const SimplicialComplex& K) -> std::optional<std::string> {
            const ExtendedNat d = delta_number(K);
            for (int q = 0; q <= K.width() + 1; ++q) {
                const bool by_delta = d >= ExtendedNat(
                                              static_cast<std::uint64_t>(q) + 1);
                if (is_q_neighborly(K, q) != by_delta)
                    return "q = " + std::to_string(q) +
                           " disagrees with delta " + d.to_string();
            }
            return std::nullopt;
        });
}

inline SuiteResult minimal_non_face_soundness(int max_m) {
    return run_complex_suite(
        "minimal-non-face-soundness", max_m,
        [](const SimplicialComplex& K) -> std::optional<std::string> {
            const auto mnf = minimal_non_faces(K);
            for (VertexSet s : mnf) {
                if (K.is_face(s)) return s.to_string() + " is a face";
                bool proper_ok = true;
                for_each_subset_of_size(s, s.size() - 1, [&](VertexSet t) {
                    if (!K.is_face(t)) proper_ok = false;
                    return proper_ok;
                });
                if (!proper_ok)
                    return s.to_string() + " is not minimal";
            }
            // delta and flag are the extreme minimal non-face sizes
            if (mnf.empty()) {
                if (delta_number(K).is_finite() || flag_number(K).is_finite())
                    return std::string("full simplex with finite invariants");
                return std::nullopt;
            }
            std::size_t lo = mnf.front().size(), hi = mnf.front().size();
            for (VertexSet s : mnf) {
                lo = std::min(lo, static_cast<std::size_t>(s.size()));
                hi = std::max(hi, static_cast<std::size_t>(s.size()));
            }
            if (delta_number(K) != ExtendedNat(lo - 1))
                return "delta is not the smallest minimal non-face dimension";
            if (flag_number(K) != ExtendedNat(hi - 1))
                return "flag is not the largest minimal non-face dimension";
            return std::nullopt;
        });
}

inline SuiteResult support_product_law(int max_m) {
    return run_group_suite(
        "support-product-law", max_m,
        [](const Subtorus& G) -> std::optional<std::string> {
            if (G.rank() > 12) return std::nullopt;  // keep pair count sane
            const auto elems = G.elements(true);
            for (GroupElement g : elems)
                for (GroupElement h : elems) {
                    const VertexSet expect =
                        (g.support() | h.support()) -
                        (g.support() & h.support());
                    if (product(g, h).support() != expect)
                        return "supp(" + g.to_string() + " * " + h.to_string() +
                               ") is not the symmetric difference";
                }
            return std::nullopt;
        });
}

inline SuiteResult freeness_oracle_pairs(int max_m) {
    return run_pair_suite(
        "freeness-oracle-pairs", max_m,
        [](const SimplicialComplex& K,
           const Subtorus& G) -> std::optional<std::string> {
            const bool combinatorial = acts_freely(K, G).free;
            bool any_fixed = false;
            G.for_each_element(false, [&](GroupElement g) {
                if (!fixed_cells(K, g).empty()) any_fixed = true;
                return !any_fixed;
            });
            if (combinatorial == !any_fixed) return std::nullopt;
            return std::string("combinatorial freeness ") +
                   (combinatorial ? "true" : "false") +
                   " but the cell model says otherwise";
        });
}

inline SuiteResult fixed_cells_per_element(int max_m) {
    return run_complex_suite(
        "fixed-cells-per-element", max_m,
        [](const SimplicialComplex& K) -> std::optional<std::string> {
            const int m = K.width();
            const std::uint64_t full = VertexSet::full(m).mask();
            for (std::uint64_t bits = 1; bits <= full; ++bits) {
                const GroupElement g(bits, m);
                const bool empty = fixed_cells(K, g).empty();
                const bool non_face = !K.is_face(g.support());
                if (empty != non_face)
                    return "element " + g.to_string() +
                           ": fixed cells and support membership disagree";
            }
            return std::nullopt;
        });
}

inline SuiteResult sandwich_consistency(int max_m) {
    SuiteResult out;
    detail::SuiteTimer timer("sandwich-consistency", out);
    for (int m = 1; m <= max_m && out.passed; ++m) {
        const auto groups = all_subtori(m, 1);
        for_each_complex_on(m, [&](const SimplicialComplex& K) {
            if (!out.passed) return;
            const auto table = detail::delta_table(K);
            const auto delta_of = [&](VertexSet s) {
                const int v = table[s.mask()];
                return v == m + 1 ? ExtendedNat::infinity()
                                  : ExtendedNat(static_cast<std::uint64_t>(v) -
                                                1);
            };
            for (const Subtorus& G : groups) {
                ++out.checked;
                const ExtendedNat base = delta_of(G.support());
                ExtendedNat lo = ExtendedNat::infinity(), hi(0);
                G.for_each_element(false, [&](GroupElement g) {
                    const ExtendedNat d = delta_of(g.support());
                    lo = min(lo, d);
                    hi = max(hi, d);
                    return true;
                });
                if (!(base <= lo)) {
                    out.passed = false;
                    out.counterexample =
                        "K = " + K.to_string() +
                        ", G = " + detail::group_to_string(G) +
                        ": support delta exceeds an element delta";
                    return;
                }
                if (acts_freely(K, G).free) {
                    const ExtendedNat cap(
                        static_cast<std::uint64_t>(K.dim()) + 1);
                    if (!(hi <= cap)) {
                        out.passed = false;
                        out.counterexample =
                            "K = " + K.to_string() +
                            ", G = " + detail::group_to_string(G) +
                            ": free action with element delta above dim K + 1";
                        return;
                    }
                }
            }
        });
    }
    return out;
}

inline SuiteResult rank_one_exactness(int max_m) {
    return run_pair_suite(
        "rank-one-exactness", max_m,
        [](const SimplicialComplex& K,
           const Subtorus& G) -> std::optional<std::string> {
            if (G.rank() != 1) return std::nullopt;
            const auto r = analyze(K, G);
            const ExtendedNat d = r.delta_support;
            if (!r.coindex.exact || r.coindex.lower != d)
                return "coindex is not exactly the support delta";
            if (!r.weight.exact || r.weight.lower != d)
                return "weight is not exactly the support delta";
            if (r.free != r.index.has_value())
                return "index reported against the freeness verdict";
            if (r.index && (!r.index->exact || r.index->lower != d))
                return "index is not exactly the support delta";
            return std::nullopt;
        });
}

inline SuiteResult corollary_certificates(int max_m) {
    return run_pair_suite(
        "corollary-certificates", max_m,
        [](const SimplicialComplex& K,
           const Subtorus& G) -> std::optional<std::string> {
            const auto r = analyze(K, G);
            if (r.flag_one.fires) {
                if (!(r.coindex.exact && r.coindex.lower == ExtendedNat(1) &&
                      r.weight.exact && r.weight.lower == ExtendedNat(1)))
                    return std::string("missing-edge rule fired without [1,1]");
                if (!r.flag_one.covering)
                    return std::string("missing-edge rule fired without a witness");
                const VertexSet edge = r.flag_one.missing_edge;
                if (!edge.subset_of(r.flag_one.covering->support()))
                    return std::string("covering element misses the edge");
                if (K.is_face(edge))
                    return std::string("claimed missing edge is a face");
                if (edge.size() != 2 || !edge.subset_of(r.support))
                    return std::string("malformed missing edge");
            } else if (r.delta_support == ExtendedNat(1)) {
                return std::string("support delta 1 but the rule stayed quiet");
            }
            if (r.same_order.fires) {
                if (!(r.coindex.exact && r.coindex.lower == r.delta_support))
                    return std::string(
                        "equal-order rule fired without pinning the interval");
                if (!r.same_order.witness ||
                    K.is_face(r.same_order.witness->support()))
                    return std::string("equal-order witness support is a face");
            }
            return std::nullopt;
        });
}

inline SuiteResult restriction_invariance(int max_m) {
    return run_pair_suite(
        "restriction-invariance", max_m,
        [](const SimplicialComplex& K,
           const Subtorus& G) -> std::optional<std::string> {
            const auto whole = analyze(K, G);
            const auto sub = full_subcomplex(K, G.support());
            // relabel the group along the restriction's vertex map
            std::vector<GroupElement> rows;
            for (GroupElement g : G.basis()) {
                std::uint64_t bits = 0;
                for (std::size_t i = 0; i < sub.vertex_labels.size(); ++i)
                    if ((g.bits() >> (sub.vertex_labels[i] - 1)) & 1)
                        bits |= std::uint64_t{1} << i;
                rows.emplace_back(bits, sub.complex.width());
            }
            const auto small = analyze(
                sub.complex,
                Subtorus::from_generators(sub.complex.width(), rows));
            if (whole.free != small.free)
                return std::string("freeness changes under restriction");
            if (whole.delta_support != small.delta_support ||
                whole.dim_support != small.dim_support)
                return std::string("support invariants change under restriction");
            if (whole.coindex.lower != small.coindex.lower ||
                whole.coindex.upper != small.coindex.upper)
                return std::string("coindex changes under restriction");
            if (whole.index.has_value() != small.index.has_value())
                return std::string("index applicability changes under restriction");
            if (whole.index && (whole.index->lower != small.index->lower ||
                                whole.index->upper != small.index->upper))
                return std::string("index bounds change under restriction");
            if (whole.flag_one.fires != small.flag_one.fires ||
                whole.same_order.fires != small.same_order.fires)
                return std::string("certificates change under restriction");
            return std::nullopt;
        });
}

inline SuiteResult homology_soundness(int max_m) {
    return run_complex_suite(
        "homology-soundness", max_m,
        [](const SimplicialComplex& K) -> std::optional<std::string> {
            // includes the boundary-squared and Euler cross-checks
            if (!verify_connectivity(K))
                return std::string(
                    "reduced homology survives below the delta number");
            return std::nullopt;
        });
}

inline SuiteResult collapse_certificates(int max_m) {
    SuiteResult out;
    detail::SuiteTimer timer("collapse-certificates", out);
    // every cone over a base on up to max_m - 1 vertices must collapse
    for (int m = 1; m < max_m && out.passed; ++m)
        for_each_complex_on(m, [&](const SimplicialComplex& base) {
            if (!out.passed) return;
            ++out.checked;
            const SimplicialComplex K = cone(base);
            const auto cert = search_dim_reduction(K);
            if (!cert) {
                out.passed = false;
                out.counterexample =
                    "cone over " + base.to_string() + ": search exhausted";
                return;
            }
            if (!validate_collapse(K, *cert)) {
                out.passed = false;
                out.counterexample =
                    "cone over " + base.to_string() + ": certificate replay failed";
            }
        });
    // boundaries of simplices have no free faces at all
    for (int q = 2; q <= 4 && out.passed; ++q) {
        if (q + 1 > max_m) break;
        ++out.checked;
        if (search_dim_reduction(boundary_simplex(q + 1))) {
            out.passed = false;
            out.counterexample = "boundary of the " + std::to_string(q) +
                                 "-simplex produced a certificate";
        }
    }
    return out;
}

}  // namespace suites

// The battery behind the exhaustive CLI mode.  Pairwise scans that invoke
// the full analyzer are capped at four vertices; the purely combinatorial
// and homological scans honor max_m.
inline std::vector<SuiteResult> run_all_suites(int max_m) {
    if (max_m < 1)
        throw input_error("property suites need at least one vertex");
    if (max_m > 5)
        throw resource_error("property suites are sized for up to 5 vertices");
    const int pair_m = std::min(max_m, 4);
    std::vector<SuiteResult> out;
    out.push_back(suites::delta_le_flag(max_m));
    out.push_back(suites::subcomplex_monotonicity(max_m));
    out.push_back(suites::equal_orders_iff_delta_eq_flag(max_m));
    out.push_back(suites::neighborliness(max_m));
    out.push_back(suites::minimal_non_face_soundness(max_m));
    out.push_back(suites::support_product_law(max_m));
    out.push_back(suites::freeness_oracle_pairs(pair_m));
    out.push_back(suites::fixed_cells_per_element(max_m));
    out.push_back(suites::sandwich_consistency(max_m));
    out.push_back(suites::rank_one_exactness(pair_m));
    out.push_back(suites::corollary_certificates(pair_m));
    out.push_back(suites::restriction_invariance(pair_m));
    out.push_back(suites::homology_soundness(max_m));
    out.push_back(suites::collapse_certificates(max_m));
    return out;
}

}  // namespace rzk
