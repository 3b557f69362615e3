#pragma once

// Rendering of analysis results.  JSON output has a fixed key order and the
// element table follows the group's enumeration order, so a given problem
// and flag set always produces byte-identical reports.

#include <sstream>
#include <string>

#include <json.hpp>

#include "rzk/cw_oracle.hpp"
#include "rzk/exhaustive.hpp"
#include "rzk/invariants.hpp"
#include "rzk/problem.hpp"

namespace rzk {

// Cellular cross-check section, produced only on request: homology data and
// the per-element fixed-cell counts.
struct OracleReport {
    unsigned long long cells = 0;
    long long euler = 0;
    std::vector<long long> betti;
    bool connectivity_ok = false;
    std::vector<std::pair<GroupElement, std::size_t>> fixed_counts;
};

inline OracleReport run_oracle(const SimplicialComplex& K, const Subtorus& G,
                               unsigned long long cell_cap = kDefaultCellCap) {
    OracleReport out;
    out.cells = cell_count(K, cell_cap);
    out.euler = euler_characteristic(K);
    out.betti = mod2_betti(K, cell_cap);
    out.connectivity_ok = verify_connectivity(K, cell_cap);
    G.for_each_element(false, [&](GroupElement g) {
        out.fixed_counts.emplace_back(g, fixed_cells(K, g, cell_cap).size());
        return true;
    });
    return out;
}

namespace detail {

inline nlohmann::ordered_json json_of(ExtendedNat n) {
    if (n.is_finite()) return n.value();
    return "inf";
}

inline nlohmann::ordered_json json_of(VertexSet s) {
    return s.to_vertices();
}

inline nlohmann::ordered_json json_of(const Certificate& c) {
    nlohmann::ordered_json doc;
    doc["rule"] = c.tag;
    doc["witness_element"] =
        c.element ? nlohmann::ordered_json(c.element->to_string())
                  : nlohmann::ordered_json(nullptr);
    doc["witness_subset"] = c.subset ? json_of(*c.subset)
                                     : nlohmann::ordered_json(nullptr);
    return doc;
}

inline nlohmann::ordered_json json_of(const BoundInterval& b) {
    nlohmann::ordered_json doc;
    doc["lower"] = json_of(b.lower);
    doc["upper"] = json_of(b.upper);
    doc["exact"] = b.exact;
    doc["lower_certificate"] = json_of(b.lower_certificate);
    doc["upper_certificate"] = json_of(b.upper_certificate);
    return doc;
}

}  // namespace detail

inline nlohmann::ordered_json report_to_json(const ProblemFile& problem,
                                             const InvariantReport& r,
                                             const OracleReport* oracle = nullptr) {
    using detail::json_of;
    nlohmann::ordered_json doc;
    doc["problem"] = problem_to_json(problem);

    auto& group = doc["group"];
    group["rank"] = r.rank;
    group["support"] = json_of(r.support);

    auto& complex = doc["complex"];
    complex["dimension"] = r.dim_K;
    complex["delta"] = json_of(r.delta_K);
    complex["flag"] = json_of(r.flag_K);

    auto& restriction = doc["restriction"];
    restriction["vertices"] = json_of(r.support);
    restriction["dimension"] = r.dim_support;
    restriction["delta"] = json_of(r.delta_support);
    restriction["flag"] = json_of(r.flag_support);

    auto& action = doc["action"];
    action["free"] = r.free;
    action["witness"] = r.freeness_witness
                            ? nlohmann::ordered_json(r.freeness_witness->to_string())
                            : nlohmann::ordered_json(nullptr);

    auto& elements = doc["elements"] = nlohmann::ordered_json::array();
    for (const ElementDelta& e : r.element_deltas) {
        nlohmann::ordered_json row;
        row["element"] = e.element.to_string();
        row["support"] = json_of(e.support);
        row["delta"] = json_of(e.delta);
        elements.push_back(row);
    }

    auto& inv = doc["invariants"];
    if (r.index) {
        inv["index"] = json_of(*r.index);
        inv["index"]["applicable"] = true;
    } else {
        inv["index"] = nlohmann::ordered_json{{"applicable", false}};
    }
    inv["coindex"] = json_of(r.coindex);
    inv["weight"] = json_of(r.weight);

    auto& rules = doc["rules"];
    auto& edge_rule = rules["missing_edge"];
    edge_rule["fires"] = r.flag_one.fires;
    edge_rule["edge"] = r.flag_one.fires ? json_of(r.flag_one.missing_edge)
                                         : nlohmann::ordered_json(nullptr);
    edge_rule["covering_element"] =
        r.flag_one.covering
            ? nlohmann::ordered_json(r.flag_one.covering->to_string())
            : nlohmann::ordered_json(nullptr);
    auto& order_rule = rules["equal_orders"];
    order_rule["fires"] = r.same_order.fires;
    order_rule["witness"] =
        r.same_order.witness
            ? nlohmann::ordered_json(r.same_order.witness->to_string())
            : nlohmann::ordered_json(nullptr);

    auto& collapse = doc["collapse"];
    collapse["attempted"] = r.collapse_attempted;
    if (r.collapse_attempted) {
        collapse["found"] = r.collapse.has_value();
        if (r.collapse) {
            auto& steps = collapse["steps"] = nlohmann::ordered_json::array();
            for (const CollapseStep& s : r.collapse->steps) {
                nlohmann::ordered_json step;
                step["facet"] = json_of(s.facet);
                step["free_face"] = json_of(s.free_face);
                steps.push_back(step);
            }
            collapse["final_dimension"] = r.collapse->final_dim;
        }
    }

    if (oracle) {
        auto& o = doc["oracle"];
        o["cells"] = oracle->cells;
        o["euler_characteristic"] = oracle->euler;
        o["betti"] = oracle->betti;
        o["connectivity_check"] = oracle->connectivity_ok;
        auto& fixed = o["fixed_cells"] = nlohmann::ordered_json::array();
        for (const auto& [g, count] : oracle->fixed_counts) {
            nlohmann::ordered_json row;
            row["element"] = g.to_string();
            row["count"] = count;
            fixed.push_back(row);
        }
    }
    return doc;
}

namespace detail {

inline std::string interval_text(const BoundInterval& b) {
    std::string s;
    if (b.exact)
        s = "exact " + b.lower.to_string();
    else
        s = "between " + b.lower.to_string() + " and " + b.upper.to_string();
    s += "  [" + b.lower_certificate.tag;
    if (b.upper_certificate.tag != b.lower_certificate.tag)
        s += "; " + b.upper_certificate.tag;
    s += "]";
    return s;
}

}  // namespace detail

inline std::string report_to_text(const ProblemFile& problem,
                                  const InvariantReport& r,
                                  const OracleReport* oracle = nullptr) {
    std::ostringstream out;
    out << "complex: " << problem.complex.to_string() << "\n";
    out << "  dimension " << r.dim_K << ", delta " << r.delta_K.to_string()
        << ", flag " << r.flag_K.to_string() << "\n";
    out << "group: rank " << r.rank << ", support " << r.support.to_string()
        << ", basis";
    for (const GroupElement& g : problem.group.basis())
        out << " " << g.to_string();
    out << "\n";
    out << "restriction to the support: dimension " << r.dim_support
        << ", delta " << r.delta_support.to_string() << ", flag "
        << r.flag_support.to_string() << "\n";
    if (r.free)
        out << "action: free\n";
    else
        out << "action: not free (fixed points for "
            << r.freeness_witness->to_string() << ")\n";
    out << "elements:\n";
    for (const ElementDelta& e : r.element_deltas)
        out << "  " << e.element.to_string() << "  support "
            << e.support.to_string() << "  delta " << e.delta.to_string()
            << "\n";
    if (r.index)
        out << "index:   " << detail::interval_text(*r.index) << "\n";
    else
        out << "index:   not applicable (the action is not free)\n";
    out << "coindex: " << detail::interval_text(r.coindex) << "\n";
    out << "weight:  " << detail::interval_text(r.weight) << "\n";
    if (r.flag_one.fires)
        out << "missing edge rule: fires at " << r.flag_one.missing_edge.to_string()
            << ", covered by " << r.flag_one.covering->to_string() << "\n";
    if (r.same_order.fires)
        out << "equal order rule: fires, witness "
            << r.same_order.witness->to_string() << "\n";
    if (r.collapse_attempted) {
        if (r.collapse) {
            out << "collapse: reduced to dimension " << r.collapse->final_dim
                << " in " << r.collapse->steps.size() << " steps\n";
            for (const CollapseStep& s : r.collapse->steps)
                out << "  remove " << s.facet.to_string() << " via free face "
                    << s.free_face.to_string() << "\n";
        } else {
            out << "collapse: search exhausted, no reduction found\n";
        }
    }
    if (oracle) {
        out << "oracle: " << oracle->cells << " cells, euler "
            << oracle->euler << ", betti";
        for (std::size_t b : oracle->betti) out << " " << b;
        out << ", connectivity "
            << (oracle->connectivity_ok ? "ok" : "VIOLATED") << "\n";
        out << "  fixed cells:";
        for (const auto& [g, count] : oracle->fixed_counts)
            out << " " << g.to_string() << ":" << count;
        out << "\n";
    }
    return out.str();
}

/* ------------------------------------------------------------------ */
/* property-suite reports                                             */
/* ------------------------------------------------------------------ */

inline nlohmann::ordered_json suites_to_json(const std::vector<SuiteResult>& rs,
                                             int max_m) {
    nlohmann::ordered_json doc;
    doc["max_m"] = max_m;
    bool all = true;
    auto& arr = doc["suites"] = nlohmann::ordered_json::array();
    for (const SuiteResult& r : rs) {
        nlohmann::ordered_json row;
        row["name"] = r.name;
        row["passed"] = r.passed;
        row["checked"] = r.checked;
        row["counterexample"] = r.passed
                                    ? nlohmann::ordered_json(nullptr)
                                    : nlohmann::ordered_json(r.counterexample);
        arr.push_back(row);
        all = all && r.passed;
    }
    doc["all_passed"] = all;
    return doc;
}

inline std::string suites_to_text(const std::vector<SuiteResult>& rs,
                                  int max_m) {
    std::ostringstream out;
    out << "property suites on up to " << max_m << " vertices\n";
    bool all = true;
    for (const SuiteResult& r : rs) {
        out << (r.passed ? "pass" : "FAIL") << "  " << r.name << "  ("
            << r.checked << " instances)\n";
        if (!r.passed) out << "      counterexample: " << r.counterexample << "\n";
        all = all && r.passed;
    }
    out << (all ? "all suites passed" : "SUITE FAILURES PRESENT") << "\n";
    return out.str();
}

}  // namespace rzk
