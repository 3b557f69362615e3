#pragma once

// Problem files: a JSON object with the vertex count, the facet list and the
// group generators.  Vertices are 1-indexed; generator strings act with the
// leftmost character on vertex 1, '1' meaning the coordinate flips sign.
//
//   {"m": 3, "facets": [[1,2],[2,3],[1,3]], "group_generators": ["111"]}
//
// Serialization is canonical: facets in the complex's canonical order and
// generators replaced by the reduced basis, so parse/serialize round-trips
// are the identity on canonical files.

#include <string>
#include <vector>

#include <json.hpp>

#include "rzk/errors.hpp"
#include "rzk/simplicial_complex.hpp"
#include "rzk/two_torus.hpp"

namespace rzk {

struct ProblemFile {
    int m = 0;
    SimplicialComplex complex{1, {VertexSet::of({1})}};
    Subtorus group = Subtorus::from_strings(1, {"1"});
};

inline ProblemFile parse_problem(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw malformed_input_error(e.what());
    }
    if (!doc.is_object())
        throw malformed_input_error("problem file must be a JSON object");
    for (const auto& [key, value] : doc.items()) {
        (void)value;
        if (key != "m" && key != "facets" && key != "group_generators")
            throw malformed_input_error("unknown key \"" + key + "\"");
    }
    for (const char* key : {"m", "facets", "group_generators"})
        if (!doc.contains(key))
            throw malformed_input_error(std::string("missing key \"") + key +
                                        "\"");

    if (!doc["m"].is_number_integer())
        throw malformed_input_error("\"m\" must be an integer");
    const long long m_raw = doc["m"].get<long long>();
    if (m_raw < 1 || m_raw > kMaxWidth)
        throw vertex_out_of_range_error(static_cast<int>(m_raw), kMaxWidth);
    const int m = static_cast<int>(m_raw);

    if (!doc["facets"].is_array())
        throw malformed_input_error("\"facets\" must be an array");
    std::vector<std::vector<int>> facets;
    for (const auto& row : doc["facets"]) {
        if (!row.is_array())
            throw malformed_input_error("each facet must be an array of vertices");
        std::vector<int> verts;
        for (const auto& v : row) {
            if (!v.is_number_integer())
                throw malformed_input_error("vertices must be integers");
            verts.push_back(v.get<int>());
        }
        facets.push_back(std::move(verts));
    }

    if (!doc["group_generators"].is_array())
        throw malformed_input_error("\"group_generators\" must be an array");
    std::vector<std::string> gens;
    for (const auto& g : doc["group_generators"]) {
        if (!g.is_string())
            throw malformed_input_error("generators must be bit strings");
        gens.push_back(g.get<std::string>());
    }

    ProblemFile out;
    out.m = m;
    out.complex = SimplicialComplex::from_vertex_lists(m, facets);
    out.group = Subtorus::from_strings(m, gens);
    return out;
}

inline nlohmann::ordered_json problem_to_json(const ProblemFile& p) {
    nlohmann::ordered_json doc;
    doc["m"] = p.m;
    auto& facets = doc["facets"] = nlohmann::ordered_json::array();
    for (VertexSet f : p.complex.facets()) facets.push_back(f.to_vertices());
    auto& gens = doc["group_generators"] = nlohmann::ordered_json::array();
    for (const GroupElement& g : p.group.basis()) gens.push_back(g.to_string());
    return doc;
}

inline std::string serialize_problem(const ProblemFile& p) {
    return problem_to_json(p).dump(2);
}

}  // namespace rzk
