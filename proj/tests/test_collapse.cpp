#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "rzk/collapse.hpp"

using namespace rzk;

namespace {

SimplicialComplex glued_triangles() {
    return SimplicialComplex::from_vertex_lists(4, {{1, 2, 3}, {2, 3, 4}});
}

}  // namespace

TEST_CASE("Free pairs of an edge") {
    SimplicialComplex edge = full_simplex(2);
    const auto pairs = free_pairs(edge);
    REQUIRE(pairs.size() == 2);
    CHECK(pairs[0] ==
          CollapseStep{VertexSet::of({1, 2}), VertexSet::of({1})});
    CHECK(pairs[1] ==
          CollapseStep{VertexSet::of({1, 2}), VertexSet::of({2})});

    SimplicialComplex after = apply_collapse(
        edge, CollapseStep{VertexSet::of({1, 2}), VertexSet::of({2})});
    CHECK(after.width() == 2);  // vertex 2 is now a ghost
    CHECK(after.vertex_support() == VertexSet::of({1}));
    CHECK(after.dim() == 0);
    CHECK(after.face_count() == edge.face_count() - 2);
}

TEST_CASE("Free pair structure") {
    for (const auto& K :
         {glued_triangles(), cone(boundary_simplex(3)), full_simplex(3)}) {
        for (const CollapseStep& s : free_pairs(K)) {
            CHECK(s.free_face.proper_subset_of(s.facet));
            CHECK(s.facet.size() == s.free_face.size() + 1);
            CHECK_FALSE(s.free_face.empty());
            // The facet really is a facet of K.
            bool is_facet = false;
            for (VertexSet f : K.facets()) is_facet |= (f == s.facet);
            CHECK(is_facet);
            SimplicialComplex after = apply_collapse(K, s);
            CHECK(after.face_count() == K.face_count() - 2);
        }
    }
}

TEST_CASE("Invalid steps are rejected") {
    SimplicialComplex K = glued_triangles();
    // {2,3} sits in both triangles.
    CHECK_THROWS_AS(
        apply_collapse(K, CollapseStep{VertexSet::of({2, 3, 4}),
                                       VertexSet::of({2, 3})}),
        not_a_free_pair_error);
    // Not a face at all.
    CHECK_THROWS_AS(
        apply_collapse(K, CollapseStep{VertexSet::of({1, 2, 4}),
                                       VertexSet::of({1, 4})}),
        not_a_free_pair_error);
    // Size gap of two.
    CHECK_THROWS_AS(
        apply_collapse(K, CollapseStep{VertexSet::of({1, 2, 3}),
                                       VertexSet::of({1})}),
        not_a_free_pair_error);
    // Empty free face.
    CHECK_THROWS_AS(
        apply_collapse(SimplicialComplex(1, {VertexSet::of({1})}),
                       CollapseStep{VertexSet::of({1}), VertexSet{}}),
        not_a_free_pair_error);
}

TEST_CASE("Cone over the triangle boundary has the expected free pair") {
    SimplicialComplex K = cone(boundary_simplex(3));
    const auto pairs = free_pairs(K);
    const CollapseStep expected{VertexSet::of({1, 2, 4}), VertexSet::of({1, 2})};
    CHECK(std::count(pairs.begin(), pairs.end(), expected) == 1);

    SimplicialComplex after = apply_collapse(K, expected);
    REQUIRE(after.facets().size() == 2);
    CHECK(after.facets()[0] == VertexSet::of({1, 3, 4}));
    CHECK(after.facets()[1] == VertexSet::of({2, 3, 4}));
}

TEST_CASE("Search collapses the glued triangles below dimension two") {
    SimplicialComplex K = glued_triangles();
    auto cert = search_dim_reduction(K);
    REQUIRE(cert.has_value());
    CHECK(cert->final_dim < K.dim());
    CHECK(validate_collapse(K, *cert));

    // Deterministic greedy path: both triangles go first, largest facets
    // with the smallest masks.
    REQUIRE(cert->steps.size() == 2);
    CHECK(cert->steps[0] ==
          CollapseStep{VertexSet::of({1, 2, 3}), VertexSet::of({1, 2})});
    CHECK(cert->steps[1] ==
          CollapseStep{VertexSet::of({2, 3, 4}), VertexSet::of({2, 3})});
    CHECK(cert->final_dim == 1);

    // Reproducible under identical settings.
    auto again = search_dim_reduction(K);
    REQUIRE(again.has_value());
    CHECK(*again == *cert);
}

TEST_CASE("Search collapses a full simplex in one step") {
    SimplicialComplex K = full_simplex(3);
    auto cert = search_dim_reduction(K);
    REQUIRE(cert.has_value());
    REQUIRE(cert->steps.size() == 1);
    CHECK(cert->steps[0] ==
          CollapseStep{VertexSet::of({1, 2, 3}), VertexSet::of({1, 2})});
    CHECK(cert->final_dim == 1);
    CHECK(validate_collapse(K, *cert));
}

TEST_CASE("Boundaries of simplices have no free pairs") {
    for (int q = 2; q <= 4; ++q) {
        SimplicialComplex K = boundary_simplex(q + 1);
        CHECK(free_pairs(K).empty());
        CHECK_FALSE(search_dim_reduction(K).has_value());
    }
}

TEST_CASE("Search respects its preconditions and budget") {
    SimplicialComplex point(1, {VertexSet::of({1})});
    CHECK_THROWS_AS(search_dim_reduction(point), input_error);

    // Zero budget: no steps can be taken, so the search is exhausted.
    CHECK_FALSE(search_dim_reduction(glued_triangles(), 0ull).has_value());
    // One step is not enough to clear two triangles.
    CHECK_FALSE(search_dim_reduction(glued_triangles(), 1ull).has_value());
    CHECK(search_dim_reduction(glued_triangles(), 2ull).has_value());
}

TEST_CASE("Randomized restarts yield valid certificates") {
    SimplicialComplex K = cone(boundary_simplex(4));
    for (std::uint64_t seed : {0ull, 1ull, 42ull}) {
        auto cert = search_dim_reduction(K, std::nullopt, 4, seed);
        REQUIRE(cert.has_value());
        CHECK(validate_collapse(K, *cert));
        CHECK(cert->final_dim < K.dim());
        auto repeat = search_dim_reduction(K, std::nullopt, 4, seed);
        REQUIRE(repeat.has_value());
        CHECK(*repeat == *cert);
    }
}

TEST_CASE("Validator rejects doctored certificates") {
    SimplicialComplex K = glued_triangles();
    auto cert = search_dim_reduction(K);
    REQUIRE(cert.has_value());

    CollapseCertificate wrong_dim = *cert;
    wrong_dim.final_dim = 0;
    CHECK_FALSE(validate_collapse(K, wrong_dim));

    CollapseCertificate reordered = *cert;
    std::swap(reordered.steps[0], reordered.steps[1]);
    // Removing {2,3,4}/{2,3} first is illegal: {2,3} has two cofaces.
    CHECK_FALSE(validate_collapse(K, reordered));

    CollapseCertificate truncated = *cert;
    truncated.steps.pop_back();
    CHECK_FALSE(validate_collapse(K, truncated));  // dimension did not drop

    CollapseCertificate bogus = *cert;
    bogus.steps[0] =
        CollapseStep{VertexSet::of({1, 2, 3}), VertexSet::of({2, 3})};
    CHECK_FALSE(validate_collapse(K, bogus));
}
