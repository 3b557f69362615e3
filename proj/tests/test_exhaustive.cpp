#include <catch2/catch_amalgamated.hpp>

#include "rzk/exhaustive.hpp"

#include <string>
#include <vector>

using namespace rzk;

TEST_CASE("the full battery passes on up to three vertices") {
    const auto results = run_all_suites(3);
    const std::vector<std::string> expected_names = {
        "delta-le-flag",
        "subcomplex-monotonicity",
        "equal-orders-iff-delta-eq-flag",
        "neighborliness",
        "minimal-non-face-soundness",
        "support-product-law",
        "freeness-oracle-pairs",
        "fixed-cells-per-element",
        "sandwich-consistency",
        "rank-one-exactness",
        "corollary-certificates",
        "restriction-invariance",
        "homology-soundness",
        "collapse-certificates",
    };
    REQUIRE(results.size() == expected_names.size());
    for (std::size_t i = 0; i < results.size(); ++i) {
        INFO(results[i].name << ": " << results[i].counterexample);
        CHECK(results[i].name == expected_names[i]);
        CHECK(results[i].passed);
        CHECK(results[i].counterexample.empty());
        CHECK(results[i].checked > 0);
        CHECK(results[i].seconds >= 0.0);
    }
}

TEST_CASE("suite instance counts match the enumeration sizes") {
    // 1 + 2 + 9 complexes on up to three vertices
    CHECK(suites::delta_le_flag(3).checked == 12);
    CHECK(suites::homology_soundness(3).checked == 12);
    // pairs with nontrivial groups: 1*1 + 2*4 + 9*15
    CHECK(suites::rank_one_exactness(3).checked == 144);
    CHECK(suites::freeness_oracle_pairs(2).checked == 9);
    // all subtori of (Z/2)^3
    CHECK(suites::support_product_law(3).checked == 16);
    // cones over bases on one or two vertices, plus the 2-simplex boundary
    CHECK(suites::collapse_certificates(3).checked == 4);
}

TEST_CASE("the scan machinery reports counterexamples and stops") {
    const auto result = run_complex_suite(
        "planted-failure", 2,
        [](const SimplicialComplex& K) -> std::optional<std::string> {
            if (K == full_simplex(2)) return std::string("planted");
            return std::nullopt;
        });
    CHECK(result.name == "planted-failure");
    CHECK_FALSE(result.passed);
    // the walk sees the point, the two-point complex, then the full simplex
    CHECK(result.checked == 3);
    CHECK(result.counterexample.find("planted") != std::string::npos);
    CHECK(result.counterexample.find("K = ") != std::string::npos);

    const auto pair_result = run_pair_suite(
        "planted-pair-failure", 2,
        [](const SimplicialComplex&, const Subtorus& G)
            -> std::optional<std::string> {
            if (G.rank() == 2) return std::string("rank two reached");
            return std::nullopt;
        });
    CHECK_FALSE(pair_result.passed);
    CHECK(pair_result.counterexample.find("G = <10,01>") != std::string::npos);

    const auto group_result = run_group_suite(
        "planted-group-failure", 2,
        [](const Subtorus&) -> std::optional<std::string> {
            return std::string("always");
        });
    CHECK_FALSE(group_result.passed);
    CHECK(group_result.checked == 1);
}

TEST_CASE("the battery rejects out-of-range sizes") {
    CHECK_THROWS_AS(run_all_suites(0), input_error);
    CHECK_THROWS_AS(run_all_suites(6), resource_error);
}

TEST_CASE("the delta table shortcut agrees with direct subcomplex deltas") {
    for_each_complex_on(4, [&](const SimplicialComplex& K) {
        const auto table = rzk::detail::delta_table(K);
        for (std::uint64_t s = 1; s < (std::uint64_t{1} << 4); ++s) {
            const auto direct =
                delta_number(full_subcomplex(K, VertexSet(s)).complex);
            const ExtendedNat via_table =
                table[s] == 5 ? ExtendedNat::infinity()
                              : ExtendedNat(static_cast<std::uint64_t>(table[s]) - 1);
            REQUIRE(direct == via_table);
        }
    });
}
