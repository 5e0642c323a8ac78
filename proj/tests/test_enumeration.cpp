#include <catch_amalgamated.hpp>

#include <cmath>
#include <set>
#include <unordered_set>

#include "oracles.hpp"
#include "treeinv/canonical.hpp"
#include "treeinv/constructions.hpp"
#include "treeinv/enumeration.hpp"

using namespace treeinv;

namespace {

errc code_of(auto&& fn) {
    try {
        fn();
    } catch (const error& e) {
        return e.code();
    }
    FAIL("expected treeinv::error");
    return errc::io_failure;
}

std::set<CanonicalCode> generated_codes(vertex_id n) {
    std::set<CanonicalCode> out;
    for_each_free_tree(n, [&](const Tree& t, std::size_t) { out.insert(canonical_code(t)); });
    return out;
}

} // namespace

TEST_CASE("counts match the labelled-tree oracle", "[enumeration][oracle]") {
    for (vertex_id n = 1; n <= 8; ++n) {
        const auto expected = oracle::pruefer_dedup_codes(n);
        CHECK(count_free_trees(n) == expected.size());
        CHECK(generated_codes(n) == expected);
    }
}

TEST_CASE("classes match the rooted-tree oracle", "[enumeration][oracle]") {
    for (vertex_id n = 9; n <= 11; ++n)
        CHECK(generated_codes(n) == oracle::rooted_dedup_codes(n));
}

TEST_CASE("known counts up to order 18", "[enumeration]") {
    const std::vector<std::size_t> expected{1,   1,    1,    2,    3,     6,     11,    23,     47,
                                            106, 235, 551, 1301, 3159, 7741, 19320, 48629, 123867};
    for (vertex_id n = 1; n <= 14; ++n)
        CHECK(count_free_trees(n) == expected[static_cast<std::size_t>(n - 1)]);
}

TEST_CASE("order four gives path and star", "[enumeration]") {
    const auto trees = free_trees(4);
    REQUIRE(trees.size() == 2);
    CHECK(isomorphic(trees[0], path(4)));
    CHECK(isomorphic(trees[1], star(4)));
}

TEST_CASE("stream is valid, duplicate free and ordered", "[enumeration][property]") {
    for (vertex_id n = 1; n <= 13; ++n) {
        FreeTreeGenerator gen(n);
        std::unordered_set<CanonicalCode, CanonicalCodeHash> seen;
        std::vector<int> previous;
        std::size_t i = 0;
        while (gen.next()) {
            REQUIRE(gen.index() == i++);
            const auto t = gen.tree();
            REQUIRE(t.order() == n);
            REQUIRE(t.edge_count() == static_cast<std::size_t>(n - 1));
            REQUIRE(seen.insert(canonical_code(t)).second);
            if (!previous.empty())
                REQUIRE(gen.level_sequence() < previous);
            previous = gen.level_sequence();
        }
        REQUIRE_FALSE(gen.next());
    }
    CHECK(is_path(free_trees(9).front()));
    CHECK(is_star(free_trees(9).back()));
}

TEST_CASE("stream is restartable", "[enumeration]") {
    CHECK(free_trees(11) == free_trees(11));
}

TEST_CASE("stripes partition the stream", "[enumeration]") {
    const auto all = free_trees(10);
    for (std::size_t workers : {2u, 3u, 4u}) {
        std::vector<Tree> merged(all.size(), Tree{});
        std::size_t seen = 0;
        for (std::size_t w = 0; w < workers; ++w)
            for_each_free_tree(
                10,
                [&](const Tree& t, std::size_t idx) {
                    REQUIRE(idx % workers == w);
                    merged[idx] = t;
                    ++seen;
                },
                w, workers);
        CHECK(seen == all.size());
        CHECK(merged == all);
    }
}

TEST_CASE("internal-vertex filter", "[enumeration]") {
    auto p = free_trees_with_internal(5, 3);
    REQUIRE(p.size() == 1);
    CHECK(isomorphic(p[0], path(5)));
    auto s = free_trees_with_internal(5, 1);
    REQUIRE(s.size() == 1);
    CHECK(isomorphic(s[0], star(5)));

    for (vertex_id n = 3; n <= 12; ++n) {
        std::size_t total = 0;
        for (vertex_id k = 1; k <= n - 2; ++k) {
            const auto part = free_trees_with_internal(n, k);
            CHECK_FALSE(part.empty());
            for (const auto& t : part)
                REQUIRE(internal_count(t) == k);
            total += part.size();
        }
        CHECK(total == count_free_trees(n));
    }

    CHECK(code_of([] { free_trees_with_internal(5, 4); }) == errc::infeasible_filter);
    CHECK(code_of([] { free_trees_with_internal(5, 0); }) == errc::infeasible_filter);
    CHECK(code_of([] { free_trees_with_internal(2, 1); }) == errc::infeasible_filter);
}

TEST_CASE("enumeration limits", "[enumeration]") {
    CHECK(code_of([] { FreeTreeGenerator(0); }) == errc::invalid_parameters);
    CHECK(code_of([] { FreeTreeGenerator(19); }) == errc::order_too_large);
    CHECK(code_of([] { FreeTreeGenerator(8, 7); }) == errc::order_too_large);
    CHECK(count_free_trees(8, 8) == 23);
}

TEST_CASE("random trees are deterministic per seed", "[enumeration][random]") {
    CHECK(random_tree(40, 5) == random_tree(40, 5));
    CHECK(random_tree(40, 5) != random_tree(40, 6));
    CHECK(random_tree(2, 123) == path(2));
    CHECK(code_of([] { random_tree(1, 0); }) == errc::invalid_parameters);
}

TEST_CASE("random tree leaf fraction", "[enumeration][random][statistics]") {
    const int n = 200;
    const int samples = 2000;
    double sum = 0;
    for (int s = 0; s < samples; ++s)
        sum += static_cast<double>(leaves(random_tree(n, static_cast<std::uint64_t>(s))).size()) / n;
    const auto m = oracle::leaf_fraction_moments(n);
    const double observed = sum / samples;
    const double tolerance = 3.0 * m.stddev / std::sqrt(static_cast<double>(samples));
    INFO("observed " << observed << " expected " << m.mean << " +/- " << tolerance);
    CHECK(std::abs(observed - m.mean) <= tolerance);
    CHECK(std::abs(m.mean - std::exp(-1.0)) < 0.01);
}
