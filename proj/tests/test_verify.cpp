#include <catch_amalgamated.hpp>

#include <algorithm>
#include <filesystem>
#include <numeric>

#include "treeinv/canonical.hpp"
#include "treeinv/constructions.hpp"
#include "treeinv/enumeration.hpp"
#include "treeinv/verify.hpp"

using namespace treeinv;
using namespace treeinv::verify;

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

Tree witness_tree(const Witness& w) { return from_edge_list(w.n, w.edges); }

std::int64_t oracle_stat(const Tree& t, const std::string& name) {
    const auto p = profile_oracle(t);
    const auto sum = [](const auto& xs) { return std::accumulate(xs.begin(), xs.end(), std::int64_t{0}); };
    if (name == "Uni")
        return sum(p.uni);
    if (name == "Delta")
        return sum(p.delta);
    if (name == "Ecc-LD")
        return sum(p.ecc) - *std::max_element(p.dsum.begin(), p.dsum.end());
    FAIL("no oracle for " << name);
    return 0;
}

TheoremReport without_time(TheoremReport r) {
    r.wall_time = 0;
    return r;
}

bool is_k_claim(const Claim& c) { return c.by_internal; }

} // namespace

TEST_CASE("claim registry", "[verify]") {
    std::vector<std::string> ids;
    for (const auto& c : claims())
        ids.push_back(c.id);
    for (const char* id : {"prop_2_1_ld_bounds", "thm_2_2_uni_path_max", "prop_2_3_uni_star_min", "prop_2_4_uni_k_max",
                           "prop_2_5_uni_k_min", "prop_3_r_ge_rprime", "prop_4_1_ecc_ld_gap", "thm_4_3_delta_min",
                           "prop_5_1_delta_max_at_ends", "thm_5_2_center_delta", "fig_7_values",
                           "fig_3_middle_parts", "fig_6_middle_parts", "question_4_2_ecc_minus_ld",
                           "conj_6_delta_at_center", "delta_max_structure"})
        CHECK(std::find(ids.begin(), ids.end(), id) != ids.end());
    CHECK(code_of([] { find_claim("no_such_claim"); }) == errc::unknown_claim);
}

TEST_CASE("path maximizes Uni over all trees up to order 10", "[verify]") {
    const auto r = check("thm_2_2_uni_path_max", 2, 10);
    CHECK(r.verdict == Verdict::holds);
    CHECK(r.count == 1 + 1 + 2 + 3 + 6 + 11 + 23 + 47 + 106);
    CHECK(r.rows.size() == 9);
    for (const auto& row : r.rows)
        CHECK(row.violations == 0);
}

TEST_CASE("assertion claims hold up to order 12", "[verify]") {
    for (const auto& r : check_all(1, 12)) {
        INFO(r.claim);
        if (r.claim == "prop_2_5_uni_k_min")
            continue;
        if (r.mode == Mode::scan)
            CHECK(r.verdict == Verdict::scan);
        else
            CHECK(r.verdict == Verdict::holds);
    }
}

TEST_CASE("k-internal minimum claim fails first at order 10", "[verify][finding]") {
    CHECK(check("prop_2_5_uni_k_min", 3, 9).verdict == Verdict::holds);

    const auto r = check("prop_2_5_uni_k_min", 3, 10);
    REQUIRE(r.verdict == Verdict::fails);
    for (const auto& row : r.rows)
        CHECK((row.violations > 0) == (row.n == 10 && row.k == 7));
    REQUIRE_FALSE(r.witnesses.empty());
    bool below = false;
    for (const auto& w : r.witnesses) {
        CHECK(w.n == 10);
        CHECK(internal_count(witness_tree(w)) == 7);
        below = below || oracle_stat(witness_tree(w), "Uni") == 11;
    }
    CHECK(below);

    const auto spider = starlike({4, 4, 1});
    CHECK(internal_count(spider) == 7);
    CHECK(oracle_stat(spider, "Uni") == 11);
    CHECK(formula_uni_min(10, 7) == 12);
    CHECK(oracle_stat(balanced_starlike(10, 3), "Uni") == 12);
}

TEST_CASE("k-internal maximum claim holds for every k", "[verify]") {
    const auto r = check("prop_2_4_uni_k_max", 3, 12);
    CHECK(r.verdict == Verdict::holds);
    for (vertex_id k = 1; k <= 8; ++k)
        CHECK(check("prop_2_4_uni_k_max", 3, 10, k).verdict == Verdict::holds);
}

TEST_CASE("fixed figure claims", "[verify]") {
    const auto f7 = check("fig_7_values", 1, 1);
    CHECK(f7.verdict == Verdict::holds);
    CHECK(f7.named_values.at("delta_path_14") == 98);
    CHECK(f7.named_values.at("delta_starlike_6_6_1") == 104);
    const auto text = to_json_text(f7);
    CHECK(text.find("98") != std::string::npos);
    CHECK(text.find("104") != std::string::npos);

    const auto f6 = check("fig_6_middle_parts", 1, 1);
    CHECK(f6.verdict == Verdict::holds);
    CHECK(f6.named_values.at("r") == 5);
    CHECK(f6.named_values.at("r_prime") == 3);
    CHECK(check("fig_3_middle_parts", 1, 1).verdict == Verdict::holds);
}

TEST_CASE("scans report but never fail", "[verify]") {
    for (const char* id : {"question_4_2_ecc_minus_ld", "conj_6_delta_at_center", "delta_max_structure"}) {
        const auto r = check(id, 1, 12);
        CHECK(r.mode == Mode::scan);
        CHECK(r.verdict == Verdict::scan);
        REQUIRE(r.rows.size() == static_cast<std::size_t>(12 - find_claim(id).min_n + 1));
        CHECK(r.rows.back().n == 12);
    }
    const auto q = check("question_4_2_ecc_minus_ld", 3, 12);
    for (const auto& row : q.rows)
        CHECK(row.exceeds_path == std::optional<bool>{false});
}

TEST_CASE("extremal search", "[verify][search]") {
    const auto uni = search("Uni", 8, std::nullopt, Direction::max);
    CHECK(uni.optimum == std::optional<std::int64_t>{12});
    CHECK(uni.optimizer_count == 1);
    REQUIRE(uni.optimizers.size() == 1);
    CHECK(isomorphic(witness_tree(uni.optimizers[0]), path(8)));

    const auto delta = search("Delta", 14, std::nullopt, Direction::max);
    REQUIRE(delta.optimum);
    CHECK(*delta.optimum >= 104);
    CHECK(delta.universe_count == 3159);
    const auto path_code = canonical_code(path(14)).to_string();
    for (const auto& w : delta.optimizers)
        CHECK(w.code != path_code);

    // Ecc - LD over the three trees of order 5, checked directly.
    const auto gap = search("Ecc-LD", 5, std::nullopt, Direction::max);
    std::int64_t best = std::numeric_limits<std::int64_t>::min();
    std::size_t ties = 0;
    for (const auto& t : free_trees(5)) {
        const auto v = oracle_stat(t, "Ecc-LD");
        if (v > best)
            best = v, ties = 0;
        if (v == best)
            ++ties;
    }
    CHECK(gap.optimum == std::optional<std::int64_t>{best});
    CHECK(gap.optimizer_count == static_cast<std::int64_t>(ties));

    const auto min_uni = search("uni", 9, 7, Direction::min);
    CHECK(min_uni.optimum == std::optional<std::int64_t>{formula_uni_path(9)});
    for (const auto& w : min_uni.optimizers)
        CHECK(oracle_stat(witness_tree(w), "Uni") == *min_uni.optimum);

    CHECK(code_of([] { search("Girth", 5, std::nullopt, Direction::max); }) == errc::unknown_statistic);
    CHECK(code_of([] { search("Uni", 5, 4, Direction::max); }) == errc::infeasible_filter);
    CHECK(code_of([] { parse_direction("up"); }) == errc::invalid_parameters);
}

TEST_CASE("optimizers really attain the reported optimum", "[verify][search][property]") {
    for (const char* stat : {"Uni", "Delta"})
        for (vertex_id n = 3; n <= 11; ++n)
            for (auto dir : {Direction::max, Direction::min}) {
                const auto s = search(stat, n, std::nullopt, dir);
                REQUIRE(s.optimum);
                for (const auto& w : s.optimizers)
                    REQUIRE(oracle_stat(witness_tree(w), stat) == *s.optimum);
            }
}

TEST_CASE("reports round-trip through JSON", "[verify][report]") {
    for (const auto& r : check_all(1, 9))
        REQUIRE(parse_report(to_json_text(r)) == r);
    const auto s = search("Delta", 9, std::nullopt, Direction::max);
    CHECK(parse_search_result(to_json_text(s)) == s);
    CHECK(code_of([] { parse_report("{"); }) == errc::parse_failure);
}

TEST_CASE("CSV has one line per row plus a header", "[verify][report]") {
    const auto r = check("prop_2_4_uni_k_max", 3, 9);
    const auto csv = to_csv_text(r);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == static_cast<std::ptrdiff_t>(r.rows.size() + 1));
    CHECK(csv.rfind(csv_header, 0) == 0);
}

TEST_CASE("report files", "[verify][report]") {
    const auto dir = std::filesystem::temp_directory_path() / "treeinv_test_verify";
    std::filesystem::create_directories(dir);
    const auto r = without_time(check("fig_7_values", 1, 1));
    const auto file = (dir / "fig7.json").string();
    emit_report(r, Format::json, file);
    const auto first = io::read_file(file);
    emit_report(r, Format::json, file);
    CHECK(io::read_file(file) == first);
    CHECK(parse_report(first) == r);
    CHECK(code_of([&] { emit_report(r, Format::json, (dir / "missing" / "x.json").string()); }) ==
          errc::io_failure);
}

TEST_CASE("results do not depend on the worker count", "[verify][parallel]") {
    std::vector<TheoremReport> base;
    for (auto r : check_all(1, 11))
        base.push_back(without_time(r));
    for (std::size_t w : {2u, 3u, 4u}) {
        auto again = check_all(1, 11, std::nullopt, {w, default_witness_cap, default_order_cap});
        REQUIRE(again.size() == base.size());
        for (std::size_t i = 0; i < base.size(); ++i)
            REQUIRE(without_time(again[i]) == base[i]);
    }
}

TEST_CASE("witness cap is respected", "[verify]") {
    const auto r = check("prop_2_5_uni_k_min", 3, 12, std::nullopt, {1, 2, default_order_cap});
    CHECK(r.verdict == Verdict::fails);
    CHECK(r.witnesses.size() <= 2);
}

TEST_CASE("verification errors", "[verify]") {
    CHECK(code_of([] { check("thm_2_2_uni_path_max", 2, 19); }) == errc::order_too_large);
    CHECK(code_of([] { check("thm_2_2_uni_path_max", 2, 12, std::nullopt, {1, 5, 10}); }) == errc::order_too_large);
    CHECK(code_of([] { check("thm_2_2_uni_path_max", 5, 4); }) == errc::invalid_parameters);
    CHECK(code_of([] { check("thm_2_2_uni_path_max", 2, 8, 3); }) == errc::invalid_parameters);
    CHECK(code_of([] { check("thm_2_2_uni_path_max", 2, 8, std::nullopt, {0, 5, 18}); }) ==
          errc::invalid_parameters);
    CHECK(code_of([] { check("unknown", 2, 8); }) == errc::unknown_claim);

    // A k filter restricts k-claims to a single slice.
    const auto r = check("prop_2_4_uni_k_max", 3, 10, 2);
    for (const auto& row : r.rows)
        CHECK(row.k == std::optional<vertex_id>{2});
    CHECK(std::all_of(claims().begin(), claims().end(),
                      [](const Claim& c) { return !is_k_claim(c) || c.mode == Mode::assertion; }));
}
