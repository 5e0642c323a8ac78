#include <catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "cli.hpp"
#include "treeinv/constructions.hpp"
#include "treeinv/io.hpp"
#include "treeinv/report.hpp"

using namespace treeinv;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "treeinv");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path scratch() {
    const auto dir = std::filesystem::temp_directory_path() / "treeinv_test_cli";
    std::filesystem::create_directories(dir);
    return dir;
}

} // namespace

TEST_CASE("compute on a construction", "[cli]") {
    const auto r = run({"compute", "--gen", "starlike:6,6,1", "--json"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("summary").at("delta_sum") == 104);
    CHECK(j.at("n") == 14);

    const auto text = run({"compute", "--gen", "path:5"});
    CHECK(text.code == 0);
    CHECK(text.out.find("Uni = 4") != std::string::npos);

    const auto csv = run({"compute", "--gen", "star:4", "--csv"});
    CHECK(csv.code == 0);
    CHECK_FALSE(csv.out.empty());
}

TEST_CASE("gen output feeds compute", "[cli]") {
    const auto file = (scratch() / "p14.txt").string();
    REQUIRE(run({"gen", "path:14", "--out", file}).code == 0);
    CHECK(io::parse_edge_list(io::read_file(file)) == path(14));
    CHECK(run({"compute", "--in", file, "--json"}).out == run({"compute", "--gen", "path:14", "--json"}).out);

    const auto pf = (scratch() / "s5.pr").string();
    REQUIRE(run({"gen", "star:5", "--pruefer", "--out", pf}).code == 0);
    CHECK(io::read_file(pf) == "5\n0 0 0\n");
    CHECK(run({"compute", "--in", pf, "--pruefer", "--json"}).out == run({"compute", "--gen", "star:5", "--json"}).out);

    const auto db = run({"gen", "dumbbell:k=4,a=2,b=3"});
    CHECK(io::parse_edge_list(db.out).order() == 9);
}

TEST_CASE("usage and input errors exit with 2", "[cli]") {
    const auto missing = run({"compute", "--in", "/nonexistent/tree.txt"});
    CHECK(missing.code == 2);
    CHECK(missing.err.find("file not found") != std::string::npos);

    CHECK(run({}).code == 2);
    CHECK(run({"compute"}).code == 2);
    CHECK(run({"compute", "--gen", "path:3", "--in", "x"}).code == 2);
    CHECK(run({"compute", "--gen", "tree:3"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"verify", "--claim", "nope", "--max-n", "5"}).code == 2);
    CHECK(run({"verify", "--claim", "thm_2_2_uni_path_max", "--max-n", "30"}).code == 2);
    CHECK(run({"search", "--stat", "Girth", "--n", "5", "--dir", "max"}).code == 2);
    CHECK(run({"enum", "--n", "5", "--k", "4"}).code == 2);

    const auto bad = (scratch() / "bad.txt").string();
    io::write_file(bad, "4\n0 1\n2 3\n1 2\n0 2\n");
    CHECK(run({"compute", "--in", bad}).code == 2);
}

TEST_CASE("verify exit codes follow the verdict", "[cli]") {
    const auto ok = run({"verify", "--claim", "thm_4_3_delta_min", "--max-n", "10"});
    CHECK(ok.code == 0);
    CHECK(ok.err.find("thm_4_3_delta_min: holds") != std::string::npos);
    CHECK(verify::parse_report(ok.out).verdict == verify::Verdict::holds);

    const auto fail = run({"verify", "--claim", "prop_2_5_uni_k_min", "--max-n", "10"});
    CHECK(fail.code == 1);

    const auto scan = run({"verify", "--claim", "conj_6_delta_at_center", "--max-n", "9", "--format", "csv"});
    CHECK(scan.code == 0);
    CHECK(scan.out.rfind(verify::csv_header, 0) == 0);
}

TEST_CASE("verify all writes one file per claim", "[cli]") {
    const auto dir = scratch() / "reports";
    std::filesystem::remove_all(dir);
    const auto r = run({"verify", "--claim", "all", "--max-n", "10", "--out", dir.string(), "--workers", "2"});
    CHECK(r.code == 1);
    std::size_t files = 0;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        (void)entry;
        ++files;
    }
    CHECK(files == verify::claims().size());
    CHECK(verify::parse_report(io::read_file((dir / "fig_7_values.json").string())).named_values.at("delta_path_14") == 98);
}

TEST_CASE("enum output", "[cli]") {
    const auto all = run({"enum", "--n", "5"});
    CHECK(all.code == 0);
    std::istringstream is(all.out);
    CHECK(io::parse_edge_list_stream(is).size() == 3);

    const auto k3 = run({"enum", "--n", "5", "--k", "3"});
    std::istringstream is3(k3.out);
    const auto only = io::parse_edge_list_stream(is3);
    REQUIRE(only.size() == 1);
    CHECK(is_path(only[0]));

    CHECK(run({"enum", "--n", "10", "--count"}).out == "106\n");
    CHECK(run({"--max-order", "9", "enum", "--n", "10", "--count"}).code == 2);
}

TEST_CASE("order cap from the environment", "[cli]") {
    ::setenv(cli::order_cap_env, "6", 1);
    CHECK(run({"enum", "--n", "7", "--count"}).code == 2);
    CHECK(run({"enum", "--n", "6", "--count"}).out == "6\n");
    ::setenv(cli::order_cap_env, "junk", 1);
    CHECK(run({"enum", "--n", "6", "--count"}).code == 2);
    ::unsetenv(cli::order_cap_env);
    CHECK(run({"enum", "--n", "7", "--count"}).out == "11\n");
}

TEST_CASE("search and random", "[cli]") {
    const auto s = run({"search", "--stat", "Delta", "--n", "14", "--dir", "max"});
    CHECK(s.code == 0);
    const auto result = verify::parse_search_result(s.out);
    CHECK(result.optimum == std::optional<std::int64_t>{104});

    const auto a = run({"random", "--n", "30", "--seed", "4"});
    CHECK(a.code == 0);
    CHECK(a.out == run({"random", "--n", "30", "--seed", "4"}).out);
    CHECK(io::parse_edge_list(a.out) == random_tree(30, 4));
}
