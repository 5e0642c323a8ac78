#pragma once

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "treeinv/canonical.hpp"
#include "treeinv/constructions.hpp"
#include "treeinv/enumeration.hpp"
#include "treeinv/error.hpp"
#include "treeinv/invariants.hpp"
#include "treeinv/io.hpp"
#include "treeinv/report.hpp"
#include "treeinv/verify.hpp"

namespace treeinv::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_claim_failed = 1;
inline constexpr int exit_usage = 2;

inline constexpr const char* order_cap_env = "TREEINV_MAX_ORDER";

inline vertex_id default_cap_from_env() {
    if (const char* env = std::getenv(order_cap_env)) {
        try {
            const int v = std::stoi(env);
            if (v >= 1)
                return v;
        } catch (const std::exception&) {
        }
        throw error(errc::invalid_parameters, std::string(order_cap_env) + " must be a positive integer");
    }
    return default_order_cap;
}

namespace detail {

inline std::string join(const std::vector<vertex_id>& xs, const char* sep) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i)
            s += sep;
        s += std::to_string(xs[i]);
    }
    return s;
}

inline void write_output(std::ostream& out, const std::string& path, const std::string& text) {
    if (path.empty())
        out << text;
    else
        io::write_file(path, text);
}

inline Tree load_tree(const std::string& path, bool pruefer) {
    if (!std::filesystem::exists(path))
        throw error(errc::io_failure, "file not found: " + path);
    const auto text = io::read_file(path);
    return pruefer ? io::parse_pruefer(text) : io::parse_edge_list(text);
}

inline std::string compute_json(const Tree& t, const VertexProfile& p, const InvariantSummary& s) {
    nlohmann::json edges = nlohmann::json::array();
    for (auto [u, v] : t.edges())
        edges.push_back({u, v});
    nlohmann::json j{{"n", t.order()},
                     {"edges", edges},
                     {"code", canonical_code(t).to_string()},
                     {"profile", p},
                     {"summary", s}};
    return j.dump(2) + "\n";
}

inline std::string compute_csv(const Tree& t, const VertexProfile& p, const InvariantSummary& s) {
    std::ostringstream os;
    os << "vertex,ecc,uni,delta,dsum\n";
    for (std::size_t v = 0; v < t.size(); ++v)
        os << v << ',' << p.ecc[v] << ',' << p.uni[v] << ',' << p.delta[v] << ',' << p.dsum[v] << '\n';
    os << "\nfield,value\n"
       << "ecc_sum," << s.ecc_sum << '\n'
       << "uni_sum," << s.uni_sum << '\n'
       << "delta_sum," << s.delta_sum << '\n'
       << "ld," << s.ld << '\n'
       << "wiener," << s.wiener << '\n'
       << "diameter," << s.diameter << '\n'
       << "r," << s.r << '\n'
       << "r_prime," << s.r_prime << '\n'
       << "delta_min," << s.delta_min << '\n'
       << "center," << join(s.center, ";") << '\n'
       << "centroid," << join(s.centroid, ";") << '\n'
       << "c_uni," << join(s.c_uni, ";") << '\n';
    return os.str();
}

inline std::string compute_text(const Tree& t, const VertexProfile& p, const InvariantSummary& s) {
    std::ostringstream os;
    os << "n = " << t.order() << '\n';
    os << "vertex  ecc  uni  delta  dsum\n";
    for (std::size_t v = 0; v < t.size(); ++v)
        os << v << "  " << p.ecc[v] << "  " << p.uni[v] << "  " << p.delta[v] << "  " << p.dsum[v] << '\n';
    os << "Ecc = " << s.ecc_sum << "  Uni = " << s.uni_sum << "  Delta = " << s.delta_sum << "  LD = " << s.ld
       << "  W = " << s.wiener << '\n'
       << "diameter = " << s.diameter << "  r = " << s.r << "  r' = " << s.r_prime << "  delta(T) = " << s.delta_min
       << '\n'
       << "center = {" << join(s.center, ", ") << "}  centroid = {" << join(s.centroid, ", ") << "}  C_uni = {"
       << join(s.c_uni, ", ") << "}\n";
    return os.str();
}

} // namespace detail

// Runs the command line; returns the process exit code. Reports go to `out`
// (unless --out is given), diagnostics to `err`.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Distance-based tree invariants: compute, construct, enumerate, verify, search"};
    app.name("treeinv");
    app.require_subcommand(1);

    int order_cap = 0;
    app.add_option("--max-order", order_cap, "Enumeration cap (default $TREEINV_MAX_ORDER or 18)")
        ->check(CLI::PositiveNumber);

    // compute
    auto* compute = app.add_subcommand("compute", "Per-vertex profile and global summary of one tree");
    std::string in_path, gen_spec, out_path;
    bool as_json = false, as_csv = false, pruefer_in = false;
    auto* in_opt = compute->add_option("--in", in_path, "Tree file (edge-list format)");
    auto* gen_opt = compute->add_option("--gen", gen_spec, "Construction spec, e.g. starlike:6,6,1");
    in_opt->excludes(gen_opt);
    gen_opt->excludes(in_opt);
    compute->add_flag("--pruefer", pruefer_in, "Input file is in Pruefer format");
    auto* json_flag = compute->add_flag("--json", as_json, "JSON output");
    auto* csv_flag = compute->add_flag("--csv", as_csv, "CSV output");
    json_flag->excludes(csv_flag);
    compute->add_option("--out", out_path, "Output file (default stdout)");

    // gen
    auto* gen = app.add_subcommand("gen", "Emit a construction in edge-list format");
    std::string gen_positional;
    bool gen_pruefer = false;
    gen->add_option("spec", gen_positional, "path:N | star:N | starlike:L1,L2,.. | dumbbell:k=K,a=A,b=B | caterpillar:M")
        ->required();
    gen->add_option("--out", out_path, "Output file (default stdout)");
    gen->add_flag("--pruefer", gen_pruefer, "Write Pruefer format instead");

    // enum
    auto* en = app.add_subcommand("enum", "Dump every free tree of order N");
    int enum_n = 0;
    std::optional<int> enum_k;
    bool enum_count = false;
    en->add_option("--n", enum_n, "Order")->required();
    en->add_option("--k", enum_k, "Keep only trees with K internal vertices");
    en->add_option("--out", out_path, "Output file (default stdout)");
    en->add_flag("--count", enum_count, "Print only the number of trees");

    // verify
    auto* ver = app.add_subcommand("verify", "Check claims over exhaustive universes");
    std::string claim_id;
    int max_n = 0, min_n = 1;
    std::optional<int> verify_k;
    std::size_t workers = 1, witness_cap = verify::default_witness_cap;
    std::string format = "json";
    ver->add_option("--claim", claim_id, "Claim id or 'all'")->required();
    ver->add_option("--max-n", max_n, "Largest order")->required();
    ver->add_option("--min-n", min_n, "Smallest order (default 1)");
    ver->add_option("--k", verify_k, "Internal-vertex filter for the k-split claims");
    ver->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);
    ver->add_option("--witness-cap", witness_cap, "Witness trees per report");
    ver->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    ver->add_option("--out", out_path, "Output file (single claim) or directory (several claims)");

    // search
    auto* se = app.add_subcommand("search", "Exhaustive extremal search for one statistic");
    std::string stat_name, dir_name;
    int search_n = 0;
    std::optional<int> search_k;
    se->add_option("--stat", stat_name, "Uni | Ecc | Delta | LD | Ecc-LD | delta_min | r-rprime")->required();
    se->add_option("--n", search_n, "Order")->required();
    se->add_option("--k", search_k, "Internal-vertex filter");
    se->add_option("--dir", dir_name, "max or min")->required()->check(CLI::IsMember({"max", "min"}));
    se->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);
    se->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    se->add_option("--out", out_path, "Output file (default stdout)");

    // random
    auto* rnd = app.add_subcommand("random", "One uniform random labelled tree");
    int random_n = 0;
    std::uint64_t seed = 0;
    bool random_pruefer = false;
    rnd->add_option("--n", random_n, "Order")->required();
    rnd->add_option("--seed", seed, "Seed")->required();
    rnd->add_option("--out", out_path, "Output file (default stdout)");
    rnd->add_flag("--pruefer", random_pruefer, "Write Pruefer format instead");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "treeinv: " << e.what() << '\n';
        return exit_usage;
    }

    try {
        const vertex_id cap = order_cap > 0 ? order_cap : default_cap_from_env();

        if (compute->parsed()) {
            if (in_path.empty() == gen_spec.empty()) {
                err << "treeinv compute: exactly one of --in or --gen is required\n";
                return exit_usage;
            }
            const Tree t = in_path.empty() ? build(gen_spec) : detail::load_tree(in_path, pruefer_in);
            const auto p = profile_fast(t);
            const auto s = summarize(t, p);
            const auto text = as_json  ? detail::compute_json(t, p, s)
                              : as_csv ? detail::compute_csv(t, p, s)
                                       : detail::compute_text(t, p, s);
            detail::write_output(out, out_path, text);
            return exit_ok;
        }

        if (gen->parsed()) {
            const Tree t = build(gen_positional);
            std::ostringstream os;
            if (gen_pruefer)
                io::write_pruefer(os, t);
            else
                io::write_edge_list(os, t);
            detail::write_output(out, out_path, os.str());
            return exit_ok;
        }

        if (en->parsed()) {
            if (enum_k && !internal_filter_feasible(enum_n, *enum_k))
                throw error(errc::infeasible_filter, "no tree of order " + std::to_string(enum_n) + " has " +
                                                         std::to_string(*enum_k) + " internal vertices");
            std::ostringstream os;
            std::size_t count = 0;
            for_each_free_tree(
                enum_n,
                [&](const Tree& t, std::size_t) {
                    if (enum_k && internal_count(t) != *enum_k)
                        return;
                    if (!enum_count) {
                        if (count)
                            os << '\n';
                        io::write_edge_list(os, t);
                    }
                    ++count;
                },
                0, 1, cap);
            if (enum_count)
                os << count << '\n';
            detail::write_output(out, out_path, os.str());
            return exit_ok;
        }

        if (ver->parsed()) {
            verify::Options opt;
            opt.workers = workers;
            opt.witness_cap = witness_cap;
            opt.order_cap = cap;
            std::optional<vertex_id> k;
            if (verify_k)
                k = *verify_k;
            std::vector<verify::TheoremReport> reports;
            if (claim_id == "all")
                reports = verify::check_all(min_n, max_n, k, opt);
            else
                reports.push_back(verify::check(claim_id, min_n, max_n, k, opt));

            const auto fmt = format == "csv" ? verify::Format::csv : verify::Format::json;
            const char* ext = format == "csv" ? ".csv" : ".json";
            if (!out_path.empty() && reports.size() > 1) {
                std::filesystem::create_directories(out_path);
                for (const auto& r : reports)
                    verify::emit_report(r, fmt, (std::filesystem::path(out_path) / (r.claim + ext)).string());
            } else if (!out_path.empty()) {
                verify::emit_report(reports.front(), fmt, out_path);
            } else if (fmt == verify::Format::json) {
                out << (reports.size() == 1 ? nlohmann::json(reports.front()) : nlohmann::json(reports)).dump(2)
                    << '\n';
            } else {
                for (const auto& r : reports) {
                    if (reports.size() > 1)
                        out << "# " << r.claim << '\n';
                    out << verify::to_csv_text(r);
                }
            }

            bool failed = false;
            for (const auto& r : reports) {
                err << r.claim << ": " << verify::to_string(r.verdict) << " (" << r.count << " trees, n = "
                    << r.n_min << ".." << r.n_max << ")\n";
                failed = failed || r.verdict == verify::Verdict::fails;
            }
            return failed ? exit_claim_failed : exit_ok;
        }

        if (se->parsed()) {
            verify::Options opt;
            opt.workers = workers;
            opt.order_cap = cap;
            std::optional<vertex_id> k;
            if (search_k)
                k = *search_k;
            const auto result = verify::search(stat_name, search_n, k, verify::parse_direction(dir_name), opt);
            const auto fmt = format == "csv" ? verify::Format::csv : verify::Format::json;
            detail::write_output(out, out_path, verify::render(result, fmt));
            return exit_ok;
        }

        if (rnd->parsed()) {
            const Tree t = random_tree(random_n, seed);
            std::ostringstream os;
            if (random_pruefer)
                io::write_pruefer(os, t);
            else
                io::write_edge_list(os, t);
            detail::write_output(out, out_path, os.str());
            return exit_ok;
        }
    } catch (const error& e) {
        err << "treeinv: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        err << "treeinv: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}

} // namespace treeinv::cli
