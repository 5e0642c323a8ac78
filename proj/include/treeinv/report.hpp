#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "treeinv/error.hpp"
#include "treeinv/invariants.hpp"
#include "treeinv/io.hpp"
#include "treeinv/tree.hpp"

namespace treeinv::verify {

enum class Mode { assertion, scan };
enum class Verdict { holds, fails, scan };
enum class Direction { max, min };

struct Witness {
    vertex_id n = 1;
    std::vector<edge> edges;
    std::string code;
    InvariantSummary summary;
    std::string note;

    friend bool operator==(const Witness&, const Witness&) = default;
};

// One line of a per-order table.
struct Row {
    vertex_id n = 0;
    std::optional<vertex_id> k;
    std::int64_t count = 0;
    std::int64_t violations = 0;
    std::optional<std::int64_t> statistic;
    std::vector<std::string> argmax_codes; // capped, in stream order
    std::int64_t argmax_count = 0;
    std::optional<std::int64_t> path_value;
    std::optional<bool> exceeds_path;
    std::map<std::string, std::int64_t> extra;

    friend bool operator==(const Row&, const Row&) = default;
};

struct TheoremReport {
    std::string claim;
    Mode mode = Mode::assertion;
    std::string description;
    vertex_id n_min = 0;
    vertex_id n_max = 0;
    std::optional<vertex_id> k;
    std::int64_t count = 0;
    Verdict verdict = Verdict::holds;
    std::vector<Witness> witnesses;
    std::string statistic;
    Direction direction = Direction::max;
    std::vector<Row> rows;
    std::map<std::string, std::int64_t> named_values;
    double wall_time = 0.0;

    friend bool operator==(const TheoremReport&, const TheoremReport&) = default;
};

struct SearchResult {
    std::string statistic;
    Direction direction = Direction::max;
    vertex_id n = 0;
    std::optional<vertex_id> k;
    std::int64_t universe_count = 0;
    std::optional<std::int64_t> optimum;
    std::int64_t optimizer_count = 0;
    std::vector<Witness> optimizers;
    std::vector<Row> rows;
    double wall_time = 0.0;

    friend bool operator==(const SearchResult&, const SearchResult&) = default;
};

inline Witness make_witness(const Tree& t, std::string code, std::string note) {
    return {t.order(), t.edges(), std::move(code), summarize(t), std::move(note)};
}

// ---------------------------------------------------------------------------
// JSON

using nlohmann::json;

inline std::string to_string(Mode m) { return m == Mode::assertion ? "assert" : "scan"; }
inline std::string to_string(Verdict v) {
    return v == Verdict::holds ? "holds" : v == Verdict::fails ? "fails" : "scan";
}
inline std::string to_string(Direction d) { return d == Direction::max ? "max" : "min"; }

inline Mode mode_from_string(const std::string& s) {
    if (s == "assert") return Mode::assertion;
    if (s == "scan") return Mode::scan;
    throw error(errc::parse_failure, "bad mode '" + s + "'");
}
inline Verdict verdict_from_string(const std::string& s) {
    if (s == "holds") return Verdict::holds;
    if (s == "fails") return Verdict::fails;
    if (s == "scan") return Verdict::scan;
    throw error(errc::parse_failure, "bad verdict '" + s + "'");
}
inline Direction direction_from_string(const std::string& s) {
    if (s == "max") return Direction::max;
    if (s == "min") return Direction::min;
    throw error(errc::parse_failure, "bad direction '" + s + "'");
}

namespace detail {

template <typename T>
json optional_to_json(const std::optional<T>& v) {
    return v ? json(*v) : json(nullptr);
}

template <typename T>
std::optional<T> optional_from_json(const json& j) {
    if (j.is_null())
        return std::nullopt;
    return j.get<T>();
}

} // namespace detail

} // namespace treeinv::verify

namespace treeinv {

inline void to_json(nlohmann::json& j, const InvariantSummary& s) {
    j = nlohmann::json{{"ecc_sum", s.ecc_sum},     {"uni_sum", s.uni_sum},   {"delta_sum", s.delta_sum},
                       {"ld", s.ld},               {"wiener", s.wiener},     {"diameter", s.diameter},
                       {"r", s.r},                 {"r_prime", s.r_prime},   {"delta_min", s.delta_min},
                       {"center", s.center},       {"centroid", s.centroid}, {"c_uni", s.c_uni}};
}

inline void from_json(const nlohmann::json& j, InvariantSummary& s) {
    j.at("ecc_sum").get_to(s.ecc_sum);
    j.at("uni_sum").get_to(s.uni_sum);
    j.at("delta_sum").get_to(s.delta_sum);
    j.at("ld").get_to(s.ld);
    j.at("wiener").get_to(s.wiener);
    j.at("diameter").get_to(s.diameter);
    j.at("r").get_to(s.r);
    j.at("r_prime").get_to(s.r_prime);
    j.at("delta_min").get_to(s.delta_min);
    j.at("center").get_to(s.center);
    j.at("centroid").get_to(s.centroid);
    j.at("c_uni").get_to(s.c_uni);
}

inline void to_json(nlohmann::json& j, const VertexProfile& p) {
    j = nlohmann::json{{"ecc", p.ecc}, {"uni", p.uni}, {"delta", p.delta}, {"dsum", p.dsum}};
}

inline void from_json(const nlohmann::json& j, VertexProfile& p) {
    j.at("ecc").get_to(p.ecc);
    j.at("uni").get_to(p.uni);
    j.at("delta").get_to(p.delta);
    j.at("dsum").get_to(p.dsum);
}

} // namespace treeinv

namespace treeinv::verify {

inline void to_json(json& j, const Witness& w) {
    json edges = json::array();
    for (auto [u, v] : w.edges)
        edges.push_back({u, v});
    j = json{{"n", w.n}, {"edges", edges}, {"code", w.code}, {"summary", w.summary}, {"note", w.note}};
}

inline void from_json(const json& j, Witness& w) {
    j.at("n").get_to(w.n);
    w.edges.clear();
    for (const auto& e : j.at("edges"))
        w.edges.emplace_back(e.at(0).get<vertex_id>(), e.at(1).get<vertex_id>());
    j.at("code").get_to(w.code);
    j.at("summary").get_to(w.summary);
    j.at("note").get_to(w.note);
}

inline void to_json(json& j, const Row& r) {
    j = json{{"n", r.n},
             {"k", detail::optional_to_json(r.k)},
             {"universe_count", r.count},
             {"violations", r.violations},
             {"statistic", detail::optional_to_json(r.statistic)},
             {"argmax_codes", r.argmax_codes},
             {"argmax_count", r.argmax_count},
             {"path_value", detail::optional_to_json(r.path_value)},
             {"exceeds_path", detail::optional_to_json(r.exceeds_path)},
             {"extra", r.extra}};
}

inline void from_json(const json& j, Row& r) {
    j.at("n").get_to(r.n);
    r.k = detail::optional_from_json<vertex_id>(j.at("k"));
    j.at("universe_count").get_to(r.count);
    j.at("violations").get_to(r.violations);
    r.statistic = detail::optional_from_json<std::int64_t>(j.at("statistic"));
    j.at("argmax_codes").get_to(r.argmax_codes);
    j.at("argmax_count").get_to(r.argmax_count);
    r.path_value = detail::optional_from_json<std::int64_t>(j.at("path_value"));
    r.exceeds_path = detail::optional_from_json<bool>(j.at("exceeds_path"));
    j.at("extra").get_to(r.extra);
}

inline void to_json(json& j, const TheoremReport& r) {
    j = json{{"claim", r.claim},
             {"mode", to_string(r.mode)},
             {"description", r.description},
             {"universe", {{"n", r.n_max}, {"n_min", r.n_min}, {"k", detail::optional_to_json(r.k)}, {"count", r.count}}},
             {"verdict", to_string(r.verdict)},
             {"witnesses", r.witnesses},
             {"values",
              {{"statistic", r.statistic},
               {"direction", to_string(r.direction)},
               {"rows", r.rows},
               {"named", r.named_values}}},
             {"wall_time", r.wall_time}};
}

inline void from_json(const json& j, TheoremReport& r) {
    j.at("claim").get_to(r.claim);
    r.mode = mode_from_string(j.at("mode").get<std::string>());
    j.at("description").get_to(r.description);
    const auto& u = j.at("universe");
    u.at("n").get_to(r.n_max);
    u.at("n_min").get_to(r.n_min);
    r.k = detail::optional_from_json<vertex_id>(u.at("k"));
    u.at("count").get_to(r.count);
    r.verdict = verdict_from_string(j.at("verdict").get<std::string>());
    j.at("witnesses").get_to(r.witnesses);
    const auto& v = j.at("values");
    v.at("statistic").get_to(r.statistic);
    r.direction = direction_from_string(v.at("direction").get<std::string>());
    v.at("rows").get_to(r.rows);
    v.at("named").get_to(r.named_values);
    j.at("wall_time").get_to(r.wall_time);
}

inline void to_json(json& j, const SearchResult& s) {
    j = json{{"statistic", s.statistic},
             {"direction", to_string(s.direction)},
             {"n", s.n},
             {"k", detail::optional_to_json(s.k)},
             {"universe_count", s.universe_count},
             {"optimum", detail::optional_to_json(s.optimum)},
             {"optimizer_count", s.optimizer_count},
             {"optimizers", s.optimizers},
             {"rows", s.rows},
             {"wall_time", s.wall_time}};
}

inline void from_json(const json& j, SearchResult& s) {
    j.at("statistic").get_to(s.statistic);
    s.direction = direction_from_string(j.at("direction").get<std::string>());
    j.at("n").get_to(s.n);
    s.k = detail::optional_from_json<vertex_id>(j.at("k"));
    j.at("universe_count").get_to(s.universe_count);
    s.optimum = detail::optional_from_json<std::int64_t>(j.at("optimum"));
    j.at("optimizer_count").get_to(s.optimizer_count);
    j.at("optimizers").get_to(s.optimizers);
    j.at("rows").get_to(s.rows);
    j.at("wall_time").get_to(s.wall_time);
}

// ---------------------------------------------------------------------------
// Text emission

inline std::string to_json_text(const TheoremReport& r) { return json(r).dump(2) + "\n"; }
inline std::string to_json_text(const SearchResult& s) { return json(s).dump(2) + "\n"; }

inline TheoremReport parse_report(const std::string& text) {
    try {
        return json::parse(text).get<TheoremReport>();
    } catch (const json::exception& e) {
        throw error(errc::parse_failure, e.what());
    }
}

inline SearchResult parse_search_result(const std::string& text) {
    try {
        return json::parse(text).get<SearchResult>();
    } catch (const json::exception& e) {
        throw error(errc::parse_failure, e.what());
    }
}

inline constexpr const char* csv_header =
    "n,universe_count,statistic_max,statistic_argmax_code,path_value,exceeds_path,k,violations";

inline std::string to_csv_text(const std::vector<Row>& rows) {
    std::ostringstream os;
    os << csv_header << '\n';
    for (const auto& r : rows) {
        os << r.n << ',' << r.count << ',';
        if (r.statistic) os << *r.statistic;
        os << ',';
        if (!r.argmax_codes.empty()) os << r.argmax_codes.front();
        os << ',';
        if (r.path_value) os << *r.path_value;
        os << ',';
        if (r.exceeds_path) os << (*r.exceeds_path ? "true" : "false");
        os << ',';
        if (r.k) os << *r.k;
        os << ',' << r.violations << '\n';
    }
    return os.str();
}

inline std::string to_csv_text(const TheoremReport& r) { return to_csv_text(r.rows); }
inline std::string to_csv_text(const SearchResult& s) { return to_csv_text(s.rows); }

enum class Format { json, csv };

template <typename Result>
std::string render(const Result& r, Format f) {
    return f == Format::json ? to_json_text(r) : to_csv_text(r);
}

template <typename Result>
void emit_report(const Result& r, Format f, const std::string& destination) {
    io::write_file(destination, render(r, f));
}

} // namespace treeinv::verify
