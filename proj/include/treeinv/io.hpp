#pragma once

#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "treeinv/error.hpp"
#include "treeinv/tree.hpp"

// Text interchange formats.
//
// Edge list:  "n\n" followed by n-1 lines "u v\n" (0-indexed, single space, LF).
// Pruefer:    "n\n" followed by one line of n-2 space-separated entries.
// Streams of edge-list trees separate consecutive blocks by one blank line.
namespace treeinv::io {

namespace detail {

inline std::int64_t read_int(std::istream& in, const char* what) {
    std::int64_t x = 0;
    if (!(in >> x))
        throw error(errc::parse_failure, std::string("expected integer for ") + what);
    return x;
}

inline void expect_end(std::istream& in) {
    std::string rest;
    if (in >> rest)
        throw error(errc::parse_failure, "unexpected trailing token '" + rest + "'");
}

inline vertex_id checked_order(std::int64_t n) {
    if (n < 1 || n > (std::int64_t{1} << 30))
        throw error(errc::parse_failure, "tree order " + std::to_string(n) + " out of range");
    return static_cast<vertex_id>(n);
}

} // namespace detail

inline void write_edge_list(std::ostream& out, const Tree& t) {
    out << t.order() << '\n';
    for (auto [u, v] : t.edges())
        out << u << ' ' << v << '\n';
}

inline std::string to_edge_list_text(const Tree& t) {
    std::ostringstream os;
    write_edge_list(os, t);
    return os.str();
}

// Reads exactly one tree; anything after the n-1 edges is an error.
inline Tree parse_edge_list(std::istream& in) {
    const vertex_id n = detail::checked_order(detail::read_int(in, "vertex count"));
    std::vector<edge> edges;
    edges.reserve(static_cast<std::size_t>(n - 1));
    for (vertex_id i = 0; i + 1 < n; ++i) {
        const auto u = detail::read_int(in, "edge endpoint");
        const auto v = detail::read_int(in, "edge endpoint");
        if (u < INT32_MIN || u > INT32_MAX || v < INT32_MIN || v > INT32_MAX)
            throw error(errc::id_out_of_range, "edge endpoint does not fit a vertex id");
        edges.emplace_back(static_cast<vertex_id>(u), static_cast<vertex_id>(v));
    }
    detail::expect_end(in);
    return from_edge_list(n, edges);
}

inline Tree parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

inline void write_edge_list_stream(std::ostream& out, const std::vector<Tree>& trees) {
    for (std::size_t i = 0; i < trees.size(); ++i) {
        if (i)
            out << '\n';
        write_edge_list(out, trees[i]);
    }
}

inline std::vector<Tree> parse_edge_list_stream(std::istream& in) {
    std::vector<Tree> out;
    std::string line;
    std::string block;
    auto flush = [&] {
        if (block.find_first_not_of(" \t\r\n") != std::string::npos)
            out.push_back(parse_edge_list(block));
        block.clear();
    };
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            flush();
        else
            block += line + '\n';
    }
    flush();
    return out;
}

inline void write_pruefer(std::ostream& out, const Tree& t) {
    const auto seq = to_pruefer(t);
    out << t.order() << '\n';
    for (std::size_t i = 0; i < seq.size(); ++i)
        out << (i ? " " : "") << seq[i];
    out << '\n';
}

inline Tree parse_pruefer(std::istream& in) {
    const vertex_id n = detail::checked_order(detail::read_int(in, "vertex count"));
    if (n < 2)
        throw error(errc::invalid_order, "Pruefer format needs n >= 2");
    std::vector<vertex_id> seq;
    seq.reserve(static_cast<std::size_t>(n - 2));
    for (vertex_id i = 0; i + 2 < n; ++i) {
        const auto x = detail::read_int(in, "Pruefer entry");
        if (x < 0 || x >= n)
            throw error(errc::entry_out_of_range, "Pruefer entry " + std::to_string(x) + " outside 0.." +
                                                      std::to_string(n - 1));
        seq.push_back(static_cast<vertex_id>(x));
    }
    detail::expect_end(in);
    return from_pruefer(seq);
}

inline Tree parse_pruefer(const std::string& text) {
    std::istringstream in(text);
    return parse_pruefer(in);
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw error(errc::io_failure, "cannot open '" + path + "' for reading");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

inline void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw error(errc::io_failure, "cannot open '" + path + "' for writing");
    out << contents;
    if (!out)
        throw error(errc::io_failure, "write to '" + path + "' failed");
}

} // namespace treeinv::io
