#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "treeinv/error.hpp"
#include "treeinv/invariants.hpp"
#include "treeinv/tree.hpp"

namespace treeinv {

// Path 0 - 1 - ... - (n-1).
inline Tree path(vertex_id n) {
    if (n < 1)
        throw error(errc::invalid_parameters, "path order must be >= 1");
    std::vector<edge> e;
    for (vertex_id i = 0; i + 1 < n; ++i)
        e.emplace_back(i, i + 1);
    return from_edge_list(n, e);
}

// Star with center 0.
inline Tree star(vertex_id n) {
    if (n < 1)
        throw error(errc::invalid_parameters, "star order must be >= 1");
    std::vector<edge> e;
    for (vertex_id i = 1; i < n; ++i)
        e.emplace_back(0, i);
    return from_edge_list(n, e);
}

// Spider: branch vertex 0 with one path of each given length hanging off it.
// Legs occupy consecutive ids, the first leg being 1..legs[0].
inline Tree starlike(std::span<const int> legs) {
    if (legs.empty())
        throw error(errc::invalid_parameters, "starlike tree needs at least one leg");
    std::int64_t total = 1;
    for (int l : legs) {
        if (l < 1)
            throw error(errc::invalid_parameters, "starlike leg lengths must be positive");
        total += l;
    }
    if (total > (std::int64_t{1} << 30))
        throw error(errc::invalid_parameters, "starlike tree too large");
    std::vector<edge> e;
    vertex_id next = 1;
    for (int l : legs) {
        vertex_id prev = 0;
        for (int i = 0; i < l; ++i, ++next) {
            e.emplace_back(prev, next);
            prev = next;
        }
    }
    return from_edge_list(static_cast<vertex_id>(total), e);
}

inline Tree starlike(std::initializer_list<int> legs) {
    return starlike(std::span<const int>(legs.begin(), legs.size()));
}

inline Tree starlike(const std::vector<int>& legs) { return starlike(std::span<const int>(legs)); }

// Spine 0..k-1 with `a` pendant leaves on vertex 0 and `b` on vertex k-1.
// For k = 1 both ends coincide and the result is a star on a+b+1 vertices.
inline Tree dumbbell(int k, int a, int b) {
    if (k < 1 || a < 1 || b < 1)
        throw error(errc::invalid_parameters, "dumbbell needs k >= 1, a >= 1, b >= 1");
    const vertex_id n = k + a + b;
    std::vector<edge> e;
    for (vertex_id i = 0; i + 1 < k; ++i)
        e.emplace_back(i, i + 1);
    vertex_id next = k;
    for (int i = 0; i < a; ++i)
        e.emplace_back(0, next++);
    for (int i = 0; i < b; ++i)
        e.emplace_back(k - 1, next++);
    return from_edge_list(n, e);
}

// Spine 0..m-1 where every spine vertex has degree 3: one pendant leaf each
// (ids m..2m-1) plus one extra leaf at each spine end (2m, 2m+1).
inline Tree binary_caterpillar(int spine) {
    if (spine < 1)
        throw error(errc::invalid_parameters, "caterpillar spine must be >= 1");
    const vertex_id n = 2 * spine + 2;
    std::vector<edge> e;
    for (vertex_id i = 0; i + 1 < spine; ++i)
        e.emplace_back(i, i + 1);
    for (vertex_id i = 0; i < spine; ++i)
        e.emplace_back(i, spine + i);
    e.emplace_back(0, 2 * spine);
    e.emplace_back(spine - 1, 2 * spine + 1);
    return from_edge_list(n, e);
}

// Starlike tree on n vertices with `legs` legs whose lengths differ by at most one.
inline Tree balanced_starlike(vertex_id n, int legs) {
    if (legs < 1 || n < legs + 1)
        throw error(errc::invalid_parameters, "balanced starlike needs 1 <= legs <= n - 1");
    const int len = (n - 1) / legs;
    const int longer = (n - 1) % legs;
    std::vector<int> ls(static_cast<std::size_t>(legs), len);
    for (int i = 0; i < longer; ++i)
        ++ls[static_cast<std::size_t>(i)];
    return starlike(ls);
}

// ---------------------------------------------------------------------------
// Closed forms

inline std::int64_t formula_uni_path(std::int64_t n) {
    if (n < 2)
        throw error(errc::invalid_parameters, "formula needs n >= 2");
    return n % 2 ? (n * n - 2 * n + 1) / 4 : (n * n - 2 * n) / 4;
}

inline std::int64_t formula_uni_dumbbell_max(std::int64_t k) {
    if (k < 1)
        throw error(errc::invalid_parameters, "formula needs k >= 1");
    return k % 2 ? (k * k + 2 * k + 1) / 4 : (k * k + 2 * k) / 4;
}

inline std::int64_t formula_ld_star(std::int64_t n) {
    if (n < 2)
        throw error(errc::invalid_parameters, "formula needs n >= 2");
    return 1 + (n - 2) * 2;
}

inline std::int64_t formula_ld_path(std::int64_t n) {
    if (n < 2)
        throw error(errc::invalid_parameters, "formula needs n >= 2");
    return n * (n - 1) / 2;
}

inline std::int64_t formula_delta_star(std::int64_t n) {
    if (n < 2)
        throw error(errc::invalid_parameters, "formula needs n >= 2");
    return 2 * (n - 1);
}

// Minimum Uni among order-n trees with k internal vertices. Beyond n/2 the
// value is read off the balanced spider with n-k legs.
inline std::int64_t formula_uni_min(vertex_id n, vertex_id k) {
    if (n < 3 || k < 1 || k > n - 2)
        throw error(errc::invalid_parameters, "formula needs n >= 3 and 1 <= k <= n-2");
    if (k <= n / 2)
        return k;
    return summarize(balanced_starlike(n, n - k)).uni_sum;
}

// ---------------------------------------------------------------------------

// Detach each listed neighbor of `from` and reattach it to `to`, carrying its
// whole branch along.
inline Tree move_subtree(const Tree& t, vertex_id from, vertex_id to, std::span<const vertex_id> moved) {
    const vertex_id n = t.order();
    if (from < 0 || from >= n || to < 0 || to >= n)
        throw error(errc::not_a_subtree_cut, "vertex id out of range");
    std::vector<vertex_id> ms(moved.begin(), moved.end());
    std::sort(ms.begin(), ms.end());
    if (std::adjacent_find(ms.begin(), ms.end()) != ms.end())
        throw error(errc::not_a_subtree_cut, "neighbor listed twice");
    if (ms.empty())
        return t;
    if (from == to)
        return t;

    for (vertex_id x : ms) {
        if (x < 0 || x >= n || !t.adjacent(from, x))
            throw error(errc::not_a_subtree_cut, "vertex " + std::to_string(x) + " is not a neighbor of " +
                                                     std::to_string(from));
        // The branch at x (cut from `from`) must not contain `to`.
        std::vector<bool> seen(t.size(), false);
        seen[static_cast<std::size_t>(from)] = true;
        seen[static_cast<std::size_t>(x)] = true;
        std::vector<vertex_id> stack{x};
        while (!stack.empty()) {
            const vertex_id u = stack.back();
            stack.pop_back();
            if (u == to)
                throw error(errc::not_a_subtree_cut, "branch at " + std::to_string(x) + " contains target " +
                                                         std::to_string(to));
            for (vertex_id w : t.neighbors(u))
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = true;
                    stack.push_back(w);
                }
        }
    }

    std::vector<edge> e;
    for (auto [u, v] : t.edges()) {
        const bool cut = (u == from && std::binary_search(ms.begin(), ms.end(), v)) ||
                         (v == from && std::binary_search(ms.begin(), ms.end(), u));
        if (!cut)
            e.emplace_back(u, v);
    }
    for (vertex_id x : ms)
        e.emplace_back(to, x);
    return from_edge_list(n, e);
}

inline Tree move_subtree(const Tree& t, vertex_id from, vertex_id to, std::initializer_list<vertex_id> moved) {
    return move_subtree(t, from, to, std::span<const vertex_id>(moved.begin(), moved.size()));
}

// ---------------------------------------------------------------------------
// Hard-coded small example trees with named vertices.

struct NamedTree {
    Tree tree;
    vertex_id u = 0, v = 0, w = 0;
};

// Path of 7 with a pendant leaf on its middle vertex v; u and w are v's path
// neighbors. Center {v}, maximum uniformity at {u, w}.
inline NamedTree disjoint_middles_tree() {
    // path ids 0..6, pendant 7 on vertex 3
    std::vector<edge> e{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {3, 7}};
    return {from_edge_list(8, e), 2, 3, 4};
}

// Path of 10 with a pendant leaf on its sixth vertex v. Center {u, v}
// (u the vertex before v), maximum uniformity only at w, the vertex before u.
inline NamedTree offset_center_tree() {
    std::vector<edge> e;
    for (vertex_id i = 0; i < 9; ++i)
        e.emplace_back(i, i + 1);
    e.emplace_back(5, 10);
    return {from_edge_list(11, e), 4, 5, 3};
}

// ---------------------------------------------------------------------------
// Construction spec grammar:
//   path:N  star:N  starlike:L1,L2,...  dumbbell:k=K,a=A,b=B  caterpillar:M

struct ConstructionSpec {
    enum class Kind { path, star, starlike, dumbbell, binary_caterpillar };
    Kind kind = Kind::path;
    std::vector<int> parameters;
};

namespace detail {

inline int parse_positive_int(std::string_view s, std::string_view context) {
    int value = 0;
    const auto* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, value);
    if (s.empty() || ec != std::errc{} || ptr != end)
        throw error(errc::invalid_parameters, "bad integer '" + std::string(s) + "' in " + std::string(context));
    return value;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        const auto pos = s.find(sep, start);
        out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos)
            return out;
        start = pos + 1;
    }
}

} // namespace detail

inline ConstructionSpec parse_construction_spec(std::string_view text) {
    const auto colon = text.find(':');
    if (colon == std::string_view::npos)
        throw error(errc::invalid_parameters, "construction spec '" + std::string(text) + "' lacks ':'");
    const auto kind = text.substr(0, colon);
    const auto args = text.substr(colon + 1);
    ConstructionSpec spec;
    if (kind == "path" || kind == "star" || kind == "caterpillar") {
        spec.kind = kind == "path"   ? ConstructionSpec::Kind::path
                    : kind == "star" ? ConstructionSpec::Kind::star
                                     : ConstructionSpec::Kind::binary_caterpillar;
        spec.parameters = {detail::parse_positive_int(args, text)};
    } else if (kind == "starlike") {
        spec.kind = ConstructionSpec::Kind::starlike;
        for (auto part : detail::split(args, ','))
            spec.parameters.push_back(detail::parse_positive_int(part, text));
    } else if (kind == "dumbbell") {
        spec.kind = ConstructionSpec::Kind::dumbbell;
        int k = -1, a = -1, b = -1;
        for (auto part : detail::split(args, ',')) {
            const auto eq = part.find('=');
            if (eq == std::string_view::npos)
                throw error(errc::invalid_parameters, "dumbbell argument '" + std::string(part) + "' lacks '='");
            const auto key = part.substr(0, eq);
            const int value = detail::parse_positive_int(part.substr(eq + 1), text);
            int* slot = key == "k" ? &k : key == "a" ? &a : key == "b" ? &b : nullptr;
            if (!slot || *slot != -1)
                throw error(errc::invalid_parameters, "bad or repeated dumbbell key '" + std::string(key) + "'");
            *slot = value;
        }
        if (k < 0 || a < 0 || b < 0)
            throw error(errc::invalid_parameters, "dumbbell needs k=, a= and b=");
        spec.parameters = {k, a, b};
    } else {
        throw error(errc::invalid_parameters, "unknown construction '" + std::string(kind) + "'");
    }
    return spec;
}

inline Tree build(const ConstructionSpec& spec) {
    const auto& p = spec.parameters;
    switch (spec.kind) {
    case ConstructionSpec::Kind::path: return path(p.at(0));
    case ConstructionSpec::Kind::star: return star(p.at(0));
    case ConstructionSpec::Kind::starlike: return starlike(p);
    case ConstructionSpec::Kind::dumbbell: return dumbbell(p.at(0), p.at(1), p.at(2));
    case ConstructionSpec::Kind::binary_caterpillar: return binary_caterpillar(p.at(0));
    }
    throw error(errc::invalid_parameters, "unknown construction kind");
}

inline Tree build(std::string_view spec) { return build(parse_construction_spec(spec)); }

} // namespace treeinv
