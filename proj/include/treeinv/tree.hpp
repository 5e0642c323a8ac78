#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "treeinv/error.hpp"

namespace treeinv {

using vertex_id = std::int32_t;
using edge = std::pair<vertex_id, vertex_id>;

// Free tree on dense ids 0..n-1. Adjacency is stored compressed (CSR) with
// each neighbor list sorted ascending. Instances are immutable; the only way
// to obtain one is through a validating factory.
class Tree {
public:
    // The single-vertex tree.
    Tree() : offsets_{0, 0} {}

    vertex_id order() const noexcept { return static_cast<vertex_id>(offsets_.size() - 1); }
    std::size_t size() const noexcept { return offsets_.size() - 1; }
    std::size_t edge_count() const noexcept { return neighbors_.size() / 2; }

    std::span<const vertex_id> neighbors(vertex_id v) const noexcept {
        const auto b = offsets_[static_cast<std::size_t>(v)];
        const auto e = offsets_[static_cast<std::size_t>(v) + 1];
        return {neighbors_.data() + b, e - b};
    }

    std::size_t degree(vertex_id v) const noexcept {
        return offsets_[static_cast<std::size_t>(v) + 1] - offsets_[static_cast<std::size_t>(v)];
    }

    bool adjacent(vertex_id u, vertex_id v) const noexcept {
        auto nb = neighbors(u);
        return std::binary_search(nb.begin(), nb.end(), v);
    }

    // Edges (u, v) with u < v, sorted lexicographically.
    std::vector<edge> edges() const {
        std::vector<edge> out;
        out.reserve(edge_count());
        for (vertex_id u = 0; u < order(); ++u)
            for (vertex_id v : neighbors(u))
                if (u < v)
                    out.emplace_back(u, v);
        return out;
    }

    std::size_t max_degree() const noexcept {
        std::size_t best = 0;
        for (vertex_id v = 0; v < order(); ++v)
            best = std::max(best, degree(v));
        return best;
    }

    friend bool operator==(const Tree&, const Tree&) = default;

    friend Tree from_edge_list(vertex_id n, std::span<const edge> edges);

private:
    std::vector<std::size_t> offsets_;
    std::vector<vertex_id> neighbors_;
};

// BFS distances (in edges) from `source` to every vertex.
inline std::vector<int> bfs_distances(const Tree& t, vertex_id source) {
    std::vector<int> dist(t.size(), -1);
    std::vector<vertex_id> queue;
    queue.reserve(t.size());
    dist[static_cast<std::size_t>(source)] = 0;
    queue.push_back(source);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const vertex_id u = queue[head];
        for (vertex_id w : t.neighbors(u)) {
            if (dist[static_cast<std::size_t>(w)] < 0) {
                dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

inline Tree from_edge_list(vertex_id n, std::span<const edge> edges) {
    if (n < 1)
        throw error(errc::invalid_order, "tree order must be at least 1, got " + std::to_string(n));

    std::vector<edge> normalized;
    normalized.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw error(errc::id_out_of_range, "edge (" + std::to_string(u) + "," + std::to_string(v) +
                                                   ") outside 0.." + std::to_string(n - 1));
        if (u == v)
            throw error(errc::self_loop, "self-loop at vertex " + std::to_string(u));
        normalized.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(normalized.begin(), normalized.end());
    if (auto it = std::adjacent_find(normalized.begin(), normalized.end()); it != normalized.end())
        throw error(errc::duplicate_edge, "edge (" + std::to_string(it->first) + "," +
                                              std::to_string(it->second) + ") listed twice");

    Tree t;
    const auto count = static_cast<std::size_t>(n);
    t.offsets_.assign(count + 1, 0);
    for (auto [u, v] : normalized) {
        ++t.offsets_[static_cast<std::size_t>(u) + 1];
        ++t.offsets_[static_cast<std::size_t>(v) + 1];
    }
    std::partial_sum(t.offsets_.begin(), t.offsets_.end(), t.offsets_.begin());
    t.neighbors_.resize(2 * normalized.size());
    std::vector<std::size_t> fill(t.offsets_.begin(), t.offsets_.end() - 1);
    for (auto [u, v] : normalized) {
        t.neighbors_[fill[static_cast<std::size_t>(u)]++] = v;
        t.neighbors_[fill[static_cast<std::size_t>(v)]++] = u;
    }
    for (std::size_t v = 0; v < count; ++v)
        std::sort(t.neighbors_.begin() + static_cast<std::ptrdiff_t>(t.offsets_[v]),
                  t.neighbors_.begin() + static_cast<std::ptrdiff_t>(t.offsets_[v + 1]));

    const auto dist = bfs_distances(t, 0);
    if (std::find(dist.begin(), dist.end(), -1) != dist.end())
        throw error(errc::disconnected, "graph on " + std::to_string(n) + " vertices is not connected");
    if (normalized.size() != count - 1)
        throw error(errc::wrong_edge_count, "expected " + std::to_string(n - 1) + " edges, got " +
                                                std::to_string(normalized.size()));
    return t;
}

inline Tree from_edge_list(vertex_id n, std::initializer_list<edge> edges) {
    return from_edge_list(n, std::span<const edge>(edges.begin(), edges.size()));
}

inline Tree from_edge_list(vertex_id n, const std::vector<edge>& edges) {
    return from_edge_list(n, std::span<const edge>(edges));
}

// Standard linear-time Prüfer decoding: the tree order is seq.size() + 2.
inline Tree from_pruefer(std::span<const vertex_id> seq) {
    const auto n = static_cast<vertex_id>(seq.size() + 2);
    for (vertex_id x : seq)
        if (x < 0 || x >= n)
            throw error(errc::entry_out_of_range, "Pruefer entry " + std::to_string(x) + " outside 0.." +
                                                      std::to_string(n - 1));

    std::vector<int> degree(static_cast<std::size_t>(n), 1);
    for (vertex_id x : seq)
        ++degree[static_cast<std::size_t>(x)];

    std::vector<edge> edges;
    edges.reserve(static_cast<std::size_t>(n - 1));
    vertex_id ptr = 0;
    while (degree[static_cast<std::size_t>(ptr)] != 1)
        ++ptr;
    vertex_id leaf = ptr;
    for (vertex_id x : seq) {
        edges.emplace_back(leaf, x);
        if (--degree[static_cast<std::size_t>(x)] == 1 && x < ptr) {
            leaf = x;
        } else {
            ++ptr;
            while (degree[static_cast<std::size_t>(ptr)] != 1)
                ++ptr;
            leaf = ptr;
        }
    }
    edges.emplace_back(leaf, n - 1);
    return from_edge_list(n, edges);
}

inline Tree from_pruefer(const std::vector<vertex_id>& seq) {
    return from_pruefer(std::span<const vertex_id>(seq));
}

// Repeated removal of the smallest-labelled leaf, in linear time.
inline std::vector<vertex_id> to_pruefer(const Tree& t) {
    const vertex_id n = t.order();
    if (n < 2)
        throw error(errc::invalid_order, "Pruefer sequences need at least 2 vertices");

    // Root at n-1; the parent of each removed leaf is its only remaining neighbor.
    std::vector<vertex_id> parent(t.size(), -1);
    {
        std::vector<vertex_id> stack{n - 1};
        std::vector<bool> seen(t.size(), false);
        seen[static_cast<std::size_t>(n - 1)] = true;
        while (!stack.empty()) {
            const vertex_id u = stack.back();
            stack.pop_back();
            for (vertex_id w : t.neighbors(u)) {
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = true;
                    parent[static_cast<std::size_t>(w)] = u;
                    stack.push_back(w);
                }
            }
        }
    }

    std::vector<std::size_t> degree(t.size());
    for (vertex_id v = 0; v < n; ++v)
        degree[static_cast<std::size_t>(v)] = t.degree(v);

    std::vector<vertex_id> seq;
    seq.reserve(static_cast<std::size_t>(n - 2));
    vertex_id ptr = 0;
    while (degree[static_cast<std::size_t>(ptr)] != 1)
        ++ptr;
    vertex_id leaf = ptr;
    for (vertex_id i = 0; i < n - 2; ++i) {
        const vertex_id next = parent[static_cast<std::size_t>(leaf)];
        seq.push_back(next);
        if (--degree[static_cast<std::size_t>(next)] == 1 && next < ptr) {
            leaf = next;
        } else {
            ++ptr;
            while (degree[static_cast<std::size_t>(ptr)] != 1)
                ++ptr;
            leaf = ptr;
        }
    }
    return seq;
}

// Degree-1 vertices, ascending. The lone vertex of the order-1 tree counts as a leaf.
inline std::vector<vertex_id> leaves(const Tree& t) {
    std::vector<vertex_id> out;
    if (t.order() == 1)
        return {0};
    for (vertex_id v = 0; v < t.order(); ++v)
        if (t.degree(v) == 1)
            out.push_back(v);
    return out;
}

inline bool is_leaf(const Tree& t, vertex_id v) noexcept {
    return t.order() == 1 || t.degree(v) == 1;
}

inline vertex_id internal_count(const Tree& t) {
    return t.order() - static_cast<vertex_id>(leaves(t).size());
}

inline bool is_path(const Tree& t) noexcept { return t.max_degree() <= 2; }

inline bool is_star(const Tree& t) noexcept {
    return t.order() <= 2 || t.max_degree() == t.size() - 1;
}

// Same tree with vertex v renamed to perm[v].
inline Tree relabel(const Tree& t, std::span<const vertex_id> perm) {
    if (perm.size() != t.size())
        throw error(errc::invalid_parameters, "permutation size does not match tree order");
    std::vector<edge> out;
    out.reserve(t.edge_count());
    for (auto [u, v] : t.edges())
        out.emplace_back(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    return from_edge_list(t.order(), out);
}

} // namespace treeinv
