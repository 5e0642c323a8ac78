#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "treeinv/traversal.hpp"
#include "treeinv/tree.hpp"

namespace treeinv {

// Per-vertex distance functions. All values are exact edge counts.
struct VertexProfile {
    std::vector<int> ecc;            // max distance to any vertex
    std::vector<int> uni;            // min distance to any leaf
    std::vector<int> delta;          // ecc - uni
    std::vector<std::int64_t> dsum;  // sum of distances to all vertices

    friend bool operator==(const VertexProfile&, const VertexProfile&) = default;
};

struct InvariantSummary {
    std::int64_t ecc_sum = 0;    // Ecc(T)
    std::int64_t uni_sum = 0;    // Uni(T)
    std::int64_t delta_sum = 0;  // Delta(T)
    std::int64_t ld = 0;         // max dsum
    std::int64_t wiener = 0;
    int diameter = 0;
    int r = 0;                   // radius, min ecc
    int r_prime = 0;             // max uni
    int delta_min = 0;           // min delta(v)
    std::vector<vertex_id> center;
    std::vector<vertex_id> centroid;
    std::vector<vertex_id> c_uni;

    friend bool operator==(const InvariantSummary&, const InvariantSummary&) = default;
};

// Dense n x n distance matrix built from n BFS runs. Quadratic; the oracle.
class DistanceTable {
public:
    explicit DistanceTable(const Tree& t) : n_(t.size()), d_(n_ * n_) {
        for (vertex_id s = 0; s < t.order(); ++s) {
            const auto row = bfs_distances(t, s);
            std::copy(row.begin(), row.end(), d_.begin() + static_cast<std::ptrdiff_t>(n_ * static_cast<std::size_t>(s)));
        }
    }

    std::size_t size() const noexcept { return n_; }

    int operator()(vertex_id u, vertex_id v) const noexcept {
        return d_[n_ * static_cast<std::size_t>(u) + static_cast<std::size_t>(v)];
    }

private:
    std::size_t n_;
    std::vector<int> d_;
};

inline DistanceTable all_pairs_distances(const Tree& t) { return DistanceTable(t); }

// Definitions applied literally over the distance table.
inline VertexProfile profile_oracle(const Tree& t) {
    const DistanceTable d(t);
    const auto leaf_set = leaves(t);
    const auto n = t.size();
    VertexProfile p;
    p.ecc.resize(n);
    p.uni.resize(n);
    p.delta.resize(n);
    p.dsum.resize(n);
    for (vertex_id v = 0; v < t.order(); ++v) {
        const auto i = static_cast<std::size_t>(v);
        int ecc = 0;
        std::int64_t sum = 0;
        for (vertex_id u = 0; u < t.order(); ++u) {
            ecc = std::max(ecc, d(v, u));
            sum += d(v, u);
        }
        int uni = d(v, leaf_set.front());
        for (vertex_id l : leaf_set)
            uni = std::min(uni, d(v, l));
        p.ecc[i] = ecc;
        p.uni[i] = uni;
        p.delta[i] = ecc - uni;
        p.dsum[i] = sum;
    }
    return p;
}

// Linear time: ecc from the two diameter ends, uni by multi-source BFS from
// the leaves, dsum by rerooting dsum(c) = dsum(p) + n - 2 * size(c).
inline VertexProfile profile_fast(const Tree& t) {
    const auto n = t.size();
    VertexProfile p;
    p.ecc.resize(n);
    p.uni.assign(n, -1);
    p.delta.resize(n);
    p.dsum.resize(n);

    const vertex_id a = farthest_vertex(bfs_distances(t, 0));
    const auto from_a = bfs_distances(t, a);
    const vertex_id b = farthest_vertex(from_a);
    const auto from_b = bfs_distances(t, b);
    for (std::size_t v = 0; v < n; ++v)
        p.ecc[v] = std::max(from_a[v], from_b[v]);

    std::vector<vertex_id> queue = leaves(t);
    queue.reserve(n);
    for (vertex_id l : queue)
        p.uni[static_cast<std::size_t>(l)] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const vertex_id u = queue[head];
        for (vertex_id w : t.neighbors(u)) {
            if (p.uni[static_cast<std::size_t>(w)] < 0) {
                p.uni[static_cast<std::size_t>(w)] = p.uni[static_cast<std::size_t>(u)] + 1;
                queue.push_back(w);
            }
        }
    }

    const auto rooted = bfs_tree(t, 0);
    std::vector<std::int64_t> size(n, 1);
    std::int64_t root_sum = 0;
    for (auto it = rooted.order.rbegin(); it != rooted.order.rend(); ++it) {
        const auto v = static_cast<std::size_t>(*it);
        root_sum += rooted.dist[v];
        if (const vertex_id par = rooted.parent[v]; par >= 0)
            size[static_cast<std::size_t>(par)] += size[v];
    }
    const auto total = static_cast<std::int64_t>(n);
    for (vertex_id v : rooted.order) {
        const auto i = static_cast<std::size_t>(v);
        const vertex_id par = rooted.parent[i];
        p.dsum[i] = par < 0 ? root_sum : p.dsum[static_cast<std::size_t>(par)] + total - 2 * size[i];
    }

    for (std::size_t v = 0; v < n; ++v)
        p.delta[v] = p.ecc[v] - p.uni[v];
    return p;
}

namespace detail {

template <typename T>
std::vector<vertex_id> arg_where(const std::vector<T>& values, const T& target) {
    std::vector<vertex_id> out;
    for (std::size_t i = 0; i < values.size(); ++i)
        if (values[i] == target)
            out.push_back(static_cast<vertex_id>(i));
    return out;
}

} // namespace detail

inline InvariantSummary summarize(const Tree& t, const VertexProfile& p) {
    InvariantSummary s;
    for (std::size_t v = 0; v < t.size(); ++v) {
        s.ecc_sum += p.ecc[v];
        s.uni_sum += p.uni[v];
        s.wiener += p.dsum[v];
    }
    s.wiener /= 2;
    s.delta_sum = s.ecc_sum - s.uni_sum;
    s.ld = *std::max_element(p.dsum.begin(), p.dsum.end());
    s.diameter = *std::max_element(p.ecc.begin(), p.ecc.end());
    s.r = *std::min_element(p.ecc.begin(), p.ecc.end());
    s.r_prime = *std::max_element(p.uni.begin(), p.uni.end());
    s.delta_min = *std::min_element(p.delta.begin(), p.delta.end());
    s.center = center_vertices(t);
    s.centroid = detail::arg_where(p.dsum, *std::min_element(p.dsum.begin(), p.dsum.end()));
    s.c_uni = detail::arg_where(p.uni, s.r_prime);
    return s;
}

inline InvariantSummary summarize(const Tree& t) { return summarize(t, profile_fast(t)); }

struct DeltaMinLocation {
    int delta_min = 0;
    std::vector<vertex_id> argmin;          // every vertex attaining delta_min
    std::vector<vertex_id> center;
    bool center_attains = false;            // some center vertex attains delta_min
    bool only_center_attains = false;       // no non-center vertex attains it
};

inline DeltaMinLocation delta_min_location(const Tree& t, const VertexProfile& p) {
    DeltaMinLocation loc;
    loc.delta_min = *std::min_element(p.delta.begin(), p.delta.end());
    loc.argmin = detail::arg_where(p.delta, loc.delta_min);
    loc.center = center_vertices(t);
    loc.center_attains = std::any_of(loc.center.begin(), loc.center.end(), [&](vertex_id c) {
        return p.delta[static_cast<std::size_t>(c)] == loc.delta_min;
    });
    loc.only_center_attains = std::all_of(loc.argmin.begin(), loc.argmin.end(), [&](vertex_id v) {
        return std::find(loc.center.begin(), loc.center.end(), v) != loc.center.end();
    });
    return loc;
}

inline DeltaMinLocation delta_min_location(const Tree& t) { return delta_min_location(t, profile_fast(t)); }

} // namespace treeinv
