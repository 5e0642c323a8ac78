#pragma once

#include <algorithm>
#include <vector>

#include "treeinv/tree.hpp"

namespace treeinv {

struct BfsTree {
    std::vector<int> dist;
    std::vector<vertex_id> parent; // -1 at the source
    std::vector<vertex_id> order;  // visit order
};

inline BfsTree bfs_tree(const Tree& t, vertex_id source) {
    BfsTree r;
    r.dist.assign(t.size(), -1);
    r.parent.assign(t.size(), -1);
    r.order.reserve(t.size());
    r.dist[static_cast<std::size_t>(source)] = 0;
    r.order.push_back(source);
    for (std::size_t head = 0; head < r.order.size(); ++head) {
        const vertex_id u = r.order[head];
        for (vertex_id w : t.neighbors(u)) {
            if (r.dist[static_cast<std::size_t>(w)] < 0) {
                r.dist[static_cast<std::size_t>(w)] = r.dist[static_cast<std::size_t>(u)] + 1;
                r.parent[static_cast<std::size_t>(w)] = u;
                r.order.push_back(w);
            }
        }
    }
    return r;
}

// Smallest id among the vertices at maximum distance.
inline vertex_id farthest_vertex(const std::vector<int>& dist) {
    return static_cast<vertex_id>(std::max_element(dist.begin(), dist.end()) - dist.begin());
}

// A longest path, found by two BFS sweeps; returned from one end to the other.
inline std::vector<vertex_id> diameter_path(const Tree& t) {
    const vertex_id a = farthest_vertex(bfs_distances(t, 0));
    const auto sweep = bfs_tree(t, a);
    std::vector<vertex_id> path;
    for (vertex_id v = farthest_vertex(sweep.dist); v != -1; v = sweep.parent[static_cast<std::size_t>(v)])
        path.push_back(v);
    return path;
}

// Middle vertex (or the two middle vertices) of a longest path, ascending.
inline std::vector<vertex_id> center_of_path(const std::vector<vertex_id>& path) {
    const std::size_t d = path.size() - 1;
    if (d % 2 == 0)
        return {path[d / 2]};
    std::vector<vertex_id> c{path[d / 2], path[d / 2 + 1]};
    std::sort(c.begin(), c.end());
    return c;
}

inline std::vector<vertex_id> center_vertices(const Tree& t) { return center_of_path(diameter_path(t)); }

} // namespace treeinv
