#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "treeinv/traversal.hpp"
#include "treeinv/tree.hpp"

namespace treeinv {

// Isomorphism-class identifier of a free tree: the parenthesis encoding
// (1 = open, 0 = close) of the tree rooted at its center, children ordered by
// their own encodings. Bicentral trees take the smaller of the two rootings.
struct CanonicalCode {
    std::vector<int> code;

    std::string to_string() const {
        std::string s;
        s.reserve(code.size());
        for (int x : code)
            s.push_back(static_cast<char>('0' + x));
        return s;
    }

    friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
    friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
};

struct CanonicalCodeHash {
    std::size_t operator()(const CanonicalCode& c) const noexcept {
        std::size_t h = c.code.size();
        for (int x : c.code)
            h = h * 31 + static_cast<std::size_t>(x) + 1;
        return h;
    }
};

// Encoding of t rooted at `root`. Iterative, so deep trees are fine.
inline std::vector<int> rooted_code(const Tree& t, vertex_id root) {
    const auto bfs = bfs_tree(t, root);
    std::vector<std::vector<int>> codes(t.size());
    std::vector<std::vector<std::vector<int>>> pending(t.size());
    for (auto it = bfs.order.rbegin(); it != bfs.order.rend(); ++it) {
        const auto v = static_cast<std::size_t>(*it);
        auto& kids = pending[v];
        std::sort(kids.begin(), kids.end());
        std::size_t len = 2;
        for (const auto& k : kids)
            len += k.size();
        std::vector<int> mine;
        mine.reserve(len);
        mine.push_back(1);
        for (const auto& k : kids)
            mine.insert(mine.end(), k.begin(), k.end());
        mine.push_back(0);
        std::vector<std::vector<int>>().swap(kids);
        const vertex_id p = bfs.parent[v];
        if (p >= 0)
            pending[static_cast<std::size_t>(p)].push_back(std::move(mine));
        else
            codes[v] = std::move(mine);
    }
    return std::move(codes[static_cast<std::size_t>(root)]);
}

inline CanonicalCode canonical_code(const Tree& t) {
    const auto centers = center_vertices(t);
    CanonicalCode best{rooted_code(t, centers.front())};
    if (centers.size() == 2) {
        CanonicalCode other{rooted_code(t, centers.back())};
        if (other < best)
            best = std::move(other);
    }
    return best;
}

inline bool isomorphic(const Tree& a, const Tree& b) {
    return a.order() == b.order() && canonical_code(a) == canonical_code(b);
}

} // namespace treeinv
