#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "treeinv/error.hpp"
#include "treeinv/tree.hpp"

namespace treeinv {

inline constexpr vertex_id default_order_cap = 18;

// Tree whose vertex i sits at depth levels[i] under the most recent earlier
// vertex one level up (preorder level sequence).
inline Tree tree_from_level_sequence(const std::vector<int>& levels) {
    std::vector<vertex_id> last_at(levels.size() + 1, -1);
    std::vector<edge> e;
    e.reserve(levels.size());
    for (std::size_t i = 0; i < levels.size(); ++i) {
        const int l = levels[i];
        if (l > 0)
            e.emplace_back(last_at[static_cast<std::size_t>(l - 1)], static_cast<vertex_id>(i));
        last_at[static_cast<std::size_t>(l)] = static_cast<vertex_id>(i);
    }
    return from_edge_list(static_cast<vertex_id>(levels.size()), e);
}

// Every free tree of order n exactly once, as canonical level sequences of
// the tree rooted at its center(s) (Wright-Richmond-Odlyzko-McKay successor
// rule on top of Beyer-Hedetniemi rooted-tree successors). Sequences come out
// in strictly decreasing lexicographic order, starting from the path.
class FreeTreeGenerator {
public:
    explicit FreeTreeGenerator(vertex_id n, vertex_id cap = default_order_cap) : n_(n) {
        if (n < 1)
            throw error(errc::invalid_parameters, "tree order must be >= 1");
        if (n > cap)
            throw error(errc::order_too_large,
                        "order " + std::to_string(n) + " exceeds enumeration cap " + std::to_string(cap));
    }

    // Advances to the next tree; false once the stream is exhausted.
    bool next() {
        if (done_)
            return false;
        if (!started_) {
            started_ = true;
            levels_ = initial();
        } else if (n_ <= 2 || !advance_rooted(last_non_one())) {
            done_ = true;
            return false;
        }
        if (n_ > 2 && !make_valid()) {
            done_ = true;
            return false;
        }
        ++index_;
        return true;
    }

    const std::vector<int>& level_sequence() const noexcept { return levels_; }
    Tree tree() const { return tree_from_level_sequence(levels_); }
    // Zero-based position of the current tree in the stream.
    std::size_t index() const noexcept { return index_ - 1; }
    vertex_id order() const noexcept { return n_; }

private:
    std::vector<int> initial() const {
        std::vector<int> l;
        for (int i = 0; i <= n_ / 2; ++i)
            l.push_back(i);
        for (int i = 1; i < (n_ + 1) / 2; ++i)
            l.push_back(i);
        return l;
    }

    std::size_t last_non_one() const {
        std::size_t p = levels_.size() - 1;
        while (p > 0 && levels_[p] == 1)
            --p;
        return p;
    }

    // Beyer-Hedetniemi: copy the subtree pattern ending before p over the tail.
    bool advance_rooted(std::size_t p) {
        if (p == 0)
            return false;
        std::size_t q = p - 1;
        while (levels_[q] != levels_[p] - 1)
            --q;
        for (std::size_t i = p; i < levels_.size(); ++i)
            levels_[i] = levels_[i - p + q];
        return true;
    }

    // Index of the second vertex at level 1: the first subtree of the root
    // spans [1, m).
    std::size_t split_point() const {
        for (std::size_t i = 2; i < levels_.size(); ++i)
            if (levels_[i] == 1)
                return i;
        return levels_.size();
    }

    // The sequence is a canonical free tree when the root's first subtree
    // is no higher than the rest, and on equal height no larger and not
    // lexicographically greater.
    bool is_valid(std::size_t m) const {
        const auto n = levels_.size();
        int left_height = 0;
        for (std::size_t i = 1; i < m; ++i)
            left_height = std::max(left_height, levels_[i] - 1);
        int rest_height = 0;
        for (std::size_t i = m; i < n; ++i)
            rest_height = std::max(rest_height, levels_[i]);
        if (rest_height < left_height)
            return false;
        if (rest_height > left_height)
            return true;
        const std::size_t left_len = m - 1;
        const std::size_t rest_len = n - m + 1;
        if (left_len > rest_len)
            return false;
        if (left_len < rest_len)
            return true;
        // rest = [0, levels[m..]], left = levels[1..m) - 1
        for (std::size_t i = 0; i < left_len; ++i) {
            const int a = levels_[1 + i] - 1;
            const int b = i == 0 ? 0 : levels_[m + i - 1];
            if (a != b)
                return a < b;
        }
        return true;
    }

    bool make_valid() {
        for (;;) {
            const std::size_t m = split_point();
            if (is_valid(m))
                return true;
            const std::size_t p = m - 1;
            const int old = levels_[p];
            if (!advance_rooted(p))
                return false;
            if (old > 2) {
                const std::size_t m2 = split_point();
                int h = 0;
                for (std::size_t i = 1; i < m2; ++i)
                    h = std::max(h, levels_[i] - 1);
                const std::size_t len = static_cast<std::size_t>(h) + 1;
                for (std::size_t i = 0; i < len; ++i)
                    levels_[levels_.size() - len + i] = static_cast<int>(i) + 1;
            }
        }
    }

    vertex_id n_;
    std::vector<int> levels_;
    std::size_t index_ = 0;
    bool started_ = false;
    bool done_ = false;
};

// Calls fn(tree, index) for every free tree of order n whose stream index is
// congruent to `worker` modulo `workers`. Trees outside the stripe are never
// materialized.
template <typename Fn>
void for_each_free_tree(vertex_id n, Fn&& fn, std::size_t worker = 0, std::size_t workers = 1,
                        vertex_id cap = default_order_cap) {
    FreeTreeGenerator gen(n, cap);
    while (gen.next())
        if (gen.index() % workers == worker)
            fn(gen.tree(), gen.index());
}

inline std::vector<Tree> free_trees(vertex_id n, vertex_id cap = default_order_cap) {
    std::vector<Tree> out;
    for_each_free_tree(n, [&](const Tree& t, std::size_t) { out.push_back(t); }, 0, 1, cap);
    return out;
}

inline std::size_t count_free_trees(vertex_id n, vertex_id cap = default_order_cap) {
    FreeTreeGenerator gen(n, cap);
    std::size_t c = 0;
    while (gen.next())
        ++c;
    return c;
}

inline bool internal_filter_feasible(vertex_id n, vertex_id k) noexcept { return k >= 1 && k <= n - 2; }

inline std::vector<Tree> free_trees_with_internal(vertex_id n, vertex_id k, vertex_id cap = default_order_cap) {
    if (!internal_filter_feasible(n, k))
        throw error(errc::infeasible_filter, "no tree of order " + std::to_string(n) + " has " + std::to_string(k) +
                                                 " internal vertices (need 1 <= k <= n-2)");
    std::vector<Tree> out;
    for_each_free_tree(
        n,
        [&](const Tree& t, std::size_t) {
            if (internal_count(t) == k)
                out.push_back(t);
        },
        0, 1, cap);
    return out;
}

// Uniform labelled tree: decodes a seed-determined uniform Pruefer sequence.
inline Tree random_tree(vertex_id n, std::uint64_t seed) {
    if (n < 2)
        throw error(errc::invalid_parameters, "random_tree needs n >= 2");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<vertex_id> pick(0, n - 1);
    std::vector<vertex_id> seq(static_cast<std::size_t>(n - 2));
    for (auto& x : seq)
        x = pick(rng);
    return from_pruefer(seq);
}

} // namespace treeinv
