#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "treeinv/canonical.hpp"
#include "treeinv/constructions.hpp"
#include "treeinv/enumeration.hpp"
#include "treeinv/error.hpp"
#include "treeinv/invariants.hpp"
#include "treeinv/report.hpp"
#include "treeinv/tree.hpp"

namespace treeinv::verify {

inline constexpr std::size_t default_witness_cap = 5;

struct Options {
    std::size_t workers = 1;
    std::size_t witness_cap = default_witness_cap;
    vertex_id order_cap = default_order_cap;
};

// Everything a claim may look at for one tree of the universe.
struct TreeContext {
    const Tree& tree;
    const VertexProfile& profile;
    const InvariantSummary& summary;
    vertex_id n;
    vertex_id internal;
    std::size_t index;
};

struct IndexedTree {
    std::size_t index;
    Tree tree;
    std::string note;
};

// Associative per-universe accumulator. Lists keep the `cap` smallest stream
// indices, so merging partial folds from striped workers is order-insensitive.
class Fold {
public:
    Fold(Direction dir, std::size_t cap, std::optional<std::int64_t> reference)
        : dir_(dir), cap_(cap), reference_(reference) {}

    std::int64_t count = 0;

    std::optional<std::int64_t> reference() const noexcept { return reference_; }

    void violate(const TreeContext& c, std::string note) {
        ++violation_count_;
        push(violations_, {c.index, c.tree, std::move(note)});
    }

    void offer(std::int64_t value, const TreeContext& c) {
        if (!best_ || better(value, *best_)) {
            best_ = value;
            best_count_ = 0;
            best_trees_.clear();
        }
        if (value == *best_) {
            ++best_count_;
            push(best_trees_, {c.index, c.tree, {}});
        }
    }

    void bump(const std::string& name, std::int64_t by = 1) { counters_[name] += by; }

    void sample(const std::string& name, const TreeContext& c) {
        ++counters_[name];
        push(samples_[name], {c.index, c.tree, name});
    }

    void merge(Fold&& o) {
        count += o.count;
        violation_count_ += o.violation_count_;
        splice(violations_, std::move(o.violations_));
        if (o.best_) {
            if (!best_ || better(*o.best_, *best_)) {
                best_ = o.best_;
                best_count_ = o.best_count_;
                best_trees_ = std::move(o.best_trees_);
            } else if (*o.best_ == *best_) {
                best_count_ += o.best_count_;
                splice(best_trees_, std::move(o.best_trees_));
            }
        }
        for (auto& [k, v] : o.counters_)
            counters_[k] += v;
        for (auto& [k, v] : o.samples_)
            splice(samples_[k], std::move(v));
    }

    std::int64_t violation_count() const noexcept { return violation_count_; }
    const std::vector<IndexedTree>& violations() const noexcept { return violations_; }
    const std::optional<std::int64_t>& best() const noexcept { return best_; }
    std::int64_t best_count() const noexcept { return best_count_; }
    const std::vector<IndexedTree>& best_trees() const noexcept { return best_trees_; }
    std::int64_t counter(const std::string& name) const {
        auto it = counters_.find(name);
        return it == counters_.end() ? 0 : it->second;
    }
    const std::map<std::string, std::int64_t>& counters() const noexcept { return counters_; }
    const std::vector<IndexedTree>& samples(const std::string& name) const {
        static const std::vector<IndexedTree> none;
        auto it = samples_.find(name);
        return it == samples_.end() ? none : it->second;
    }

private:
    bool better(std::int64_t a, std::int64_t b) const noexcept { return dir_ == Direction::max ? a > b : a < b; }

    void push(std::vector<IndexedTree>& list, IndexedTree item) {
        if (list.size() >= cap_ && (list.empty() || list.back().index < item.index))
            return;
        auto pos = std::upper_bound(list.begin(), list.end(), item.index,
                                    [](std::size_t i, const IndexedTree& t) { return i < t.index; });
        list.insert(pos, std::move(item));
        if (list.size() > cap_)
            list.pop_back();
    }

    void splice(std::vector<IndexedTree>& into, std::vector<IndexedTree>&& from) {
        for (auto& item : from)
            push(into, std::move(item));
    }

    Direction dir_;
    std::size_t cap_;
    std::optional<std::int64_t> reference_;
    std::int64_t violation_count_ = 0;
    std::vector<IndexedTree> violations_;
    std::optional<std::int64_t> best_;
    std::int64_t best_count_ = 0;
    std::vector<IndexedTree> best_trees_;
    std::map<std::string, std::int64_t> counters_;
    std::map<std::string, std::vector<IndexedTree>> samples_;
};

// Output sink for a claim's per-row finalization.
struct RowSink {
    Row& row;
    std::vector<Witness>& violations; // row-level failures (assert mode)
    std::vector<Witness>& findings;   // noteworthy scan results
    std::vector<Witness>& optimizers; // per-row extremal trees

    void fail(const Tree& t, std::string note) {
        ++row.violations;
        violations.push_back(make_witness(t, canonical_code(t).to_string(), std::move(note)));
    }
};

struct Claim {
    std::string id;
    Mode mode = Mode::assertion;
    std::string description;
    std::string statistic;
    Direction direction = Direction::max;
    vertex_id min_n = 1;
    // Folds are kept per (n, internal-vertex count) rather than per n.
    bool by_internal = false;
    // Fixed claims check hard-coded trees and ignore the universe.
    bool fixed = false;

    std::function<std::optional<std::int64_t>(vertex_id n, vertex_id k)> reference;
    std::function<void(const TreeContext&, Fold&)> visit;
    std::function<void(vertex_id n, std::optional<vertex_id> k, const Fold&, RowSink&)> finish;
    std::function<void(TheoremReport&, RowSink&)> run_fixed;
};

namespace detail {

inline bool every_internal_has_leaf(const Tree& t) {
    for (vertex_id v = 0; v < t.order(); ++v) {
        if (is_leaf(t, v))
            continue;
        bool found = false;
        for (vertex_id w : t.neighbors(v))
            found = found || is_leaf(t, w);
        if (!found)
            return false;
    }
    return true;
}

inline std::vector<vertex_id> argmax_of(const std::vector<int>& xs) {
    const int m = *std::max_element(xs.begin(), xs.end());
    std::vector<vertex_id> out;
    for (std::size_t i = 0; i < xs.size(); ++i)
        if (xs[i] == m)
            out.push_back(static_cast<vertex_id>(i));
    return out;
}

// Fills the generic statistic columns of a row from the fold's optimum.
inline void fill_optimum(const Fold& f, RowSink& out, bool record_optimizers) {
    out.row.statistic = f.best();
    out.row.argmax_count = f.best_count();
    for (const auto& it : f.best_trees()) {
        auto code = canonical_code(it.tree).to_string();
        out.row.argmax_codes.push_back(code);
        if (record_optimizers)
            out.optimizers.push_back(make_witness(it.tree, std::move(code), "optimizer"));
    }
}

inline void forward_violations(const Fold& f, RowSink& out) {
    out.row.violations += f.violation_count();
    for (const auto& it : f.violations())
        out.violations.push_back(make_witness(it.tree, canonical_code(it.tree).to_string(), it.note));
}

inline void forward_samples(const Fold& f, const std::string& name, RowSink& out) {
    for (const auto& it : f.samples(name))
        out.findings.push_back(make_witness(it.tree, canonical_code(it.tree).to_string(), it.note));
}

inline std::int64_t path_gap(vertex_id n) {
    const auto s = summarize(path(n));
    return s.ecc_sum - s.ld;
}

inline std::vector<Claim> build_claims() {
    std::vector<Claim> cs;

    {
        Claim c;
        c.id = "prop_2_1_ld_bounds";
        c.description = "LD(S_n) <= LD(T) <= LD(P_n), lower equality iff star, upper iff path";
        c.statistic = "LD";
        c.min_n = 2;
        c.reference = [](vertex_id n, vertex_id) { return formula_ld_path(n); };
        c.visit = [](const TreeContext& x, Fold& f) {
            const auto lo = formula_ld_star(x.n);
            const auto hi = formula_ld_path(x.n);
            const auto ld = x.summary.ld;
            f.offer(ld, x);
            if (ld < lo || ld > hi)
                f.violate(x, "LD outside [LD(S_n), LD(P_n)]");
            if ((ld == lo) != is_star(x.tree))
                f.violate(x, "LD equals the star value but the tree is not a star (or vice versa)");
            if ((ld == hi) != is_path(x.tree))
                f.violate(x, "LD equals the path value but the tree is not a path (or vice versa)");
            if (ld == lo)
                f.bump("lower_bound_hits");
        };
        c.finish = [](vertex_id n, std::optional<vertex_id>, const Fold& f, RowSink& out) {
            forward_violations(f, out);
            fill_optimum(f, out, false);
            out.row.path_value = formula_ld_path(n);
            out.row.exceeds_path = f.best() && *f.best() > formula_ld_path(n);
            out.row.extra["lower_bound_hits"] = f.counter("lower_bound_hits");
            if (f.best() != formula_ld_path(n))
                out.fail(path(n), "maximum LD differs from n(n-1)/2");
        };
        cs.push_back(std::move(c));
    }

    {
        Claim c;
        c.id = "thm_2_2_uni_path_max";
        c.description = "Uni(T) is maximized exactly by the path, with value floor((n-1)^2/4)";
        c.statistic = "Uni";
        c.min_n = 2;
        c.reference = [](vertex_id n, vertex_id) { return formula_uni_path(n); };
        c.visit = [](const TreeContext& x, Fold& f) {
            f.offer(x.summary.uni_sum, x);
            if (x.summary.uni_sum > *f.reference())
                f.violate(x, "Uni exceeds the path formula");
        };
        c.finish = [](vertex_id n, std::optional<vertex_id>, const Fold& f, RowSink& out) {
            forward_violations(f, out);
            fill_optimum(f, out, false);
            out.row.path_value = formula_uni_path(n);
            out.row.exceeds_path = f.best() && *f.best() > formula_uni_path(n);
            if (f.best() != formula_uni_path(n))
                out.fail(path(n), "maximum Uni differs from the path formula");
            // The universe holds one tree per isomorphism class, so a unique
            // maximizer means best_count == 1 and that tree is the path.
            for (const auto& it : f.best_trees())
                if (!is_path(it.tree))
                    out.fail(it.tree, "non-path tree attains the maximum Uni");
        };
        cs.push_back(std::move(c));
    }

    {
        Claim c;
        c.id = "prop_2_3_uni_star_min";
        c.description = "Uni(T) >= 1 with equality iff T is the star (n >= 3)";
        c.statistic = "Uni";
        c.direction = Direction::min;
        c.min_n = 3;
        c.visit = [](const TreeContext& x, Fold& f) {
            f.offer(x.summary.uni_sum, x);
            if (x.summary.uni_sum < 1)
                f.violate(x, "Uni below 1");
            if ((x.summary.uni_sum == 1) != is_star(x.tree))
                f.violate(x, "Uni = 1 does not coincide with being a star");
        };
        c.finish = [](vertex_id n, std::optional<vertex_id>, const Fold& f, RowSink& out) {
            forward_violations(f, out);
            fill_optimum(f, out, false);
            if (f.best() != 1 || f.best_count() != 1)
                out.fail(star(n), "minimum Uni is not uniquely 1");
        };
        cs.push_back(std::move(c));
    }

    {
        Claim c;
        c.id = "prop_2_4_uni_k_max";
        c.description = "with k internal vertices Uni(T) <= floor((k+1)^2/4), attained by every dumbbell";
        c.statistic = "Uni";
        c.min_n = 3;
        c.by_internal = true;
        c.reference = [](vertex_id, vertex_id k) { return formula_uni_dumbbell_max(k); };
        c.visit = [](const TreeContext& x, Fold& f) {
            f.offer(x.summary.uni_sum, x);
            if (x.summary.uni_sum > *f.reference())
                f.violate(x, "Uni exceeds the dumbbell bound");
        };
        c.finish = [](vertex_id n, std::optional<vertex_id> k, const Fold& f, RowSink& out) {
            forward_violations(f, out);
            fill_optimum(f, out, false);
            const auto bound = formula_uni_dumbbell_max(*k);
            out.row.extra["bound"] = bound;
            if (f.best() != bound)
                out.fail(dumbbell(*k, 1, n - *k - 1), "maximum Uni differs from the dumbbell bound");
            std::int64_t checked = 0;
            for (int a = 1; a <= n - *k - 1; ++a, ++checked) {
                const auto d = dumbbell(*k, a, n - *k - a);
                if (summarize(d).uni_sum != bound)
                    out.fail(d, "dumbbell misses the bound");
            }
            out.row.extra["dumbbells_checked"] = checked;
        };
        cs.push_back(std::move(c));
    }

    {
        Claim c;
        c.id = "prop_2_5_uni_k_min";
        c.description = "with k internal vertices: Uni >= k (equality iff every internal vertex sees a leaf) "
                        "for k <= n/2; otherwise minimized by a balanced starlike tree";
        c.statistic = "Uni";
        c.direction = Direction::min;
        c.min_n = 3;
        c.by_internal = true;
        c.reference = [](vertex_id n, vertex_id k) { return formula_uni_min(n, k); };
        c.visit = [](const TreeContext& x, Fold& f) {
            const auto uni = x.summary.uni_sum;
            f.offer(uni, x);
            if (uni < *f.reference())
                f.violate(x, "Uni below the claimed minimum");
            if (x.internal <= x.n / 2 && (uni == x.internal) != every_internal_has_leaf(x.tree))
                f.violate(x, "Uni = k does not coincide with every internal vertex adjacent to a leaf");
        };
        c.finish = [](vertex_id n, std::optional<vertex_id> k, const Fold& f, RowSink& out) {
            forward_violations(f, out);
            fill_optimum(f, out, false);
            const auto target = formula_uni_min(n, *k);
            out.row.extra["claimed_min"] = target;
            if (*k > n / 2) {
                const auto spider = balanced_starlike(n, n - *k);
                if (internal_count(spider) != *k || summarize(spider).uni_sum != target)
                    out.fail(spider, "balanced starlike is not in the universe or misreports Uni");
                if (f.best() != target)
                    out.fail(spider, "balanced starlike does not attain the minimum Uni");
            } else if (f.best() != target) {
                out.fail(f.best_trees().empty() ? path(n) : f.best_trees().front().tree, "minimum Uni differs from k");
            }
        };
        cs.push_back(std::move(c));
    }

    {
        Claim c;
        c.id = "prop_3_r_ge_rprime";
        c.description = "radius r(T) >= r'(T) = max uni(v)";
        c.statistic = "r-rprime";
        c.direction = Direction::min;
        c.visit = [](const TreeContext& x, Fold& f) {
            const auto gap = x.summary.r - x.summary.r_prime;
            f.offer(gap, x);
            if (gap < 0)
                f.violate(x, "r < r'");
        };
        c.finish = [](vertex_id, std::optional<vertex_id>, const Fold& f, RowSink& out) {
            forward_violations(f, out);
            fill_optimum(f, out, false);
        };
        cs.push_back(std::move(c));
    }

    {
        Claim c;
        c.id = "prop_4_1_ecc_ld_gap";
        c.description = "Ecc(T) >= LD(T) + 2 for n >= 3, equality iff star";
        c.statistic = "Ecc-LD";
        c.direction = Direction::min;
        c.min_n = 3;
        c.visit = [](const TreeContext& x, Fold& f) {
            const auto gap = x.summary.ecc_sum - x.summary.ld;
            f.offer(gap, x);
            if (gap < 2)
                f.violate(x, "Ecc - LD below 2");
            if ((gap == 2) != is_star(x.tree))
                f.violate(x, "Ecc - LD = 2 does not coincide with being a star");
        };
        c.finish = [](vertex_id n, std::optional<vertex_id>, const Fold& f, RowSink& out) {
            forward_violations(f, out);
            fill_optimum(f, out, false);
            if (f.best() != 2 || f.best_count() != 1)
                out.fail(star(n), "minimum Ecc - LD is not uniquely 2");
        };
        cs.push_back(std::move(c));
    }

    {
        Claim c;
        c.id = "thm_4_3_delta_min";
        c.description = "Delta(T) >= 2(n-1) = Delta(S_n)";
        c.statistic = "Delta";
        c.direction = Direction::min;
        c.min_n = 2;
        c.reference = [](vertex_id n, vertex_id) { return formula_delta_star(n); };
        c.visit = [](const TreeContext& x, Fold& f) {
            f.offer(x.summary.delta_sum, x);
            if (x.summary.delta_sum < *f.reference())
                f.violate(x, "Delta below 2(n-1)");
            if (x.summary.delta_sum == *f.reference() && !is_star(x.tree))
                f.sample("non_star_equality", x);
        };
        c.finish = [](vertex_id n, std::optional<vertex_id>, const Fold& f, RowSink& out) {
            forward_violations(f, out);
            fill_optimum(f, out, false);
            out.row.extra["non_star_equality"] = f.counter("non_star_equality");
            forward_samples(f, "non_star_equality", out);
            if (summarize(star(n)).delta_sum != formula_delta_star(n))
                out.fail(star(n), "star misses 2(n-1)");
            if (f.best() != formula_delta_star(n))
                out.fail(star(n), "minimum Delta differs from 2(n-1)");
        };
        cs.push_back(std::move(c));
    }

    {
        Claim c;
        c.id = "prop_5_1_delta_max_at_ends";
        c.description = "max delta(v) is attained exactly at the vertices maximizing ecc(v)";
        c.statistic = "max_delta_v";
        c.min_n = 2;
        c.visit = [](const TreeContext& x, Fold& f) {
            f.offer(*std::max_element(x.profile.delta.begin(), x.profile.delta.end()), x);
            if (argmax_of(x.profile.delta) != argmax_of(x.profile.ecc))
                f.violate(x, "argmax delta(v) differs from argmax ecc(v)");
        };
        c.finish = [](vertex_id, std::optional<vertex_id>, const Fold& f, RowSink& out) {
            forward_violations(f, out);
            fill_optimum(f, out, false);
        };
        cs.push_back(std::move(c));
    }

    {
        Claim c;
        c.id = "thm_5_2_center_delta";
        c.description = "unicentral: delta(center) = delta(T); bicentral: each center vertex has delta <= delta(T)+1";
        c.statistic = "delta_min";
        c.direction = Direction::min;
        c.min_n = 2;
        c.visit = [](const TreeContext& x, Fold& f) {
            const auto& center = x.summary.center;
            const int dm = x.summary.delta_min;
            f.offer(dm, x);
            if (center.size() == 1) {
                f.bump("unicentral");
                if (x.profile.delta[static_cast<std::size_t>(center[0])] != dm)
                    f.violate(x, "single center vertex does not attain delta(T)");
            } else {
                f.bump("bicentral");
                for (vertex_id v : center)
                    if (x.profile.delta[static_cast<std::size_t>(v)] > dm + 1)
                        f.violate(x, "center vertex exceeds delta(T) + 1");
            }
        };
        c.finish = [](vertex_id, std::optional<vertex_id>, const Fold& f, RowSink& out) {
            forward_violations(f, out);
            fill_optimum(f, out, false);
            out.row.extra["unicentral"] = f.counter("unicentral");
            out.row.extra["bicentral"] = f.counter("bicentral");
        };
        cs.push_back(std::move(c));
    }

    {
        Claim c;
        c.id = "fig_7_values";
        c.description = "Delta(P_14) = 98 < 104 = Delta(S(6,6,1))";
        c.statistic = "Delta";
        c.fixed = true;
        c.run_fixed = [](TheoremReport& r, RowSink& out) {
            const auto p = path(14);
            const auto s = starlike({6, 6, 1});
            const auto dp = summarize(p).delta_sum;
            const auto ds = summarize(s).delta_sum;
            r.named_values["delta_path_14"] = dp;
            r.named_values["delta_starlike_6_6_1"] = ds;
            r.count = 2;
            out.row.n = 14;
            out.row.count = 2;
            out.row.statistic = ds;
            out.row.argmax_codes = {canonical_code(s).to_string()};
            out.row.argmax_count = 1;
            out.row.path_value = dp;
            out.row.exceeds_path = ds > dp;
            if (dp != 98)
                out.fail(p, "Delta(P_14) != 98");
            if (ds != 104)
                out.fail(s, "Delta(S(6,6,1)) != 104");
            out.findings.push_back(make_witness(p, canonical_code(p).to_string(), "path"));
            out.findings.push_back(make_witness(s, canonical_code(s).to_string(), "starlike"));
        };
        cs.push_back(std::move(c));
    }

    {
        Claim c;
        c.id = "fig_3_middle_parts";
        c.description = "8-vertex example: C(T) = {v}, C_uni(T) = {u, w} disjoint, delta(u)=delta(v)=delta(w)=2=delta(T)";
        c.statistic = "r_prime";
        c.fixed = true;
        c.run_fixed = [](TheoremReport& r, RowSink& out) {
            const auto ex = disjoint_middles_tree();
            const auto p = profile_fast(ex.tree);
            const auto s = summarize(ex.tree, p);
            auto uw = std::vector<vertex_id>{ex.u, ex.w};
            std::sort(uw.begin(), uw.end());
            r.count = 1;
            out.row.n = ex.tree.order();
            out.row.count = 1;
            out.row.statistic = s.r_prime;
            r.named_values["r"] = s.r;
            r.named_values["r_prime"] = s.r_prime;
            r.named_values["delta_min"] = s.delta_min;
            if (s.center != std::vector<vertex_id>{ex.v})
                out.fail(ex.tree, "center is not {v}");
            if (s.c_uni != uw)
                out.fail(ex.tree, "C_uni is not {u, w}");
            for (vertex_id x : {ex.u, ex.v, ex.w})
                if (p.delta[static_cast<std::size_t>(x)] != 2 || s.delta_min != 2)
                    out.fail(ex.tree, "delta(u), delta(v), delta(w) are not all equal to delta(T) = 2");
            out.findings.push_back(make_witness(ex.tree, canonical_code(ex.tree).to_string(), "example"));
        };
        cs.push_back(std::move(c));
    }

    {
        Claim c;
        c.id = "fig_6_middle_parts";
        c.description = "11-vertex example: C(T) = {u, v}, C_uni(T) = {w}";
        c.statistic = "r_prime";
        c.fixed = true;
        c.run_fixed = [](TheoremReport& r, RowSink& out) {
            const auto ex = offset_center_tree();
            const auto s = summarize(ex.tree);
            auto uv = std::vector<vertex_id>{ex.u, ex.v};
            std::sort(uv.begin(), uv.end());
            r.count = 1;
            out.row.n = ex.tree.order();
            out.row.count = 1;
            out.row.statistic = s.r_prime;
            r.named_values["r"] = s.r;
            r.named_values["r_prime"] = s.r_prime;
            if (s.center != uv)
                out.fail(ex.tree, "center is not {u, v}");
            if (s.c_uni != std::vector<vertex_id>{ex.w})
                out.fail(ex.tree, "C_uni is not {w}");
            out.findings.push_back(make_witness(ex.tree, canonical_code(ex.tree).to_string(), "example"));
        };
        cs.push_back(std::move(c));
    }

    {
        Claim c;
        c.id = "question_4_2_ecc_minus_ld";
        c.mode = Mode::scan;
        c.description = "is Ecc(T) - LD(T) <= Ecc(P_n) - LD(P_n) for every tree of order n?";
        c.statistic = "Ecc-LD";
        c.min_n = 2;
        c.reference = [](vertex_id n, vertex_id) { return path_gap(n); };
        c.visit = [](const TreeContext& x, Fold& f) {
            const auto gap = x.summary.ecc_sum - x.summary.ld;
            f.offer(gap, x);
            if (gap > *f.reference())
                f.sample("exceeds_path", x);
        };
        c.finish = [](vertex_id n, std::optional<vertex_id>, const Fold& f, RowSink& out) {
            fill_optimum(f, out, true);
            const auto ref = path_gap(n);
            out.row.path_value = ref;
            out.row.exceeds_path = f.best() && *f.best() > ref;
            out.row.extra["exceeding_trees"] = f.counter("exceeds_path");
            forward_samples(f, "exceeds_path", out);
        };
        cs.push_back(std::move(c));
    }

    {
        Claim c;
        c.id = "conj_6_delta_at_center";
        c.mode = Mode::scan;
        c.description = "bicentral trees: is delta(T) attained at a center vertex, and only there?";
        c.statistic = "bicentral_without_center_minimizer";
        c.min_n = 2;
        c.visit = [](const TreeContext& x, Fold& f) {
            const auto loc = delta_min_location(x.tree, x.profile);
            if (loc.center.size() == 2) {
                f.bump("bicentral");
                if (!loc.center_attains)
                    f.sample("no_center_attains", x);
                if (!loc.only_center_attains)
                    f.sample("noncenter_attains", x);
            } else if (!loc.only_center_attains) {
                f.bump("unicentral_noncenter_attains");
            }
        };
        c.finish = [](vertex_id, std::optional<vertex_id>, const Fold& f, RowSink& out) {
            out.row.statistic = f.counter("no_center_attains");
            for (const char* key : {"bicentral", "no_center_attains", "noncenter_attains", "unicentral_noncenter_attains"})
                out.row.extra[key] = f.counter(key);
            forward_samples(f, "no_center_attains", out);
            forward_samples(f, "noncenter_attains", out);
        };
        cs.push_back(std::move(c));
    }

    {
        Claim c;
        c.id = "delta_max_structure";
        c.mode = Mode::scan;
        c.description = "which trees maximize Delta(T), and does the path?";
        c.statistic = "Delta";
        c.min_n = 2;
        c.reference = [](vertex_id n, vertex_id) { return summarize(path(n)).delta_sum; };
        c.visit = [](const TreeContext& x, Fold& f) { f.offer(x.summary.delta_sum, x); };
        c.finish = [](vertex_id n, std::optional<vertex_id>, const Fold& f, RowSink& out) {
            fill_optimum(f, out, true);
            const auto ref = summarize(path(n)).delta_sum;
            out.row.path_value = ref;
            out.row.exceeds_path = f.best() && *f.best() > ref;
        };
        cs.push_back(std::move(c));
    }

    return cs;
}

} // namespace detail

inline const std::vector<Claim>& claims() {
    static const std::vector<Claim> registry = detail::build_claims();
    return registry;
}

inline const Claim& find_claim(std::string_view id) {
    for (const auto& c : claims())
        if (c.id == id)
            return c;
    throw error(errc::unknown_claim, "no claim named '" + std::string(id) + "'");
}

namespace detail {

using Key = std::pair<vertex_id, vertex_id>; // (n, k); k = -1 when not split

inline std::vector<Key> expected_keys(const Claim& c, vertex_id lo, vertex_id hi, std::optional<vertex_id> k) {
    std::vector<Key> keys;
    for (vertex_id n = std::max(lo, c.min_n); n <= hi; ++n) {
        if (!c.by_internal) {
            keys.emplace_back(n, -1);
        } else if (k) {
            if (internal_filter_feasible(n, *k))
                keys.emplace_back(n, *k);
        } else {
            for (vertex_id kk = 1; kk <= n - 2; ++kk)
                keys.emplace_back(n, kk);
        }
    }
    return keys;
}

inline Fold make_fold(const Claim& c, const Key& key, std::size_t cap) {
    std::optional<std::int64_t> ref;
    if (c.reference)
        ref = c.reference(key.first, key.second);
    return Fold(c.direction, cap, ref);
}

} // namespace detail

// Runs the given claims over every free tree with n in [n_min, n_max]. One
// enumeration pass per order feeds all claims; workers stripe the stream by
// index. `k` restricts claims that split by internal-vertex count.
inline std::vector<TheoremReport> check_many(const std::vector<const Claim*>& selected, vertex_id n_min,
                                             vertex_id n_max, std::optional<vertex_id> k, const Options& opt) {
    if (n_min < 1 || n_min > n_max)
        throw error(errc::invalid_parameters, "need 1 <= n_min <= n_max");
    if (n_max > opt.order_cap)
        throw error(errc::order_too_large,
                    "order " + std::to_string(n_max) + " exceeds enumeration cap " + std::to_string(opt.order_cap));
    if (opt.workers < 1)
        throw error(errc::invalid_parameters, "need at least one worker");

    const auto start = std::chrono::steady_clock::now();
    std::vector<const Claim*> streamed;
    for (const Claim* c : selected)
        if (!c->fixed)
            streamed.push_back(c);

    if (k) {
        bool any = false;
        for (const Claim* c : streamed)
            any = any || (c->by_internal && !detail::expected_keys(*c, n_min, n_max, k).empty());
        if (!any && !streamed.empty())
            throw error(errc::infeasible_filter, "internal-vertex filter k=" + std::to_string(*k) +
                                                     " matches no selected claim over the requested orders");
    }

    using FoldMap = std::map<detail::Key, Fold>;
    std::vector<std::vector<FoldMap>> partial(opt.workers, std::vector<FoldMap>(streamed.size()));
    std::vector<std::exception_ptr> failures(opt.workers);

    auto work = [&](std::size_t w) {
        try {
            for (vertex_id n = n_min; n <= n_max; ++n) {
                bool needed = false;
                for (const Claim* c : streamed)
                    needed = needed || n >= c->min_n;
                if (!needed)
                    continue;
                for_each_free_tree(
                    n,
                    [&](const Tree& t, std::size_t index) {
                        const auto profile = profile_fast(t);
                        const auto summary = summarize(t, profile);
                        const vertex_id internal = internal_count(t);
                        const TreeContext ctx{t, profile, summary, n, internal, index};
                        for (std::size_t ci = 0; ci < streamed.size(); ++ci) {
                            const Claim& c = *streamed[ci];
                            if (n < c.min_n)
                                continue;
                            detail::Key key{n, -1};
                            if (c.by_internal) {
                                if (!internal_filter_feasible(n, internal) || (k && internal != *k))
                                    continue;
                                key.second = internal;
                            }
                            auto& folds = partial[w][ci];
                            auto it = folds.find(key);
                            if (it == folds.end())
                                it = folds.emplace(key, detail::make_fold(c, key, opt.witness_cap)).first;
                            ++it->second.count;
                            c.visit(ctx, it->second);
                        }
                    },
                    w, opt.workers, opt.order_cap);
            }
        } catch (...) {
            failures[w] = std::current_exception();
        }
    };

    if (opt.workers == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(opt.workers);
        for (std::size_t w = 0; w < opt.workers; ++w)
            pool.emplace_back(work, w);
    }
    for (auto& f : failures)
        if (f)
            std::rethrow_exception(f);
    const auto stream_elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    std::vector<TheoremReport> reports;
    std::size_t si = 0;
    for (const Claim* c : selected) {
        const auto claim_start = std::chrono::steady_clock::now();
        TheoremReport r;
        r.claim = c->id;
        r.mode = c->mode;
        r.description = c->description;
        r.statistic = c->statistic;
        r.direction = c->direction;
        std::vector<Witness> violations, findings, optimizers;

        if (c->fixed) {
            r.n_min = r.n_max = 0;
            Row row;
            RowSink sink{row, violations, findings, optimizers};
            c->run_fixed(r, sink);
            r.n_min = r.n_max = row.n;
            r.rows.push_back(std::move(row));
        } else {
            r.n_min = std::max(n_min, c->min_n);
            r.n_max = n_max;
            r.k = c->by_internal ? k : std::nullopt;
            const std::size_t ci = si++;
            for (const auto& key : detail::expected_keys(*c, n_min, n_max, k)) {
                Fold merged = detail::make_fold(*c, key, opt.witness_cap);
                for (auto& worker_folds : partial) {
                    auto it = worker_folds[ci].find(key);
                    if (it != worker_folds[ci].end())
                        merged.merge(std::move(it->second));
                }
                Row row;
                row.n = key.first;
                if (key.second >= 0)
                    row.k = key.second;
                row.count = merged.count;
                RowSink sink{row, violations, findings, optimizers};
                c->finish(key.first, row.k, merged, sink);
                r.count += row.count;
                r.rows.push_back(std::move(row));
            }
        }

        const auto cap = opt.witness_cap;
        if (!violations.empty()) {
            r.witnesses.assign(violations.begin(), violations.begin() + static_cast<std::ptrdiff_t>(std::min(cap, violations.size())));
        } else if (!findings.empty()) {
            r.witnesses.assign(findings.begin(), findings.begin() + static_cast<std::ptrdiff_t>(std::min(cap, findings.size())));
        } else if (!optimizers.empty()) {
            const auto take = std::min(cap, optimizers.size());
            r.witnesses.assign(optimizers.end() - static_cast<std::ptrdiff_t>(take), optimizers.end());
        }

        std::int64_t total_violations = 0;
        for (const auto& row : r.rows)
            total_violations += row.violations;
        if (c->mode == Mode::scan)
            r.verdict = Verdict::scan;
        else
            r.verdict = total_violations > 0 ? Verdict::fails : Verdict::holds;

        r.wall_time = (c->fixed ? 0.0 : stream_elapsed) +
                      std::chrono::duration<double>(std::chrono::steady_clock::now() - claim_start).count();
        reports.push_back(std::move(r));
    }
    return reports;
}

inline TheoremReport check(std::string_view claim_id, vertex_id n_min, vertex_id n_max,
                           std::optional<vertex_id> k = std::nullopt, const Options& opt = {}) {
    const Claim& c = find_claim(claim_id);
    if (k && !c.by_internal && !c.fixed)
        throw error(errc::invalid_parameters, "claim '" + c.id + "' does not take an internal-vertex filter");
    return check_many({&c}, n_min, n_max, k, opt).front();
}

inline std::vector<TheoremReport> check_all(vertex_id n_min, vertex_id n_max, std::optional<vertex_id> k = std::nullopt,
                                            const Options& opt = {}) {
    std::vector<const Claim*> all;
    for (const auto& c : claims())
        all.push_back(&c);
    return check_many(all, n_min, n_max, k, opt);
}

// ---------------------------------------------------------------------------
// Extremal search

using Statistic = std::function<std::int64_t(const TreeContext&)>;

inline const std::vector<std::pair<std::string, Statistic>>& statistics() {
    static const std::vector<std::pair<std::string, Statistic>> table{
        {"Uni", [](const TreeContext& x) { return x.summary.uni_sum; }},
        {"Ecc", [](const TreeContext& x) { return x.summary.ecc_sum; }},
        {"Delta", [](const TreeContext& x) { return x.summary.delta_sum; }},
        {"LD", [](const TreeContext& x) { return x.summary.ld; }},
        {"Ecc-LD", [](const TreeContext& x) { return x.summary.ecc_sum - x.summary.ld; }},
        {"delta_min", [](const TreeContext& x) { return std::int64_t{x.summary.delta_min}; }},
        {"r-rprime", [](const TreeContext& x) { return std::int64_t{x.summary.r - x.summary.r_prime}; }},
    };
    return table;
}

// Accepts the canonical names plus a few spellings with Greek letters or primes.
inline std::string canonical_statistic_name(std::string_view name) {
    static const std::vector<std::pair<std::string_view, std::string_view>> aliases{
        {"uni", "Uni"},           {"ecc", "Ecc"},          {"delta", "Delta"},       {"\xce\x94", "Delta"},
        {"ld", "LD"},             {"ecc-ld", "Ecc-LD"},    {"Ecc\xe2\x88\x92LD", "Ecc-LD"},
        {"\xce\xb4_min", "delta_min"}, {"r-r'", "r-rprime"}, {"r\xe2\x88\x92r\xe2\x80\xb2", "r-rprime"},
    };
    for (const auto& [n, _] : statistics())
        if (n == name)
            return n;
    for (auto [alias, target] : aliases)
        if (alias == name)
            return std::string(target);
    throw error(errc::unknown_statistic, "unknown statistic '" + std::string(name) + "'");
}

inline SearchResult search(std::string_view statistic, vertex_id n, std::optional<vertex_id> k, Direction dir,
                           const Options& opt = {}) {
    const auto name = canonical_statistic_name(statistic);
    Statistic stat;
    for (const auto& [sn, fn] : statistics())
        if (sn == name)
            stat = fn;
    if (k && !internal_filter_feasible(n, *k))
        throw error(errc::infeasible_filter, "no tree of order " + std::to_string(n) + " has " + std::to_string(*k) +
                                                 " internal vertices");

    Claim c;
    c.id = "search";
    c.mode = Mode::scan;
    c.statistic = name;
    c.direction = dir;
    c.by_internal = k.has_value();
    c.visit = [stat](const TreeContext& x, Fold& f) { f.offer(stat(x), x); };
    c.finish = [](vertex_id, std::optional<vertex_id>, const Fold& f, RowSink& out) {
        detail::fill_optimum(f, out, true);
    };
    auto report = check_many({&c}, n, n, k, opt).front();

    SearchResult s;
    s.statistic = name;
    s.direction = dir;
    s.n = n;
    s.k = k;
    s.universe_count = report.count;
    s.rows = report.rows;
    if (!s.rows.empty()) {
        s.optimum = s.rows.front().statistic;
        s.optimizer_count = s.rows.front().argmax_count;
    }
    s.optimizers = report.witnesses;
    s.wall_time = report.wall_time;
    return s;
}

inline Direction parse_direction(std::string_view s) {
    if (s == "max")
        return Direction::max;
    if (s == "min")
        return Direction::min;
    throw error(errc::invalid_parameters, "direction must be 'max' or 'min'");
}

} // namespace treeinv::verify
