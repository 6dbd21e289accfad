#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dgs/degree_sequence.hpp"
#include "dgs/digraph.hpp"
#include "dgs/errors.hpp"
#include "dgs/mcmc.hpp"

namespace dgs {

struct EnumLimits {
    int max_n = 8;
    std::uint64_t node_budget = 100'000'000; // backtracking nodes
};

/// Enumerates every realization of d: all 0/1 N x N matrices with zero
/// diagonal, row sums d+ and column sums d-. Row-by-row backtracking with
/// column-demand pruning; output is in canonical (sorted arc list) order.
/// Returns an empty list when d is not digraphic.
inline std::vector<Digraph> enumerate_realizations(const DegreeSequence& d,
                                                   const EnumLimits& limits = {}) {
    const int n = d.size();
    if (n > limits.max_n)
        throw cap_exceeded_error("enumerate_realizations: N exceeds cap of " +
                                 std::to_string(limits.max_n));
    if (d.sum_out() != d.sum_in()) return {};

    std::vector<Digraph> found;
    std::vector<int> col_need(n);
    for (int i = 0; i < n; ++i) col_need[i] = d.pairs()[i].in;

    Digraph g(n);
    std::uint64_t nodes = 0;

    // Columns v (0-based) still reachable from rows >= row: every unfinished
    // row except v's own can serve column v.
    const auto feasible = [&](int next_row) {
        for (int v = 0; v < n; ++v) {
            const int rows_left = n - next_row - (v >= next_row ? 1 : 0);
            if (col_need[v] > rows_left) return false;
        }
        return true;
    };

    const auto place_row = [&](auto&& self, auto&& next_row_fn, int row, int col,
                               int remaining) -> void {
        if (++nodes > limits.node_budget)
            throw cap_exceeded_error("enumerate_realizations: node budget exhausted");
        if (remaining == 0) {
            next_row_fn(row + 1);
            return;
        }
        if (col >= n || n - col - (row >= col ? 1 : 0) < remaining) return;
        if (col == row) {
            self(self, next_row_fn, row, col + 1, remaining);
            return;
        }
        // take column `col`
        if (col_need[col] > 0) {
            --col_need[col];
            g.add_arc(row + 1, col + 1);
            self(self, next_row_fn, row, col + 1, remaining - 1);
            g.remove_arc(row + 1, col + 1);
            ++col_need[col];
        }
        // skip column `col`
        self(self, next_row_fn, row, col + 1, remaining);
    };

    const auto next_row = [&](auto&& self, int row) -> void {
        if (row == n) {
            found.push_back(g);
            return;
        }
        if (!feasible(row)) return;
        const auto recurse = [&](int r) { self(self, r); };
        place_row(place_row, recurse, row, 0, d.pairs()[row].out);
    };
    next_row(next_row, 0);

    std::sort(found.begin(), found.end(),
              [](const Digraph& a, const Digraph& b) { return a.arcs() < b.arcs(); });
    return found;
}

/// Meta-graph over R(d): one vertex per realization (canonical order),
/// E2 edges where a single 2-switch connects two realizations, E3 edges
/// where a single C3 reorientation does.
struct MetaGraph {
    std::vector<Digraph> realizations;
    std::set<std::pair<int, int>> e2_edges; // 0-based realization indices, i < j
    std::set<std::pair<int, int>> e3_edges;
};

inline MetaGraph build_metagraph(const DegreeSequence& d, const EnumLimits& limits = {}) {
    MetaGraph m;
    m.realizations = enumerate_realizations(d, limits);
    const int r = static_cast<int>(m.realizations.size());
    const int n = d.size();

    std::unordered_map<std::string, int> index;
    index.reserve(r);
    for (int i = 0; i < r; ++i) index.emplace(m.realizations[i].canonical_key(), i);

    const auto record = [&](std::set<std::pair<int, int>>& edges, int i, const Digraph& h) {
        const auto it = index.find(h.canonical_key());
        if (it == index.end())
            throw std::logic_error("build_metagraph: move left R(d)"); // degrees preserved
        if (it->second != i) edges.emplace(std::min(i, it->second), std::max(i, it->second));
    };

    for (int i = 0; i < r; ++i) {
        Digraph g = m.realizations[i];
        const auto arcs = g.arcs();
        // E2: every valid 2-switch on every disjoint arc pair
        for (const auto& [a, b] : arcs)
            for (const auto& [c, dd] : arcs) {
                if (a == c || a == dd || b == c || b == dd) continue;
                if (g.has_arc(a, dd) || g.has_arc(c, b)) continue;
                try_two_switch(g, a, b, c, dd);
                record(m.e2_edges, i, g);
                try_two_switch(g, a, dd, c, b); // undo
            }
        // E3: every induced 3-cycle reorientation
        for (int x = 1; x <= n; ++x)
            for (int y = x + 1; y <= n; ++y)
                for (int z = y + 1; z <= n; ++z) {
                    const std::array<int, 3> t = {x, y, z};
                    if (!is_induced_c3(g, t)) continue;
                    try_c3_reorient(g, t);
                    record(m.e3_edges, i, g);
                    try_c3_reorient(g, t); // self-inverse
                }
    }
    return m;
}

/// Anchor oracle by definition: triples whose induced subgraph is a directed
/// 3-cycle in EVERY realization, plus (separately) the coordinates covered by
/// SOME induced 3-cycle in every realization — the general anchor-set
/// condition, of which the fixed-triple condition is a subclass.
struct BruteForceAnchors {
    std::vector<std::array<int, 3>> triples;    // ascending triples, sorted
    std::vector<int> anchored_coordinates;      // general per-coordinate condition
};

inline BruteForceAnchors brute_force_anchors(const DegreeSequence& d,
                                             const EnumLimits& limits = {}) {
    const std::vector<Digraph> realizations = enumerate_realizations(d, limits);
    BruteForceAnchors result;
    if (realizations.empty()) return result;
    const int n = d.size();

    for (int x = 1; x <= n; ++x)
        for (int y = x + 1; y <= n; ++y)
            for (int z = y + 1; z <= n; ++z) {
                const std::array<int, 3> t = {x, y, z};
                const bool always = std::all_of(
                    realizations.begin(), realizations.end(),
                    [&](const Digraph& g) { return is_induced_c3(g, t).has_value(); });
                if (always) result.triples.push_back(t);
            }

    for (int v = 1; v <= n; ++v) {
        bool covered_everywhere = true;
        for (const Digraph& g : realizations) {
            bool covered = false;
            for (int y = 1; y <= n && !covered; ++y)
                for (int z = y + 1; z <= n && !covered; ++z) {
                    if (y == v || z == v) continue;
                    std::array<int, 3> t = {v, y, z};
                    if (is_induced_c3(g, t)) covered = true;
                }
            if (!covered) {
                covered_everywhere = false;
                break;
            }
        }
        if (covered_everywhere) result.anchored_coordinates.push_back(v);
    }
    return result;
}

/// Component analysis of the meta-graph, including the product-structure
/// verification for anchored sequences: Omega'_d must split into exactly
/// 2^k components, pairwise equal in order, size and sorted degree profile,
/// each constant in the orientation vector of the anchored triples and
/// distinct components differing in it. (Equal order/size/degree-profile is
/// a deliberately weaker stand-in for component isomorphism.)
struct ComponentReport {
    int num_realizations = 0;
    int omega_components = 0;       // E2 union E3
    int omega_prime_components = 0; // E2 only
    bool product_checked = false;
    bool product_pass = true;
    std::vector<std::string> product_details;
};

namespace detail {

class UnionFind {
public:
    explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
    int find(int x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    void unite(int a, int b) { parent_[find(a)] = find(b); }

private:
    std::vector<int> parent_;
};

} // namespace detail

inline ComponentReport component_structure(const MetaGraph& m,
                                           const std::vector<std::array<int, 3>>& anchor_triples) {
    ComponentReport report;
    const int r = static_cast<int>(m.realizations.size());
    report.num_realizations = r;
    if (r == 0) return report;

    detail::UnionFind joint(r), e2only(r);
    for (const auto& [i, j] : m.e2_edges) {
        joint.unite(i, j);
        e2only.unite(i, j);
    }
    for (const auto& [i, j] : m.e3_edges) joint.unite(i, j);

    std::map<int, std::vector<int>> prime_components;
    std::set<int> joint_roots;
    for (int i = 0; i < r; ++i) {
        prime_components[e2only.find(i)].push_back(i);
        joint_roots.insert(joint.find(i));
    }
    report.omega_components = static_cast<int>(joint_roots.size());
    report.omega_prime_components = static_cast<int>(prime_components.size());

    if (anchor_triples.empty()) return report;
    report.product_checked = true;

    const auto fail = [&](std::string msg) {
        report.product_pass = false;
        report.product_details.push_back(std::move(msg));
    };

    const int k = static_cast<int>(anchor_triples.size());
    if (report.omega_components != 1)
        fail("Omega_d is not connected");
    if (report.omega_prime_components != (1 << k))
        fail("Omega'_d has " + std::to_string(report.omega_prime_components) +
             " components, expected 2^" + std::to_string(k));

    // Orientation vector per realization: bit per anchored triple. Every
    // anchored triple must induce a C3 in every realization.
    std::vector<std::uint64_t> orientation(r, 0);
    for (int i = 0; i < r; ++i)
        for (int t = 0; t < k; ++t) {
            const auto o = is_induced_c3(m.realizations[i], anchor_triples[t]);
            if (!o) {
                fail("anchored triple not induced in realization " + std::to_string(i));
                return report;
            }
            // bit: does the arc (min -> mid) of the sorted triple exist?
            if (o->cycle[1] == std::min({o->cycle[0], o->cycle[1], o->cycle[2]}) ||
                m.realizations[i].has_arc(anchor_triples[t][0], anchor_triples[t][1]))
                orientation[i] |= (std::uint64_t{1} << t);
        }

    std::vector<int> e2_degree(r, 0);
    for (const auto& [i, j] : m.e2_edges) {
        ++e2_degree[i];
        ++e2_degree[j];
    }

    struct ComponentProfile {
        int order = 0;
        int size = 0;
        std::vector<int> degrees;
    };
    std::map<int, ComponentProfile> profiles;
    std::map<int, std::uint64_t> component_orientation;
    std::set<std::uint64_t> seen_orientations;

    for (const auto& [root, members] : prime_components) {
        ComponentProfile profile;
        profile.order = static_cast<int>(members.size());
        for (int i : members) profile.degrees.push_back(e2_degree[i]);
        std::sort(profile.degrees.begin(), profile.degrees.end());
        profile.size = std::accumulate(profile.degrees.begin(), profile.degrees.end(), 0) / 2;
        profiles.emplace(root, std::move(profile));

        component_orientation[root] = orientation[members.front()];
        for (int i : members)
            if (orientation[i] != component_orientation[root]) {
                fail("orientation vector not constant within a component");
                break;
            }
        if (!seen_orientations.insert(component_orientation[root]).second)
            fail("two components share the same orientation vector");
    }

    const ComponentProfile& first = profiles.begin()->second;
    for (const auto& [root, profile] : profiles)
        if (profile.order != first.order || profile.size != first.size ||
            profile.degrees != first.degrees) {
            fail("components differ in order, size or degree profile");
            break;
        }

    return report;
}

} // namespace dgs
