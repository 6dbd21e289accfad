#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "dgs/degree_sequence.hpp"
#include "dgs/errors.hpp"

namespace dgs {

/// Simple directed graph on vertices 1..N. No self-loops, no multi-arcs;
/// opposite arcs (2-cycles) are legal. Arc membership is O(1): a dense bit
/// matrix up to `dense_threshold` vertices, a hash set of packed pairs above.
class Digraph {
public:
    static constexpr int default_dense_threshold = 4096;

    explicit Digraph(int n, int dense_threshold = default_dense_threshold)
        : n_(n), dense_(n <= dense_threshold) {
        if (n < 1) throw std::invalid_argument("digraph: N must be >= 1");
        if (dense_)
            bits_.assign((static_cast<std::size_t>(n) * n + 63) / 64, 0);
        out_deg_.assign(n, 0);
        in_deg_.assign(n, 0);
    }

    int n() const { return n_; }
    std::size_t arc_count() const { return arc_count_; }

    bool has_arc(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        if (u == v) return false;
        const std::uint64_t key = pack(u, v);
        if (dense_) return (bits_[key >> 6] >> (key & 63)) & 1;
        return arc_set_.contains(key);
    }

    /// Inserts arc (u, v); returns false if already present. Throws on self-loops.
    bool add_arc(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("digraph: self-loop rejected");
        const std::uint64_t key = pack(u, v);
        if (dense_) {
            std::uint64_t& word = bits_[key >> 6];
            const std::uint64_t mask = std::uint64_t{1} << (key & 63);
            if (word & mask) return false;
            word |= mask;
        } else {
            if (!arc_set_.insert(key).second) return false;
        }
        ++out_deg_[u - 1];
        ++in_deg_[v - 1];
        ++arc_count_;
        return true;
    }

    /// Removes arc (u, v); returns false if absent.
    bool remove_arc(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) return false;
        const std::uint64_t key = pack(u, v);
        if (dense_) {
            std::uint64_t& word = bits_[key >> 6];
            const std::uint64_t mask = std::uint64_t{1} << (key & 63);
            if (!(word & mask)) return false;
            word &= ~mask;
        } else {
            if (arc_set_.erase(key) == 0) return false;
        }
        --out_deg_[u - 1];
        --in_deg_[v - 1];
        --arc_count_;
        return true;
    }

    int out_degree(int v) const {
        check_vertex(v);
        return out_deg_[v - 1];
    }
    int in_degree(int v) const {
        check_vertex(v);
        return in_deg_[v - 1];
    }

    /// Arcs in lexicographically sorted order (the canonical form).
    std::vector<std::pair<int, int>> arcs() const {
        std::vector<std::pair<int, int>> result;
        result.reserve(arc_count_);
        if (dense_) {
            for (int u = 1; u <= n_; ++u)
                for (int v = 1; v <= n_; ++v) {
                    const std::uint64_t key = pack(u, v);
                    if ((bits_[key >> 6] >> (key & 63)) & 1) result.emplace_back(u, v);
                }
        } else {
            for (std::uint64_t key : arc_set_)
                result.emplace_back(static_cast<int>(key / n_) + 1,
                                    static_cast<int>(key % n_) + 1);
            std::sort(result.begin(), result.end());
        }
        return result;
    }

    /// Canonical identity: sorted arc list rendered as a byte string.
    std::string canonical_key() const {
        std::string key;
        key.reserve(arc_count_ * 2 * sizeof(int));
        for (const auto& [u, v] : arcs()) {
            key.append(reinterpret_cast<const char*>(&u), sizeof(int));
            key.append(reinterpret_cast<const char*>(&v), sizeof(int));
        }
        return key;
    }

    friend bool operator==(const Digraph& a, const Digraph& b) {
        return a.n_ == b.n_ && a.arc_count_ == b.arc_count_ && a.arcs() == b.arcs();
    }

private:
    void check_vertex(int v) const {
        if (v < 1 || v > n_) throw std::invalid_argument("digraph: vertex out of range");
    }
    std::uint64_t pack(int u, int v) const {
        return static_cast<std::uint64_t>(u - 1) * n_ + (v - 1);
    }

    int n_;
    bool dense_;
    std::size_t arc_count_ = 0;
    std::vector<std::uint64_t> bits_;
    std::unordered_set<std::uint64_t> arc_set_;
    std::vector<int> out_deg_, in_deg_;
};

inline DegreeSequence degree_sequence_of(const Digraph& g) {
    std::vector<DegreePair> pairs;
    pairs.reserve(g.n());
    for (int v = 1; v <= g.n(); ++v) pairs.push_back({g.out_degree(v), g.in_degree(v)});
    return DegreeSequence(std::move(pairs));
}

/// Cyclic orientation of a directed 3-cycle, stored with the smallest vertex
/// first: arcs are v[0]->v[1]->v[2]->v[0].
struct C3Orientation {
    std::array<int, 3> cycle{};

    friend bool operator==(const C3Orientation&, const C3Orientation&) = default;
};

/// Tests whether the induced subgraph on a 3-vertex set is EXACTLY one
/// directed 3-cycle (no extra reverse arcs). Returns the orientation, or
/// nullopt when the triple is not an induced C3.
inline std::optional<C3Orientation> is_induced_c3(const Digraph& g, std::array<int, 3> triple) {
    std::sort(triple.begin(), triple.end());
    if (triple[0] == triple[1] || triple[1] == triple[2])
        throw std::invalid_argument("is_induced_c3: vertices must be distinct");
    const int a = triple[0], b = triple[1], c = triple[2];

    // Inducedness: the subgraph on the triple must have EXACTLY the three
    // arcs of one cyclic orientation, nothing else.
    int arcs = 0;
    for (int u : triple)
        for (int v : triple)
            if (u != v && g.has_arc(u, v)) ++arcs;
    if (arcs != 3) return std::nullopt;
    if (g.has_arc(a, b) && g.has_arc(b, c) && g.has_arc(c, a)) return C3Orientation{{a, b, c}};
    if (g.has_arc(a, c) && g.has_arc(c, b) && g.has_arc(b, a)) return C3Orientation{{a, c, b}};
    return std::nullopt;
}

enum class VertexClass { C0, Cminus, Cplus, Cpm };

inline const char* to_string(VertexClass c) {
    switch (c) {
    case VertexClass::C0: return "C0";
    case VertexClass::Cminus: return "C-";
    case VertexClass::Cplus: return "C+";
    case VertexClass::Cpm: return "C+-";
    }
    return "?";
}

struct VertexClassification {
    std::array<int, 3> cycle{};           // the anchored 3-cycle C, ascending
    std::map<int, VertexClass> classes;   // every vertex outside C
};

/// Assigns each vertex outside the induced 3-cycle C to one of the four
/// attachment classes: C0 (no arcs either way), C- (all three arcs into C),
/// C+ (all three arcs out of C), C+- (all six arcs). Any other attachment
/// pattern throws mixed_attachment_error.
inline VertexClassification classify_against_cycle(const Digraph& g, std::array<int, 3> cycle) {
    if (!is_induced_c3(g, cycle))
        throw std::invalid_argument("classify_against_cycle: triple is not an induced C3");
    std::sort(cycle.begin(), cycle.end());

    VertexClassification result;
    result.cycle = cycle;
    for (int x = 1; x <= g.n(); ++x) {
        if (x == cycle[0] || x == cycle[1] || x == cycle[2]) continue;
        int to_c = 0, from_c = 0;
        for (int c : cycle) {
            to_c += g.has_arc(x, c) ? 1 : 0;
            from_c += g.has_arc(c, x) ? 1 : 0;
        }
        VertexClass cls;
        if (to_c == 0 && from_c == 0)
            cls = VertexClass::C0;
        else if (to_c == 3 && from_c == 0)
            cls = VertexClass::Cminus;
        else if (to_c == 0 && from_c == 3)
            cls = VertexClass::Cplus;
        else if (to_c == 3 && from_c == 3)
            cls = VertexClass::Cpm;
        else
            throw mixed_attachment_error(
                x, "vertex " + std::to_string(x) + " attaches to the cycle with " +
                       std::to_string(to_c) + " outgoing and " + std::to_string(from_c) +
                       " incoming arcs");
        result.classes.emplace(x, cls);
    }
    return result;
}

struct MPartitionViolation {
    int from = 0;
    int to = 0;
    VertexClass from_class{};
    VertexClass to_class{};
    bool arc_expected = false; // true: forced arc missing; false: forbidden arc present

    friend bool operator==(const MPartitionViolation&, const MPartitionViolation&) = default;
};

/// Checks the M-partition constraints between the four attachment classes.
/// Rows/columns ordered (C+-, C-, C+, C0):
///     C+-  C-  C+  C0
/// C+-  1   *   1   *
/// C-   1   *   1   *
/// C+   *   0   *   0
/// C0   *   0   *   0
/// Diagonal: C+- is a clique, C0 an independent set, C- and C+ arbitrary.
/// Violations are returned as data, never thrown.
inline std::vector<MPartitionViolation> verify_m_partition(const Digraph& g,
                                                           const VertexClassification& cl) {
    const auto index = [](VertexClass c) {
        switch (c) {
        case VertexClass::Cpm: return 0;
        case VertexClass::Cminus: return 1;
        case VertexClass::Cplus: return 2;
        case VertexClass::C0: return 3;
        }
        return -1;
    };
    // 1 = forced, 0 = forbidden, -1 = unconstrained
    static constexpr int m[4][4] = {
        {1, -1, 1, -1},
        {1, -1, 1, -1},
        {-1, 0, -1, 0},
        {-1, 0, -1, 0},
    };

    std::vector<MPartitionViolation> violations;
    for (const auto& [x, cx] : cl.classes) {
        for (const auto& [y, cy] : cl.classes) {
            if (x == y) continue;
            const int constraint = m[index(cx)][index(cy)];
            if (constraint == -1) continue;
            const bool present = g.has_arc(x, y);
            if (present != (constraint == 1))
                violations.push_back({x, y, cx, cy, constraint == 1});
        }
    }
    return violations;
}

} // namespace dgs
