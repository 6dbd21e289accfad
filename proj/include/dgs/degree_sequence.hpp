#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "dgs/errors.hpp"

namespace dgs {

struct DegreePair {
    int out = 0;
    int in = 0;

    friend bool operator==(const DegreePair&, const DegreePair&) = default;
};

/// Integer-pair degree sequence, coordinate i (1-based) belonging to vertex v_i.
/// Construction enforces simple-digraph feasibility bounds: every degree
/// must lie in [0, N-1].
class DegreeSequence {
public:
    explicit DegreeSequence(std::vector<DegreePair> pairs) : pairs_(std::move(pairs)) {
        if (pairs_.empty()) throw std::invalid_argument("degree sequence: N must be >= 1");
        const int n = static_cast<int>(pairs_.size());
        for (const DegreePair& p : pairs_) {
            if (p.out < 0 || p.in < 0)
                throw std::invalid_argument("degree sequence: negative degree");
            if (p.out > n - 1 || p.in > n - 1)
                throw std::invalid_argument("degree sequence: degree exceeds N-1");
        }
    }

    int size() const { return static_cast<int>(pairs_.size()); }
    const DegreePair& pair(int coordinate) const { return pairs_[coordinate - 1]; }
    const std::vector<DegreePair>& pairs() const { return pairs_; }

    long long sum_out() const {
        return std::accumulate(pairs_.begin(), pairs_.end(), 0LL,
                               [](long long s, const DegreePair& p) { return s + p.out; });
    }
    long long sum_in() const {
        return std::accumulate(pairs_.begin(), pairs_.end(), 0LL,
                               [](long long s, const DegreePair& p) { return s + p.in; });
    }

    friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;

private:
    std::vector<DegreePair> pairs_;
};

enum class OrderDirection { positive, negative };

/// A sorted view of a degree sequence together with the permutation that
/// produced it. `permutation[p]` is the original 1-based coordinate sitting
/// at sorted position p+1; `position_of[c-1]` is the 1-based sorted position
/// of original coordinate c.
struct OrderedView {
    OrderDirection direction = OrderDirection::positive;
    std::vector<DegreePair> sorted_pairs;
    std::vector<int> permutation;
    std::vector<int> position_of;
};

namespace detail {

// Stable two-pass counting sort on bounded keys, descending. Keys are in
// [0, N-1] by the DegreeSequence invariant, so ordering is O(N). Returns
// the 0-based original indices in sorted order.
inline std::vector<int> sorted_order(const DegreeSequence& d, OrderDirection dir) {
    const int n = d.size();
    const auto primary = [&](const DegreePair& p) {
        return dir == OrderDirection::positive ? p.out : p.in;
    };
    const auto secondary = [&](const DegreePair& p) {
        return dir == OrderDirection::positive ? p.in : p.out;
    };

    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;

    std::vector<int> start(n);
    std::vector<int> out(n);
    const auto counting_pass = [&](auto key) {
        std::fill(start.begin(), start.end(), 0);
        for (int i : idx) ++start[key(d.pairs()[i])];
        // descending: larger keys first
        int acc = 0;
        for (int k = n - 1; k >= 0; --k) {
            const int c = start[k];
            start[k] = acc;
            acc += c;
        }
        for (int i : idx) out[start[key(d.pairs()[i])]++] = i;
        idx.swap(out);
    };

    counting_pass(secondary);
    counting_pass(primary);
    return idx;
}

inline OrderedView ordered_view(const DegreeSequence& d, OrderDirection dir) {
    const int n = d.size();
    const std::vector<int> idx = sorted_order(d, dir);

    OrderedView view;
    view.direction = dir;
    view.sorted_pairs.reserve(n);
    view.permutation.reserve(n);
    view.position_of.assign(n, 0);
    for (int p = 0; p < n; ++p) {
        view.sorted_pairs.push_back(d.pairs()[idx[p]]);
        view.permutation.push_back(idx[p] + 1);
        view.position_of[idx[p]] = p + 1;
    }
    return view;
}

} // namespace detail

inline OrderedView order_positive(const DegreeSequence& d) {
    return detail::ordered_view(d, OrderDirection::positive);
}

inline OrderedView order_negative(const DegreeSequence& d) {
    return detail::ordered_view(d, OrderDirection::negative);
}

/// Corrected conjugate a'' of an integer list:
///   a''_k = |{i < k : a_i >= k-1}| + |{i > k : a_i >= k}|,  k = 1..N.
/// Each i contributes to a contiguous range of k on either side, so the
/// whole transform is two difference-array sweeps, O(N).
inline std::vector<int> corrected_conjugate(std::span<const int> a) {
    const int n = static_cast<int>(a.size());
    std::vector<int> diff(n + 2, 0);
    for (int i = 1; i <= n; ++i) {
        const int ai = a[i - 1];
        // i < k and a_i >= k-1  <=>  k in [i+1, a_i+1]
        int lo = i + 1;
        int hi = std::min(n, ai + 1);
        if (lo <= hi) {
            ++diff[lo];
            --diff[hi + 1];
        }
        // i > k and a_i >= k  <=>  k in [1, min(i-1, a_i)]
        hi = std::min(i - 1, ai);
        if (hi >= 1) {
            ++diff[1];
            --diff[hi + 1];
        }
    }
    std::vector<int> result(n);
    int acc = 0;
    for (int k = 1; k <= n; ++k) {
        acc += diff[k];
        result[k - 1] = acc;
    }
    return result;
}

/// Slack sequences, indexed 0..N with entry 0 pinned to 0.
/// s_bar pairs the corrected conjugate of the IN-degrees of the positive
/// ordering against OUT-degree partial sums; s_ubar is the mirror image.
struct SlackSequences {
    std::vector<long long> s_bar;
    std::vector<long long> s_ubar;
};

namespace detail {

// Slack over a sorted index order, without materializing a sorted copy of
// the sequence. The conjugate prefix and the slack recurrence are fused
// into one sweep over the difference array, keeping the working set small.
inline std::vector<long long> slack_over(const DegreeSequence& d, const std::vector<int>& order,
                                         OrderDirection dir) {
    const int n = static_cast<int>(order.size());
    std::vector<int> diff(n + 2, 0);
    for (int i = 1; i <= n; ++i) {
        const DegreePair& p = d.pairs()[order[i - 1]];
        const int ai = dir == OrderDirection::positive ? p.in : p.out;
        int lo = i + 1;
        int hi = std::min(n, ai + 1);
        if (lo <= hi) {
            ++diff[lo];
            --diff[hi + 1];
        }
        hi = std::min(i - 1, ai);
        if (hi >= 1) {
            ++diff[1];
            --diff[hi + 1];
        }
    }
    std::vector<long long> slack(n + 1, 0);
    int conj = 0;
    for (int i = 1; i <= n; ++i) {
        conj += diff[i];
        const DegreePair& p = d.pairs()[order[i - 1]];
        const int direct = dir == OrderDirection::positive ? p.out : p.in;
        slack[i] = slack[i - 1] + conj - direct;
    }
    return slack;
}

inline std::vector<long long> slack_from_view(const OrderedView& view) {
    const int n = static_cast<int>(view.sorted_pairs.size());
    std::vector<int> conj_input(n), direct(n);
    for (int i = 0; i < n; ++i) {
        if (view.direction == OrderDirection::positive) {
            conj_input[i] = view.sorted_pairs[i].in;
            direct[i] = view.sorted_pairs[i].out;
        } else {
            conj_input[i] = view.sorted_pairs[i].out;
            direct[i] = view.sorted_pairs[i].in;
        }
    }
    const std::vector<int> conj = corrected_conjugate(conj_input);
    std::vector<long long> slack(n + 1, 0);
    for (int i = 1; i <= n; ++i)
        slack[i] = slack[i - 1] + conj[i - 1] - direct[i - 1];
    return slack;
}

} // namespace detail

inline SlackSequences slack_sequences(const DegreeSequence& d) {
    return SlackSequences{
        detail::slack_over(d, detail::sorted_order(d, OrderDirection::positive),
                           OrderDirection::positive),
        detail::slack_over(d, detail::sorted_order(d, OrderDirection::negative),
                           OrderDirection::negative)};
}

/// Fulkerson-style feasibility: arc counts balance and every positive-ordering
/// slack is nonnegative. Agrees with exhaustive enumeration on small instances.
inline bool is_digraphic(const DegreeSequence& d) {
    if (d.sum_out() != d.sum_in()) return false;
    const std::vector<long long> s_bar = detail::slack_over(
        d, detail::sorted_order(d, OrderDirection::positive), OrderDirection::positive);
    return std::all_of(s_bar.begin(), s_bar.end(), [](long long s) { return s >= 0; });
}

/// Three coordinates that induce a directed 3-cycle in every realization,
/// all sharing degree pair (k, l) >= (1, 1).
struct AnchorTriple {
    std::array<int, 3> coordinates{}; // original 1-based coordinates, ascending
    int k = 0;                        // shared out-degree
    int l = 0;                        // shared in-degree

    friend bool operator==(const AnchorTriple&, const AnchorTriple&) = default;
};

/// Degree-sequence anchored-3-cycle detector.
///
/// Scans the positively ordered sequence for the slack window
/// (s_bar[l-1..l+2]) = (0,1,1,0) at a run of three equal pairs (k, l) in
/// positions l..l+2, and confirms the mirrored condition at positions
/// k..k+2 of the negative ordering. Everything is built from counting
/// sorts and difference arrays, so the whole detection is O(N).
///
/// Precondition: d is digraphic. Returned triples are pairwise disjoint,
/// sorted by (k, l), with coordinates in the original labeling.
///
/// Throws anchor_diagnostic_error if both slack windows match but the
/// number of coordinates sharing degree (k, l) is not exactly 3, or the
/// positive and negative orderings disagree on which coordinates sit in
/// the windows. Neither is expected to be reachable for digraphic input;
/// the exhaustive small-instance sweep confirms this.
inline std::vector<AnchorTriple> detect_anchors(const DegreeSequence& d) {
    std::vector<AnchorTriple> anchors;
    const int n = d.size();
    if (n < 3) return anchors; // a 3-cycle needs 3 vertices

    const std::vector<int> pos = detail::sorted_order(d, OrderDirection::positive);
    const std::vector<int> neg = detail::sorted_order(d, OrderDirection::negative);
    const std::vector<long long> s_bar = detail::slack_over(d, pos, OrderDirection::positive);
    const std::vector<long long> s_ubar = detail::slack_over(d, neg, OrderDirection::negative);
    const auto pos_pair = [&](int p) -> const DegreePair& { return d.pairs()[pos[p]]; };
    const auto neg_pair = [&](int p) -> const DegreePair& { return d.pairs()[neg[p]]; };

    for (int l = 1; l + 2 <= n; ++l) {
        if (!(s_bar[l - 1] == 0 && s_bar[l] == 1 && s_bar[l + 1] == 1 && s_bar[l + 2] == 0))
            continue;
        const DegreePair dp = pos_pair(l - 1);
        if (dp.in != l || dp.out < 1) continue;
        if (!(pos_pair(l) == dp && pos_pair(l + 1) == dp)) continue;

        const int k = dp.out;
        if (k + 2 > n) continue;
        if (!(neg_pair(k - 1) == dp && neg_pair(k) == dp && neg_pair(k + 1) == dp)) continue;
        if (!(s_ubar[k - 1] == 0 && s_ubar[k] == 1 && s_ubar[k + 1] == 1 && s_ubar[k + 2] == 0))
            continue;

        // Equal pairs are contiguous in the positive ordering, so the run
        // around the window is the full multiplicity of (k, l).
        const bool before = l - 2 >= 1 && pos_pair(l - 2) == dp;
        const bool after = l + 3 <= n && pos_pair(l + 2) == dp;
        if (before || after) {
            std::ostringstream msg;
            msg << "anchor scan: slack windows match at (k, l) = (" << k << ", " << dp.in
                << ") but more than 3 coordinates share that degree pair";
            throw anchor_diagnostic_error(msg.str());
        }

        AnchorTriple triple;
        triple.coordinates = {pos[l - 1] + 1, pos[l] + 1, pos[l + 1] + 1};
        std::sort(triple.coordinates.begin(), triple.coordinates.end());
        triple.k = k;
        triple.l = dp.in;

        std::array<int, 3> neg_coords = {neg[k - 1] + 1, neg[k] + 1, neg[k + 1] + 1};
        std::sort(neg_coords.begin(), neg_coords.end());
        if (neg_coords != triple.coordinates) {
            std::ostringstream msg;
            msg << "anchor scan: orderings disagree on the coordinates of (k, l) = (" << k << ", "
                << dp.in << ")";
            throw anchor_diagnostic_error(msg.str());
        }

        anchors.push_back(triple);
    }

    std::sort(anchors.begin(), anchors.end(), [](const AnchorTriple& a, const AnchorTriple& b) {
        return std::pair(a.k, a.l) < std::pair(b.k, b.l);
    });
    return anchors;
}

} // namespace dgs
