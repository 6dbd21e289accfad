#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <mutex>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "dgs/degree_sequence.hpp"
#include "dgs/digraph.hpp"
#include "dgs/errors.hpp"
#include "dgs/metagraph.hpp"
#include "dgs/realize.hpp"
#include "dgs/rng.hpp"

namespace dgs {

/// Options for the exhaustive small-instance sweep.
///
/// N <= max_n is covered exhaustively over all pair sequences with entries
/// in [0, N-1]^2. The optional N = 5 extension covers every degree-class
/// (multiset of pairs — the checked properties are invariant under
/// coordinate relabeling) with sum(d+) <= n5_sum_cap and balanced sums,
/// plus seeded random labeled sequences.
struct SweepOptions {
    int max_n = 4;
    bool n5_subset = false;
    int n5_sum_cap = 10;
    int n5_random_count = 10000;
    std::uint64_t n5_random_seed = 20240901;
    int jobs = 1;
    EnumLimits limits{};
    /// Detector under test; replaceable for fault-injection testing.
    std::function<std::vector<AnchorTriple>(const DegreeSequence&)> detector = [](const auto& d) {
        return detect_anchors(d);
    };
};

struct SweepResult {
    std::uint64_t sequences_checked = 0;
    std::uint64_t digraphic_count = 0;
    std::uint64_t anchored_count = 0;

    std::uint64_t digraphic_mismatches = 0; // is_digraphic vs enumeration
    std::uint64_t detector_mismatches = 0;  // detect_anchors vs oracle
    std::uint64_t diagnostic_errors = 0;    // anchor_diagnostic_error raised
    std::uint64_t connectivity_failures = 0;    // Omega_d disconnected
    std::uint64_t disconnection_failures = 0;    // disconnection <-> anchors mismatch
    std::uint64_t product_failures = 0;   // product structure violated
    std::uint64_t realize_failures = 0;     // realize failed or wrong degrees

    std::vector<std::string> failure_samples; // capped

    bool detector_ok() const { return detector_mismatches == 0 && diagnostic_errors == 0; }
    bool all_pass() const {
        return digraphic_mismatches == 0 && detector_ok() && connectivity_failures == 0 &&
               disconnection_failures == 0 && product_failures == 0 && realize_failures == 0;
    }

    void merge(const SweepResult& other) {
        sequences_checked += other.sequences_checked;
        digraphic_count += other.digraphic_count;
        anchored_count += other.anchored_count;
        digraphic_mismatches += other.digraphic_mismatches;
        detector_mismatches += other.detector_mismatches;
        diagnostic_errors += other.diagnostic_errors;
        connectivity_failures += other.connectivity_failures;
        disconnection_failures += other.disconnection_failures;
        product_failures += other.product_failures;
        realize_failures += other.realize_failures;
        for (const std::string& s : other.failure_samples)
            if (failure_samples.size() < 20) failure_samples.push_back(s);
    }
};

namespace detail {

inline std::string describe(const DegreeSequence& d) {
    std::ostringstream out;
    out << "{";
    for (int i = 0; i < d.size(); ++i) {
        if (i) out << ",";
        out << "(" << d.pairs()[i].out << "," << d.pairs()[i].in << ")";
    }
    out << "}";
    return out.str();
}

inline void check_one(const DegreeSequence& d, const SweepOptions& options, SweepResult& result) {
    ++result.sequences_checked;
    const auto note = [&](const std::string& what) {
        if (result.failure_samples.size() < 20)
            result.failure_samples.push_back(what + " at d = " + describe(d));
    };

    if (d.sum_out() != d.sum_in()) {
        if (is_digraphic(d)) {
            ++result.digraphic_mismatches;
            note("is_digraphic true despite arc-count mismatch");
        }
        return;
    }

    const std::vector<Digraph> realizations = enumerate_realizations(d, options.limits);
    if (is_digraphic(d) != !realizations.empty()) {
        ++result.digraphic_mismatches;
        note("is_digraphic disagrees with enumeration");
    }
    if (realizations.empty()) return;
    ++result.digraphic_count;

    try {
        const Digraph g = realize(d);
        if (!(degree_sequence_of(g) == d)) {
            ++result.realize_failures;
            note("realize produced wrong degree sequence");
        }
    } catch (const std::exception& e) {
        ++result.realize_failures;
        note(std::string("realize failed: ") + e.what());
    }

    std::vector<AnchorTriple> detected;
    try {
        detected = options.detector(d);
    } catch (const anchor_diagnostic_error& e) {
        ++result.diagnostic_errors;
        note(std::string("detector diagnostic: ") + e.what());
        return;
    }

    const BruteForceAnchors oracle = brute_force_anchors(d, options.limits);
    std::set<std::array<int, 3>> detected_set, oracle_set;
    for (const AnchorTriple& t : detected) detected_set.insert(t.coordinates);
    for (const auto& t : oracle.triples) oracle_set.insert(t);
    if (detected_set != oracle_set) {
        ++result.detector_mismatches;
        note("detect_anchors != brute_force_anchors");
    }
    if (!oracle_set.empty()) ++result.anchored_count;

    const MetaGraph m = build_metagraph(d, options.limits);
    std::vector<std::array<int, 3>> anchor_coords(oracle.triples);
    const ComponentReport report = component_structure(m, anchor_coords);

    if (report.omega_components != 1) {
        ++result.connectivity_failures;
        note("Omega_d disconnected");
    }
    if ((report.omega_prime_components > 1) != !detected_set.empty()) {
        ++result.disconnection_failures;
        note("Omega'_d disconnection does not match detector");
    }
    if (report.product_checked && !report.product_pass) {
        ++result.product_failures;
        note("2^k product structure violated: " +
             (report.product_details.empty() ? std::string("?")
                                               : report.product_details.front()));
    }
}

/// All labeled pair sequences of length n with entries in [0, n-1]^2.
inline void enumerate_labeled(int n, std::vector<DegreeSequence>& out) {
    const int codes = n * n;
    std::vector<int> code(n, 0);
    for (;;) {
        std::vector<DegreePair> pairs(n);
        for (int i = 0; i < n; ++i) pairs[i] = {code[i] / n, code[i] % n};
        out.emplace_back(std::move(pairs));
        int pos = n - 1;
        while (pos >= 0 && code[pos] == codes - 1) code[pos--] = 0;
        if (pos < 0) break;
        ++code[pos];
    }
}

/// All degree classes (non-decreasing code sequences) of length 5 with
/// entries in [0, 4]^2, sum(d+) <= sum_cap and balanced sums.
inline void enumerate_n5_classes(int sum_cap, std::vector<DegreeSequence>& out) {
    constexpr int n = 5;
    constexpr int codes = n * n;
    std::vector<int> code(n, 0);
    const auto emit = [&]() {
        int sum_out = 0, sum_in = 0;
        std::vector<DegreePair> pairs(n);
        for (int i = 0; i < n; ++i) {
            pairs[i] = {code[i] / n, code[i] % n};
            sum_out += pairs[i].out;
            sum_in += pairs[i].in;
        }
        if (sum_out <= sum_cap && sum_out == sum_in) out.emplace_back(std::move(pairs));
    };
    const auto rec = [&](auto&& self, int pos, int lo) -> void {
        if (pos == n) {
            emit();
            return;
        }
        for (int c = lo; c < codes; ++c) {
            code[pos] = c;
            self(self, pos + 1, c);
        }
    };
    rec(rec, 0, 0);
}

inline void random_n5_sequences(int count, std::uint64_t seed, std::vector<DegreeSequence>& out) {
    constexpr int n = 5;
    SplitMix64 rng(seed);
    for (int s = 0; s < count; ++s) {
        for (;;) {
            std::vector<DegreePair> pairs(n);
            int sum_out = 0, sum_in = 0;
            for (int i = 0; i < n; ++i) {
                pairs[i] = {static_cast<int>(rng.uniform_below(n)),
                            static_cast<int>(rng.uniform_below(n))};
                sum_out += pairs[i].out;
                sum_in += pairs[i].in;
            }
            if (sum_out != sum_in) continue;
            out.emplace_back(std::move(pairs));
            break;
        }
    }
}

} // namespace detail

/// Runs the structural sweep: digraphic test vs enumeration, realize,
/// detector vs oracle, meta-graph connectivity, E2-only
/// disconnection iff anchored, and the 2^k product structure.
/// Work may be partitioned across threads; the merged result is
/// deterministic regardless of schedule.
inline SweepResult run_sweep(const SweepOptions& options) {
    std::vector<DegreeSequence> work;
    for (int n = 1; n <= options.max_n; ++n) detail::enumerate_labeled(n, work);
    if (options.n5_subset) {
        detail::enumerate_n5_classes(options.n5_sum_cap, work);
        detail::random_n5_sequences(options.n5_random_count, options.n5_random_seed, work);
    }

    const int jobs = std::max(1, options.jobs);
    if (jobs == 1) {
        SweepResult result;
        for (const DegreeSequence& d : work) detail::check_one(d, options, result);
        return result;
    }

    std::vector<SweepResult> partial(jobs);
    std::vector<std::thread> threads;
    threads.reserve(jobs);
    for (int t = 0; t < jobs; ++t) {
        threads.emplace_back([&, t]() {
            for (std::size_t i = t; i < work.size(); i += jobs)
                detail::check_one(work[i], options, partial[t]);
        });
    }
    for (std::thread& th : threads) th.join();
    SweepResult result;
    for (const SweepResult& p : partial) result.merge(p);
    return result;
}

} // namespace dgs
