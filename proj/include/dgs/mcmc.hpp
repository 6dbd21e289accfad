#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "dgs/degree_sequence.hpp"
#include "dgs/digraph.hpp"
#include "dgs/errors.hpp"
#include "dgs/realize.hpp"
#include "dgs/rng.hpp"

namespace dgs {

/// Chain parameters. p is the per-step probability of attempting a 2-switch
/// (full chain only; the reduced chain is all 2-switches).
struct SamplerConfig {
    double p = 1.0;
    std::uint64_t steps = 1;
    std::uint64_t seed = 0;
    std::uint64_t thin = 1;
    std::uint64_t burn_in = 0;

    void validate() const {
        if (p < 0.0 || p > 1.0) throw std::invalid_argument("sampler: p must be in [0, 1]");
        if (steps < 1) throw std::invalid_argument("sampler: steps must be >= 1");
        if (thin < 1) throw std::invalid_argument("sampler: thin must be >= 1");
    }

    /// Conventional swap-chain defaults: burn-in 10*N^2 attempted steps,
    /// thinning stride N^2.
    static std::uint64_t default_burn_in(int n) {
        return 10ULL * static_cast<std::uint64_t>(n) * n;
    }
    static std::uint64_t default_thin(int n) {
        return static_cast<std::uint64_t>(n) * n;
    }
};

enum class MoveKind { TwoSwitchApplied, C3Applied, NoOp };

/// Result of one attempted move. A NoOp leaves the graph bit-identical;
/// failed attempts are the chain's self-loop probability mass.
struct MoveOutcome {
    MoveKind kind = MoveKind::NoOp;
    std::array<int, 4> vertices{}; // switch tuple (a,b,c,d) or triple (first 3)
};

/// Attempts the canonical 2-switch on the ordered tuple (a,b,c,d):
/// arcs (a,b),(c,d) are replaced by (a,d),(c,b) when the former exist and
/// the latter do not. Degrees are untouched either way. The reverse tuple
/// (a,d,c,b) applied to the result undoes the move.
inline MoveOutcome try_two_switch(Digraph& g, int a, int b, int c, int d) {
    const std::array<int, 4> vs = {a, b, c, d};
    for (int i = 0; i < 4; ++i) {
        if (vs[i] < 1 || vs[i] > g.n())
            throw std::invalid_argument("try_two_switch: vertex out of range");
        for (int j = i + 1; j < 4; ++j)
            if (vs[i] == vs[j])
                throw std::invalid_argument("try_two_switch: vertices must be distinct");
    }
    if (g.has_arc(a, b) && g.has_arc(c, d) && !g.has_arc(a, d) && !g.has_arc(c, b)) {
        g.remove_arc(a, b);
        g.remove_arc(c, d);
        g.add_arc(a, d);
        g.add_arc(c, b);
        return {MoveKind::TwoSwitchApplied, vs};
    }
    return {MoveKind::NoOp, vs};
}

/// Reverses all three arcs of the induced directed 3-cycle on the triple,
/// if there is one. Self-inverse.
inline MoveOutcome try_c3_reorient(Digraph& g, std::array<int, 3> triple) {
    const auto orientation = is_induced_c3(g, triple);
    MoveOutcome outcome{MoveKind::NoOp, {triple[0], triple[1], triple[2], 0}};
    if (!orientation) return outcome;
    const auto& [x, y, z] = orientation->cycle;
    g.remove_arc(x, y);
    g.remove_arc(y, z);
    g.remove_arc(z, x);
    g.add_arc(y, x);
    g.add_arc(z, y);
    g.add_arc(x, z);
    outcome.kind = MoveKind::C3Applied;
    return outcome;
}

namespace detail {

template <int K>
inline std::array<int, K> draw_distinct(SplitMix64& rng, int n) {
    std::array<int, K> vs;
    for (;;) {
        bool ok = true;
        for (int i = 0; i < K && ok; ++i) {
            vs[i] = static_cast<int>(rng.uniform_below(n)) + 1;
            for (int j = 0; j < i; ++j)
                if (vs[j] == vs[i]) ok = false;
        }
        if (ok) return vs;
    }
}

} // namespace detail

/// One step of the full chain: with probability p draw an ordered 4-tuple of
/// distinct vertices uniformly and attempt the canonical 2-switch, otherwise
/// draw an unordered triple uniformly and attempt a C3 reorientation. Failed
/// attempts (and a 2-switch branch drawn with N < 4, or a C3 branch with
/// N < 3) are NoOps, leaving self-loop mass at the current state. The kernel
/// is symmetric: every applied move is selected in reverse with the same
/// probability.
inline MoveOutcome step_full(Digraph& g, double p, SplitMix64& rng) {
    const int n = g.n();
    if (rng.bernoulli(p)) {
        if (n < 4) return {MoveKind::NoOp, {}};
        const auto vs = detail::draw_distinct<4>(rng, n);
        return try_two_switch(g, vs[0], vs[1], vs[2], vs[3]);
    }
    if (n < 3) return {MoveKind::NoOp, {}};
    const auto vs = detail::draw_distinct<3>(rng, n);
    return try_c3_reorient(g, {vs[0], vs[1], vs[2]});
}

enum class ChainMode { full, reduced };

/// A single Markov chain: exclusively owned graph plus exclusively owned RNG
/// state. Emits every `thin`-th state after `burn_in` attempted steps.
///
/// Full mode is the two-move chain (2-switches with probability p, C3
/// reorientations otherwise). Reduced mode detects the anchored 3-cycles
/// from the degree sequence, flips an independent fair coin for the
/// orientation of each, and then walks with 2-switches only.
class Sampler {
public:
    Sampler(const DegreeSequence& d, const SamplerConfig& config, ChainMode mode)
        : config_(config), mode_(mode), rng_(config.seed), state_(realize(d)) {
        config_.validate();
        if (mode_ == ChainMode::reduced) {
            anchors_ = detect_anchors(d);
            for (const AnchorTriple& t : anchors_) {
                if (rng_.bernoulli(0.5)) {
                    const MoveOutcome outcome = try_c3_reorient(state_, t.coordinates);
                    if (outcome.kind != MoveKind::C3Applied)
                        throw anchor_assertion_error(
                            "reduced sampler: detected anchor triple is not an induced 3-cycle "
                            "in the initial realization");
                }
            }
        }
    }

    const Digraph& state() const { return state_; }
    const std::vector<AnchorTriple>& anchors() const { return anchors_; }
    double effective_p() const { return mode_ == ChainMode::reduced ? 1.0 : config_.p; }
    ChainMode mode() const { return mode_; }
    const SamplerConfig& config() const { return config_; }
    static const char* rng_algorithm() { return SplitMix64::algorithm_id; }

    MoveOutcome step() { return step_full(state_, effective_p(), rng_); }

    /// Advances to the next emission (burn-in first, then `thin` attempted
    /// steps per emission) and returns the state.
    const Digraph& next() {
        if (!burned_in_) {
            for (std::uint64_t i = 0; i < config_.burn_in; ++i) step();
            burned_in_ = true;
        }
        for (std::uint64_t i = 0; i < config_.thin; ++i) step();
        return state_;
    }

private:
    SamplerConfig config_;
    ChainMode mode_;
    SplitMix64 rng_;
    Digraph state_;
    std::vector<AnchorTriple> anchors_;
    bool burned_in_ = false;
};

/// Runs a chain for config.steps attempted post-burn-in steps, invoking
/// `emit` with every thin-th state. Deterministic given config.seed.
template <typename Emit>
void sample_chain(const DegreeSequence& d, const SamplerConfig& config, ChainMode mode,
                  Emit&& emit) {
    Sampler sampler(d, config, mode);
    const std::uint64_t emissions = config.steps / config.thin;
    for (std::uint64_t i = 0; i < emissions; ++i) emit(sampler.next());
}

template <typename Emit>
void sample_full(const DegreeSequence& d, const SamplerConfig& config, Emit&& emit) {
    sample_chain(d, config, ChainMode::full, std::forward<Emit>(emit));
}

template <typename Emit>
void sample_reduced(const DegreeSequence& d, const SamplerConfig& config, Emit&& emit) {
    sample_chain(d, config, ChainMode::reduced, std::forward<Emit>(emit));
}

} // namespace dgs
