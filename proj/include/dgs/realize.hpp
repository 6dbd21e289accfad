#pragma once

#include <algorithm>
#include <tuple>
#include <vector>

#include "dgs/degree_sequence.hpp"
#include "dgs/digraph.hpp"
#include "dgs/errors.hpp"

namespace dgs {

/// Builds one deterministic realization of a digraphic degree sequence,
/// greedy Kleitman-Wang style: repeatedly process the vertex with the
/// largest remaining out-degree (ties: larger remaining in-degree, then
/// lowest index) and wire its out-stubs to the distinct other vertices of
/// largest remaining in-degree (ties: larger remaining out-degree, then
/// lowest index). Residual feasibility is re-verified after each vertex;
/// a failure there is a logic error, not an input error, and the small-
/// instance sweep confirms it never fires.
inline Digraph realize(const DegreeSequence& d) {
    if (!is_digraphic(d)) throw not_digraphic_error("realize: degree sequence is not digraphic");

    const int n = d.size();
    Digraph g(n);
    std::vector<int> rout(n), rin(n);
    for (int i = 0; i < n; ++i) {
        rout[i] = d.pairs()[i].out;
        rin[i] = d.pairs()[i].in;
    }
    std::vector<bool> processed(n, false);

    for (int round = 0; round < n; ++round) {
        int u = -1;
        for (int i = 0; i < n; ++i) {
            if (processed[i]) continue;
            if (u == -1 || std::tuple(rout[i], rin[i], -i) > std::tuple(rout[u], rin[u], -u))
                u = i;
        }
        if (u == -1) break;
        processed[u] = true;

        if (rout[u] > 0) {
            std::vector<int> targets;
            for (int v = 0; v < n; ++v)
                if (v != u) targets.push_back(v);
            std::stable_sort(targets.begin(), targets.end(), [&](int a, int b) {
                return std::tuple(rin[a], rout[a], -a) > std::tuple(rin[b], rout[b], -b);
            });
            if (static_cast<int>(targets.size()) < rout[u])
                throw std::logic_error("realize: residual infeasibility after feasibility check");
            for (int s = 0; s < rout[u]; ++s) {
                const int v = targets[s];
                if (rin[v] == 0)
                    throw std::logic_error("realize: target with no remaining in-degree");
                g.add_arc(u + 1, v + 1);
                --rin[v];
            }
            rout[u] = 0;
        }

        std::vector<DegreePair> residual;
        residual.reserve(n);
        for (int i = 0; i < n; ++i) residual.push_back({rout[i], rin[i]});
        if (!is_digraphic(DegreeSequence(std::move(residual))))
            throw std::logic_error("realize: residual sequence became infeasible");
    }

    return g;
}

} // namespace dgs
