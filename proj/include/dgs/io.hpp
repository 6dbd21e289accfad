#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "dgs/degree_sequence.hpp"
#include "dgs/digraph.hpp"
#include "dgs/errors.hpp"

namespace dgs {

/// Degree-sequence text format: one "out in" line per coordinate; blank
/// lines and '#' comments ignored.
inline DegreeSequence parse_degree_sequence_text(std::istream& input) {
    std::vector<DegreePair> pairs;
    std::string line;
    int line_no = 0;
    while (std::getline(input, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream fields(line);
        long long out = 0, in = 0;
        std::string trailing;
        if (!(fields >> out >> in) || (fields >> trailing)) {
            throw parse_error("line " + std::to_string(line_no) +
                              ": expected two integers \"out in\"");
        }
        if (out < 0 || in < 0)
            throw parse_error("line " + std::to_string(line_no) + ": negative degree");
        pairs.push_back({static_cast<int>(out), static_cast<int>(in)});
    }
    if (pairs.empty()) throw parse_error("degree sequence input is empty");
    const int n = static_cast<int>(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i)
        if (pairs[i].out >= n || pairs[i].in >= n)
            throw parse_error("coordinate " + std::to_string(i + 1) + ": degree >= N");
    return DegreeSequence(std::move(pairs));
}

/// JSON alternative: array of [out, in] pairs.
inline DegreeSequence parse_degree_sequence_json(const nlohmann::json& j) {
    if (!j.is_array() || j.empty())
        throw parse_error("degree sequence JSON must be a nonempty array of [out, in] pairs");
    std::vector<DegreePair> pairs;
    const int n = static_cast<int>(j.size());
    for (const auto& entry : j) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number_integer() ||
            !entry[1].is_number_integer())
            throw parse_error("degree sequence JSON entries must be [out, in] integer pairs");
        const long long out = entry[0].get<long long>();
        const long long in = entry[1].get<long long>();
        if (out < 0 || in < 0) throw parse_error("degree sequence JSON: negative degree");
        if (out >= n || in >= n) throw parse_error("degree sequence JSON: degree >= N");
        pairs.push_back({static_cast<int>(out), static_cast<int>(in)});
    }
    return DegreeSequence(std::move(pairs));
}

inline void write_degree_sequence_text(std::ostream& out, const DegreeSequence& d) {
    for (const DegreePair& p : d.pairs()) out << p.out << ' ' << p.in << '\n';
}

/// Arc-list text format: header line "N", then one "u v" line per arc,
/// canonical (sorted) order. Round-trips on canonical form.
inline void write_digraph_text(std::ostream& out, const Digraph& g) {
    out << g.n() << '\n';
    for (const auto& [u, v] : g.arcs()) out << u << ' ' << v << '\n';
}

inline Digraph parse_digraph_text(std::istream& input) {
    std::string line;
    int line_no = 0;
    int n = -1;
    Digraph g(1);
    while (std::getline(input, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream fields(line);
        if (n < 0) {
            std::string trailing;
            if (!(fields >> n) || n < 1 || (fields >> trailing))
                throw parse_error("line " + std::to_string(line_no) + ": expected header \"N\"");
            g = Digraph(n);
            continue;
        }
        int u = 0, v = 0;
        std::string trailing;
        if (!(fields >> u >> v) || (fields >> trailing))
            throw parse_error("line " + std::to_string(line_no) + ": expected arc \"u v\"");
        if (u < 1 || u > n || v < 1 || v > n || u == v)
            throw parse_error("line " + std::to_string(line_no) + ": invalid arc");
        if (!g.add_arc(u, v))
            throw parse_error("line " + std::to_string(line_no) + ": duplicate arc");
    }
    if (n < 0) throw parse_error("digraph input is empty");
    return g;
}

inline nlohmann::json digraph_to_json(const Digraph& g) {
    nlohmann::json arcs = nlohmann::json::array();
    for (const auto& [u, v] : g.arcs()) arcs.push_back({u, v});
    return {{"n", g.n()}, {"arcs", std::move(arcs)}};
}

inline Digraph digraph_from_json(const nlohmann::json& j) {
    if (!j.contains("n") || !j["n"].is_number_integer() || j["n"].get<int>() < 1)
        throw parse_error("digraph JSON: missing or invalid \"n\"");
    Digraph g(j["n"].get<int>());
    if (!j.contains("arcs") || !j["arcs"].is_array())
        throw parse_error("digraph JSON: missing \"arcs\" array");
    for (const auto& arc : j["arcs"]) {
        if (!arc.is_array() || arc.size() != 2)
            throw parse_error("digraph JSON: arcs must be [u, v] pairs");
        const int u = arc[0].get<int>();
        const int v = arc[1].get<int>();
        if (u < 1 || u > g.n() || v < 1 || v > g.n() || u == v)
            throw parse_error("digraph JSON: invalid arc");
        if (!g.add_arc(u, v)) throw parse_error("digraph JSON: duplicate arc");
    }
    return g;
}

inline nlohmann::json anchor_triples_to_json(const std::vector<AnchorTriple>& anchors) {
    nlohmann::json list = nlohmann::json::array();
    for (const AnchorTriple& t : anchors)
        list.push_back({{"coordinates", t.coordinates}, {"k", t.k}, {"l", t.l}});
    return list;
}

} // namespace dgs
