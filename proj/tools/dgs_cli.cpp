// Command-line front end: feasibility checks, anchor detection, realization
// construction, the two samplers and the desk-scale meta-graph machinery.
//
// Exit codes: 0 success, 1 usage/parse error, 2 domain failure (not
// digraphic, enumeration cap exceeded).

#include <chrono>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "dgs/degree_sequence.hpp"
#include "dgs/digraph.hpp"
#include "dgs/io.hpp"
#include "dgs/mcmc.hpp"
#include "dgs/metagraph.hpp"
#include "dgs/realize.hpp"
#include "dgs/sweep.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_domain = 2;

using nlohmann::json;

dgs::DegreeSequence load_degree_sequence(const std::string& path) {
    std::istream* in = &std::cin;
    std::ifstream file;
    if (path != "-") {
        file.open(path);
        if (!file) throw dgs::parse_error("cannot open input file: " + path);
        in = &file;
    }
    // Format sniff: JSON inputs start with '['.
    std::stringstream buffered;
    buffered << in->rdbuf();
    const std::string content = buffered.str();
    const auto first = content.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && content[first] == '[')
        return dgs::parse_degree_sequence_json(json::parse(content));
    std::istringstream text(content);
    return dgs::parse_degree_sequence_text(text);
}

std::ostream& open_output(const std::string& path, std::ofstream& file) {
    if (path.empty() || path == "-") return std::cout;
    file.open(path, std::ios::binary);
    if (!file) throw dgs::parse_error("cannot open output file: " + path);
    return file;
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& seed_flag) {
    if (seed_flag) return *seed_flag;
    std::random_device rd;
    return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

json anchors_json(const std::vector<dgs::AnchorTriple>& anchors) {
    return dgs::anchor_triples_to_json(anchors);
}

int cmd_check(const std::string& input, const std::string& output, const std::string& format) {
    const dgs::DegreeSequence d = load_degree_sequence(input);
    const bool digraphic = dgs::is_digraphic(d);
    const dgs::SlackSequences slack = dgs::slack_sequences(d);

    std::ofstream file;
    std::ostream& out = open_output(output, file);
    if (format == "text") {
        out << "digraphic: " << (digraphic ? "true" : "false") << '\n'
            << "n: " << d.size() << '\n'
            << "sum_out: " << d.sum_out() << '\n'
            << "sum_in: " << d.sum_in() << '\n';
    } else {
        json report = {
            {"digraphic", digraphic}, {"n", d.size()},         {"sum_out", d.sum_out()},
            {"sum_in", d.sum_in()},   {"slack_bar", slack.s_bar}, {"slack_ubar", slack.s_ubar},
        };
        out << report.dump() << '\n';
    }
    return digraphic ? exit_ok : exit_domain;
}

int cmd_anchors(const std::string& input, const std::string& output) {
    const dgs::DegreeSequence d = load_degree_sequence(input);
    if (!dgs::is_digraphic(d)) {
        std::cerr << "error: degree sequence is not digraphic\n";
        return exit_domain;
    }
    std::ofstream file;
    std::ostream& out = open_output(output, file);
    out << anchors_json(dgs::detect_anchors(d)).dump() << '\n';
    return exit_ok;
}

int cmd_realize(const std::string& input, const std::string& output,
                const std::string& format) {
    const dgs::DegreeSequence d = load_degree_sequence(input);
    if (!dgs::is_digraphic(d)) {
        std::cerr << "error: degree sequence is not digraphic\n";
        return exit_domain;
    }
    const dgs::Digraph g = dgs::realize(d);
    std::ofstream file;
    std::ostream& out = open_output(output, file);
    if (format == "json")
        out << dgs::digraph_to_json(g).dump() << '\n';
    else
        dgs::write_digraph_text(out, g);
    return exit_ok;
}

struct SampleFlags {
    std::string input;
    std::string output;
    std::string format = "text";
    double p = 0.5;
    std::uint64_t steps = 1000;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> thin;
    std::optional<std::uint64_t> burn_in;
    bool full = false;
};

int cmd_sample(const SampleFlags& flags) {
    const dgs::DegreeSequence d = load_degree_sequence(flags.input);
    if (!dgs::is_digraphic(d)) {
        std::cerr << "error: degree sequence is not digraphic\n";
        return exit_domain;
    }

    dgs::SamplerConfig config;
    config.p = flags.full ? flags.p : 1.0;
    config.steps = flags.steps;
    config.seed = resolve_seed(flags.seed);
    config.thin = flags.thin.value_or(dgs::SamplerConfig::default_thin(d.size()));
    config.burn_in = flags.burn_in.value_or(dgs::SamplerConfig::default_burn_in(d.size()));

    const dgs::ChainMode mode = flags.full ? dgs::ChainMode::full : dgs::ChainMode::reduced;
    const std::vector<dgs::AnchorTriple> anchors = dgs::detect_anchors(d);
    if (flags.full && config.p == 1.0 && !anchors.empty())
        std::cerr << "warning: degree sequence is anchored; a pure 2-switch chain (p = 1) "
                     "cannot mix anchored-3-cycle orientations\n";

    std::ofstream file;
    std::ostream& out = open_output(flags.output, file);

    json metadata = {
        {"seed", config.seed},
        {"p", config.p},
        {"steps", config.steps},
        {"thin", config.thin},
        {"burn_in", config.burn_in},
        {"rng_algorithm", dgs::Sampler::rng_algorithm()},
        {"anchor_triples", anchors_json(anchors)},
        {"mode", flags.full ? "full" : "reduced"},
    };

    if (flags.format == "json") {
        out << metadata.dump() << '\n';
        dgs::sample_chain(d, config, mode,
                          [&](const dgs::Digraph& g) { out << dgs::digraph_to_json(g).dump() << '\n'; });
    } else {
        for (const auto& [key, value] : metadata.items())
            out << "# " << key << ' ' << value.dump() << '\n';
        dgs::sample_chain(d, config, mode, [&](const dgs::Digraph& g) {
            dgs::write_digraph_text(out, g);
            out << '\n';
        });
    }
    return exit_ok;
}

void write_dot(std::ostream& out, const dgs::MetaGraph& m) {
    out << "graph metagraph {\n";
    for (std::size_t i = 0; i < m.realizations.size(); ++i)
        out << "  r" << i << ";\n";
    for (const auto& [i, j] : m.e2_edges)
        out << "  r" << i << " -- r" << j << " [style=solid];\n";
    for (const auto& [i, j] : m.e3_edges)
        out << "  r" << i << " -- r" << j << " [style=dashed];\n";
    out << "}\n";
}

int cmd_metagraph(const std::string& input, const std::string& output,
                  const std::string& dot_path, int max_n) {
    const dgs::DegreeSequence d = load_degree_sequence(input);
    dgs::EnumLimits limits;
    limits.max_n = max_n;

    const dgs::MetaGraph m = dgs::build_metagraph(d, limits);
    const dgs::BruteForceAnchors oracle = dgs::brute_force_anchors(d, limits);
    std::vector<dgs::AnchorTriple> detected;
    if (dgs::is_digraphic(d)) detected = dgs::detect_anchors(d);
    const dgs::ComponentReport report = dgs::component_structure(m, oracle.triples);

    json doc = {
        {"num_realizations", report.num_realizations},
        {"e2_components", report.omega_prime_components},
        {"e3_joint_components", report.omega_components},
        {"anchors_bruteforce", oracle.triples},
        {"anchors_bruteforce_coordinates", oracle.anchored_coordinates},
        {"anchors_degseq", anchors_json(detected)},
        {"product_check",
         !report.product_checked ? "n/a" : (report.product_pass ? "pass" : "fail")},
        {"details", report.product_details},
    };
    std::ofstream file;
    std::ostream& out = open_output(output, file);
    out << doc.dump(2) << '\n';

    if (!dot_path.empty()) {
        std::ofstream dot(dot_path);
        if (!dot) throw dgs::parse_error("cannot open DOT output file: " + dot_path);
        write_dot(dot, m);
    }
    return exit_ok;
}

int cmd_selftest(int jobs) {
    dgs::SweepOptions options;
    options.max_n = 4;
    options.jobs = jobs;
    const auto start = std::chrono::steady_clock::now();
    const dgs::SweepResult result = dgs::run_sweep(options);
    const auto elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    const auto line = [](const std::string& name, bool pass, std::uint64_t failures) {
        std::cout << (pass ? "PASS" : "FAIL") << "  " << name;
        if (!pass) std::cout << "  (" << failures << " failures)";
        std::cout << '\n';
    };
    std::cout << "sequences checked: " << result.sequences_checked
              << " (digraphic: " << result.digraphic_count
              << ", anchored: " << result.anchored_count << ")\n";
    line("digraphic test vs enumeration", result.digraphic_mismatches == 0,
         result.digraphic_mismatches);
    line("realize on every digraphic sequence", result.realize_failures == 0,
         result.realize_failures);
    line("anchor detector vs brute-force oracle", result.detector_ok(),
         result.detector_mismatches + result.diagnostic_errors);
    line("meta-graph connected", result.connectivity_failures == 0,
         result.connectivity_failures);
    line("2-switch disconnection iff anchored", result.disconnection_failures == 0,
         result.disconnection_failures);
    line("2^k component product structure", result.product_failures == 0,
         result.product_failures);
    for (const std::string& sample : result.failure_samples)
        std::cout << "  " << sample << '\n';
    std::cout << "elapsed: " << elapsed << " s\n";
    return result.all_pass() ? exit_ok : exit_domain;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"uniform sampling of simple directed graphs with a fixed degree sequence"};
    app.require_subcommand(1);

    std::string input = "-";
    std::string output;
    std::string format = "json";
    int jobs = 1;

    auto* check = app.add_subcommand("check", "test a degree sequence for digraphic feasibility");
    check->add_option("input", input, "degree sequence file (- for stdin)");
    check->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    check->add_option("--output", output);

    auto* anchors = app.add_subcommand("anchors", "detect anchored 3-cycles from the degree sequence");
    anchors->add_option("input", input);
    anchors->add_option("--output", output);

    std::string realize_format = "text";
    auto* realize = app.add_subcommand("realize", "construct one deterministic realization");
    realize->add_option("input", input);
    realize->add_option("--format", realize_format)->check(CLI::IsMember({"text", "json"}));
    realize->add_option("--output", output);

    SampleFlags sample_flags;
    auto* sample = app.add_subcommand("sample", "run a sampling chain and emit realizations");
    sample->add_option("input", sample_flags.input)->required(false);
    sample->add_option("--p", sample_flags.p, "2-switch probability (full chain)")
        ->check(CLI::Range(0.0, 1.0));
    sample->add_option("--steps", sample_flags.steps);
    sample->add_option("--seed", sample_flags.seed);
    sample->add_option("--thin", sample_flags.thin);
    sample->add_option("--burn-in", sample_flags.burn_in);
    sample->add_option("--format", sample_flags.format)->check(CLI::IsMember({"text", "json"}));
    sample->add_option("--output", sample_flags.output);
    auto* full_flag = sample->add_flag("--full", sample_flags.full, "two-move chain of 2-switches and C3 reorientations");
    sample->add_flag("--reduced", "anchored-orientation coin plus 2-switch walk (default)")
        ->excludes(full_flag);

    std::string dot_path;
    int max_n = 8;
    auto* metagraph = app.add_subcommand("metagraph", "enumerate R(d) and analyze the meta-graph");
    metagraph->add_option("input", input);
    metagraph->add_option("--output", output);
    metagraph->add_option("--dot", dot_path, "also write a DOT rendering");
    metagraph->add_option("--max-n", max_n, "enumeration vertex cap");
    metagraph->add_option("--jobs", jobs);

    auto* selftest = app.add_subcommand("selftest", "exhaustive N <= 4 structural sweep");
    selftest->add_option("--jobs", jobs);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (check->parsed()) return cmd_check(input, output, format);
        if (anchors->parsed()) return cmd_anchors(input, output);
        if (realize->parsed()) return cmd_realize(input, output, realize_format);
        if (sample->parsed()) {
            if (sample_flags.input.empty()) sample_flags.input = "-";
            return cmd_sample(sample_flags);
        }
        if (metagraph->parsed()) return cmd_metagraph(input, output, dot_path, max_n);
        if (selftest->parsed()) return cmd_selftest(jobs);
    } catch (const dgs::parse_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const dgs::not_digraphic_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_domain;
    } catch (const dgs::cap_exceeded_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_domain;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}
