#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cospec/canonical.hpp"
#include "cospec/certify.hpp"
#include "cospec/charpoly.hpp"
#include "cospec/family.hpp"
#include "cospec/graph_io.hpp"
#include "cospec/matching.hpp"
#include "cospec/search.hpp"
#include "cospec/serialize.hpp"
#include "cospec/switching.hpp"

namespace {

using nlohmann::json;

std::vector<std::string> read_graph6_lines(const std::string& path) {
    std::vector<std::string> lines;
    std::string line;
    auto consume = [&](std::istream& in) {
        while (std::getline(in, line)) {
            if (!line.empty() && line != ">>graph6<<") lines.push_back(line);
        }
    };
    if (path.empty() || path == "-") {
        consume(std::cin);
    } else {
        std::ifstream in(path);
        if (!in) throw std::runtime_error("cannot open " + path);
        consume(in);
    }
    if (lines.empty()) throw std::runtime_error("no graph6 input lines");
    return lines;
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

struct ConstructOptions {
    int b = 5;
    bool switched = false;
    std::string format = "graph6";
    std::string output = "-";
    std::string sidecar;
    std::optional<std::uint64_t> seed;
};

int run_construct(const ConstructOptions& opt) {
    const auto pair = cospec::build_pair(cospec::FamilyParams{opt.b}, opt.seed);
    const cospec::Graph& g = opt.switched ? pair.switched : pair.layout.graph;

    std::string body;
    if (opt.format == "graph6") {
        body = cospec::encode_graph6(g) + "\n";
    } else if (opt.format == "dot") {
        body = cospec::to_dot(g, pair.layout.vertex_labels());
    } else if (opt.format == "json") {
        json doc = cospec::layout_sidecar(pair.layout, opt.switched);
        doc["graph6"] = cospec::encode_graph6(g);
        body = doc.dump(2) + "\n";
    } else {
        throw CLI::ValidationError("--format", "expected graph6, dot, or json");
    }
    write_text(opt.output, body);
    if (!opt.sidecar.empty())
        write_text(opt.sidecar, cospec::layout_sidecar(pair.layout, opt.switched).dump(2) + "\n");
    return 0;
}

int run_certify(int b, std::optional<std::uint64_t> seed) {
    const auto report = cospec::certify_family(b, seed);
    std::cout << cospec::to_json(report).dump(2) << "\n";
    if (!report.all_pass()) {
        std::cerr << "certification failed:";
        for (const auto& name : report.failures) std::cerr << " " << name;
        std::cerr << "\n";
        return 1;
    }
    return 0;
}

int run_spectrum(const std::string& input) {
    for (const auto& line : read_graph6_lines(input)) {
        const auto g = cospec::decode_graph6(line);
        const auto poly = cospec::char_poly(g);
        json doc{{"n", g.size()}, {"coeffs", cospec::to_json(poly)}};
        std::cout << doc.dump() << "\n";
    }
    return 0;
}

int run_match(const std::string& input) {
    for (const auto& line : read_graph6_lines(input)) {
        const auto g = cospec::decode_graph6(line);
        const auto matching = cospec::maximum_matching(g);
        json doc{{"n", g.size()},
                 {"size", matching.size()},
                 {"deficiency", g.size() - 2 * static_cast<int>(matching.size())},
                 {"perfect", matching.covers(g.size())},
                 {"matching", cospec::to_json(matching)}};
        std::cout << doc.dump() << "\n";
    }
    return 0;
}

int run_switch(const std::string& input, const std::vector<int>& x_list,
               const std::string& x_file) {
    for (const auto& line : read_graph6_lines(input)) {
        const auto g = cospec::decode_graph6(line);
        cospec::SwitchingPartition partition;
        if (!x_file.empty()) {
            std::ifstream in(x_file);
            if (!in) throw std::runtime_error("cannot open " + x_file);
            json doc = json::parse(in);
            partition = cospec::partition_from_json(g, doc);
        } else {
            partition = cospec::make_partition(g, x_list);
        }
        std::cout << cospec::encode_graph6(cospec::apply_switch(g, partition)) << "\n";
    }
    return 0;
}

int run_search(int k, int n_max) {
    const auto result = cospec::scan_cospectral_pm(k, n_max);
    std::cout << cospec::to_json(result).dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cospectral regular graph pairs with and without a perfect matching"};
    app.require_subcommand(1);

    ConstructOptions construct_opt;
    std::uint64_t seed_value = 0;
    auto* construct = app.add_subcommand("construct", "Build a family graph");
    construct->add_option("--b", construct_opt.b, "degree (>= 5)")->required();
    construct->add_flag("--switched", construct_opt.switched, "emit the switched mate");
    construct->add_option("--format", construct_opt.format, "graph6, dot, or json")
        ->default_val("graph6");
    construct->add_option("--output,-o", construct_opt.output, "output path (default stdout)");
    construct->add_option("--sidecar", construct_opt.sidecar, "write the JSON layout sidecar here");
    auto* construct_seed =
        construct->add_option("--seed", seed_value, "randomize the balanced big-cycle wiring");

    int certify_b = 5;
    auto* certify = app.add_subcommand("certify", "Build a pair and check every claim");
    certify->add_option("--b", certify_b, "degree (>= 5)")->required();
    auto* certify_seed =
        certify->add_option("--seed", seed_value, "randomize the balanced big-cycle wiring");

    std::string input = "-";
    auto* spectrum = app.add_subcommand("spectrum", "Exact characteristic polynomial of graph6 input");
    spectrum->add_option("input", input, "graph6 file, or - for stdin");

    std::string match_input = "-";
    auto* match = app.add_subcommand("match", "Maximum matching report for graph6 input");
    match->add_option("input", match_input, "graph6 file, or - for stdin");

    std::string switch_input = "-";
    std::vector<int> x_list;
    std::string x_file;
    auto* switch_cmd = app.add_subcommand("switch", "Apply a Godsil-McKay switch");
    switch_cmd->add_option("input", switch_input, "graph6 file, or - for stdin");
    auto* x_opt = switch_cmd->add_option("--x", x_list, "switching set as vertex indices");
    auto* x_file_opt =
        switch_cmd->add_option("--x-file", x_file, "JSON file with {\"X\":[...]}");
    x_opt->excludes(x_file_opt);

    int search_k = 3;
    int search_n_max = 14;
    auto* search = app.add_subcommand("search", "Scan cospectral classes for matching discrepancies");
    search->add_option("--k", search_k, "degree")->required();
    search->add_option("--n-max", search_n_max, "largest vertex count")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (construct->parsed()) {
            if (!construct_seed->empty()) construct_opt.seed = seed_value;
            return run_construct(construct_opt);
        }
        if (certify->parsed()) {
            std::optional<std::uint64_t> seed;
            if (!certify_seed->empty()) seed = seed_value;
            return run_certify(certify_b, seed);
        }
        if (spectrum->parsed()) return run_spectrum(input);
        if (match->parsed()) return run_match(match_input);
        if (switch_cmd->parsed()) {
            if (x_list.empty() && x_file.empty())
                throw CLI::ValidationError("switch", "provide --x or --x-file");
            return run_switch(switch_input, x_list, x_file);
        }
        if (search->parsed()) return run_search(search_k, search_n_max);
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
