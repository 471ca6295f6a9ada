#include "kshare/cli.hpp"

#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "kshare/diffusion.hpp"
#include "kshare/io.hpp"
#include "kshare/overlap.hpp"

namespace kshare {

namespace {

std::vector<ActorId> parse_id_list(const std::string& csv) {
    std::vector<ActorId> ids;
    std::size_t start = 0;
    while (start <= csv.size()) {
        std::size_t pos = csv.find(',', start);
        std::string token =
            pos == std::string::npos ? csv.substr(start) : csv.substr(start, pos - start);
        if (!token.empty()) ids.push_back(ActorId{token});
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    return ids;
}

WeightMode parse_weight_mode(const std::string& s) {
    if (s == "intersection") return WeightMode::Intersection;
    if (s == "union") return WeightMode::Union;
    return WeightMode::Normalized;
}

void emit(const std::string& content, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        out << content;
    } else {
        write_file(out_path, content);
    }
}

}  // namespace

int run_cli(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"knowledge-overlap network and spread-simulation toolkit", "kshare"};
    app.require_subcommand(1);

    // ingest
    auto* ingest_cmd = app.add_subcommand("ingest", "Build a knowledge base from incidence data");
    std::string ingest_input, ingest_format = "csv", ingest_out;
    ingest_cmd->add_option("--input", ingest_input, "Input file")->required();
    ingest_cmd->add_option("--format", ingest_format, "Input format")
        ->check(CLI::IsMember({"csv", "json"}));
    ingest_cmd->add_option("--out", ingest_out, "Knowledge-base JSON output path")->required();

    // graph
    auto* graph_cmd = app.add_subcommand("graph", "Build the actor graph from a knowledge base");
    std::string graph_kb, graph_mode = "intersection", graph_out;
    double graph_threshold = 0.0;
    graph_cmd->add_option("--kb", graph_kb, "Knowledge-base JSON path")->required();
    graph_cmd->add_option("--mode", graph_mode, "Edge weight mode")
        ->check(CLI::IsMember({"intersection", "union", "normalized"}));
    graph_cmd->add_option("--threshold", graph_threshold, "Strict edge threshold")
        ->check(CLI::NonNegativeNumber);
    graph_cmd->add_option("--out", graph_out, "Graph JSON output path");

    // stats
    auto* stats_cmd = app.add_subcommand("stats", "Print graph statistics as JSON");
    std::string stats_graph;
    stats_cmd->add_option("--graph", stats_graph, "Graph JSON path")->required();

    // simulate
    auto* sim_cmd = app.add_subcommand("simulate", "Run a spread simulation");
    std::string sim_graph, sim_model = "si", sim_seeds, sim_transmission = "unit", sim_out;
    double sim_lambda = 1.0;
    unsigned sim_rounds = 100, sim_trials = 1;
    std::uint64_t sim_seed = 0;
    sim_cmd->add_option("--graph", sim_graph, "Graph JSON path")->required();
    sim_cmd->add_option("--model", sim_model, "Spread model")->check(CLI::IsMember({"si", "ic"}));
    sim_cmd->add_option("--seeds", sim_seeds, "Comma-separated seed actors")->required();
    sim_cmd->add_option("--transmission", sim_transmission, "Edge probability rule")
        ->check(CLI::IsMember({"unit", "proportional", "scaled"}));
    sim_cmd->add_option("--lambda", sim_lambda, "Scale for scaled transmission");
    sim_cmd->add_option("--rounds", sim_rounds, "Maximum rounds")->check(CLI::PositiveNumber);
    sim_cmd->add_option("--trials", sim_trials, "Trials; >1 switches to Monte Carlo estimates")
        ->check(CLI::PositiveNumber);
    sim_cmd->add_option("--rng-seed", sim_seed, "Master RNG seed");
    std::string sim_trace_format = "json";
    sim_cmd->add_option("--trace-format", sim_trace_format, "Trace output format")
        ->check(CLI::IsMember({"json", "csv"}));
    sim_cmd->add_option("--out", sim_out, "Output path (stdout if omitted)");

    // trace-root
    auto* root_cmd = app.add_subcommand("trace-root", "Rank candidate origins of an infection");
    std::string root_graph, root_infected, root_model = "si", root_transmission = "unit";
    double root_lambda = 1.0;
    unsigned root_rounds = 100, root_trials = 1000;
    std::uint64_t root_seed = 0;
    root_cmd->add_option("--graph", root_graph, "Graph JSON path")->required();
    root_cmd->add_option("--infected", root_infected, "Comma-separated observed infected actors")
        ->required();
    root_cmd->add_option("--model", root_model, "Spread model")->check(CLI::IsMember({"si", "ic"}));
    root_cmd->add_option("--transmission", root_transmission, "Edge probability rule")
        ->check(CLI::IsMember({"unit", "proportional", "scaled"}));
    root_cmd->add_option("--lambda", root_lambda, "Scale for scaled transmission");
    root_cmd->add_option("--rounds", root_rounds, "Maximum rounds")->check(CLI::PositiveNumber);
    root_cmd->add_option("--trials", root_trials, "Monte Carlo trials per candidate")
        ->check(CLI::PositiveNumber);
    root_cmd->add_option("--rng-seed", root_seed, "Master RNG seed");

    // export
    auto* export_cmd = app.add_subcommand("export", "Export a graph to a text format");
    std::string export_graph_path, export_format = "edge-json";
    export_cmd->add_option("--graph", export_graph_path, "Graph JSON path")->required();
    export_cmd->add_option("--format", export_format, "Output format")
        ->check(CLI::IsMember({"edge-json", "dot", "csv"}));

    std::vector<const char*> cargs{"kshare"};
    for (const auto& a : argv) cargs.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(cargs.size()), cargs.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n" << app.help();
        return 1;
    }

    try {
        if (*ingest_cmd) {
            auto kb = ingest(ingest_input,
                             ingest_format == "csv" ? IngestFormat::Csv : IngestFormat::Json);
            write_file(ingest_out, kb_to_json(kb));
        } else if (*graph_cmd) {
            auto kb = kb_from_json_text(read_file(graph_kb));
            auto matrix = overlap_matrix(kb, OverlapMode::Count);
            auto g = build_graph(kb, matrix, parse_weight_mode(graph_mode), graph_threshold);
            emit(graph_to_json(g), graph_out, out);
        } else if (*stats_cmd) {
            auto g = graph_from_json_text(read_file(stats_graph));
            out << stats_to_json(graph_stats(g));
        } else if (*sim_cmd) {
            auto g = graph_from_json_text(read_file(sim_graph));
            SpreadConfig cfg;
            cfg.model = sim_model == "si" ? SpreadModel::SI : SpreadModel::IC;
            cfg.seeds = parse_id_list(sim_seeds);
            cfg.max_rounds = sim_rounds;
            cfg.transmission = sim_transmission == "unit" ? Transmission::Unit
                               : sim_transmission == "proportional" ? Transmission::Proportional
                                                                    : Transmission::Scaled;
            cfg.lambda = sim_lambda;
            cfg.rng_seed = sim_seed;
            if (sim_trials == 1) {
                auto fmt = sim_trace_format == "csv" ? TraceExportFormat::Csv
                                                     : TraceExportFormat::Json;
                emit(export_trace(simulate(g, cfg), fmt), sim_out, out);
            } else {
                auto estimates = monte_carlo(g, cfg, sim_trials);
                nlohmann::json doc;
                doc["trials"] = sim_trials;
                nlohmann::json est = nlohmann::json::object();
                for (const auto& [actor, p] : estimates) est[actor.token] = p;
                doc["estimates"] = std::move(est);
                emit(doc.dump(2) + "\n", sim_out, out);
            }
        } else if (*root_cmd) {
            auto g = graph_from_json_text(read_file(root_graph));
            SpreadConfig cfg;
            cfg.model = root_model == "si" ? SpreadModel::SI : SpreadModel::IC;
            cfg.max_rounds = root_rounds;
            cfg.transmission = root_transmission == "unit" ? Transmission::Unit
                               : root_transmission == "proportional" ? Transmission::Proportional
                                                                     : Transmission::Scaled;
            cfg.lambda = root_lambda;
            cfg.rng_seed = root_seed;
            auto ranking = trace_root(g, parse_id_list(root_infected), cfg, root_trials);
            nlohmann::json doc = nlohmann::json::array();
            for (const auto& [actor, score] : ranking) {
                doc.push_back({{"actor", actor.token}, {"score", score}});
            }
            out << doc.dump(2) << "\n";
        } else if (*export_cmd) {
            auto g = graph_from_json_text(read_file(export_graph_path));
            GraphExportFormat fmt = export_format == "edge-json" ? GraphExportFormat::EdgeJson
                                    : export_format == "dot"     ? GraphExportFormat::Dot
                                                                 : GraphExportFormat::Csv;
            out << kshare::export_graph(g, fmt);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

}  // namespace kshare
