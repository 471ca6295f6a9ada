#include "kshare/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace kshare {

using nlohmann::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open file for writing: " + path);
    out << content;
}

std::string format_weight(double w) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), w);
    if (ec != std::errc{}) throw std::runtime_error("cannot format weight");
    return std::string(buf, ptr);
}

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = line.find(sep, start);
        if (pos == std::string::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
    return fields;
}

double parse_weight(const std::string& text, std::size_t line_no) {
    double w = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), w);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw std::runtime_error("line " + std::to_string(line_no) + ": malformed weight \"" +
                                 text + "\"");
    }
    return w;
}

const char* weight_mode_name(WeightMode mode) {
    switch (mode) {
        case WeightMode::Intersection: return "intersection";
        case WeightMode::Union: return "union";
        case WeightMode::Normalized: return "normalized";
    }
    return "intersection";
}

WeightMode weight_mode_from(const std::string& name) {
    if (name == "intersection") return WeightMode::Intersection;
    if (name == "union") return WeightMode::Union;
    if (name == "normalized") return WeightMode::Normalized;
    throw std::runtime_error("unknown weight mode: " + name);
}

const char* model_name(SpreadModel m) {
    return m == SpreadModel::SI ? "si" : "ic";
}

const char* transmission_name(Transmission t) {
    switch (t) {
        case Transmission::Unit: return "unit";
        case Transmission::Proportional: return "proportional";
        case Transmission::Scaled: return "scaled";
    }
    return "unit";
}

}  // namespace

KnowledgeBase ingest_csv_text(const std::string& text) {
    KnowledgeBase::Builder builder;
    std::vector<std::size_t> zero_lines;
    std::size_t line_no = 0;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto fields = split(line, ',');
        if (fields.size() < 2 || fields.size() > 3) {
            throw std::runtime_error("line " + std::to_string(line_no) +
                                     ": expected actor,generator[,weight]");
        }
        double weight = fields.size() == 3 ? parse_weight(fields[2], line_no) : 1.0;
        if (weight == 0.0) {
            zero_lines.push_back(line_no);
            continue;
        }
        try {
            builder.add(ActorId{fields[0]}, GeneratorId{fields[1]}, weight);
        } catch (const std::invalid_argument& e) {
            throw std::runtime_error("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    if (!zero_lines.empty()) {
        std::string lines;
        for (std::size_t i = 0; i < zero_lines.size(); ++i) {
            if (i > 0) lines += ", ";
            lines += std::to_string(zero_lines[i]);
        }
        throw std::runtime_error("zero-weight rows rejected at line(s): " + lines);
    }
    return builder.build();
}

KnowledgeBase ingest_json_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw std::runtime_error(std::string("malformed JSON: ") + e.what());
    }
    const json& sigma = doc.is_object() && doc.contains("sigma") ? doc.at("sigma") : doc;
    if (!sigma.is_object()) throw std::runtime_error("expected an object mapping actor to sigma");
    KnowledgeBase::Builder builder;
    for (const auto& [actor, gens] : sigma.items()) {
        if (!gens.is_object()) {
            throw std::runtime_error("actor \"" + actor + "\": expected {generator: weight}");
        }
        try {
            builder.add_actor(ActorId{actor});
            for (const auto& [gen, w] : gens.items()) {
                if (!w.is_number()) {
                    throw std::invalid_argument("weight must be a number for generator " + gen);
                }
                builder.add(ActorId{actor}, GeneratorId{gen}, w.get<double>());
            }
        } catch (const std::invalid_argument& e) {
            throw std::runtime_error("actor \"" + actor + "\": " + e.what());
        }
    }
    return builder.build();
}

KnowledgeBase ingest(const std::string& path, IngestFormat format) {
    const std::string text = read_file(path);
    return format == IngestFormat::Csv ? ingest_csv_text(text) : ingest_json_text(text);
}

std::string kb_to_csv(const KnowledgeBase& kb) {
    std::string out;
    for (const auto& actor : kb.actors()) {
        for (const auto& [gen, w] : kb.sigma(actor)) {
            out += actor.token + "," + gen.token + "," + format_weight(w) + "\n";
        }
    }
    return out;
}

std::string kb_to_json(const KnowledgeBase& kb) {
    json sigma = json::object();
    for (const auto& actor : kb.actors()) {
        json gens = json::object();
        for (const auto& [gen, w] : kb.sigma(actor)) gens[gen.token] = w;
        sigma[actor.token] = std::move(gens);
    }
    json universe = json::array();
    for (const auto& gen : kb.universe()) universe.push_back(gen.token);
    json doc{{"sigma", std::move(sigma)}, {"universe", std::move(universe)}};
    return doc.dump(2) + "\n";
}

KnowledgeBase kb_from_json_text(const std::string& text) {
    return ingest_json_text(text);
}

std::string graph_to_json(const KnowledgeGraph& g) {
    json edges = json::array();
    for (const auto& e : g.edges()) {
        edges.push_back({{"source", g.vertex_at(e.a).token},
                         {"target", g.vertex_at(e.b).token},
                         {"weight", e.weight}});
    }
    json vertices = json::array();
    for (const auto& v : g.vertices()) vertices.push_back(v.token);
    json doc{{"edges", std::move(edges)},
             {"threshold", g.threshold()},
             {"vertices", std::move(vertices)},
             {"weight_mode", weight_mode_name(g.weight_mode())}};
    return doc.dump(2) + "\n";
}

KnowledgeGraph graph_from_json_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw std::runtime_error(std::string("malformed graph JSON: ") + e.what());
    }
    try {
        std::vector<ActorId> vertices;
        for (const auto& v : doc.at("vertices")) vertices.push_back(ActorId{v.get<std::string>()});
        std::sort(vertices.begin(), vertices.end());
        auto index_of = [&](const std::string& token) {
            auto it = std::lower_bound(vertices.begin(), vertices.end(), ActorId{token});
            if (it == vertices.end() || it->token != token) {
                throw std::runtime_error("edge references unknown vertex: " + token);
            }
            return static_cast<std::uint32_t>(it - vertices.begin());
        };
        std::vector<KnowledgeGraph::Edge> edges;
        for (const auto& e : doc.at("edges")) {
            edges.push_back({index_of(e.at("source").get<std::string>()),
                             index_of(e.at("target").get<std::string>()),
                             e.at("weight").get<double>()});
        }
        return KnowledgeGraph(std::move(vertices), std::move(edges),
                              weight_mode_from(doc.at("weight_mode").get<std::string>()),
                              doc.at("threshold").get<double>());
    } catch (const json::exception& e) {
        throw std::runtime_error(std::string("malformed graph JSON: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(std::string("malformed graph JSON: ") + e.what());
    }
}

std::string export_graph(const KnowledgeGraph& g, GraphExportFormat format) {
    switch (format) {
        case GraphExportFormat::EdgeJson: {
            json edges = json::array();
            for (const auto& e : g.edges()) {
                edges.push_back({{"source", g.vertex_at(e.a).token},
                                 {"target", g.vertex_at(e.b).token},
                                 {"weight", e.weight}});
            }
            json vertices = json::array();
            for (const auto& v : g.vertices()) vertices.push_back(v.token);
            json doc{{"edges", std::move(edges)}, {"vertices", std::move(vertices)}};
            return doc.dump(2) + "\n";
        }
        case GraphExportFormat::Dot: {
            std::string out = "graph knowledge {\n";
            for (const auto& v : g.vertices()) out += "  \"" + v.token + "\";\n";
            for (const auto& e : g.edges()) {
                out += "  \"" + g.vertex_at(e.a).token + "\" -- \"" + g.vertex_at(e.b).token +
                       "\" [label=" + format_weight(e.weight) + "];\n";
            }
            out += "}\n";
            return out;
        }
        case GraphExportFormat::Csv: {
            std::string out = "source,target,weight\n";
            for (const auto& e : g.edges()) {
                out += g.vertex_at(e.a).token + "," + g.vertex_at(e.b).token + "," +
                       format_weight(e.weight) + "\n";
            }
            return out;
        }
    }
    throw std::logic_error("unreachable");
}

std::string export_trace(const SpreadTrace& t, TraceExportFormat format) {
    if (format == TraceExportFormat::Csv) {
        std::string out = "round,actor_id\n";
        for (std::size_t r = 0; r < t.rounds.size(); ++r) {
            for (const auto& actor : t.rounds[r]) {
                out += std::to_string(r) + "," + actor.token + "\n";
            }
        }
        return out;
    }
    json rounds = json::array();
    for (const auto& round : t.rounds) {
        json row = json::array();
        for (const auto& actor : round) row.push_back(actor.token);
        rounds.push_back(std::move(row));
    }
    json final_infected = json::array();
    for (const auto& actor : t.final_infected) final_infected.push_back(actor.token);
    json seeds = json::array();
    for (const auto& s : t.config.seeds) seeds.push_back(s.token);
    json config{{"lambda", t.config.lambda},
                {"max_rounds", t.config.max_rounds},
                {"model", model_name(t.config.model)},
                {"rng_seed", t.config.rng_seed},
                {"seeds", std::move(seeds)},
                {"transmission", transmission_name(t.config.transmission)}};
    json doc{{"config", std::move(config)},
             {"final_infected", std::move(final_infected)},
             {"rounds", std::move(rounds)}};
    return doc.dump(2) + "\n";
}

std::string stats_to_json(const GraphStats& stats) {
    json hist = json::object();
    for (const auto& [degree, count] : stats.degree_histogram) {
        hist[std::to_string(degree)] = count;
    }
    json doc{{"component_count", stats.component_count},
             {"degree_histogram", std::move(hist)},
             {"largest_component", stats.largest_component},
             {"order", stats.order},
             {"size", stats.size}};
    return doc.dump(2) + "\n";
}

}  // namespace kshare
