#pragma once
// Ingestion, serialization and export formats. All writers are
// byte-deterministic for a given input.

#include <string>

#include "kshare/core_model.hpp"
#include "kshare/diffusion.hpp"
#include "kshare/graph.hpp"

namespace kshare {

enum class IngestFormat { Csv, Json };
enum class GraphExportFormat { EdgeJson, Dot, Csv };
enum class TraceExportFormat { Json, Csv };

// CSV rows are "actor,generator[,weight]"; weight defaults to 1.0. JSON is
// an object mapping actor to {generator: weight}. Duplicate (actor,
// generator) pairs keep the maximum weight; zero weights are rejected with
// the offending line numbers.
KnowledgeBase ingest(const std::string& path, IngestFormat format);
KnowledgeBase ingest_csv_text(const std::string& text);
KnowledgeBase ingest_json_text(const std::string& text);

// Knowledge-base interchange: CSV in the ingest row format, JSON with the
// full universe alongside sigma ({"universe": [...], "sigma": {...}}).
std::string kb_to_csv(const KnowledgeBase& kb);
std::string kb_to_json(const KnowledgeBase& kb);
KnowledgeBase kb_from_json_text(const std::string& text);

// Graph persistence carries weight mode and threshold; the edge-json export
// is the bare {"edges": [...], "vertices": [...]} view.
std::string graph_to_json(const KnowledgeGraph& g);
KnowledgeGraph graph_from_json_text(const std::string& text);
std::string export_graph(const KnowledgeGraph& g, GraphExportFormat format);

std::string export_trace(const SpreadTrace& t, TraceExportFormat format);

std::string stats_to_json(const GraphStats& stats);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

// Shortest round-trip decimal representation (1.0 -> "1", 0.5 -> "0.5").
std::string format_weight(double w);

}  // namespace kshare
