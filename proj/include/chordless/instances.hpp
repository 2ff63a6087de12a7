#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chordless/graph.hpp"

namespace chordless {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Edge-list text: optional "n m" header, then one "i j" line per edge.
/// Without a header the vertex count is the largest id seen. Duplicate
/// edges and self-loops are dropped and counted on the returned graph.
Graph parse_edge_list(const std::string& text);

/// DIMACS: "c" comments, one "p edge n m" line, then "e i j" lines.
Graph parse_dimacs(const std::string& text);

/// Canonical writer: "n m" header plus sorted edges. parse(write(g)) == g.
std::string write_edge_list(const Graph& g);

/// Dispatch on content: DIMACS when a "p"/"e" line shows up first.
Graph parse_graph(const std::string& text);

/// Load from disk, dispatching on content. Throws ParseError (with the file
/// name) on unreadable files.
Graph load_graph_file(const std::string& path);

/// G(n, p) with a counter-based keyed generator: pair t of the lexicographic
/// pair enumeration is included iff splitmix64(seed ^ golden*(t+1)) maps
/// below density, so the edge set is identical across platforms and runs.
Graph gen_random(int n, double density, std::uint64_t seed);

enum class InstanceSource { RWC, MG, Random, Synthetic };

struct InstanceRecord {
    std::string name;
    int n = 0;
    int m = 0;
    std::optional<int> known_opt;
    std::optional<int> known_lisc;
    InstanceSource source = InstanceSource::Synthetic;
};

/// The published real-world catalog (metadata only; graph files are fetched
/// by the user and looked up by name).
const std::vector<InstanceRecord>& rwc_catalog();
std::optional<InstanceRecord> catalog_lookup(const std::string& name);

/// Stable result schema shared by the CLI and the bench harness.
std::string csv_header(bool with_connectivity = false);

}  // namespace chordless
