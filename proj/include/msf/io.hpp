#pragma once

#include <optional>
#include <string>
#include <vector>

#include "msf/graph.hpp"
#include "msf/labeling.hpp"

namespace msf {

// Edge-list text format:
//   vertices N edges M
//   u v [label]        (0-based; label is a decimal in [0,1] or rational p/q)
// Comments start with '#'.
struct GraphFile {
    MultiGraph graph;
    std::optional<Labeling> labels;  // present when any edge carries a label
};

struct ParseError : std::runtime_error {
    int line;
    ParseError(const std::string& what, int line_no)
        : std::runtime_error(what + " (line " + std::to_string(line_no) + ")"),
          line(line_no) {}
};

GraphFile read_graph(const std::string& path);
GraphFile parse_graph(const std::string& text);

void write_graph(const MultiGraph& g, const std::string& path,
                 const Labeling* labels = nullptr);
std::string format_graph(const MultiGraph& g, const Labeling* labels = nullptr);

// Shortest decimal that round-trips the double exactly.
std::string format_label(double v);

// FNV-1a 64 over the file bytes, hex.
std::string file_digest(const std::string& path);

// Every run records command, parameters, seeds and output digests so it can
// be replayed byte-identically.
struct RunManifest {
    std::string command;
    std::vector<std::string> args;
    std::vector<std::uint64_t> seeds;
    std::vector<std::pair<std::string, std::string>> outputs;  // path, digest

    std::string to_json() const;
    void write(const std::string& path) const;
};

}  // namespace msf
