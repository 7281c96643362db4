#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "sgach/graph.hpp"
#include "sgach/morphism.hpp"

namespace sgach {

// Text format, one record per line, '#' starts a comment:
//
//   signed <n>
//   v <name>          (either none or exactly n, in id order, before edges)
//   e <a> <b> <+|->
//
// Parse errors carry the 1-based line number in their message.
Graph2EC parse_graph(std::string_view text);

/// Header, names (only when some name is not the default), then edges by
/// (min id, max id). Each entry of `comments` becomes a leading "# " line.
std::string serialize_graph(const Graph2EC& g,
                            const std::vector<std::string>& comments = {});

// Colouring format: one `c <vertex-name> <colour>` line per vertex with
// colours 1..k, and at most one `switch <name>...` line (possibly empty).
Coloring parse_coloring(std::string_view text, const Graph2EC& g);
std::string serialize_coloring(const Coloring& col, const Graph2EC& g);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

Graph2EC load_graph(const std::filesystem::path& path);
void save_graph(const std::filesystem::path& path, const Graph2EC& g,
                const std::vector<std::string>& comments = {});
Coloring load_coloring(const std::filesystem::path& path, const Graph2EC& g);

}  // namespace sgach
