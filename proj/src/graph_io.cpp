#include "sgach/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "sgach/error.hpp"

namespace sgach {

namespace {

struct Line {
  std::size_t number = 0;
  std::vector<std::string_view> tokens;
};

// Splits into non-empty, comment-stripped lines of whitespace tokens.
std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  while (!text.empty() || number == 0) {
    ++number;
    const auto eol = text.find('\n');
    auto line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    Line parsed{number, {}};
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      const auto start = i;
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      if (i > start) parsed.tokens.push_back(line.substr(start, i - start));
    }
    if (!parsed.tokens.empty()) out.push_back(std::move(parsed));
    if (eol == std::string_view::npos) break;
  }
  return out;
}

[[noreturn]] void parse_fail(std::size_t line, const std::string& what) {
  fail(ErrorCode::parse, "line " + std::to_string(line) + ": " + what);
}

std::size_t parse_count(const Line& l, std::string_view token, const char* what) {
  std::size_t value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    parse_fail(l.number, std::string("expected a non-negative integer ") + what +
                             ", got '" + std::string(token) + "'");
  }
  return value;
}

void expect_arity(const Line& l, std::size_t n, const char* form) {
  if (l.tokens.size() != n) parse_fail(l.number, std::string("expected '") + form + "'");
}

VertexId lookup(const Line& l, const Graph2EC& g, std::string_view name) {
  auto v = g.find(name);
  if (!v) parse_fail(l.number, "unknown vertex '" + std::string(name) + "'");
  return *v;
}

}  // namespace

Graph2EC parse_graph(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) fail(ErrorCode::parse, "missing 'signed <n>' header");
  const auto& header = lines.front();
  if (header.tokens[0] != "signed") parse_fail(header.number, "expected 'signed <n>' header");
  expect_arity(header, 2, "signed <n>");
  const auto n = parse_count(header, header.tokens[1], "vertex count");

  std::vector<std::string> names;
  std::unordered_map<std::string, VertexId> index;
  struct RawEdge {
    std::size_t line;
    std::string_view a, b;
    Sign sign;
  };
  std::vector<RawEdge> raw;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& l = lines[i];
    const auto kind = l.tokens[0];
    if (kind == "v") {
      expect_arity(l, 2, "v <name>");
      if (!raw.empty()) parse_fail(l.number, "vertex declaration after the first edge");
      if (names.size() == n) parse_fail(l.number, "more than " + std::to_string(n) + " vertex names");
      std::string name(l.tokens[1]);
      if (!index.emplace(name, static_cast<VertexId>(names.size())).second) {
        parse_fail(l.number, "duplicate vertex name '" + name + "'");
      }
      names.push_back(std::move(name));
    } else if (kind == "e") {
      expect_arity(l, 4, "e <a> <b> <+|->");
      Sign s;
      if (l.tokens[3] == "+") {
        s = Sign::positive;
      } else if (l.tokens[3] == "-") {
        s = Sign::negative;
      } else {
        parse_fail(l.number, "unknown sign token '" + std::string(l.tokens[3]) + "'");
      }
      raw.push_back({l.number, l.tokens[1], l.tokens[2], s});
    } else {
      parse_fail(l.number, "unknown record '" + std::string(kind) + "'");
    }
  }
  if (!names.empty() && names.size() != n) {
    fail(ErrorCode::parse, "declared " + std::to_string(names.size()) +
                               " vertex names for " + std::to_string(n) + " vertices");
  }
  if (names.empty()) {
    for (std::size_t v = 0; v < n; ++v) {
      names.push_back(default_vertex_name(static_cast<VertexId>(v)));
      index.emplace(names.back(), static_cast<VertexId>(v));
    }
  }

  std::unordered_map<std::uint64_t, std::pair<std::size_t, Sign>> seen;
  std::vector<SignedEdge> edges;
  for (const auto& e : raw) {
    auto ia = index.find(std::string(e.a));
    auto ib = index.find(std::string(e.b));
    if (ia == index.end()) parse_fail(e.line, "unknown vertex '" + std::string(e.a) + "'");
    if (ib == index.end()) parse_fail(e.line, "unknown vertex '" + std::string(e.b) + "'");
    auto u = ia->second;
    auto v = ib->second;
    if (u == v) parse_fail(e.line, "loop at '" + std::string(e.a) + "'");
    if (u > v) std::swap(u, v);
    const auto key = (std::uint64_t{u} << 32) | v;
    auto [it, inserted] = seen.emplace(key, std::pair{e.line, e.sign});
    if (!inserted) {
      const bool digon = it->second.second != e.sign;
      parse_fail(e.line, std::string(digon ? "digon" : "duplicate edge") + " " +
                             std::string(e.a) + " " + std::string(e.b) +
                             " (first on line " + std::to_string(it->second.first) + ")");
    }
    edges.push_back({u, v, e.sign});
  }
  return Graph2EC(n, std::move(edges), std::move(names));
}

std::string serialize_graph(const Graph2EC& g, const std::vector<std::string>& comments) {
  std::ostringstream out;
  for (const auto& c : comments) out << "# " << c << '\n';
  out << "signed " << g.vertex_count() << '\n';
  bool defaults = true;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.name(v) != default_vertex_name(v)) {
      defaults = false;
      break;
    }
  }
  if (!defaults) {
    for (const auto& name : g.names()) out << "v " << name << '\n';
  }
  for (const auto& e : g.edges()) {
    out << "e " << g.name(e.u) << ' ' << g.name(e.v) << ' ' << sign_token(e.sign) << '\n';
  }
  return out.str();
}

Coloring parse_coloring(std::string_view text, const Graph2EC& g) {
  const auto n = g.vertex_count();
  std::vector<std::uint32_t> colors(n, 0);
  std::vector<bool> assigned(n, false);
  std::optional<SwitchingSet> switching;
  for (const auto& l : tokenize(text)) {
    const auto kind = l.tokens[0];
    if (kind == "c") {
      expect_arity(l, 3, "c <vertex> <colour>");
      const auto v = lookup(l, g, l.tokens[1]);
      if (assigned[v]) parse_fail(l.number, "vertex '" + g.name(v) + "' coloured twice");
      const auto c = parse_count(l, l.tokens[2], "colour");
      if (c == 0) parse_fail(l.number, "colours start at 1");
      if (c > n) parse_fail(l.number, "colour " + std::to_string(c) + " exceeds the vertex count");
      colors[v] = static_cast<std::uint32_t>(c - 1);
      assigned[v] = true;
    } else if (kind == "switch") {
      if (switching) parse_fail(l.number, "more than one switch line");
      std::vector<VertexId> members;
      for (std::size_t i = 1; i < l.tokens.size(); ++i) {
        members.push_back(lookup(l, g, l.tokens[i]));
      }
      switching = SwitchingSet(std::move(members));
    } else {
      parse_fail(l.number, "unknown record '" + std::string(kind) + "'");
    }
  }
  for (VertexId v = 0; v < n; ++v) {
    if (!assigned[v]) fail(ErrorCode::parse, "vertex '" + g.name(v) + "' has no colour");
  }
  try {
    return Coloring(std::move(colors), std::move(switching));
  } catch (const Error& e) {
    fail(ErrorCode::parse, e.what());
  }
}

std::string serialize_coloring(const Coloring& col, const Graph2EC& g) {
  if (col.vertex_count() != g.vertex_count()) {
    fail(ErrorCode::invalid_argument, "colouring size does not match the graph");
  }
  std::ostringstream out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    out << "c " << g.name(v) << ' ' << col[v] + 1 << '\n';
  }
  if (col.switching()) {
    out << "switch";
    for (auto v : col.switching()->members()) out << ' ' << g.name(v);
    out << '\n';
  }
  return out.str();
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::io, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrorCode::io, "cannot write " + path.string());
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) fail(ErrorCode::io, "write failed for " + path.string());
}

Graph2EC load_graph(const std::filesystem::path& path) {
  return parse_graph(read_text_file(path));
}

void save_graph(const std::filesystem::path& path, const Graph2EC& g,
                const std::vector<std::string>& comments) {
  write_text_file(path, serialize_graph(g, comments));
}

Coloring load_coloring(const std::filesystem::path& path, const Graph2EC& g) {
  return parse_coloring(read_text_file(path), g);
}

}  // namespace sgach
