#pragma once
// Group sources (builtin specs and fixture files), the two text formats, and
// DOT export. Cayley files carry a full multiplication table; perm files carry
// permutation generators and are closed on load.

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "commgraph/builders.hpp"
#include "commgraph/graph.hpp"
#include "commgraph/group.hpp"

namespace commgraph {

enum class SourceKind { builtin, cayley_file, perm_file };

struct GroupSource {
  SourceKind kind = SourceKind::builtin;
  std::string locator;  // builtin spec or file path

  std::string display() const {
    switch (kind) {
      case SourceKind::builtin: return "builtin:" + locator;
      case SourceKind::cayley_file: return "cayley:" + locator;
      case SourceKind::perm_file: return "perm:" + locator;
    }
    return locator;
  }
};

// Prefixes win; otherwise the extension decides; otherwise builtin.
inline GroupSource parse_source(const std::string& s) {
  auto prefixed = [&](const char* p) {
    return s.rfind(p, 0) == 0;
  };
  if (prefixed("builtin:")) return {SourceKind::builtin, s.substr(8)};
  if (prefixed("cayley:")) return {SourceKind::cayley_file, s.substr(7)};
  if (prefixed("perm:")) return {SourceKind::perm_file, s.substr(5)};
  if (s.size() > 7 && s.compare(s.size() - 7, 7, ".cayley") == 0)
    return {SourceKind::cayley_file, s};
  if (s.size() > 5 && s.compare(s.size() - 5, 5, ".perm") == 0)
    return {SourceKind::perm_file, s};
  return {SourceKind::builtin, s};
}

namespace detail {

// Yields data lines with 1-based numbering; a line whose first non-blank
// character is '#' is a comment, and "# name=..." is captured as metadata.
struct LineReader {
  std::istream& in;
  int lineno = 0;
  std::optional<std::string> name;

  bool next(std::string& out) {
    std::string line;
    while (std::getline(in, line)) {
      ++lineno;
      std::size_t i = line.find_first_not_of(" \t\r");
      if (i == std::string::npos) continue;
      if (line[i] == '#') {
        std::string rest = line.substr(i + 1);
        std::size_t j = rest.find_first_not_of(" \t");
        if (j != std::string::npos && rest.compare(j, 5, "name=") == 0 && !name) {
          std::string v = rest.substr(j + 5);
          while (!v.empty() && (v.back() == '\r' || v.back() == ' ' || v.back() == '\t'))
            v.pop_back();
          name = v;
        }
        continue;
      }
      if (line.back() == '\r') line.pop_back();
      out = line;
      return true;
    }
    return false;
  }
};

inline std::vector<int> parse_int_row(const std::string& line, int lineno) {
  std::istringstream ss(line);
  std::vector<int> row;
  std::string tok;
  while (ss >> tok) {
    try {
      std::size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      row.push_back(v);
    } catch (const std::exception&) {
      throw MalformedFileError(lineno, "line " + std::to_string(lineno) +
                                           ": expected an integer, got \"" + tok + "\"");
    }
  }
  return row;
}

}  // namespace detail

inline Group parse_cayley(std::istream& in, const std::string& default_name) {
  detail::LineReader reader{in};
  std::string line;
  if (!reader.next(line))
    throw MalformedFileError(reader.lineno, "missing group order line");
  std::vector<int> head = detail::parse_int_row(line, reader.lineno);
  if (head.size() != 1 || head[0] < 1)
    throw MalformedFileError(reader.lineno,
                             "line " + std::to_string(reader.lineno) +
                                 ": expected a single positive group order");
  int n = head[0];
  std::vector<std::vector<int>> table;
  table.reserve(n);
  for (int r = 0; r < n; ++r) {
    if (!reader.next(line))
      throw MalformedFileError(reader.lineno,
                               "expected " + std::to_string(n) + " table rows, got " +
                                   std::to_string(r));
    std::vector<int> row = detail::parse_int_row(line, reader.lineno);
    if (static_cast<int>(row.size()) != n)
      throw MalformedFileError(reader.lineno,
                               "line " + std::to_string(reader.lineno) + ": expected " +
                                   std::to_string(n) + " entries, got " +
                                   std::to_string(row.size()));
    for (int v : row)
      if (v < 0 || v >= n)
        throw MalformedFileError(reader.lineno, "line " + std::to_string(reader.lineno) +
                                                    ": entry " + std::to_string(v) +
                                                    " outside [0," + std::to_string(n) + ")");
    table.push_back(std::move(row));
  }
  if (reader.next(line))
    throw MalformedFileError(reader.lineno,
                             "line " + std::to_string(reader.lineno) + ": trailing data");
  return Group::from_cayley_table(table, reader.name.value_or(default_name));
}

inline Group parse_perm(std::istream& in, const std::string& default_name,
                        std::size_t max_order = Group::default_order_cap) {
  detail::LineReader reader{in};
  std::string line;
  if (!reader.next(line))
    throw MalformedFileError(reader.lineno, "missing degree line");
  std::istringstream ss(line);
  std::string word;
  int degree = 0;
  if (!(ss >> word >> degree) || word != "degree" || degree < 1 || (ss >> word))
    throw MalformedFileError(reader.lineno, "line " + std::to_string(reader.lineno) +
                                                ": expected \"degree k\"");
  std::vector<std::vector<int>> gens;
  while (reader.next(line)) {
    std::vector<int> images = detail::parse_int_row(line, reader.lineno);
    if (static_cast<int>(images.size()) != degree)
      throw MalformedFileError(reader.lineno,
                               "line " + std::to_string(reader.lineno) + ": expected " +
                                   std::to_string(degree) + " images, got " +
                                   std::to_string(images.size()));
    for (int v : images)
      if (v < 0 || v >= degree)
        throw MalformedFileError(reader.lineno,
                                 "line " + std::to_string(reader.lineno) + ": image " +
                                     std::to_string(v) + " outside [0," +
                                     std::to_string(degree) + ")");
    gens.push_back(std::move(images));
  }
  if (gens.empty())
    throw MalformedFileError(reader.lineno, "no generator lines");
  return Group::from_permutation_generators(degree, gens,
                                            reader.name.value_or(default_name), max_order);
}

inline Group parse_cayley_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MalformedFileError(0, "cannot open " + path);
  return parse_cayley(in, std::filesystem::path(path).stem().string());
}

inline Group parse_perm_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MalformedFileError(0, "cannot open " + path);
  return parse_perm(in, std::filesystem::path(path).stem().string());
}

inline Group load_source(const GroupSource& src) {
  switch (src.kind) {
    case SourceKind::builtin: return build_builtin(src.locator);
    case SourceKind::cayley_file: return parse_cayley_file(src.locator);
    case SourceKind::perm_file: return parse_perm_file(src.locator);
  }
  throw GroupError("unknown source kind");
}

// All *.cayley and *.perm files under dir, sorted by path for determinism.
inline std::vector<GroupSource> corpus_from_directory(const std::string& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw GroupError("not a directory: " + dir);
  std::vector<GroupSource> out;
  std::vector<fs::path> paths;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file()) {
      std::string ext = entry.path().extension().string();
      if (ext == ".cayley" || ext == ".perm") paths.push_back(entry.path());
    }
  std::sort(paths.begin(), paths.end());
  for (const fs::path& p : paths) {
    SourceKind k = p.extension() == ".cayley" ? SourceKind::cayley_file
                                              : SourceKind::perm_file;
    out.push_back({k, p.string()});
  }
  return out;
}

// ---- export ----

inline void export_cayley(std::ostream& out, const Group& g) {
  if (!g.name().empty()) out << "# name=" << g.name() << "\n";
  out << g.order() << "\n";
  for (int i = 0; i < g.order(); ++i) {
    for (int j = 0; j < g.order(); ++j) {
      if (j) out << ' ';
      out << g.mul(i, j);
    }
    out << "\n";
  }
}

inline void export_perm(std::ostream& out, const Group& g) {
  if (!g.has_perm_generators())
    throw GroupError("group was not built from permutation generators");
  if (!g.name().empty()) out << "# name=" << g.name() << "\n";
  out << "degree " << g.perm_degree() << "\n";
  for (const std::vector<int>& gen : g.perm_generators()) {
    for (std::size_t i = 0; i < gen.size(); ++i) {
      if (i) out << ' ';
      out << gen[i];
    }
    out << "\n";
  }
}

inline void export_cayley_file(const std::string& path, const Group& g) {
  std::ofstream out(path);
  if (!out) throw GroupError("cannot write " + path);
  export_cayley(out, g);
}

inline void export_perm_file(const std::string& path, const Group& g) {
  std::ofstream out(path);
  if (!out) throw GroupError("cannot write " + path);
  export_perm(out, g);
}

namespace detail {

inline std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace detail

// One undirected graph; nodes are labeled with element labels and filled with
// a color cycling deterministically by component id.
inline void export_dot(std::ostream& out, const CommutingGraph& g,
                       const ComponentPartition& part) {
  if (g.empty()) throw EmptyGraphError("nothing to draw: commuting graph is empty");
  static const char* palette[] = {
      "#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3", "#fdb462",
      "#b3de69", "#fccde5", "#d9d9d9", "#bc80bd", "#ccebc5", "#ffed6f"};
  constexpr int palette_size = 12;
  out << "graph commuting {\n";
  out << "  node [style=filled];\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    std::string label =
        g.parent ? g.parent->label(g.vertices[v]) : std::to_string(g.vertices[v]);
    out << "  v" << v << " [label=\"" << detail::dot_escape(label) << "\", fillcolor=\""
        << palette[part.component_of[v] % palette_size] << "\"];\n";
  }
  for (int v = 0; v < g.vertex_count(); ++v)
    g.adj[v].for_each([&](int w) {
      if (w > v) out << "  v" << v << " -- v" << w << ";\n";
    });
  out << "}\n";
}

inline void export_dot_file(const std::string& path, const CommutingGraph& g,
                            const ComponentPartition& part) {
  std::ofstream out(path);
  if (!out) throw GroupError("cannot write " + path);
  export_dot(out, g, part);
}

}  // namespace commgraph
