#include "freeboole/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace freeboole {

namespace {

struct Header {
  std::string kind;
  int n = 0;
  int m = 0;
};

[[noreturn]] void fail(const std::string& name, int line, const std::string& msg) {
  throw ParseError(name + ":" + std::to_string(line) + ": " + msg);
}

// Reads lines, skipping comments and blanks.  The header must come first;
// each payload line is handed to the callback with the header in scope.
template <typename OnLine>
Header read_lines(std::istream& in, const std::string& name, const std::string& expected_kind,
                  OnLine on_line) {
  Header header;
  bool got_header = false;
  std::string line;
  int ln = 0;
  while (std::getline(in, line)) {
    ++ln;
    std::istringstream iss(line);
    std::string tag;
    if (!(iss >> tag) || tag == "c") continue;
    if (!got_header) {
      if (tag != "p") fail(name, ln, "expected header line 'p <kind> n m'");
      if (!(iss >> header.kind >> header.n >> header.m)) fail(name, ln, "malformed header");
      if (header.kind != expected_kind)
        fail(name, ln, "expected a 'p " + expected_kind + "' file, found 'p " + header.kind + "'");
      if (header.n < 0) fail(name, ln, "negative vertex count");
      got_header = true;
      continue;
    }
    on_line(header, tag, iss, ln);
  }
  if (!got_header) fail(name, ln, "missing header line");
  return header;
}

int read_id(std::istringstream& iss, const std::string& name, int ln, int n) {
  int id;
  if (!(iss >> id)) fail(name, ln, "expected a vertex id");
  if (id < 1 || id > n) fail(name, ln, "vertex id " + std::to_string(id) + " out of range");
  return id - 1;
}

void expect_end(std::istringstream& iss, const std::string& name, int ln) {
  std::string extra;
  if (iss >> extra) fail(name, ln, "unexpected trailing token '" + extra + "'");
}

}  // namespace

Graph parse_graph(std::istream& in, const std::string& name) {
  std::vector<std::pair<int, int>> edges;
  Header header =
      read_lines(in, name, "edge", [&](const Header& h, const std::string& tag,
                                       std::istringstream& iss, int ln) {
        if (tag != "e") fail(name, ln, "expected an 'e u v' line");
        int u = read_id(iss, name, ln, h.n);
        int v = read_id(iss, name, ln, h.n);
        expect_end(iss, name, ln);
        if (u == v) fail(name, ln, "loop edge");
        edges.emplace_back(u, v);
      });
  Graph g(header.n);
  for (auto [u, v] : edges) g.add_edge(u, v);  // duplicates collapse in the bit rows
  return g;
}

Hypergraph parse_hypergraph(std::istream& in, const std::string& name) {
  std::vector<std::vector<int>> edges;
  Header header =
      read_lines(in, name, "hyper", [&](const Header& h, const std::string& tag,
                                        std::istringstream& iss, int ln) {
        if (tag != "h") fail(name, ln, "expected an 'h v1 v2 ...' line");
        std::vector<int> edge;
        int id;
        while (iss >> id) {
          if (id < 1 || id > h.n)
            fail(name, ln, "vertex id " + std::to_string(id) + " out of range");
          edge.push_back(id - 1);
        }
        if (!iss.eof()) fail(name, ln, "malformed vertex id");
        if (edge.size() < 2) fail(name, ln, "hyperedge needs at least two vertices");
        std::sort(edge.begin(), edge.end());
        if (std::adjacent_find(edge.begin(), edge.end()) != edge.end())
          fail(name, ln, "repeated vertex in hyperedge");
        edges.push_back(std::move(edge));
      });
  return Hypergraph(header.n, std::move(edges));  // constructor deduplicates
}

Poset parse_poset(std::istream& in, const std::string& name) {
  std::vector<std::pair<int, int>> rel;
  Header header =
      read_lines(in, name, "order", [&](const Header& h, const std::string& tag,
                                        std::istringstream& iss, int ln) {
        if (tag != "r") fail(name, ln, "expected an 'r u v' line");
        int u = read_id(iss, name, ln, h.n);
        int v = read_id(iss, name, ln, h.n);
        expect_end(iss, name, ln);
        if (u == v) fail(name, ln, "an element cannot be strictly below itself");
        rel.emplace_back(u, v);
      });
  try {
    return Poset(header.n, rel);
  } catch (const PreconditionError& e) {
    throw ParseError(name + ": " + e.what());
  }
}

namespace {

template <typename Parse>
auto parse_file(const std::string& path, Parse parse) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  return parse(in, path);
}

}  // namespace

Graph parse_graph_file(const std::string& path) {
  return parse_file(path,
                    [](std::istream& in, const std::string& n) { return parse_graph(in, n); });
}

Hypergraph parse_hypergraph_file(const std::string& path) {
  return parse_file(
      path, [](std::istream& in, const std::string& n) { return parse_hypergraph(in, n); });
}

Poset parse_poset_file(const std::string& path) {
  return parse_file(path,
                    [](std::istream& in, const std::string& n) { return parse_poset(in, n); });
}

Structure parse_structure(std::istream& in, const std::string& name) {
  std::stringstream buffer;
  buffer << in.rdbuf();
  std::string text = buffer.str();

  std::istringstream scan(text);
  std::string line;
  int ln = 0;
  while (std::getline(scan, line)) {
    ++ln;
    std::istringstream iss(line);
    std::string tag;
    if (!(iss >> tag) || tag == "c") continue;
    if (tag != "p") fail(name, ln, "expected header line 'p <kind> n m'");
    std::string kind;
    if (!(iss >> kind)) fail(name, ln, "malformed header");
    std::istringstream body(text);
    if (kind == "edge") return parse_graph(body, name);
    if (kind == "hyper") return parse_hypergraph(body, name);
    if (kind == "order") return parse_poset(body, name);
    fail(name, ln, "unknown structure kind '" + kind + "'");
  }
  fail(name, ln, "missing header line");
}

Structure parse_structure_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  return parse_structure(in, path);
}

std::string write_graph(const Graph& g) {
  std::ostringstream out;
  auto edges = g.edges();
  out << "p edge " << g.vertex_count() << " " << edges.size() << "\n";
  for (auto [u, v] : edges) out << "e " << u + 1 << " " << v + 1 << "\n";
  return out.str();
}

std::string write_hypergraph(const Hypergraph& h) {
  std::ostringstream out;
  out << "p hyper " << h.vertex_count() << " " << h.edge_count() << "\n";
  for (const auto& e : h.edge_lists()) {
    out << "h";
    for (int v : e) out << " " << v + 1;
    out << "\n";
  }
  return out.str();
}

std::string file_digest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path + ": cannot open file");
  std::uint64_t hash = 1469598103934665603ull;
  char c;
  while (in.get(c)) {
    hash ^= static_cast<unsigned char>(c);
    hash *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
  return std::string(buf);
}

}  // namespace freeboole
