#include "octi/orep.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace octi {

namespace {

[[noreturn]] void parse_fail(int line, const std::string& message) {
  fail("ParseError", "line " + std::to_string(line) + ": " + message);
}

struct Tokens {
  std::vector<std::string> parts;
  int line;

  long long num(std::size_t i, const char* what) const {
    if (i >= parts.size()) parse_fail(line, std::string("missing ") + what);
    try {
      std::size_t pos = 0;
      long long v = std::stoll(parts[i], &pos);
      if (pos != parts[i].size()) throw std::invalid_argument("trailing");
      return v;
    } catch (const std::exception&) {
      parse_fail(line, std::string("bad ") + what + " '" + parts[i] + "'");
    }
  }
};

std::vector<Tokens> tokenize(const std::string& text) {
  std::vector<Tokens> out;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::istringstream ls(raw);
    Tokens t;
    t.line = lineno;
    std::string word;
    while (ls >> word) t.parts.push_back(word);
    if (t.parts.empty() || t.parts[0][0] == '#') continue;
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace

OctiRep parse_rep(const std::string& text) {
  auto lines = tokenize(text);
  if (lines.empty() || lines[0].parts.size() != 2 || lines[0].parts[0] != "orep" || lines[0].parts[1] != "1")
    parse_fail(lines.empty() ? 1 : lines[0].line, "expected header 'orep 1'");

  int n = -1;
  struct RawEdge {
    VertexId u = -1, v = -1;
    int dir = -1;
    bool seen = false;
    int line = 0;
  };
  std::vector<RawEdge> edges;
  struct RawRot {
    std::vector<EdgeId> edge_ids;
    bool seen = false;
    int line = 0;
  };
  std::vector<RawRot> rots;
  VertexId outer_u = -1, outer_v = -1;
  bool outer_seen = false;

  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Tokens& t = lines[i];
    const std::string& kind = t.parts[0];
    if (kind == "vertices") {
      if (n >= 0) parse_fail(t.line, "duplicate vertices record");
      n = static_cast<int>(t.num(1, "vertex count"));
      if (n <= 0) parse_fail(t.line, "vertex count must be positive");
      rots.assign(static_cast<std::size_t>(n), {});
    } else if (kind == "edge") {
      if (n < 0) parse_fail(t.line, "edge before vertices record");
      if (t.parts.size() != 5) parse_fail(t.line, "edge record needs: edge <i> <u> <v> <dir>");
      long long id = t.num(1, "edge id");
      long long u = t.num(2, "vertex id");
      long long v = t.num(3, "vertex id");
      long long dir = t.num(4, "direction");
      if (u < 0 || u >= n) parse_fail(t.line, "edge endpoint " + std::to_string(u) + " out of range");
      if (v < 0 || v >= n) parse_fail(t.line, "edge endpoint " + std::to_string(v) + " out of range");
      if (dir < 0 || dir > 7) parse_fail(t.line, "direction must be 0..7");
      if (id < 0) parse_fail(t.line, "edge id must be nonnegative");
      if (static_cast<std::size_t>(id) >= edges.size()) edges.resize(static_cast<std::size_t>(id) + 1);
      RawEdge& e = edges[static_cast<std::size_t>(id)];
      if (e.seen) parse_fail(t.line, "duplicate edge id " + std::to_string(id));
      e = {static_cast<VertexId>(u), static_cast<VertexId>(v), static_cast<int>(dir), true, t.line};
    } else if (kind == "rot") {
      if (n < 0) parse_fail(t.line, "rot before vertices record");
      long long v = t.num(1, "vertex id");
      if (v < 0 || v >= n) parse_fail(t.line, "rot vertex " + std::to_string(v) + " out of range");
      RawRot& r = rots[static_cast<std::size_t>(v)];
      if (r.seen) parse_fail(t.line, "duplicate rot record for vertex " + std::to_string(v));
      r.seen = true;
      r.line = t.line;
      for (std::size_t j = 2; j < t.parts.size(); ++j)
        r.edge_ids.push_back(static_cast<EdgeId>(t.num(j, "edge id")));
    } else if (kind == "outer") {
      if (outer_seen) parse_fail(t.line, "duplicate outer record");
      outer_seen = true;
      outer_u = static_cast<VertexId>(t.num(1, "vertex id"));
      outer_v = static_cast<VertexId>(t.num(2, "vertex id"));
    } else {
      parse_fail(t.line, "unknown record '" + kind + "'");
    }
  }

  if (n < 0) parse_fail(1, "missing vertices record");
  if (!outer_seen) parse_fail(1, "missing outer record");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (!edges[i].seen) parse_fail(1, "edge ids not contiguous: missing edge " + std::to_string(i));
  }

  OctiRep rep;
  rep.vertex_count = n;
  rep.rotation.assign(static_cast<std::size_t>(n), {});
  for (const auto& e : edges) {
    rep.darts.push_back({e.u, Direction(e.dir)});
    rep.darts.push_back({e.v, Direction(e.dir).opposite()});
  }
  for (VertexId v = 0; v < n; ++v) {
    const RawRot& r = rots[static_cast<std::size_t>(v)];
    if (!r.seen) parse_fail(1, "missing rot record for vertex " + std::to_string(v));
    for (EdgeId id : r.edge_ids) {
      if (id < 0 || static_cast<std::size_t>(id) >= edges.size())
        parse_fail(r.line, "rot lists unknown edge " + std::to_string(id));
      const RawEdge& e = edges[static_cast<std::size_t>(id)];
      DartId d;
      if (e.u == v)
        d = 2 * id;
      else if (e.v == v)
        d = 2 * id + 1;
      else
        parse_fail(r.line, "edge " + std::to_string(id) + " is not incident to vertex " + std::to_string(v));
      rep.rotation[static_cast<std::size_t>(v)].push_back(d);
    }
  }

  rep.outer_dart = -1;
  if (outer_u >= 0 && outer_u < n && outer_v >= 0 && outer_v < n) {
    for (EdgeId e = 0; e < rep.edge_count() && rep.outer_dart < 0; ++e) {
      if (rep.edge_u(e) == outer_u && rep.edge_v(e) == outer_v) rep.outer_dart = 2 * e;
      else if (rep.edge_u(e) == outer_v && rep.edge_v(e) == outer_u) rep.outer_dart = 2 * e + 1;
    }
  }
  if (rep.outer_dart < 0)
    parse_fail(1, "outer record names no existing dart " + std::to_string(outer_u) + " -> " + std::to_string(outer_v));
  return rep;
}

std::string serialize_rep(const OctiRep& rep) {
  std::ostringstream out;
  out << "orep 1\n";
  out << "vertices " << rep.vertex_count << "\n";
  for (EdgeId e = 0; e < rep.edge_count(); ++e)
    out << "edge " << e << " " << rep.edge_u(e) << " " << rep.edge_v(e) << " " << rep.edge_dir(e).value << "\n";
  for (VertexId v = 0; v < rep.vertex_count; ++v) {
    out << "rot " << v;
    for (DartId d : rep.rotation[static_cast<std::size_t>(v)]) out << " " << dart_edge(d);
    out << "\n";
  }
  out << "outer " << rep.dart_from(rep.outer_dart) << " " << rep.dart_to(rep.outer_dart) << "\n";
  return out.str();
}

GridDrawing parse_drawing(const std::string& text) {
  auto lines = tokenize(text);
  if (lines.empty() || lines[0].parts.size() != 2 || lines[0].parts[0] != "odraw" || lines[0].parts[1] != "1")
    parse_fail(lines.empty() ? 1 : lines[0].line, "expected header 'odraw 1'");
  std::vector<std::pair<long long, Point>> rows;
  long long max_v = -1;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Tokens& t = lines[i];
    if (t.parts.size() != 3) parse_fail(t.line, "coordinate record needs: <v> <x> <y>");
    long long v = t.num(0, "vertex id");
    Point p{t.num(1, "x"), t.num(2, "y")};
    if (v < 0) parse_fail(t.line, "vertex id must be nonnegative");
    rows.emplace_back(v, p);
    max_v = std::max(max_v, v);
  }
  GridDrawing drw;
  drw.coords.assign(static_cast<std::size_t>(max_v + 1), Point{});
  std::vector<char> seen(static_cast<std::size_t>(max_v + 1), 0);
  for (auto& [v, p] : rows) {
    if (seen[static_cast<std::size_t>(v)]) parse_fail(1, "duplicate coordinate for vertex " + std::to_string(v));
    seen[static_cast<std::size_t>(v)] = 1;
    drw.coords[static_cast<std::size_t>(v)] = p;
  }
  for (std::size_t v = 0; v < seen.size(); ++v) {
    if (!seen[v]) parse_fail(1, "missing coordinate for vertex " + std::to_string(v));
  }
  return drw;
}

std::string serialize_drawing(const GridDrawing& drw) {
  std::ostringstream out;
  out << "odraw 1\n";
  for (std::size_t v = 0; v < drw.coords.size(); ++v)
    out << v << " " << drw.coords[v].x << " " << drw.coords[v].y << "\n";
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("IoError", "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail("IoError", "cannot open " + path + " for writing");
  out << content;
}

}  // namespace octi
