#include "graphent/graph.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace graphent {

VertexId Graph::add_vertex(std::string name) {
  if (name.empty())
    throw std::invalid_argument("empty vertex name");
  if (vertex_index_.count(name))
    throw std::invalid_argument("duplicate vertex name '" + name + "'");
  const VertexId id = vertex_names_.size();
  vertex_index_.emplace(name, id);
  vertex_names_.push_back(std::move(name));
  out_.emplace_back();
  in_.emplace_back();
  return id;
}

EdgeId Graph::add_edge(std::string name, VertexId source, VertexId range) {
  if (name.empty())
    throw std::invalid_argument("empty edge name");
  if (source >= vertex_count() || range >= vertex_count())
    throw std::invalid_argument("edge '" + name + "' has an endpoint outside the graph");
  if (edge_index_.count(name))
    throw std::invalid_argument("duplicate edge name '" + name + "'");
  const EdgeId id = edges_.size();
  edge_index_.emplace(name, id);
  edges_.push_back(Edge{std::move(name), source, range});
  out_[source].push_back(id);
  in_[range].push_back(id);
  return id;
}

std::optional<VertexId> Graph::find_vertex(std::string_view name) const {
  auto it = vertex_index_.find(std::string(name));
  if (it == vertex_index_.end())
    return std::nullopt;
  return it->second;
}

bool Graph::has_edge_named(std::string_view name) const {
  return edge_index_.count(std::string(name)) != 0;
}

// ---------------------------------------------------------------------------
// Text and JSON formats

namespace {

std::string_view strip(std::string_view s) {
  const auto ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos)
    return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

bool valid_name(std::string_view s) {
  if (s.empty())
    return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    const auto u = static_cast<unsigned char>(c);
    return u >= 0x80 || std::isalnum(u) || c == '_' || c == '.' || c == ':' ||
           c == '*' || c == '\'' || c == '+' || c == '-';
  });
}

struct PendingEdge {
  std::size_t line;
  std::string label; // empty when the label was omitted
  std::string source;
  std::string range;
};

// Assigns e1, e2, ... to unlabeled edges, skipping names used explicitly.
void add_pending_edges(Graph &g, std::vector<PendingEdge> &pending) {
  std::set<std::string> used;
  for (const auto &p : pending) {
    if (p.label.empty())
      continue;
    if (!used.insert(p.label).second)
      throw ParseError(p.line, "duplicate edge name '" + p.label + "'");
  }
  std::size_t counter = 0;
  for (auto &p : pending) {
    if (p.label.empty()) {
      std::string candidate;
      do {
        candidate = "e" + std::to_string(++counter);
      } while (used.count(candidate));
      used.insert(candidate);
      p.label = candidate;
    }
    const auto s = g.find_vertex(p.source);
    const auto r = g.find_vertex(p.range);
    if (!s || !r)
      throw ParseError(p.line, "edge '" + p.label + "' refers to an undeclared vertex");
    g.add_edge(p.label, *s, *r);
  }
}

} // namespace

Graph parse_graph_text(std::string_view text) {
  Graph g;
  std::vector<PendingEdge> pending;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos)
      nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);

    std::size_t spos = 0;
    while (spos <= line.size()) {
      auto semi = line.find(';', spos);
      if (semi == std::string_view::npos)
        semi = line.size();
      const std::string_view stmt = strip(line.substr(spos, semi - spos));
      spos = semi + 1;
      if (stmt.empty())
        continue;

      const auto arrow = stmt.find("->");
      if (arrow == std::string_view::npos) {
        if (!valid_name(stmt))
          throw ParseError(line_no, "invalid vertex declaration '" + std::string(stmt) + "'");
        if (g.find_vertex(stmt))
          throw ParseError(line_no, "duplicate vertex name '" + std::string(stmt) + "'");
        g.add_vertex(std::string(stmt));
        continue;
      }

      const std::string_view lhs = strip(stmt.substr(0, arrow));
      std::string_view rhs = strip(stmt.substr(arrow + 2));
      std::string_view label;
      if (auto lb = rhs.find('['); lb != std::string_view::npos) {
        const auto rb = rhs.find(']', lb);
        if (rb == std::string_view::npos || !strip(rhs.substr(rb + 1)).empty())
          throw ParseError(line_no, "malformed edge label in '" + std::string(stmt) + "'");
        label = strip(rhs.substr(lb + 1, rb - lb - 1));
        rhs = strip(rhs.substr(0, lb));
        if (!valid_name(label))
          throw ParseError(line_no, "invalid edge label in '" + std::string(stmt) + "'");
      }
      if (!valid_name(lhs) || !valid_name(rhs))
        throw ParseError(line_no, "syntax error in edge '" + std::string(stmt) + "'");
      for (auto name : {lhs, rhs})
        if (!g.find_vertex(name))
          g.add_vertex(std::string(name));
      pending.push_back({line_no, std::string(label), std::string(lhs), std::string(rhs)});
    }
    if (nl == text.size())
      break;
  }
  add_pending_edges(g, pending);
  return g;
}

Graph parse_graph_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error &e) {
    throw ParseError(0, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("vertices") || !doc["vertices"].is_array())
    throw ParseError(0, "JSON graph needs a \"vertices\" array");

  Graph g;
  for (const auto &v : doc["vertices"]) {
    if (!v.is_string() || !valid_name(v.get<std::string>()))
      throw ParseError(0, "vertex names must be non-empty strings");
    const auto name = v.get<std::string>();
    if (g.find_vertex(name))
      throw ParseError(0, "duplicate vertex name '" + name + "'");
    g.add_vertex(name);
  }

  std::vector<PendingEdge> pending;
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array())
      throw ParseError(0, "\"edges\" must be an array");
    for (const auto &e : doc["edges"]) {
      if (!e.is_object() || !e.contains("source") || !e.contains("range") ||
          !e["source"].is_string() || !e["range"].is_string())
        throw ParseError(0, "each edge needs string \"source\" and \"range\"");
      PendingEdge p{0, "", e["source"].get<std::string>(), e["range"].get<std::string>()};
      if (e.contains("name")) {
        if (!e["name"].is_string() || !valid_name(e["name"].get<std::string>()))
          throw ParseError(0, "edge names must be non-empty strings");
        p.label = e["name"].get<std::string>();
      }
      pending.push_back(std::move(p));
    }
  }
  add_pending_edges(g, pending);
  return g;
}

Graph parse_graph(std::string_view text) {
  const auto body = strip(text);
  if (!body.empty() && body.front() == '{')
    return parse_graph_json(body);
  return parse_graph_text(text);
}

std::string to_json(const Graph &g) {
  nlohmann::json doc;
  doc["vertices"] = nlohmann::json::array();
  for (const auto &name : g.vertex_names())
    doc["vertices"].push_back(name);
  std::vector<EdgeId> order(g.edge_count());
  std::iota(order.begin(), order.end(), EdgeId{0});
  std::sort(order.begin(), order.end(),
            [&](EdgeId a, EdgeId b) { return g.edge(a).name < g.edge(b).name; });
  doc["edges"] = nlohmann::json::array();
  for (EdgeId e : order) {
    const Edge &edge = g.edge(e);
    doc["edges"].push_back({{"name", edge.name},
                            {"source", g.vertex_name(edge.source)},
                            {"range", g.vertex_name(edge.range)}});
  }
  return doc.dump();
}

std::string to_text(const Graph &g) {
  std::ostringstream out;
  for (const auto &name : g.vertex_names())
    out << name << ";\n";
  for (const auto &e : g.edges())
    out << g.vertex_name(e.source) << " -> " << g.vertex_name(e.range) << " [" << e.name
        << "]\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// Transforms

VertexClass vertex_classes(const Graph &g) {
  VertexClass vc;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.is_sink(v))
      vc.sinks.insert(v);
    else
      vc.regular.insert(v);
    if (g.is_source(v))
      vc.sources.insert(v);
  }
  return vc;
}

namespace {

Graph copy_vertices(const Graph &g) {
  Graph out;
  for (const auto &name : g.vertex_names())
    out.add_vertex(name);
  return out;
}

} // namespace

Graph extended_graph(const Graph &g) {
  Graph out = copy_vertices(g);
  for (const auto &e : g.edges())
    out.add_edge(e.name, e.source, e.range);
  for (const auto &e : g.edges()) {
    std::string ghost = e.name + std::string(kGhostMarker);
    if (out.has_edge_named(ghost))
      throw std::invalid_argument("ghost edge name '" + ghost + "' collides with an existing edge");
    out.add_edge(std::move(ghost), e.range, e.source);
  }
  return out;
}

Graph opposite_graph(const Graph &g) {
  Graph out = copy_vertices(g);
  for (const auto &e : g.edges())
    out.add_edge(e.name, e.range, e.source);
  return out;
}

Graph induced_subgraph(const Graph &g, const std::vector<bool> &keep) {
  Graph out;
  std::vector<VertexId> remap(g.vertex_count(), 0);
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (keep.at(v))
      remap[v] = out.add_vertex(g.vertex_name(v));
  for (const auto &e : g.edges())
    if (keep[e.source] && keep[e.range])
      out.add_edge(e.name, remap[e.source], remap[e.range]);
  return out;
}

Graph eliminate(const Graph &g, const std::set<VertexId> &removed) {
  std::vector<bool> keep(g.vertex_count(), true);
  for (VertexId v : removed) {
    if (v >= g.vertex_count())
      throw std::invalid_argument("eliminate: vertex id out of range");
    if (!g.is_sink(v) && !g.is_source(v))
      throw std::invalid_argument("eliminate: vertex '" + g.vertex_name(v) +
                                  "' is neither a sink nor a source");
    keep[v] = false;
  }
  return induced_subgraph(g, keep);
}

Graph trim(const Graph &g) {
  Graph current = g;
  for (;;) {
    const VertexClass vc = vertex_classes(current);
    std::set<VertexId> removable = vc.sinks;
    removable.insert(vc.sources.begin(), vc.sources.end());
    if (removable.empty())
      return current;
    current = eliminate(current, removable);
  }
}

std::vector<Graph> components(const Graph &g) {
  const std::size_t n = g.vertex_count();
  std::vector<VertexId> parent(n);
  std::iota(parent.begin(), parent.end(), VertexId{0});
  auto find = [&](VertexId v) {
    while (parent[v] != v)
      v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto &e : g.edges()) {
    const auto a = find(e.source), b = find(e.range);
    if (a != b)
      parent[std::max(a, b)] = std::min(a, b);
  }

  std::vector<Graph> out;
  std::vector<bool> done(n, false);
  for (VertexId v = 0; v < n; ++v) {
    const VertexId root = find(v);
    if (done[root])
      continue;
    done[root] = true;
    std::vector<bool> keep(n);
    for (VertexId u = 0; u < n; ++u)
      keep[u] = find(u) == root;
    out.push_back(induced_subgraph(g, keep));
  }
  return out;
}

Graph disjoint_union(const Graph &a, const Graph &b) {
  Graph out = a;
  std::vector<VertexId> remap(b.vertex_count());
  for (VertexId v = 0; v < b.vertex_count(); ++v) {
    std::string name = b.vertex_name(v);
    while (out.find_vertex(name))
      name = "b." + name;
    remap[v] = out.add_vertex(std::move(name));
  }
  for (const auto &e : b.edges()) {
    std::string name = e.name;
    while (out.has_edge_named(name))
      name = "b." + name;
    out.add_edge(std::move(name), remap[e.source], remap[e.range]);
  }
  return out;
}

} // namespace graphent
