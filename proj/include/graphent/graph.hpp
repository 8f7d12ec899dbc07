#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace graphent {

using VertexId = std::size_t;
using EdgeId = std::size_t;

struct Edge {
  std::string name;
  VertexId source;
  VertexId range;
};

/// Error raised while reading a graph file. Line numbers are 1-based; 0 means
/// the error is not tied to a particular line (e.g. JSON input).
class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, const std::string &what)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

/// Finite directed multigraph with named vertices and named edges.
///
/// Vertices keep their insertion order; that order fixes the row/column order
/// of the adjacency matrix. Parallel edges and loops are stored individually.
class Graph {
public:
  Graph() = default;

  /// Throws std::invalid_argument on a duplicate name.
  VertexId add_vertex(std::string name);
  /// Throws std::invalid_argument on a duplicate name or a bad endpoint.
  EdgeId add_edge(std::string name, VertexId source, VertexId range);

  std::size_t vertex_count() const { return vertex_names_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  bool empty() const { return vertex_names_.empty(); }

  const std::string &vertex_name(VertexId v) const { return vertex_names_.at(v); }
  std::span<const std::string> vertex_names() const { return vertex_names_; }
  std::optional<VertexId> find_vertex(std::string_view name) const;
  bool has_edge_named(std::string_view name) const;

  const Edge &edge(EdgeId e) const { return edges_.at(e); }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const EdgeId> out_edges(VertexId v) const { return out_.at(v); }
  std::span<const EdgeId> in_edges(VertexId v) const { return in_.at(v); }

  bool is_sink(VertexId v) const { return out_.at(v).empty(); }
  bool is_source(VertexId v) const { return in_.at(v).empty(); }

private:
  std::vector<std::string> vertex_names_;
  std::unordered_map<std::string, VertexId> vertex_index_;
  std::vector<Edge> edges_;
  std::unordered_map<std::string, EdgeId> edge_index_;
  std::vector<std::vector<EdgeId>> out_;
  std::vector<std::vector<EdgeId>> in_;
};

/// Sinks, sources and regular vertices. An isolated vertex is both a sink and
/// a source; every non-sink of a finite graph is regular.
struct VertexClass {
  std::set<VertexId> sinks;
  std::set<VertexId> sources;
  std::set<VertexId> regular;
};

/// Parses either the line-oriented text format or the JSON form (detected by a
/// leading '{').
Graph parse_graph(std::string_view text);
Graph parse_graph_text(std::string_view text);
Graph parse_graph_json(std::string_view text);

/// Canonical JSON form; edges sorted by name.
std::string to_json(const Graph &g);
/// Text form accepted by parse_graph_text; vertices first, then labeled edges.
std::string to_text(const Graph &g);

VertexClass vertex_classes(const Graph &g);

/// Suffix appended to an edge name to spell its ghost edge.
inline constexpr std::string_view kGhostMarker = "*";

/// Same vertices; each edge e gains a reversed ghost edge named e*.
Graph extended_graph(const Graph &g);
/// Same vertices; every edge reversed (names kept).
Graph opposite_graph(const Graph &g);

/// Removes the vertices in `removed` and every edge touching them. Each
/// removed vertex must be a sink or a source of `g`.
Graph eliminate(const Graph &g, const std::set<VertexId> &removed);
/// Iterated elimination of all sinks and sources until none remain.
Graph trim(const Graph &g);

/// Weakly connected components, ordered by their first vertex.
std::vector<Graph> components(const Graph &g);
/// Block union. Names are kept when they do not collide; otherwise names
/// coming from `b` are prefixed until unique.
Graph disjoint_union(const Graph &a, const Graph &b);

/// Subgraph induced by `keep`, order inherited from `g`.
Graph induced_subgraph(const Graph &g, const std::vector<bool> &keep);

} // namespace graphent
