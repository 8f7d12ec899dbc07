#include "graphent/oracle.hpp"

#include <random>
#include <string>

namespace graphent::oracle {

namespace {

// Calls visit(from, to, edges) for every path of exact length n.
template <typename Visit> void for_each_path(const Graph &g, std::size_t n, Visit &&visit) {
  std::vector<EdgeId> stack;
  // Recursion depth is n.
  auto extend = [&](auto &self, VertexId from, VertexId at) -> void {
    if (stack.size() == n) {
      visit(from, at, stack);
      return;
    }
    for (EdgeId e : g.out_edges(at)) {
      stack.push_back(e);
      self(self, from, g.edge(e).range);
      stack.pop_back();
    }
  };
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    extend(extend, v, v);
}

} // namespace

PathList enum_paths(const Graph &g, std::size_t n, std::size_t cap) {
  PathList list;
  list.length = n;
  for_each_path(g, n, [&](VertexId from, VertexId to, const std::vector<EdgeId> &edges) {
    if (list.paths.size() >= cap)
      throw LimitExceeded("path enumeration exceeded the cap of " + std::to_string(cap));
    list.paths.push_back(edges);
    list.start.push_back(from);
    list.end.push_back(to);
  });
  return list;
}

namespace {

// What the pair test needs to know about one path.
struct PathEnd {
  VertexId range;
  EdgeId last_edge; // meaningless for trivial paths
  bool trivial;
};

std::vector<PathEnd> path_ends(const Graph &g, std::size_t n, std::size_t cap) {
  std::vector<PathEnd> out;
  for_each_path(g, n, [&](VertexId, VertexId to, const std::vector<EdgeId> &edges) {
    if (out.size() >= cap)
      throw LimitExceeded("path enumeration exceeded the cap of " + std::to_string(cap));
    out.push_back({to, edges.empty() ? EdgeId{0} : edges.back(), edges.empty()});
  });
  return out;
}

} // namespace

BasisCount count_basis(const Graph &g, std::size_t k, Designation designation,
                       std::uint64_t pair_cap) {
  BasisCount result;
  result.k = k;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const auto out = g.out_edges(v);
    if (out.empty())
      continue;
    EdgeId chosen = out.front();
    for (EdgeId e : out) {
      const bool better = designation == Designation::LeastName
                              ? g.edge(e).name < g.edge(chosen).name
                              : g.edge(e).name > g.edge(chosen).name;
      if (better)
        chosen = e;
    }
    result.designated[v] = chosen;
  }

  std::vector<std::vector<PathEnd>> by_length;
  for (std::size_t n = 0; n <= k; ++n)
    by_length.push_back(path_ends(g, n, kDefaultPathCap));

  std::uint64_t candidates = 0;
  for (std::size_t s = 0; s <= k; ++s)
    candidates += static_cast<std::uint64_t>(by_length[s].size()) * by_length[k - s].size();
  if (candidates > pair_cap)
    throw LimitExceeded("basis enumeration needs " + std::to_string(candidates) +
                        " pairs, above the cap of " + std::to_string(pair_cap));

  std::uint64_t admitted = 0;
  for (std::size_t s = 0; s <= k; ++s) {
    for (const PathEnd &lambda : by_length[s]) {
      for (const PathEnd &mu : by_length[k - s]) {
        if (lambda.range != mu.range)
          continue;
        if (!lambda.trivial && !mu.trivial && lambda.last_edge == mu.last_edge) {
          const VertexId penultimate = g.edge(lambda.last_edge).source;
          if (result.designated.at(penultimate) == lambda.last_edge)
            continue;
        }
        ++admitted;
      }
    }
  }
  result.count = BigInt(static_cast<unsigned long>(admitted));
  return result;
}

Graph random_graph(std::uint64_t seed, std::size_t max_v, std::size_t max_e) {
  if (max_v == 0)
    throw std::invalid_argument("random_graph: max_v must be at least 1");
  std::mt19937_64 rng(seed);
  const std::size_t vertices = 1 + rng() % max_v;
  const std::size_t edges = rng() % (max_e + 1);
  Graph g;
  for (std::size_t i = 1; i <= vertices; ++i)
    g.add_vertex("v" + std::to_string(i));
  for (std::size_t i = 1; i <= edges; ++i) {
    const VertexId s = rng() % vertices;
    const VertexId r = rng() % vertices;
    g.add_edge("e" + std::to_string(i), s, r);
  }
  return g;
}

} // namespace graphent::oracle
