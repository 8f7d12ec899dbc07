#include "graphent/cycles.hpp"

#include <algorithm>
#include <set>

namespace graphent {

Cycle::Cycle(const Graph &g, std::vector<EdgeId> edges) : edges_(std::move(edges)) {
  const std::size_t m = edges_.size();
  if (m == 0)
    throw std::invalid_argument("a cycle needs at least one edge");
  std::set<VertexId> sources;
  for (std::size_t i = 0; i < m; ++i) {
    const Edge &e = g.edge(edges_[i]);
    if (e.range != g.edge(edges_[(i + 1) % m]).source)
      throw std::invalid_argument("edge sequence is not a closed path");
    if (!sources.insert(e.source).second)
      throw std::invalid_argument("closed path revisits a vertex");
  }

  auto names_at = [&](std::size_t shift) {
    std::vector<std::string_view> names(m);
    for (std::size_t i = 0; i < m; ++i)
      names[i] = g.edge(edges_[(shift + i) % m]).name;
    return names;
  };
  std::size_t best = 0;
  auto best_names = names_at(0);
  for (std::size_t shift = 1; shift < m; ++shift) {
    auto names = names_at(shift);
    if (names < best_names) {
      best = shift;
      best_names = std::move(names);
    }
  }
  std::rotate(edges_.begin(), edges_.begin() + static_cast<std::ptrdiff_t>(best), edges_.end());
}

std::vector<VertexId> Cycle::vertices(const Graph &g) const {
  std::vector<VertexId> out;
  out.reserve(edges_.size());
  for (EdgeId e : edges_)
    out.push_back(g.edge(e).source);
  return out;
}

std::vector<std::string> Cycle::edge_names(const Graph &g) const {
  std::vector<std::string> out;
  out.reserve(edges_.size());
  for (EdgeId e : edges_)
    out.push_back(g.edge(e).name);
  return out;
}

// ---------------------------------------------------------------------------

std::vector<std::vector<VertexId>> strongly_connected_components(const Graph &g) {
  // Iterative Tarjan.
  const std::size_t n = g.vertex_count();
  constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, kUnvisited), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<VertexId> stack;
  std::vector<std::vector<VertexId>> out;
  std::size_t counter = 0;

  struct Frame {
    VertexId v;
    std::size_t next_edge;
  };
  for (VertexId root = 0; root < n; ++root) {
    if (index[root] != kUnvisited)
      continue;
    std::vector<Frame> call{{root, 0}};
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      Frame &f = call.back();
      const auto out_edges = g.out_edges(f.v);
      if (f.next_edge < out_edges.size()) {
        const VertexId w = g.edge(out_edges[f.next_edge++]).range;
        if (index[w] == kUnvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
        continue;
      }
      const VertexId v = f.v;
      call.pop_back();
      if (!call.empty())
        low[call.back().v] = std::min(low[call.back().v], low[v]);
      if (low[v] == index[v]) {
        std::vector<VertexId> comp;
        VertexId w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp.push_back(w);
        } while (w != v);
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

struct SccInfo {
  std::vector<std::size_t> component; // vertex -> component index
  std::vector<std::vector<VertexId>> members;
  std::vector<std::size_t> internal_edges;
};

SccInfo scc_info(const Graph &g) {
  SccInfo info;
  info.members = strongly_connected_components(g);
  info.component.assign(g.vertex_count(), 0);
  for (std::size_t c = 0; c < info.members.size(); ++c)
    for (VertexId v : info.members[c])
      info.component[v] = c;
  info.internal_edges.assign(info.members.size(), 0);
  for (const auto &e : g.edges())
    if (info.component[e.source] == info.component[e.range])
      ++info.internal_edges[info.component[e.source]];
  return info;
}

// Johnson's circuit search rooted at `start`, restricted to `allowed`.
class CircuitSearch {
public:
  CircuitSearch(const Graph &g, const std::vector<bool> &allowed, VertexId start,
                const std::function<bool(std::span<const EdgeId>)> &visit)
      : g_(g), allowed_(allowed), start_(start), visit_(visit),
        blocked_(g.vertex_count(), false), blockers_(g.vertex_count()) {}

  /// Returns false when the visitor asked to stop.
  bool run() {
    circuit(start_);
    return !stopped_;
  }

private:
  void unblock(VertexId v) {
    std::vector<VertexId> work{v};
    while (!work.empty()) {
      const VertexId u = work.back();
      work.pop_back();
      if (!blocked_[u])
        continue;
      blocked_[u] = false;
      for (VertexId w : blockers_[u])
        work.push_back(w);
      blockers_[u].clear();
    }
  }

  bool circuit(VertexId v) {
    bool found = false;
    blocked_[v] = true;
    for (EdgeId e : g_.out_edges(v)) {
      if (stopped_)
        return found;
      const VertexId w = g_.edge(e).range;
      if (!allowed_[w])
        continue;
      path_.push_back(e);
      if (w == start_) {
        found = true;
        if (!visit_(path_))
          stopped_ = true;
      } else if (!blocked_[w]) {
        if (circuit(w))
          found = true;
      }
      path_.pop_back();
    }
    if (found) {
      unblock(v);
    } else {
      for (EdgeId e : g_.out_edges(v)) {
        const VertexId w = g_.edge(e).range;
        if (allowed_[w])
          blockers_[w].insert(v);
      }
    }
    return found;
  }

  const Graph &g_;
  const std::vector<bool> &allowed_;
  VertexId start_;
  const std::function<bool(std::span<const EdgeId>)> &visit_;
  std::vector<bool> blocked_;
  std::vector<std::set<VertexId>> blockers_;
  std::vector<EdgeId> path_;
  bool stopped_ = false;
};

} // namespace

void for_each_cycle(const Graph &g, const std::function<bool(std::span<const EdgeId>)> &visit,
                    const std::vector<bool> *mask) {
  const std::size_t n = g.vertex_count();
  for (VertexId s = 0; s < n; ++s) {
    if (mask && !(*mask)[s])
      continue;
    // Cycles whose least vertex is s live in the SCC of s within {v >= s}.
    std::vector<bool> keep(n, false);
    for (VertexId v = s; v < n; ++v)
      keep[v] = !mask || (*mask)[v];
    const Graph sub = induced_subgraph(g, keep);
    const VertexId s_sub = *sub.find_vertex(g.vertex_name(s));
    const auto comps = strongly_connected_components(sub);

    std::vector<bool> allowed(n, false);
    for (const auto &comp : comps) {
      if (!std::binary_search(comp.begin(), comp.end(), s_sub))
        continue;
      for (VertexId v : comp)
        allowed[*g.find_vertex(sub.vertex_name(v))] = true;
    }
    CircuitSearch search(g, allowed, s, visit);
    if (!search.run())
      return;
  }
}

std::vector<Cycle> enumerate_cycles(const Graph &g, std::size_t cap) {
  std::vector<Cycle> cycles;
  for_each_cycle(g, [&](std::span<const EdgeId> path) {
    if (cycles.size() >= cap)
      throw CycleLimitError("cycle enumeration exceeded the cap of " + std::to_string(cap) +
                            " cycles");
    cycles.emplace_back(g, std::vector<EdgeId>(path.begin(), path.end()));
    return true;
  });
  std::vector<std::pair<std::vector<std::string>, std::size_t>> keys;
  keys.reserve(cycles.size());
  for (std::size_t i = 0; i < cycles.size(); ++i)
    keys.emplace_back(cycles[i].edge_names(g), i);
  std::sort(keys.begin(), keys.end(), [&](const auto &a, const auto &b) {
    if (a.first != b.first)
      return a.first < b.first;
    return cycles[a.second].length() < cycles[b.second].length();
  });
  std::vector<Cycle> sorted;
  sorted.reserve(cycles.size());
  for (const auto &k : keys)
    sorted.push_back(std::move(cycles[k.second]));
  return sorted;
}

bool has_cycle(const Graph &g) {
  const SccInfo info = scc_info(g);
  return std::any_of(info.internal_edges.begin(), info.internal_edges.end(),
                     [](std::size_t c) { return c > 0; });
}

ExcResult satisfies_exc(const Graph &g) {
  // A strongly connected component carries pairwise disjoint cycles only if it
  // is a single cycle, i.e. has as many internal edges as vertices.
  const SccInfo info = scc_info(g);
  for (std::size_t c = 0; c < info.members.size(); ++c) {
    if (info.internal_edges[c] == 0 || info.internal_edges[c] == info.members[c].size())
      continue;

    std::vector<bool> mask(g.vertex_count(), false);
    for (VertexId v : info.members[c])
      mask[v] = true;
    std::vector<Cycle> seen;
    std::optional<std::pair<Cycle, Cycle>> witness;
    for_each_cycle(
        g,
        [&](std::span<const EdgeId> path) {
          Cycle cycle(g, std::vector<EdgeId>(path.begin(), path.end()));
          const auto vs = cycle.vertices(g);
          const std::set<VertexId> mine(vs.begin(), vs.end());
          for (const auto &other : seen) {
            for (VertexId v : other.vertices(g)) {
              if (mine.count(v)) {
                witness.emplace(other, cycle);
                return false;
              }
            }
          }
          seen.push_back(std::move(cycle));
          return true;
        },
        &mask);
    return ExcResult{false, std::move(witness)};
  }
  return ExcResult{};
}

CycleChainReport chain_stats(const Graph &g) {
  if (!satisfies_exc(g).holds)
    throw std::invalid_argument("chain_stats: graph does not satisfy the exclusive-cycle condition");

  CycleChainReport report;
  report.cycles = enumerate_cycles(g);
  const std::size_t m = report.cycles.size();
  if (m == 0)
    return report;

  std::vector<std::size_t> owner(g.vertex_count(), m);
  for (std::size_t i = 0; i < m; ++i)
    for (VertexId v : report.cycles[i].vertices(g))
      owner[v] = i;

  report.exits.assign(m, false);
  for (std::size_t i = 0; i < m; ++i) {
    const auto cyc = report.cycles[i].edges();
    const std::set<EdgeId> own(cyc.begin(), cyc.end());
    for (VertexId v : report.cycles[i].vertices(g))
      for (EdgeId e : g.out_edges(v))
        if (!own.count(e))
          report.exits[i] = true;
  }

  // reaches[i][j]: a path of positive length leads from cycle i to cycle j.
  std::vector<std::vector<bool>> reaches(m, std::vector<bool>(m, false));
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<bool> seen(g.vertex_count(), false);
    std::vector<VertexId> work = report.cycles[i].vertices(g);
    for (VertexId v : work)
      seen[v] = true;
    while (!work.empty()) {
      const VertexId v = work.back();
      work.pop_back();
      for (EdgeId e : g.out_edges(v)) {
        const VertexId w = g.edge(e).range;
        if (!seen[w]) {
          seen[w] = true;
          work.push_back(w);
        }
      }
    }
    for (VertexId v = 0; v < g.vertex_count(); ++v)
      if (seen[v] && owner[v] < m && owner[v] != i)
        reaches[i][owner[v]] = true;
  }

  // Longest chain ending at each cycle; reachability between distinct cycles
  // is acyclic under the exclusive-cycle condition.
  std::vector<std::size_t> ending(m, 0);
  std::function<std::size_t(std::size_t)> longest = [&](std::size_t j) -> std::size_t {
    if (ending[j])
      return ending[j];
    std::size_t best = 0;
    for (std::size_t i = 0; i < m; ++i)
      if (reaches[i][j])
        best = std::max(best, longest(i));
    return ending[j] = best + 1;
  };
  for (std::size_t j = 0; j < m; ++j) {
    report.d1 = std::max(report.d1, longest(j));
    if (report.exits[j])
      report.d2 = std::max(report.d2, longest(j));
  }
  return report;
}

ExtendedNat gk_dim_leavitt(const Graph &g) {
  if (!satisfies_exc(g).holds)
    return ExtendedNat::infinity();
  const CycleChainReport r = chain_stats(g);
  if (r.cycles.empty())
    return ExtendedNat(0UL);
  return ExtendedNat(static_cast<unsigned long>(std::max(2 * r.d1 - 1, 2 * r.d2)));
}

ExtendedNat gk_dim_path(const Graph &g) {
  if (!satisfies_exc(g).holds)
    return ExtendedNat::infinity();
  const CycleChainReport r = chain_stats(g);
  return ExtendedNat(static_cast<unsigned long>(r.d1));
}

namespace {

// Paths ending at each vertex (trivial path included); graph must be acyclic.
std::vector<BigInt> paths_ending_at(const Graph &g) {
  const std::size_t n = g.vertex_count();
  std::vector<BigInt> count(n, 0);
  std::vector<bool> done(n, false);
  std::function<const BigInt &(VertexId)> visit = [&](VertexId v) -> const BigInt & {
    if (!done[v]) {
      BigInt c = 1;
      for (EdgeId e : g.in_edges(v))
        c += visit(g.edge(e).source);
      count[v] = c;
      done[v] = true;
    }
    return count[v];
  };
  for (VertexId v = 0; v < n; ++v)
    visit(v);
  return count;
}

} // namespace

ExtendedNat dim_path_algebra(const Graph &g) {
  if (has_cycle(g))
    return ExtendedNat::infinity();
  BigInt total = 0;
  for (const auto &c : paths_ending_at(g))
    total += c;
  return ExtendedNat(total);
}

ExtendedNat dim_leavitt_algebra(const Graph &g) {
  if (has_cycle(g))
    return ExtendedNat::infinity();
  const auto ending = paths_ending_at(g);
  BigInt total = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (g.is_sink(v))
      total += ending[v] * ending[v];
  return ExtendedNat(total);
}

} // namespace graphent
