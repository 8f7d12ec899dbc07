#include "graphent/cycles.hpp"
#include "graphent/oracle.hpp"
#include "zoo.hpp"

#include <doctest.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

using namespace graphent;

namespace {

// Independent oracle: every closed edge sequence with distinct sources, found
// by exhaustive DFS from every vertex and deduplicated by canonical rotation.
std::set<std::vector<std::string>> brute_force_cycles(const Graph &g) {
  std::set<std::vector<std::string>> out;
  std::vector<EdgeId> path;
  std::vector<bool> used(g.vertex_count(), false);
  std::function<void(VertexId, VertexId)> dfs = [&](VertexId start, VertexId at) {
    for (EdgeId e : g.out_edges(at)) {
      const VertexId w = g.edge(e).range;
      path.push_back(e);
      if (w == start) {
        std::vector<std::string> best;
        for (std::size_t shift = 0; shift < path.size(); ++shift) {
          std::vector<std::string> rot;
          for (std::size_t i = 0; i < path.size(); ++i)
            rot.push_back(g.edge(path[(shift + i) % path.size()]).name);
          if (best.empty() || rot < best)
            best = rot;
        }
        out.insert(best);
      } else if (!used[w]) {
        used[w] = true;
        dfs(start, w);
        used[w] = false;
      }
      path.pop_back();
    }
  };
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    used[v] = true;
    dfs(v, v);
    used[v] = false;
  }
  return out;
}

bool brute_force_exc(const Graph &g) {
  const auto cycles = brute_force_cycles(g);
  std::vector<std::set<std::string>> vertex_sets;
  for (const auto &c : cycles) {
    std::set<std::string> vs;
    for (const auto &name : c)
      for (const auto &e : g.edges())
        if (e.name == name)
          vs.insert(g.vertex_name(e.source));
    vertex_sets.push_back(vs);
  }
  for (std::size_t i = 0; i < vertex_sets.size(); ++i)
    for (std::size_t j = i + 1; j < vertex_sets.size(); ++j)
      for (const auto &v : vertex_sets[i])
        if (vertex_sets[j].count(v))
          return false;
  return true;
}

// Independent oracle for d1/d2: try every ordered sequence of distinct cycles.
std::pair<std::size_t, std::size_t> brute_force_chains(const Graph &g,
                                                       const std::vector<Cycle> &cycles) {
  auto reaches = [&](const Cycle &a, const Cycle &b) {
    std::vector<bool> seen(g.vertex_count(), false);
    std::vector<VertexId> work;
    for (VertexId v : a.vertices(g))
      for (EdgeId e : g.out_edges(v))
        work.push_back(g.edge(e).range);
    while (!work.empty()) {
      const VertexId v = work.back();
      work.pop_back();
      if (seen[v])
        continue;
      seen[v] = true;
      for (EdgeId e : g.out_edges(v))
        work.push_back(g.edge(e).range);
    }
    for (VertexId v : b.vertices(g))
      if (seen[v])
        return true;
    return false;
  };
  auto has_exit = [&](const Cycle &c) {
    for (VertexId v : c.vertices(g))
      if (g.out_edges(v).size() > 1)
        return true;
    return false;
  };
  std::size_t d1 = 0, d2 = 0;
  std::vector<std::size_t> order(cycles.size());
  std::iota(order.begin(), order.end(), 0);
  // All subsets in all orders, small inputs only.
  std::function<void(std::vector<std::size_t> &, std::vector<bool> &)> grow =
      [&](std::vector<std::size_t> &chain, std::vector<bool> &in_chain) {
        if (!chain.empty()) {
          d1 = std::max(d1, chain.size());
          if (has_exit(cycles[chain.back()]))
            d2 = std::max(d2, chain.size());
        }
        for (std::size_t i = 0; i < cycles.size(); ++i) {
          if (in_chain[i])
            continue;
          if (!chain.empty() && !reaches(cycles[chain.back()], cycles[i]))
            continue;
          chain.push_back(i);
          in_chain[i] = true;
          grow(chain, in_chain);
          in_chain[i] = false;
          chain.pop_back();
        }
      };
  std::vector<std::size_t> chain;
  std::vector<bool> in_chain(cycles.size(), false);
  grow(chain, in_chain);
  return {d1, d2};
}

std::vector<std::vector<std::string>> as_names(const Graph &g, const std::vector<Cycle> &cs) {
  std::vector<std::vector<std::string>> out;
  for (const auto &c : cs)
    out.push_back(c.edge_names(g));
  return out;
}

} // namespace

TEST_CASE("cycles of roses are their loops") {
  const Graph g = zoo::rose(4);
  const auto cycles = enumerate_cycles(g);
  CHECK(cycles.size() == 4);
  for (const auto &c : cycles)
    CHECK(c.length() == 1);
}

TEST_CASE("cycles of the Fibonacci graph") {
  const Graph g = parse_graph(zoo::kFibonacci);
  const auto cycles = enumerate_cycles(g);
  REQUIRE(cycles.size() == 2);
  CHECK(as_names(g, cycles) ==
        std::vector<std::vector<std::string>>{{"e1", "e2"}, {"e3"}});
}

TEST_CASE("cycles of graph D") {
  const Graph g = parse_graph(zoo::kGraphD);
  const auto cycles = enumerate_cycles(g);
  std::set<std::vector<std::string>> found;
  for (const auto &c : cycles)
    found.insert(c.edge_names(g));
  CHECK(found == brute_force_cycles(g));
  // three 2-cycles through vertex 1 and the 3-cycle 2 -> 3 -> 4 -> 2
  CHECK(found.count({"e1", "e2"}));
  CHECK(found.count({"e3", "e4"}));
  CHECK(found.count({"e5", "e6"}));
  CHECK(found.count({"e7", "e8", "e9"}));
  CHECK(cycles.size() == found.size());
}

TEST_CASE("cycle enumeration matches brute-force DFS on small graphs") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const Graph g = oracle::random_graph(seed, 5, 9);
    const auto cycles = enumerate_cycles(g);
    std::set<std::vector<std::string>> found;
    for (const auto &c : cycles)
      found.insert(c.edge_names(g));
    CHECK(found.size() == cycles.size());
    CHECK(found == brute_force_cycles(g));
  }
}

TEST_CASE("rotations share a canonical form") {
  const Graph g = zoo::cycle(4);
  const Cycle a(g, {0, 1, 2, 3});
  const Cycle b(g, {2, 3, 0, 1});
  CHECK(a == b);
  CHECK(a.edge_names(g) == std::vector<std::string>{"e1", "e2", "e3", "e4"});
  CHECK_THROWS_AS(Cycle(g, {0, 2}), std::invalid_argument);
}

TEST_CASE("opposite graph reverses cycles bijectively") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Graph g = oracle::random_graph(seed, 5, 8);
    const auto forward = enumerate_cycles(g);
    const Graph op = opposite_graph(g);
    std::set<std::vector<std::string>> reversed;
    for (const auto &c : forward) {
      auto names = c.edge_names(g);
      std::reverse(names.begin(), names.end());
      std::vector<EdgeId> ids;
      for (const auto &n : names)
        for (EdgeId e = 0; e < op.edge_count(); ++e)
          if (op.edge(e).name == n)
            ids.push_back(e);
      reversed.insert(Cycle(op, ids).edge_names(op));
    }
    std::set<std::vector<std::string>> op_cycles;
    for (const auto &c : enumerate_cycles(op))
      op_cycles.insert(c.edge_names(op));
    CHECK(op_cycles == reversed);
  }
}

TEST_CASE("cycle cap aborts enumeration") {
  CHECK_THROWS_AS(enumerate_cycles(zoo::rose(10), 5), CycleLimitError);
  CHECK(enumerate_cycles(zoo::rose(5), 5).size() == 5);
}

TEST_CASE("exclusive-cycle condition") {
  CHECK(satisfies_exc(parse_graph(zoo::kTwoCycles)).holds);
  CHECK(satisfies_exc(zoo::line(4)).holds);

  const Graph fib = parse_graph(zoo::kFibonacci);
  const ExcResult r = satisfies_exc(fib);
  CHECK_FALSE(r.holds);
  REQUIRE(r.witness);
  const auto a = r.witness->first.vertices(fib);
  const auto b = r.witness->second.vertices(fib);
  CHECK_FALSE(r.witness->first == r.witness->second);
  CHECK(std::find(a.begin(), a.end(), 1) != a.end());
  CHECK(std::find(b.begin(), b.end(), 1) != b.end());
}

TEST_CASE("exclusive-cycle test agrees with pairwise brute force") {
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    const Graph g = oracle::random_graph(seed, 5, 7);
    const ExcResult r = satisfies_exc(g);
    CHECK(r.holds == brute_force_exc(g));
    if (!r.holds) {
      REQUIRE(r.witness);
      const auto a = r.witness->first.vertices(g);
      const auto b = r.witness->second.vertices(g);
      const std::set<VertexId> sa(a.begin(), a.end());
      CHECK(std::any_of(b.begin(), b.end(), [&](VertexId v) { return sa.count(v) > 0; }));
    }
  }
}

TEST_CASE("chain statistics") {
  const CycleChainReport r1 = chain_stats(zoo::rose(1));
  CHECK(r1.d1 == 1);
  CHECK(r1.d2 == 0);

  const Graph e = parse_graph(zoo::kTwoCycles);
  const CycleChainReport r = chain_stats(e);
  CHECK(r.cycles.size() == 2);
  CHECK(r.d1 == 2);
  CHECK(r.d2 == 1);

  const CycleChainReport acyclic = chain_stats(zoo::line(5));
  CHECK(acyclic.d1 == 0);
  CHECK(acyclic.d2 == 0);
  CHECK(acyclic.cycles.empty());

  CHECK_THROWS_AS(chain_stats(parse_graph(zoo::kFibonacci)), std::invalid_argument);
}

TEST_CASE("chain statistics agree with exhaustive chain search") {
  std::size_t tested = 0;
  for (std::uint64_t seed = 0; tested < 150 && seed < 5000; ++seed) {
    const Graph g = oracle::random_graph(seed, 6, 8);
    if (!satisfies_exc(g).holds)
      continue;
    ++tested;
    const CycleChainReport r = chain_stats(g);
    CHECK(r.d2 <= r.d1);
    CHECK((r.d1 == 0) == r.cycles.empty());
    const auto [d1, d2] = brute_force_chains(g, r.cycles);
    CHECK(r.d1 == d1);
    CHECK(r.d2 == d2);
  }
  CHECK(tested == 150);
}

TEST_CASE("chain statistics are invariant under vertex renaming") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Graph g = oracle::random_graph(seed, 5, 6);
    if (!satisfies_exc(g).holds)
      continue;
    // Reverse the vertex order and rename everything.
    Graph h;
    for (std::size_t i = g.vertex_count(); i-- > 0;)
      h.add_vertex("w" + g.vertex_name(i));
    for (const auto &e : g.edges())
      h.add_edge("x" + e.name, g.vertex_count() - 1 - e.source, g.vertex_count() - 1 - e.range);
    const CycleChainReport a = chain_stats(g), b = chain_stats(h);
    CHECK(a.d1 == b.d1);
    CHECK(a.d2 == b.d2);
    CHECK(a.cycles.size() == b.cycles.size());
  }
}

TEST_CASE("GK-dimensions") {
  CHECK(gk_dim_leavitt(zoo::rose(1)) == ExtendedNat(1UL));
  CHECK(gk_dim_leavitt(parse_graph(zoo::kFibonacci)).is_infinite());
  CHECK(gk_dim_leavitt(parse_graph(zoo::kTwoCycles)) == ExtendedNat(3UL));
  CHECK(gk_dim_leavitt(zoo::line(3)) == ExtendedNat(0UL));

  CHECK(gk_dim_path(zoo::rose(1)) == ExtendedNat(1UL));
  CHECK(gk_dim_path(zoo::line(4)) == ExtendedNat(0UL));
  CHECK(gk_dim_path(parse_graph(zoo::kTwoCycles)) == ExtendedNat(2UL));
  CHECK(gk_dim_path(parse_graph(zoo::kFibonacci)).is_infinite());
}

TEST_CASE("Leavitt GK-dimension is 2d-1 or 2d of the path GK-dimension") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const Graph g = oracle::random_graph(seed, 6, 7);
    const ExtendedNat l = gk_dim_leavitt(g), p = gk_dim_path(g);
    CHECK(l.is_finite() == satisfies_exc(g).holds);
    CHECK(l.is_finite() == p.is_finite());
    if (l.is_finite() && p.is_finite() && p.value() != 0) {
      const BigInt d = p.value();
      CHECK((l.value() == 2 * d - 1 || l.value() == 2 * d));
    }
  }
}

TEST_CASE("finite dimensions") {
  for (unsigned long n = 1; n <= 8; ++n) {
    CHECK(dim_path_algebra(zoo::line(n)) == ExtendedNat(n * (n + 1) / 2));
    CHECK(dim_leavitt_algebra(zoo::line(n)) == ExtendedNat(n * n));
  }
  CHECK(dim_path_algebra(parse_graph("v")) == ExtendedNat(1UL));
  CHECK(dim_leavitt_algebra(parse_graph("v")) == ExtendedNat(1UL));
  CHECK(dim_leavitt_algebra(parse_graph("u -> v\nu -> w")) == ExtendedNat(8UL));
  CHECK(dim_path_algebra(zoo::cycle(3)).is_infinite());
  CHECK(dim_leavitt_algebra(zoo::rose(2)).is_infinite());
  CHECK(dim_path_algebra(Graph{}) == ExtendedNat(0UL));
}

TEST_CASE("finite dimension iff acyclic iff trim is empty") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Graph g = oracle::random_graph(seed, 5, 6);
    const bool finite = dim_path_algebra(g).is_finite();
    CHECK(finite == !has_cycle(g));
    CHECK(finite == trim(g).empty());
    CHECK(dim_leavitt_algebra(g).is_finite() == finite);
  }
}
