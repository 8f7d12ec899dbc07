#include "graphent/cycles.hpp"
#include "graphent/int_matrix.hpp"
#include "graphent/leavitt.hpp"
#include "graphent/oracle.hpp"
#include "zoo.hpp"

#include <doctest.h>

using namespace graphent;

TEST_CASE("paths in the two-petal rose") {
  const oracle::PathList p = oracle::enum_paths(zoo::rose(2), 3);
  CHECK(p.length == 3);
  CHECK(p.paths.size() == 8);
  CHECK(oracle::enum_paths(zoo::rose(2), 0).paths.size() == 1);
}

TEST_CASE("path count equals the matrix power norm") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Graph g = oracle::random_graph(seed, 4, 6);
    const IntMatrix a = adjacency_matrix(g);
    for (std::size_t n = 0; n <= 6; ++n) {
      const auto p = oracle::enum_paths(g, n);
      CHECK(norm_11(mat_pow(a, n)) == BigInt(static_cast<unsigned long>(p.paths.size())));
      for (std::size_t i = 0; i < p.paths.size(); ++i) {
        CHECK(p.paths[i].size() == n);
        VertexId at = p.start[i];
        for (EdgeId e : p.paths[i]) {
          CHECK(g.edge(e).source == at);
          at = g.edge(e).range;
        }
        CHECK(at == p.end[i]);
      }
    }
  }
}

TEST_CASE("acyclic graphs have no long paths") {
  CHECK(oracle::enum_paths(zoo::line(4), 4).paths.empty());
  CHECK(oracle::enum_paths(zoo::line(4), 3).paths.size() == 1);
}

TEST_CASE("path cap") {
  CHECK_THROWS_AS(oracle::enum_paths(zoo::rose(3), 10, 1000), oracle::LimitExceeded);
  CHECK_THROWS_AS(oracle::count_basis(zoo::rose(4), 8, oracle::Designation::LeastName, 1000),
                  oracle::LimitExceeded);
}

TEST_CASE("basis counts of roses and cycles") {
  for (unsigned long n = 1; n <= 4; ++n) {
    const Graph r = zoo::rose(n);
    CHECK(oracle::count_basis(r, 0).count == 1);
    CHECK(oracle::count_basis(r, 1).count == 2 * n);
    CHECK(oracle::count_basis(r, 2).count == 3 * n * n - 1);
    CHECK(oracle::count_basis(r, 3).count == 4 * n * n * n - 2 * n);
  }
  for (std::size_t n = 1; n <= 5; ++n)
    for (std::size_t k = 1; k <= 6; ++k)
      CHECK(oracle::count_basis(zoo::cycle(n), k).count == 2 * n);
}

TEST_CASE("designated edges are chosen per regular vertex") {
  const Graph g = parse_graph("a -> b [y]\na -> b [x]\nb -> a [z]\nc");
  const auto least = oracle::count_basis(g, 2, oracle::Designation::LeastName);
  const auto greatest = oracle::count_basis(g, 2, oracle::Designation::GreatestName);
  CHECK(least.designated.size() == 2);
  CHECK(g.edge(least.designated.at(0)).name == "x");
  CHECK(g.edge(greatest.designated.at(0)).name == "y");
  CHECK(least.count == greatest.count);
}

TEST_CASE("basis count does not depend on the designated edges") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Graph g = oracle::random_graph(seed, 4, 6);
    for (std::size_t k = 0; k <= 5; ++k)
      CHECK(oracle::count_basis(g, k, oracle::Designation::LeastName).count ==
            oracle::count_basis(g, k, oracle::Designation::GreatestName).count);
  }
}

TEST_CASE("basis counts agree with the layer formula") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Graph g = oracle::random_graph(seed, 4, 6);
    for (std::size_t k = 0; k <= 6; ++k)
      CHECK(oracle::count_basis(g, k).count == leavitt_quotient_dim(g, k));
  }
}

TEST_CASE("finite Leavitt dimension is the sum of basis counts") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const Graph g = oracle::random_graph(seed, 5, 5);
    if (has_cycle(g))
      continue;
    BigInt total = 0;
    for (std::size_t k = 0; k <= 2 * g.vertex_count(); ++k)
      total += oracle::count_basis(g, k).count;
    CHECK(dim_leavitt_algebra(g) == ExtendedNat(total));
  }
}

TEST_CASE("random graphs are deterministic") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph a = oracle::random_graph(seed, 5, 7);
    const Graph b = oracle::random_graph(seed, 5, 7);
    CHECK(to_json(a) == to_json(b));
    CHECK(a.vertex_count() >= 1);
    CHECK(a.vertex_count() <= 5);
    CHECK(a.edge_count() <= 7);
  }
  CHECK(oracle::random_graph(3, 4, 0).edge_count() == 0);
  CHECK_THROWS_AS(oracle::random_graph(0, 0, 3), std::invalid_argument);
}
