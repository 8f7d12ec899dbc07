#include "graphent/cycles.hpp"
#include "graphent/oracle.hpp"
#include "graphent/spectral.hpp"
#include "zoo.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

using namespace graphent;

namespace {

// det(xI - A) by the Leibniz formula, for small orders.
BigInt leibniz_char_value(const IntMatrix &a, long x) {
  const std::size_t n = a.order();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  BigInt total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j])
          ++inversions;
    BigInt term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i)
      term *= (i == perm[i] ? BigInt(x) : BigInt(0)) - a(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// Independent spectral radius estimate: power iteration on (B + I) for each
// strongly connected block B, where the iteration converges geometrically.
double block_radius(const std::vector<std::vector<double>> &b) {
  const std::size_t n = b.size();
  std::vector<double> v(n, 1.0);
  double lambda = 0.0;
  for (int it = 0; it < 5000; ++it) {
    std::vector<double> w(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        w[i] += (b[i][j] + (i == j ? 1.0 : 0.0)) * v[j];
    const double norm = *std::max_element(w.begin(), w.end());
    for (auto &x : w)
      x /= norm;
    lambda = norm;
    v = std::move(w);
  }
  return lambda - 1.0;
}

double power_iteration_radius(const Graph &g) {
  const IntMatrix a = adjacency_matrix(g);
  double best = 0.0;
  for (const auto &scc : strongly_connected_components(g)) {
    std::vector<std::vector<double>> b(scc.size(), std::vector<double>(scc.size()));
    for (std::size_t i = 0; i < scc.size(); ++i)
      for (std::size_t j = 0; j < scc.size(); ++j)
        b[i][j] = a(scc[i], scc[j]).get_d();
    best = std::max(best, block_radius(b));
  }
  return best;
}

CharPoly poly(std::initializer_list<long> low_to_high) {
  CharPoly p;
  for (long c : low_to_high)
    p.coefficients.emplace_back(c);
  return p;
}

IntMatrix permuted(const IntMatrix &a, const std::vector<std::size_t> &perm) {
  IntMatrix b(a.order());
  for (std::size_t i = 0; i < a.order(); ++i)
    for (std::size_t j = 0; j < a.order(); ++j)
      b(perm[i], perm[j]) = a(i, j);
  return b;
}

} // namespace

TEST_CASE("characteristic polynomials") {
  CHECK(char_poly(IntMatrix{{0, 1}, {1, 1}}) == poly({-1, -1, 1}));
  CHECK(char_poly(IntMatrix{{7}}) == poly({-7, 1}));
  CHECK(char_poly(IntMatrix(0)) == poly({1}));
  for (std::size_t n = 1; n <= 7; ++n) {
    CharPoly expected = monomial(n);
    expected.coefficients[0] = -1;
    CHECK(char_poly(adjacency_matrix(zoo::cycle(n))) == expected);
  }
  CHECK(char_poly(adjacency_matrix(zoo::line(5))) == monomial(5));
}

TEST_CASE("characteristic polynomial matches the Leibniz determinant") {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const IntMatrix a = adjacency_matrix(oracle::random_graph(seed, 5, 10));
    const CharPoly p = char_poly(a);
    CHECK(p.degree() == a.order());
    for (long x : {-3L, -1L, 0L, 1L, 2L, 5L})
      CHECK(p.evaluate(mpq_class(x)) == mpq_class(leibniz_char_value(a, x)));
  }
}

TEST_CASE("characteristic polynomial of a block diagonal matrix is the product") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const IntMatrix a = adjacency_matrix(oracle::random_graph(seed, 4, 6));
    const IntMatrix b = adjacency_matrix(oracle::random_graph(seed + 1000, 4, 6));
    CHECK(char_poly(block_diagonal(a, b)) == char_poly(a) * char_poly(b));
  }
}

TEST_CASE("trimming removes a factor x^k") {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const Graph g = oracle::random_graph(seed, 6, 8);
    const Graph t = trim(g);
    const std::size_t removed = g.vertex_count() - t.vertex_count();
    CHECK(char_poly(adjacency_matrix(g)) == monomial(removed) * char_poly(adjacency_matrix(t)));
  }
}

TEST_CASE("counting real roots") {
  const CharPoly fib = poly({-1, -1, 1});
  CHECK(count_real_roots_above(fib, mpq_class(-1)) == 2);
  CHECK(count_real_roots_above(fib, mpq_class(1)) == 1);
  CHECK(count_real_roots_above(fib, mpq_class(2)) == 0);
  // (x - 2)^3 (x + 1) has one distinct root above 0
  const CharPoly repeated = poly({-2, 1}) * poly({-2, 1}) * poly({-2, 1}) * poly({1, 1});
  CHECK(count_real_roots_above(repeated, mpq_class(0)) == 1);
  CHECK(count_real_roots_above(repeated, mpq_class(-5)) == 2);
  CHECK(count_real_roots_above(poly({1, 0, 1}), mpq_class(-10)) == 0);
}

TEST_CASE("Perron roots") {
  const PerronRoot fib = perron_root(IntMatrix{{0, 1}, {1, 1}});
  CHECK(fib.value == doctest::Approx((1.0 + std::sqrt(5.0)) / 2.0).epsilon(1e-12));
  CHECK(fib.lo < fib.hi);
  CHECK(mpq_class(fib.hi - fib.lo) <= mpq_class(1e-12));

  CHECK(perron_root(adjacency_matrix(zoo::line(4))).value == 0.0);
  CHECK(perron_root(adjacency_matrix(zoo::rose(3))).value == doctest::Approx(3.0));
  CHECK(perron_root(adjacency_matrix(zoo::cycle(5))).value == doctest::Approx(1.0));
  CHECK_THROWS_AS(perron_root(IntMatrix{{1}}, 0.0), std::invalid_argument);
}

TEST_CASE("Perron root of graph D") {
  const Graph d = parse_graph(zoo::kGraphD);
  const IntMatrix a = adjacency_matrix(d);
  const double rho = perron_root(a).value;
  CHECK(rho == doctest::Approx(power_iteration_radius(d)).epsilon(1e-9));
  // it is a root of the characteristic polynomial
  const CharPoly p = char_poly(a);
  double v = 0.0;
  for (std::size_t i = p.coefficients.size(); i-- > 0;)
    v = v * rho + p.coefficients[i].get_d();
  CHECK(std::abs(v) < 1e-8);
}

TEST_CASE("Perron root agrees with power iteration") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Graph g = oracle::random_graph(seed, 5, 9);
    CHECK(perron_root(adjacency_matrix(g)).value ==
          doctest::Approx(power_iteration_radius(g)).epsilon(1e-7));
  }
}

TEST_CASE("path entropy") {
  for (std::size_t n = 1; n <= 6; ++n)
    CHECK(entropy_path(zoo::rose(n)) == doctest::Approx(std::log(static_cast<double>(n))));
  CHECK(entropy_path(zoo::cycle(4)) == 0.0);
  CHECK(entropy_path(zoo::line(4)) == 0.0);
  CHECK(entropy_path(parse_graph(zoo::kFibonacci)) ==
        doctest::Approx(std::log((1.0 + std::sqrt(5.0)) / 2.0)));

  // One-way connections do not change the spectrum.
  CHECK(entropy_path(zoo::joined_roses(2, 3, false)) == doctest::Approx(std::log(3.0)));
  // Both ways: roots of (x - n)(x - m) = 1.
  for (auto [n, m] : {std::pair{2.0, 3.0}, std::pair{1.0, 1.0}, std::pair{4.0, 1.0}}) {
    const double rho = (n + m + std::sqrt((n - m) * (n - m) + 4.0)) / 2.0;
    CHECK(entropy_path(zoo::joined_roses(static_cast<std::size_t>(n), static_cast<std::size_t>(m),
                                         true)) == doctest::Approx(std::log(rho)));
  }
}

TEST_CASE("extended entropy") {
  for (std::size_t n = 3; n <= 8; ++n)
    CHECK(entropy_extended(zoo::cycle(n)) == doctest::Approx(std::log(2.0)));
  CHECK(entropy_extended(zoo::rose(1)) == doctest::Approx(std::log(2.0)));
  CHECK(entropy_extended(parse_graph("a; b")) == 0.0);
  CHECK(entropy_extended(Graph{}) == 0.0);
}

TEST_CASE("spectral radius is invariant under transpose and relabeling") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Graph g = oracle::random_graph(seed, 5, 9);
    const IntMatrix a = adjacency_matrix(g);
    CHECK(char_poly(a.transpose()) == char_poly(a));
    std::vector<std::size_t> perm(a.order());
    std::iota(perm.begin(), perm.end(), 0);
    std::reverse(perm.begin(), perm.end());
    CHECK(char_poly(permuted(a, perm)) == char_poly(a));
    CHECK(entropy_path(opposite_graph(g)) == doctest::Approx(entropy_path(g)));
  }
}

TEST_CASE("entropy ordering between the path and extended graphs") {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const Graph g = oracle::random_graph(seed, 5, 8);
    const double hp = entropy_path(g), he = entropy_extended(g);
    CHECK(hp <= he + 1e-12);
    if (!has_cycle(g) && g.edge_count() > 0)
      CHECK(hp == 0.0);
  }
}

TEST_CASE("normal matrices satisfy the log 2 bound") {
  // Roses, cycles and their disjoint unions all have normal adjacency matrices.
  std::vector<Graph> normal{zoo::rose(1), zoo::rose(3), zoo::cycle(5),
                            disjoint_union(zoo::rose(2), zoo::cycle(3)),
                            disjoint_union(zoo::rose(4), zoo::rose(2))};
  for (const auto &g : normal) {
    const IntMatrix a = adjacency_matrix(g);
    REQUIRE(a * a.transpose() == a.transpose() * a);
    CHECK(entropy_extended(g) <= entropy_path(g) + std::log(2.0) + 1e-12);
    CHECK(entropy_extended(g) == doctest::Approx(entropy_path(g) + std::log(2.0)));
  }
}

TEST_CASE("norm sequences") {
  const DimSequence fib = norm_sequence(IntMatrix{{0, 1}, {1, 1}}, 5);
  CHECK(fib.quotients() == std::vector<BigInt>{2, 3, 5, 8, 13, 21});

  const DimSequence c3 = norm_sequence(adjacency_matrix(zoo::cycle(3)), 6);
  for (const auto &q : c3.quotients())
    CHECK(q == 3);

  const DimSequence r2 = norm_sequence(adjacency_matrix(zoo::rose(2)), 10);
  for (std::size_t k = 0; k <= 10; ++k)
    CHECK(r2.quotient(k) == BigInt(1) << k);

  CHECK_THROWS_AS(norm_sequence(IntMatrix{{1}}, 0), std::invalid_argument);
}

TEST_CASE("norms are submultiplicative") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const IntMatrix a = adjacency_matrix(oracle::random_graph(seed, 4, 7));
    const DimSequence s = norm_sequence(a, 12);
    for (std::size_t k = 1; k <= 6; ++k)
      for (std::size_t l = 1; l <= 6; ++l)
        CHECK(s.quotient(k + l) <= s.quotient(k) * s.quotient(l));
  }
}

TEST_CASE("entropy of the norm sequence converges to the path entropy") {
  const IntMatrix a = adjacency_matrix(parse_graph(zoo::kGraphD));
  const double h = entropy_of(norm_sequence(a, 2000));
  CHECK(h == doctest::Approx(std::log(perron_root(a).value)).epsilon(2e-3));
}
