#pragma once

#include "graphent/bigint.hpp"
#include "graphent/graph.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace graphent::oracle {

class LimitExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultPathCap = 10'000'000;
inline constexpr std::uint64_t kDefaultPairCap = 2'000'000'000;

/// All labeled paths of exact length n; length 0 lists one trivial path per
/// vertex (an empty edge sequence whose vertex is recorded in `start`).
struct PathList {
  std::size_t length = 0;
  std::vector<std::vector<EdgeId>> paths;
  std::vector<VertexId> start; ///< source vertex of each path
  std::vector<VertexId> end;   ///< range vertex of each path
};

/// Exhaustive depth-first enumeration. Throws LimitExceeded past `cap` paths.
PathList enum_paths(const Graph &g, std::size_t n, std::size_t cap = kDefaultPathCap);

enum class Designation { LeastName, GreatestName };

struct BasisCount {
  std::size_t k = 0;
  BigInt count = 0;
  /// Designated edge f_v for each non-sink v.
  std::map<VertexId, EdgeId> designated;
};

/// Counts pairs (lambda, mu) with r(lambda) = r(mu) and l(lambda)+l(mu) = k,
/// one pair at a time, rejecting lambda = lambda' f, mu = mu' f where f is the
/// designated edge at r(lambda') = r(mu'). Throws LimitExceeded when the
/// number of candidate pairs exceeds `pair_cap`.
BasisCount count_basis(const Graph &g, std::size_t k,
                       Designation designation = Designation::LeastName,
                       std::uint64_t pair_cap = kDefaultPairCap);

/// Deterministic pseudo-random multigraph. With r() the successive outputs of
/// std::mt19937_64 seeded by `seed`:
///   vertices = 1 + r() % max_v, named v1..vN;
///   edges    = r() % (max_e + 1), named e1..eM;
///   edge i   : source = r() % vertices, then range = r() % vertices.
Graph random_graph(std::uint64_t seed, std::size_t max_v, std::size_t max_e);

} // namespace graphent::oracle
