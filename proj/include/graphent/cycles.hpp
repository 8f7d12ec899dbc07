#pragma once

#include "graphent/bigint.hpp"
#include "graphent/graph.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace graphent {

/// A simple cycle e_1 ... e_m, stored in its canonical rotation (the rotation
/// whose edge-name sequence is lexicographically least).
class Cycle {
public:
  /// `edges` must be a closed path whose edge sources are pairwise distinct;
  /// throws std::invalid_argument otherwise.
  Cycle(const Graph &g, std::vector<EdgeId> edges);

  std::span<const EdgeId> edges() const { return edges_; }
  std::size_t length() const { return edges_.size(); }
  /// Source vertices of the edges, in cycle order.
  std::vector<VertexId> vertices(const Graph &g) const;
  std::vector<std::string> edge_names(const Graph &g) const;

  friend bool operator==(const Cycle &a, const Cycle &b) = default;

private:
  std::vector<EdgeId> edges_;
};

class CycleLimitError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultCycleCap = 1'000'000;

/// All simple cycles, one per rotation class, ordered by canonical edge-name
/// sequence and then length. Throws CycleLimitError past `cap` cycles.
std::vector<Cycle> enumerate_cycles(const Graph &g, std::size_t cap = kDefaultCycleCap);

/// Streams simple cycles (as raw edge sequences starting at their least
/// vertex) to `visit` until it returns false. Restricted to vertices with
/// mask[v] set when a mask is given.
void for_each_cycle(const Graph &g, const std::function<bool(std::span<const EdgeId>)> &visit,
                    const std::vector<bool> *mask = nullptr);

/// Strongly connected components, each a list of vertices in increasing order.
std::vector<std::vector<VertexId>> strongly_connected_components(const Graph &g);

bool has_cycle(const Graph &g);

struct ExcResult {
  bool holds = true;
  /// Two distinct cycles sharing a vertex, when the condition fails.
  std::optional<std::pair<Cycle, Cycle>> witness;
};

/// Whether every pair of distinct cycles is vertex-disjoint.
ExcResult satisfies_exc(const Graph &g);

struct CycleChainReport {
  std::vector<Cycle> cycles;
  bool exc = true;
  std::size_t d1 = 0; ///< longest chain of cycles
  std::size_t d2 = 0; ///< longest chain whose last cycle has an exit
  std::vector<bool> exits;
};

/// Chain statistics of a graph satisfying the exclusive-cycle condition.
/// Throws std::invalid_argument otherwise.
CycleChainReport chain_stats(const Graph &g);

/// GK-dimension of the Leavitt path algebra: ∞ without the exclusive-cycle
/// condition, 0 without cycles, else max(2 d1 - 1, 2 d2).
ExtendedNat gk_dim_leavitt(const Graph &g);
/// GK-dimension of the path algebra: ∞ without the exclusive-cycle condition,
/// 0 when acyclic, else d1.
ExtendedNat gk_dim_path(const Graph &g);

/// Number of paths, trivial paths included; ∞ when the graph has a cycle.
ExtendedNat dim_path_algebra(const Graph &g);
/// Sum over sinks v of (number of paths ending at v)^2; ∞ when cyclic.
ExtendedNat dim_leavitt_algebra(const Graph &g);

} // namespace graphent
