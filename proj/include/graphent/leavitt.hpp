#pragma once

#include "graphent/bigint.hpp"
#include "graphent/filtration.hpp"
#include "graphent/graph.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace graphent {

/// 0 when vertex j is a sink, else 1.
int gamma(const Graph &g, VertexId j);

/// dim(V_k / V_{k-1}) for the standard filtration of the Leavitt path algebra:
/// the number of independent monomials lambda mu^* with l(lambda)+l(mu) = k.
/// k = 0 gives the number of vertices.
BigInt leavitt_quotient_dim(const Graph &g, std::size_t k);

struct LeavittQuotientSeq {
  std::size_t k_max = 0;
  std::vector<BigInt> q;  ///< q[k] for k = 0..k_max
  std::vector<double> h;  ///< h[k] = log(q[k]) / k; h[0] unused (0)

  DimSequence as_dim_sequence() const { return DimSequence::from_quotients(q); }
};

/// Exact q_0..q_{k_max} from one incremental pass of column-sum vectors.
/// Throws std::invalid_argument when k_max < 2.
LeavittQuotientSeq leavitt_sequence(const Graph &g, std::size_t k_max);

struct EntropyEstimate {
  std::size_t k_max = 0;
  double last_h = 0.0;  ///< log(q_kmax) / k_max
  double ratio_h = 0.0; ///< log(q_kmax / q_{kmax-1})
  double entropy_path = 0.0;
  double entropy_extended = 0.0;
  /// entropy_path - eps <= last_h, ratio_h <= entropy_extended + eps
  bool sandwich_ok(double eps) const;
};

inline constexpr std::size_t kDefaultLeavittKmax = 1000;

/// Finite-k estimate of the Leavitt entropy, reported with the path and
/// extended-path entropies that bound it. Acyclic graphs give exactly 0.
/// Throws std::invalid_argument when k_max < 3.
EntropyEstimate entropy_leavitt_estimate(const Graph &g, std::size_t k_max = kDefaultLeavittKmax,
                                         double tol = 1e-12);

/// CSV rows k,q_k_digits,h_k,ratio_h_k for k = 0..k_max (h and ratio empty
/// at k = 0).
std::string leavitt_csv(const LeavittQuotientSeq &seq);

} // namespace graphent
