#pragma once

#include "graphent/bigint.hpp"
#include "graphent/graph.hpp"
#include "graphent/leavitt.hpp"
#include "graphent/spectral.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace graphent {

enum class AlgebraKind { Path, Extended, Leavitt };

/// How an entropy value was obtained.
enum class EntropyMethod {
  FiniteDimensional,  ///< 0 by convention
  PolynomialGrowth,   ///< finite GK-dimension forces 0
  Spectral,           ///< log of an enclosed Perron root
  ClosedFormRose,     ///< log n for the rose with n petals
  ClosedFormCycle,    ///< 0 for a single cycle
  CountpathsEstimate, ///< log(q_k)/k at finite k, not a limit
};

std::string_view to_string(AlgebraKind kind);
std::string_view to_string(EntropyMethod method);
AlgebraKind algebra_kind_from_string(std::string_view text);
EntropyMethod entropy_method_from_string(std::string_view text);

/// (dimension, GK-dimension, entropy) of one algebra together with its
/// growth class: 0 finite-dimensional, 1 infinite-dimensional with finite
/// GK-dimension, 2 infinite GK-dimension.
struct GrowthTriple {
  AlgebraKind algebra = AlgebraKind::Path;
  ExtendedNat dimension;
  ExtendedNat gkdim;
  double entropy = 0.0;
  EntropyMethod method = EntropyMethod::FiniteDimensional;
  int growth_class = 0;
  /// Exact bounds [h(KE), h(K-hat E)] attached to Leavitt estimates.
  std::optional<std::pair<double, double>> bounds;
  std::optional<std::size_t> k_max;

  friend bool operator==(const GrowthTriple &, const GrowthTriple &) = default;
};

/// Checks the trichotomy: class 0 iff finite dimension iff (gkdim, entropy)
/// = (0, 0); class 1 has entropy 0; class 2 has finite entropy.
bool satisfies_trichotomy(const GrowthTriple &t);

struct ClassifyOptions {
  std::size_t leavitt_kmax = kDefaultLeavittKmax;
  double tol = kDefaultTolerance;
};

struct Classification {
  GrowthTriple path;
  GrowthTriple leavitt;
};

Classification classify(const Graph &g, const ClassifyOptions &options = {});
/// Triple of the path algebra of the extended graph.
GrowthTriple classify_extended(const Graph &g, double tol = kDefaultTolerance);

/// Single vertex carrying n >= 1 loops and nothing else.
std::optional<std::size_t> rose_petals(const Graph &g);
/// Connected graph that is exactly one cycle (n vertices, n edges).
bool is_single_cycle(const Graph &g);

} // namespace graphent
