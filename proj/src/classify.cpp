#include "graphent/classify.hpp"

#include "graphent/cycles.hpp"

#include <cmath>
#include <stdexcept>

namespace graphent {

std::string_view to_string(AlgebraKind kind) {
  switch (kind) {
  case AlgebraKind::Path:
    return "path";
  case AlgebraKind::Extended:
    return "extended";
  case AlgebraKind::Leavitt:
    return "leavitt";
  }
  return "?";
}

std::string_view to_string(EntropyMethod method) {
  switch (method) {
  case EntropyMethod::FiniteDimensional:
    return "finite-dimensional";
  case EntropyMethod::PolynomialGrowth:
    return "polynomial-growth";
  case EntropyMethod::Spectral:
    return "spectral";
  case EntropyMethod::ClosedFormRose:
    return "closed-form-rose";
  case EntropyMethod::ClosedFormCycle:
    return "closed-form-cycle";
  case EntropyMethod::CountpathsEstimate:
    return "countpaths-estimate";
  }
  return "?";
}

AlgebraKind algebra_kind_from_string(std::string_view text) {
  for (auto k : {AlgebraKind::Path, AlgebraKind::Extended, AlgebraKind::Leavitt})
    if (to_string(k) == text)
      return k;
  throw std::invalid_argument("unknown algebra '" + std::string(text) + "'");
}

EntropyMethod entropy_method_from_string(std::string_view text) {
  for (auto m : {EntropyMethod::FiniteDimensional, EntropyMethod::PolynomialGrowth,
                 EntropyMethod::Spectral, EntropyMethod::ClosedFormRose,
                 EntropyMethod::ClosedFormCycle, EntropyMethod::CountpathsEstimate})
    if (to_string(m) == text)
      return m;
  throw std::invalid_argument("unknown entropy method '" + std::string(text) + "'");
}

bool satisfies_trichotomy(const GrowthTriple &t) {
  const bool finite_entropy = std::isfinite(t.entropy) && t.entropy >= 0.0;
  if (!finite_entropy)
    return false;
  const bool zero_pair = t.gkdim == ExtendedNat(0UL) && t.entropy == 0.0;
  switch (t.growth_class) {
  case 0:
    return t.dimension.is_finite() && zero_pair;
  case 1:
    return t.dimension.is_infinite() && t.gkdim.is_finite() && !(t.gkdim == ExtendedNat(0UL)) &&
           t.entropy == 0.0;
  case 2:
    return t.dimension.is_infinite() && t.gkdim.is_infinite();
  default:
    return false;
  }
}

std::optional<std::size_t> rose_petals(const Graph &g) {
  if (g.vertex_count() != 1 || g.edge_count() == 0)
    return std::nullopt;
  return g.edge_count();
}

bool is_single_cycle(const Graph &g) {
  if (g.empty() || g.edge_count() != g.vertex_count())
    return false;
  const auto sccs = strongly_connected_components(g);
  return sccs.size() == 1;
}

namespace {

int growth_class_of(const ExtendedNat &dimension, const ExtendedNat &gkdim) {
  if (dimension.is_finite())
    return 0;
  return gkdim.is_finite() ? 1 : 2;
}

GrowthTriple path_triple(const Graph &g, AlgebraKind kind, double tol) {
  GrowthTriple t;
  t.algebra = kind;
  t.dimension = dim_path_algebra(g);
  t.gkdim = gk_dim_path(g);
  t.growth_class = growth_class_of(t.dimension, t.gkdim);
  if (t.growth_class == 0) {
    t.method = EntropyMethod::FiniteDimensional;
  } else {
    t.method = EntropyMethod::Spectral;
    t.entropy = entropy_path(g, tol);
  }
  return t;
}

} // namespace

GrowthTriple classify_extended(const Graph &g, double tol) {
  return path_triple(extended_graph(g), AlgebraKind::Extended, tol);
}

Classification classify(const Graph &g, const ClassifyOptions &options) {
  Classification c;
  c.path = path_triple(g, AlgebraKind::Path, options.tol);

  GrowthTriple &l = c.leavitt;
  l.algebra = AlgebraKind::Leavitt;
  l.dimension = dim_leavitt_algebra(g);
  l.gkdim = gk_dim_leavitt(g);
  l.growth_class = growth_class_of(l.dimension, l.gkdim);
  if (l.growth_class == 0) {
    l.method = EntropyMethod::FiniteDimensional;
  } else if (is_single_cycle(g)) {
    l.method = EntropyMethod::ClosedFormCycle;
  } else if (l.growth_class == 1) {
    l.method = EntropyMethod::PolynomialGrowth;
  } else if (auto petals = rose_petals(g)) {
    l.method = EntropyMethod::ClosedFormRose;
    l.entropy = std::log(static_cast<double>(*petals));
  } else {
    const EntropyEstimate est = entropy_leavitt_estimate(g, options.leavitt_kmax, options.tol);
    l.method = EntropyMethod::CountpathsEstimate;
    l.entropy = est.last_h;
    l.bounds = std::make_pair(est.entropy_path, est.entropy_extended);
    l.k_max = options.leavitt_kmax;
  }
  return c;
}

} // namespace graphent
