#pragma once

#include "graphent/bigint.hpp"
#include "graphent/filtration.hpp"
#include "graphent/graph.hpp"
#include "graphent/int_matrix.hpp"

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace graphent {

inline constexpr double kDefaultTolerance = 1e-12;

/// det(xI - A). coefficients[i] is the coefficient of x^i; the polynomial is
/// monic of degree order(A).
struct CharPoly {
  std::vector<BigInt> coefficients;

  std::size_t degree() const { return coefficients.empty() ? 0 : coefficients.size() - 1; }
  /// True when the polynomial is x^n, i.e. A is nilpotent.
  bool is_monomial() const;
  mpq_class evaluate(const mpq_class &x) const;

  friend CharPoly operator*(const CharPoly &a, const CharPoly &b);
  friend bool operator==(const CharPoly &, const CharPoly &) = default;
};

/// x^k as a CharPoly.
CharPoly monomial(std::size_t k);

/// Exact characteristic polynomial by the Faddeev-LeVerrier recurrence.
CharPoly char_poly(const IntMatrix &a);

/// Number of distinct real roots of `p` strictly greater than `x`.
std::size_t count_real_roots_above(const CharPoly &p, const mpq_class &x);

/// Perron root with a guaranteed enclosure lo < rho <= hi (lo = hi = 0 for a
/// nilpotent matrix) and hi - lo <= tolerance.
struct PerronRoot {
  double value = 0.0;
  mpq_class lo = 0;
  mpq_class hi = 0;
  double tolerance = kDefaultTolerance;
};

/// Spectral radius of a nonnegative integer matrix: the largest real root of
/// its characteristic polynomial, isolated by Sturm-sequence bisection over
/// [0, ||A||_{1,1}]. Throws std::invalid_argument when tol <= 0.
PerronRoot perron_root(const IntMatrix &a, double tol = kDefaultTolerance);

/// log rho(A_E), or 0 when rho(A_E) <= 1.
double entropy_path(const Graph &g, double tol = kDefaultTolerance);
/// entropy_path of the extended graph: log rho(A_E + A_E^t).
double entropy_extended(const Graph &g, double tol = kDefaultTolerance);

/// q_0 = ||A^0|| = order(A), q_k = ||A^k||_{1,1} for k = 1..kmax: the layer
/// dimensions of the standard filtration of the path algebra.
DimSequence norm_sequence(const IntMatrix &a, std::size_t kmax);

} // namespace graphent
