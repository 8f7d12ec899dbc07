#pragma once

#include "graphent/bigint.hpp"
#include "graphent/graph.hpp"

#include <cstddef>
#include <vector>

namespace graphent {

/// Square matrix of arbitrary-precision integers, row-major.
/// For adjacency matrices the row is the source vertex and the column the
/// range vertex.
class IntMatrix {
public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t n) : n_(n), entries_(n * n, BigInt(0)) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t order() const { return n_; }
  BigInt &operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
  const BigInt &operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

  IntMatrix transpose() const;
  /// Sum over row i of column j, i.e. the number of paths ending at j when
  /// this is a power of an adjacency matrix.
  BigInt column_sum(std::size_t j) const;
  BigInt row_sum(std::size_t i) const;
  bool is_zero() const;

  friend IntMatrix operator+(const IntMatrix &a, const IntMatrix &b);
  friend IntMatrix operator*(const IntMatrix &a, const IntMatrix &b);
  friend bool operator==(const IntMatrix &a, const IntMatrix &b) = default;

private:
  std::size_t n_ = 0;
  std::vector<BigInt> entries_;
};

/// A_E[i][j] = number of edges from vertex i to vertex j.
IntMatrix adjacency_matrix(const Graph &g);

/// Exact A^n by binary exponentiation; A^0 is the identity.
IntMatrix mat_pow(const IntMatrix &a, unsigned long n);

/// Entrywise sum of absolute values.
BigInt norm_11(const IntMatrix &a);

/// Block-diagonal A ⊕ B.
IntMatrix block_diagonal(const IntMatrix &a, const IntMatrix &b);

} // namespace graphent
