#include "graphent/int_matrix.hpp"

#include <stdexcept>

namespace graphent {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : IntMatrix(rows.size()) {
  std::size_t i = 0;
  for (const auto &row : rows) {
    if (row.size() != n_)
      throw std::invalid_argument("IntMatrix: rows must form a square matrix");
    std::size_t j = 0;
    for (long v : row)
      (*this)(i, j++) = v;
    ++i;
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      t(j, i) = (*this)(i, j);
  return t;
}

BigInt IntMatrix::column_sum(std::size_t j) const {
  BigInt s = 0;
  for (std::size_t i = 0; i < n_; ++i)
    s += (*this)(i, j);
  return s;
}

BigInt IntMatrix::row_sum(std::size_t i) const {
  BigInt s = 0;
  for (std::size_t j = 0; j < n_; ++j)
    s += (*this)(i, j);
  return s;
}

bool IntMatrix::is_zero() const {
  for (const auto &v : entries_)
    if (v != 0)
      return false;
  return true;
}

IntMatrix operator+(const IntMatrix &a, const IntMatrix &b) {
  if (a.n_ != b.n_)
    throw std::invalid_argument("IntMatrix: order mismatch");
  IntMatrix c(a.n_);
  for (std::size_t k = 0; k < a.entries_.size(); ++k)
    c.entries_[k] = a.entries_[k] + b.entries_[k];
  return c;
}

IntMatrix operator*(const IntMatrix &a, const IntMatrix &b) {
  if (a.n_ != b.n_)
    throw std::invalid_argument("IntMatrix: order mismatch");
  const std::size_t n = a.n_;
  IntMatrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const BigInt &aik = a(i, k);
      if (aik == 0)
        continue;
      for (std::size_t j = 0; j < n; ++j)
        if (b(k, j) != 0)
          mpz_addmul(c(i, j).get_mpz_t(), aik.get_mpz_t(), b(k, j).get_mpz_t());
    }
  return c;
}

IntMatrix adjacency_matrix(const Graph &g) {
  IntMatrix a(g.vertex_count());
  for (const auto &e : g.edges())
    a(e.source, e.range) += 1;
  return a;
}

IntMatrix mat_pow(const IntMatrix &a, unsigned long n) {
  IntMatrix result = IntMatrix::identity(a.order());
  IntMatrix base = a;
  while (n > 0) {
    if (n & 1UL)
      result = result * base;
    n >>= 1;
    if (n > 0)
      base = base * base;
  }
  return result;
}

BigInt norm_11(const IntMatrix &a) {
  BigInt s = 0;
  for (std::size_t i = 0; i < a.order(); ++i)
    for (std::size_t j = 0; j < a.order(); ++j)
      s += abs(a(i, j));
  return s;
}

IntMatrix block_diagonal(const IntMatrix &a, const IntMatrix &b) {
  const std::size_t n = a.order(), m = b.order();
  IntMatrix c(n + m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      c(i, j) = a(i, j);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      c(n + i, n + j) = b(i, j);
  return c;
}

} // namespace graphent
