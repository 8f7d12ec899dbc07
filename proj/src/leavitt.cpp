#include "graphent/leavitt.hpp"

#include "graphent/cycles.hpp"
#include "graphent/int_matrix.hpp"
#include "graphent/spectral.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace graphent {

int gamma(const Graph &g, VertexId j) { return g.is_sink(j) ? 0 : 1; }

namespace {

// colsums[s][j] = number of paths of length s ending at j, s = 0..k.
std::vector<std::vector<BigInt>> column_sums(const Graph &g, std::size_t k) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<BigInt>> out;
  out.reserve(k + 1);
  out.emplace_back(n, BigInt(1));
  for (std::size_t s = 1; s <= k; ++s) {
    std::vector<BigInt> next(n, BigInt(0));
    const auto &prev = out.back();
    for (const auto &e : g.edges())
      next[e.range] += prev[e.source];
    out.push_back(std::move(next));
  }
  return out;
}

BigInt layer(const std::vector<std::vector<BigInt>> &c, const std::vector<int> &regular,
             std::size_t k) {
  const std::size_t n = regular.size();
  if (k == 0)
    return BigInt(static_cast<unsigned long>(n));
  BigInt total = 0;
  for (std::size_t s = 0; s <= k; ++s)
    for (std::size_t j = 0; j < n; ++j)
      mpz_addmul(total.get_mpz_t(), c[s][j].get_mpz_t(), c[k - s][j].get_mpz_t());
  for (std::size_t s = 1; s + 1 <= k; ++s)
    for (std::size_t j = 0; j < n; ++j)
      if (regular[j])
        mpz_submul(total.get_mpz_t(), c[s - 1][j].get_mpz_t(), c[k - s - 1][j].get_mpz_t());
  return total;
}

std::vector<int> gammas(const Graph &g) {
  std::vector<int> out(g.vertex_count());
  for (VertexId j = 0; j < g.vertex_count(); ++j)
    out[j] = gamma(g, j);
  return out;
}

} // namespace

BigInt leavitt_quotient_dim(const Graph &g, std::size_t k) {
  return layer(column_sums(g, k), gammas(g), k);
}

LeavittQuotientSeq leavitt_sequence(const Graph &g, std::size_t k_max) {
  if (k_max < 2)
    throw std::invalid_argument("leavitt_sequence: k_max must be at least 2");
  const auto c = column_sums(g, k_max);
  const auto regular = gammas(g);
  LeavittQuotientSeq seq;
  seq.k_max = k_max;
  seq.q.reserve(k_max + 1);
  seq.h.assign(k_max + 1, 0.0);
  for (std::size_t k = 0; k <= k_max; ++k) {
    seq.q.push_back(layer(c, regular, k));
    if (k > 0 && seq.q.back() > 0)
      seq.h[k] = log_of(seq.q.back()) / static_cast<double>(k);
  }
  return seq;
}

bool EntropyEstimate::sandwich_ok(double eps) const {
  return entropy_path - eps <= last_h && entropy_path - eps <= ratio_h &&
         last_h <= entropy_extended + eps && ratio_h <= entropy_extended + eps;
}

EntropyEstimate entropy_leavitt_estimate(const Graph &g, std::size_t k_max, double tol) {
  if (k_max < 3)
    throw std::invalid_argument("entropy_leavitt_estimate: k_max must be at least 3");
  EntropyEstimate est;
  est.k_max = k_max;
  est.entropy_path = entropy_path(g, tol);
  est.entropy_extended = entropy_extended(g, tol);
  if (!has_cycle(g))
    return est;
  const auto seq = leavitt_sequence(g, k_max);
  est.last_h = seq.h[k_max];
  est.ratio_h = log_ratio(seq.q[k_max], seq.q[k_max - 1]);
  return est;
}

std::string leavitt_csv(const LeavittQuotientSeq &seq) {
  std::ostringstream out;
  out << "k,q_k_digits,h_k,ratio_h_k\n";
  char buf[64];
  for (std::size_t k = 0; k <= seq.k_max; ++k) {
    out << k << ',' << seq.q[k].get_str() << ',';
    if (k > 0) {
      std::snprintf(buf, sizeof buf, "%.15g", seq.h[k]);
      out << buf << ',';
      if (seq.q[k] > 0 && seq.q[k - 1] > 0) {
        std::snprintf(buf, sizeof buf, "%.15g", log_ratio(seq.q[k], seq.q[k - 1]));
        out << buf;
      }
    } else {
      out << ',';
    }
    out << '\n';
  }
  return out.str();
}

} // namespace graphent
