#include "graphent/spectral.hpp"

#include <cmath>
#include <stdexcept>

namespace graphent {

bool CharPoly::is_monomial() const {
  for (std::size_t i = 0; i + 1 < coefficients.size(); ++i)
    if (coefficients[i] != 0)
      return false;
  return true;
}

mpq_class CharPoly::evaluate(const mpq_class &x) const {
  mpq_class acc = 0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it)
    acc = acc * x + mpq_class(*it);
  return acc;
}

CharPoly operator*(const CharPoly &a, const CharPoly &b) {
  if (a.coefficients.empty() || b.coefficients.empty())
    return CharPoly{};
  CharPoly c;
  c.coefficients.assign(a.coefficients.size() + b.coefficients.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.coefficients.size(); ++i)
    for (std::size_t j = 0; j < b.coefficients.size(); ++j)
      c.coefficients[i + j] += a.coefficients[i] * b.coefficients[j];
  return c;
}

CharPoly monomial(std::size_t k) {
  CharPoly p;
  p.coefficients.assign(k + 1, BigInt(0));
  p.coefficients[k] = 1;
  return p;
}

CharPoly char_poly(const IntMatrix &a) {
  // M_0 = 0, c_n = 1; M_k = A M_{k-1} + c_{n-k+1} I; c_{n-k} = -tr(A M_k) / k.
  // The division is exact over the integers.
  const std::size_t n = a.order();
  CharPoly p;
  p.coefficients.assign(n + 1, BigInt(0));
  p.coefficients[n] = 1;
  IntMatrix m(n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m;
    for (std::size_t i = 0; i < n; ++i)
      m(i, i) += p.coefficients[n - k + 1];
    const IntMatrix am = a * m;
    BigInt trace = 0;
    for (std::size_t i = 0; i < n; ++i)
      trace += am(i, i);
    BigInt c;
    mpz_divexact_ui(c.get_mpz_t(), trace.get_mpz_t(), k);
    p.coefficients[n - k] = -c;
  }
  return p;
}

namespace {

using RatPoly = std::vector<mpq_class>; // index = power, no trailing zeros

void normalize(RatPoly &p) {
  while (!p.empty() && p.back() == 0)
    p.pop_back();
}

RatPoly to_rational(const CharPoly &p) {
  RatPoly r(p.coefficients.begin(), p.coefficients.end());
  normalize(r);
  return r;
}

RatPoly derivative(const RatPoly &p) {
  RatPoly d;
  for (std::size_t i = 1; i < p.size(); ++i)
    d.push_back(p[i] * static_cast<unsigned long>(i));
  normalize(d);
  return d;
}

// Remainder and quotient of polynomial division; b must be nonzero.
std::pair<RatPoly, RatPoly> divide(RatPoly a, const RatPoly &b) {
  RatPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, mpq_class(0));
  while (a.size() >= b.size() && !a.empty()) {
    const std::size_t shift = a.size() - b.size();
    const mpq_class factor = a.back() / b.back();
    q[shift] = factor;
    for (std::size_t i = 0; i < b.size(); ++i)
      a[shift + i] -= factor * b[i];
    a.pop_back();
    normalize(a);
  }
  normalize(q);
  return {q, a};
}

// Scales by a positive rational so the coefficients are coprime integers.
void make_primitive(RatPoly &p) {
  if (p.empty())
    return;
  mpz_class den = 1, num = 0;
  for (const auto &c : p) {
    den = lcm(den, c.get_den());
    num = gcd(num, c.get_num());
  }
  const mpq_class scale(den, num);
  for (auto &c : p)
    c *= scale;
}

RatPoly square_free(const RatPoly &p) {
  RatPoly a = p, b = derivative(p);
  while (!b.empty()) {
    RatPoly r = divide(a, b).second;
    a = std::move(b);
    b = std::move(r);
    make_primitive(b);
  }
  // a is now gcd(p, p') up to a constant factor.
  RatPoly q = divide(p, a).first;
  make_primitive(q);
  return q;
}

std::vector<RatPoly> sturm_sequence(const RatPoly &p) {
  std::vector<RatPoly> seq{p, derivative(p)};
  make_primitive(seq[1]);
  while (!seq.back().empty()) {
    RatPoly r = divide(seq[seq.size() - 2], seq.back()).second;
    for (auto &c : r)
      c = -c;
    make_primitive(r);
    seq.push_back(std::move(r));
  }
  seq.pop_back();
  return seq;
}

int sign_at(const RatPoly &p, const mpq_class &x) {
  mpq_class acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it)
    acc = acc * x + *it;
  return sgn(acc);
}

std::size_t sign_changes(const std::vector<int> &signs) {
  std::size_t changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0)
      continue;
    if (last != 0 && s != last)
      ++changes;
    last = s;
  }
  return changes;
}

class RootCounter {
public:
  explicit RootCounter(const CharPoly &p) {
    const RatPoly r = to_rational(p);
    if (r.size() <= 1)
      return; // constant: no roots
    seq_ = sturm_sequence(square_free(r));
    std::vector<int> lead;
    for (const auto &s : seq_)
      lead.push_back(sgn(s.back()));
    at_infinity_ = sign_changes(lead);
  }

  std::size_t above(const mpq_class &x) const {
    if (seq_.empty())
      return 0;
    std::vector<int> signs;
    signs.reserve(seq_.size());
    for (const auto &s : seq_)
      signs.push_back(sign_at(s, x));
    return sign_changes(signs) - at_infinity_;
  }

private:
  std::vector<RatPoly> seq_;
  std::size_t at_infinity_ = 0;
};

} // namespace

std::size_t count_real_roots_above(const CharPoly &p, const mpq_class &x) {
  return RootCounter(p).above(x);
}

PerronRoot perron_root(const IntMatrix &a, double tol) {
  if (!(tol > 0.0))
    throw std::invalid_argument("perron_root: tolerance must be positive");
  PerronRoot root;
  root.tolerance = tol;
  const CharPoly p = char_poly(a);
  if (p.is_monomial())
    return root;

  const RootCounter counter(p);
  const mpq_class width_limit(tol);
  mpq_class lo = 0;
  mpq_class hi(norm_11(a));
  // Invariant: lo < rho <= hi.
  while (hi - lo > width_limit) {
    mpq_class mid = (lo + hi) / 2;
    if (counter.above(mid) > 0)
      lo = mid;
    else
      hi = mid;
  }
  root.lo = lo;
  root.hi = hi;
  root.value = mpq_class((lo + hi) / 2).get_d();
  return root;
}

namespace {

double log_perron(const IntMatrix &a, double tol) {
  const CharPoly p = char_poly(a);
  if (p.is_monomial() || count_real_roots_above(p, mpq_class(1)) == 0)
    return 0.0;
  return std::log(perron_root(a, tol).value);
}

} // namespace

double entropy_path(const Graph &g, double tol) {
  return log_perron(adjacency_matrix(g), tol);
}

double entropy_extended(const Graph &g, double tol) {
  return entropy_path(extended_graph(g), tol);
}

DimSequence norm_sequence(const IntMatrix &a, std::size_t kmax) {
  if (kmax < 1)
    throw std::invalid_argument("norm_sequence: kmax must be at least 1");
  std::vector<BigInt> q;
  q.reserve(kmax + 1);
  IntMatrix power = IntMatrix::identity(a.order());
  q.push_back(norm_11(power));
  for (std::size_t k = 1; k <= kmax; ++k) {
    power = power * a;
    q.push_back(norm_11(power));
  }
  return DimSequence::from_quotients(std::move(q));
}

} // namespace graphent
