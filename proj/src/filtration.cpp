#include "graphent/filtration.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace graphent {

DimSequence DimSequence::from_quotients(std::vector<BigInt> quotients) {
  for (const auto &q : quotients)
    if (q < 0)
      throw std::invalid_argument("layer dimensions must be nonnegative");
  DimSequence s;
  s.quotients_ = std::move(quotients);
  return s;
}

DimSequence DimSequence::from_cumulative(const std::vector<BigInt> &cumulative) {
  std::vector<BigInt> q;
  q.reserve(cumulative.size());
  BigInt previous = 0;
  for (const auto &c : cumulative) {
    if (c < previous)
      throw std::invalid_argument("cumulative dimensions must be nonnegative and nondecreasing");
    q.push_back(c - previous);
    previous = c;
  }
  return from_quotients(std::move(q));
}

std::vector<BigInt> DimSequence::cumulative() const {
  std::vector<BigInt> c;
  c.reserve(quotients_.size());
  BigInt running = 0;
  for (const auto &q : quotients_) {
    running += q;
    c.push_back(running);
  }
  return c;
}

double entropy_of(const DimSequence &seq, double window_fraction) {
  if (seq.size() < 2)
    throw std::invalid_argument("entropy_of: need at least two terms");
  const std::size_t horizon = seq.size() - 1;
  const auto window = std::max<std::size_t>(
      1, static_cast<std::size_t>(std::ceil(window_fraction * static_cast<double>(horizon))));
  const std::size_t first = horizon >= window ? horizon - window + 1 : 1;
  for (std::size_t n = horizon; n >= first; --n) {
    const BigInt &q = seq.quotient(n);
    if (q > 0)
      return log_of(q) / static_cast<double>(n);
  }
  return 0.0;
}

GkEstimate gk_dim_of(const DimSequence &seq, double infinity_threshold) {
  if (seq.size() < 3)
    throw std::invalid_argument("gk_dim_of: need at least three terms");
  const auto cumulative = seq.cumulative();
  const std::size_t horizon = cumulative.size() - 1;
  const std::size_t half = std::max<std::size_t>(1, horizon / 2);
  if (cumulative[half] <= 0)
    throw std::invalid_argument("gk_dim_of: dimensions must be positive at the horizon");
  const double slope = (log_of(cumulative[horizon]) - log_of(cumulative[half])) /
                       (std::log(static_cast<double>(horizon)) - std::log(static_cast<double>(half)));
  GkEstimate est;
  est.value = slope;
  est.infinite = slope > infinity_threshold;
  return est;
}

DimSequence subsample(const DimSequence &seq, std::size_t k) {
  if (k == 0)
    throw std::invalid_argument("subsample: k must be positive");
  const auto cumulative = seq.cumulative();
  std::vector<BigInt> picked;
  for (std::size_t n = 0; n * k < cumulative.size(); ++n)
    picked.push_back(cumulative[n * k]);
  return DimSequence::from_cumulative(picked);
}

DimSequence matrix_scale(const DimSequence &seq, unsigned long n) {
  if (n == 0)
    throw std::invalid_argument("matrix_scale: n must be positive");
  const BigInt factor = BigInt(n) * BigInt(n);
  std::vector<BigInt> q = seq.quotients();
  for (auto &v : q)
    v *= factor;
  return DimSequence::from_quotients(std::move(q));
}

DimSequence direct_sum(const DimSequence &a, const DimSequence &b) {
  std::vector<BigInt> q(std::max(a.size(), b.size()), BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    q[i] += a.quotient(i);
  for (std::size_t i = 0; i < b.size(); ++i)
    q[i] += b.quotient(i);
  return DimSequence::from_quotients(std::move(q));
}

namespace {

BigInt parse_natural(const std::string &token, std::size_t line) {
  BigInt v;
  if (token.empty() || v.set_str(token, 10) != 0 || v < 0)
    throw std::invalid_argument("line " + std::to_string(line) + ": '" + token +
                                "' is not a nonnegative integer");
  return v;
}

} // namespace

DimSequence read_sequence(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  bool csv = false;
  std::vector<BigInt> raw;
  std::vector<std::pair<std::size_t, BigInt>> indexed;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos)
      continue;
    if (line.rfind("k,", 0) == 0) {
      csv = true;
      continue;
    }
    std::replace(line.begin(), line.end(), ',', csv ? '\n' : ' ');
    if (csv) {
      std::istringstream fields(line);
      std::string k_field, q_field;
      std::getline(fields, k_field);
      std::getline(fields, q_field);
      indexed.emplace_back(static_cast<std::size_t>(std::stoull(k_field)),
                           parse_natural(q_field, line_no));
    } else {
      std::istringstream tokens(line);
      std::string tok;
      while (tokens >> tok)
        raw.push_back(parse_natural(tok, line_no));
    }
  }
  if (!csv)
    return DimSequence::from_quotients(std::move(raw));

  std::vector<BigInt> q;
  for (const auto &[k, value] : indexed) {
    if (k != q.size())
      throw std::invalid_argument("CSV rows must list k = 0, 1, 2, ... in order");
    q.push_back(value);
  }
  return DimSequence::from_quotients(std::move(q));
}

} // namespace graphent
