#pragma once

#include "graphent/bigint.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace graphent {

/// Finite prefix of a filtration V_0 ⊆ V_1 ⊆ ... given by its layer
/// dimensions q_n = dim(V_n / V_{n-1}) for n = 0..size()-1, with
/// q_0 = dim V_0. Cumulative dimensions are the prefix sums.
class DimSequence {
public:
  DimSequence() = default;

  /// Throws std::invalid_argument on a negative entry.
  static DimSequence from_quotients(std::vector<BigInt> quotients);
  /// Throws std::invalid_argument unless nonnegative and nondecreasing.
  static DimSequence from_cumulative(const std::vector<BigInt> &cumulative);

  std::size_t size() const { return quotients_.size(); }
  bool empty() const { return quotients_.empty(); }
  const std::vector<BigInt> &quotients() const { return quotients_; }
  const BigInt &quotient(std::size_t n) const { return quotients_.at(n); }
  std::vector<BigInt> cumulative() const;

  friend bool operator==(const DimSequence &, const DimSequence &) = default;

private:
  std::vector<BigInt> quotients_;
};

/// Finite-horizon entropy estimate log(q_n)/n, taken at the last index n of
/// the trailing window (a `window_fraction` share of the sequence) where
/// q_n > 0. Returns 0 when the whole window is zero. Throws
/// std::invalid_argument on sequences shorter than 2.
double entropy_of(const DimSequence &seq, double window_fraction = 0.25);

struct GkEstimate {
  double value = 0.0;
  bool infinite = false;
};

inline constexpr double kGkInfinityThreshold = 50.0;

/// Log-log slope of dim V_n between n = N/2 and the horizon N. Slopes above
/// `infinity_threshold` are reported as infinite. Always an estimate.
GkEstimate gk_dim_of(const DimSequence &seq, double infinity_threshold = kGkInfinityThreshold);

/// W_n = V_{nk}. Throws std::invalid_argument when k == 0.
DimSequence subsample(const DimSequence &seq, std::size_t k);
/// Multiplies every dimension by n^2 (filtration of M_n(A)).
DimSequence matrix_scale(const DimSequence &seq, unsigned long n);
/// Entrywise sum of layer dimensions; the shorter sequence is zero-padded.
DimSequence direct_sum(const DimSequence &a, const DimSequence &b);

/// Reads either a raw list of integers (q_0, q_1, ... separated by commas,
/// whitespace or newlines) or the CSV emitted by `leavitt-seq`.
DimSequence read_sequence(std::string_view text);

} // namespace graphent
