#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>

namespace graphent {

using BigInt = mpz_class;

/// A value in N ∪ {∞}. Used for algebra dimensions and GK-dimensions.
class ExtendedNat {
public:
  ExtendedNat() = default;
  ExtendedNat(BigInt value) : value_(std::move(value)) {}
  ExtendedNat(unsigned long value) : value_(value) {}

  static ExtendedNat infinity() {
    ExtendedNat n;
    n.infinite_ = true;
    return n;
  }

  bool is_finite() const { return !infinite_; }
  bool is_infinite() const { return infinite_; }

  /// Only meaningful when finite.
  const BigInt &value() const { return value_; }

  /// Decimal digits, or "inf".
  std::string to_string() const;
  static ExtendedNat from_string(const std::string &text);

  friend bool operator==(const ExtendedNat &a, const ExtendedNat &b) {
    if (a.infinite_ || b.infinite_)
      return a.infinite_ == b.infinite_;
    return a.value_ == b.value_;
  }

private:
  bool infinite_ = false;
  BigInt value_ = 0;
};

/// Natural logarithm of a positive integer of any size. The logarithm is
/// evaluated with `precision_bits` of working precision before the final
/// rounding to double.
double log_of(const BigInt &value, unsigned precision_bits = 256);

/// log(a / b) for positive a, b, with one final rounding.
double log_ratio(const BigInt &a, const BigInt &b, unsigned precision_bits = 256);

} // namespace graphent
