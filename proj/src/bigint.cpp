#include "graphent/bigint.hpp"

#include <mpfr.h>

#include <stdexcept>

namespace graphent {

std::string ExtendedNat::to_string() const {
  return infinite_ ? std::string("inf") : value_.get_str();
}

ExtendedNat ExtendedNat::from_string(const std::string &text) {
  if (text == "inf")
    return infinity();
  BigInt v;
  if (text.empty() || v.set_str(text, 10) != 0 || v < 0)
    throw std::invalid_argument("not a natural number or 'inf': " + text);
  return ExtendedNat(v);
}

namespace {

// RAII wrapper for an mpfr_t.
class Real {
public:
  explicit Real(unsigned bits) { mpfr_init2(v_, bits); }
  ~Real() { mpfr_clear(v_); }
  Real(const Real &) = delete;
  Real &operator=(const Real &) = delete;
  mpfr_ptr get() { return v_; }

private:
  mpfr_t v_;
};

} // namespace

double log_of(const BigInt &value, unsigned precision_bits) {
  if (value <= 0)
    throw std::domain_error("log_of: argument must be positive");
  Real x(precision_bits);
  mpfr_set_z(x.get(), value.get_mpz_t(), MPFR_RNDN);
  mpfr_log(x.get(), x.get(), MPFR_RNDN);
  return mpfr_get_d(x.get(), MPFR_RNDN);
}

double log_ratio(const BigInt &a, const BigInt &b, unsigned precision_bits) {
  if (a <= 0 || b <= 0)
    throw std::domain_error("log_ratio: arguments must be positive");
  Real x(precision_bits);
  Real y(precision_bits);
  mpfr_set_z(x.get(), a.get_mpz_t(), MPFR_RNDN);
  mpfr_set_z(y.get(), b.get_mpz_t(), MPFR_RNDN);
  mpfr_div(x.get(), x.get(), y.get(), MPFR_RNDN);
  mpfr_log(x.get(), x.get(), MPFR_RNDN);
  return mpfr_get_d(x.get(), MPFR_RNDN);
}

} // namespace graphent
