#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace walkspec {

/// Unbounded integer used for all walk counts.
using BigInt = mpz_class;
/// Exact rational used for bound values derived from walk counts.
using Rational = mpq_class;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Directed conversions: the returned double brackets the exact value from
// the named side, so interval arithmetic built on them stays valid.
double to_double_down(const Rational& q);
double to_double_up(const Rational& q);
double to_double_nearest(const Rational& q);
double sqrt_down(const Rational& q);
double sqrt_up(const Rational& q);

Rational make_rational(const BigInt& num, const BigInt& den);
Rational make_rational(long num, long den = 1);

std::string to_string(const BigInt& v);
std::string to_string(const Rational& q);

/// True when v is a perfect square; writes the root to *root when non-null.
bool is_perfect_square(const BigInt& v, BigInt* root = nullptr);

}  // namespace walkspec
