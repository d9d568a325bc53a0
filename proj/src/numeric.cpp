#include "walkspec/numeric.hpp"

#include <cmath>
#include <limits>

namespace walkspec {

double to_double_nearest(const Rational& q) {
  // mpq_get_d truncates; correct to nearest by probing the neighbour.
  double d = q.get_d();
  if (!std::isfinite(d)) return d;
  Rational back(d);
  if (back == q) return d;
  double other = back < q ? std::nextafter(d, std::numeric_limits<double>::infinity())
                          : std::nextafter(d, -std::numeric_limits<double>::infinity());
  Rational diff_d = q - back;
  Rational diff_o = q - Rational(other);
  return abs(diff_o) < abs(diff_d) ? other : d;
}

double to_double_down(const Rational& q) {
  double d = q.get_d();
  if (Rational(d) > q) d = std::nextafter(d, -std::numeric_limits<double>::infinity());
  return d;
}

double to_double_up(const Rational& q) {
  double d = q.get_d();
  if (Rational(d) < q) d = std::nextafter(d, std::numeric_limits<double>::infinity());
  return d;
}

double sqrt_down(const Rational& q) {
  if (sgn(q) <= 0) return 0.0;
  double s = std::sqrt(to_double_down(q));
  while (s > 0.0) {
    Rational rs(s);
    if (rs * rs <= q) break;
    s = std::nextafter(s, 0.0);
  }
  return s;
}

double sqrt_up(const Rational& q) {
  if (sgn(q) <= 0) return 0.0;
  double s = std::sqrt(to_double_up(q));
  for (;;) {
    Rational rs(s);
    if (rs * rs >= q) break;
    s = std::nextafter(s, std::numeric_limits<double>::infinity());
  }
  return s;
}

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational make_rational(long num, long den) {
  return make_rational(BigInt(num), BigInt(den));
}

std::string to_string(const BigInt& v) { return v.get_str(); }

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

bool is_perfect_square(const BigInt& v, BigInt* root) {
  if (sgn(v) < 0) return false;
  if (mpz_perfect_square_p(v.get_mpz_t()) == 0) return false;
  if (root != nullptr) *root = sqrt(v);
  return true;
}

}  // namespace walkspec
