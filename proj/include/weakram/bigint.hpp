#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "errors.hpp"

namespace weakram {

using bigint = boost::multiprecision::cpp_int;

// p^k for k >= 0.
inline bigint bigpow(const bigint& p, long k) {
  if (k < 0) throw invalid_degree("bigpow: negative exponent");
  bigint r = 1, b = p;
  while (k > 0) {
    if (k & 1) r *= b;
    b *= b;
    k >>= 1;
  }
  return r;
}

// Smallest non-negative representative of a mod m, m > 0.
inline bigint mod_reduce(const bigint& a, const bigint& m) {
  bigint r = a % m;
  if (r < 0) r += m;
  return r;
}

// Extended gcd: returns g = gcd(a, b) and writes x, y with a x + b y = g.
inline bigint egcd(const bigint& a, const bigint& b, bigint& x, bigint& y) {
  bigint old_r = a, r = b, old_x = 1, xx = 0, old_y = 0, yy = 1;
  while (r != 0) {
    bigint q = old_r / r;
    bigint t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_x - q * xx;
    old_x = xx;
    xx = t;
    t = old_y - q * yy;
    old_y = yy;
    yy = t;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_x = -old_x;
    old_y = -old_y;
  }
  x = old_x;
  y = old_y;
  return old_r;
}

// Inverse of a mod m (m > 1); requires gcd(a, m) = 1.
inline bigint invmod(const bigint& a, const bigint& m) {
  bigint x, y;
  bigint g = egcd(mod_reduce(a, m), m, x, y);
  if (g != 1) throw division_by_zero("invmod: not invertible");
  return mod_reduce(x, m);
}

// Largest k with p^k | a, for a != 0.
inline long padic_val(bigint a, const bigint& p) {
  if (a == 0) throw division_by_zero("padic_val: zero argument");
  long v = 0;
  while (a % p == 0) {
    a /= p;
    ++v;
  }
  return v;
}

}  // namespace weakram
