#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>

namespace mapblocks {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt factorial(long n) {
  BigInt r = 1;
  for (long i = 2; i <= n; ++i) r *= i;
  return r;
}

inline BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // exact: r is binomial(n-k+i, i) after each step
  }
  return r;
}

// Number of rooted planar maps with n edges: 2 * 3^n * (2n)! / ((n+2)! n!).
inline BigInt count_maps(long n) {
  if (n < 0) throw std::invalid_argument("count_maps: n < 0");
  BigInt r = 2 * factorial(2 * n);
  for (long i = 0; i < n; ++i) r *= 3;
  r /= factorial(n + 2);
  r /= factorial(n);
  return r;
}

// Number of rooted 2-connected maps with k edges:
// C_0 = 1, C_k = 2 (3k-3)! / (k! (2k-1)!) for k >= 1.
inline BigInt count_two_connected(long k) {
  if (k < 0) throw std::invalid_argument("count_two_connected: k < 0");
  if (k == 0) return 1;
  BigInt r = 2 * factorial(3 * k - 3);
  r /= factorial(k);
  r /= factorial(2 * k - 1);
  return r;
}

}  // namespace mapblocks
