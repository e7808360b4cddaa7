#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "mapblocks/counting.hpp"

namespace mapblocks {

// Truncated power series with exact rational coefficients.
// coeff[i] holds the coefficient of z^i; order() = coeff.size() - 1.
// All arithmetic is exact modulo z^{order+1}.
struct RationalSeries {
  std::vector<Rational> coeff;

  RationalSeries() = default;
  explicit RationalSeries(std::size_t order) : coeff(order + 1) {}

  std::size_t order() const { return coeff.empty() ? 0 : coeff.size() - 1; }

  static RationalSeries constant(const Rational& c, std::size_t order) {
    RationalSeries s(order);
    s.coeff[0] = c;
    return s;
  }
};

inline RationalSeries add(const RationalSeries& a, const RationalSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  RationalSeries r(n);
  for (std::size_t i = 0; i <= n; ++i) r.coeff[i] = a.coeff[i] + b.coeff[i];
  return r;
}

inline RationalSeries sub(const RationalSeries& a, const RationalSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  RationalSeries r(n);
  for (std::size_t i = 0; i <= n; ++i) r.coeff[i] = a.coeff[i] - b.coeff[i];
  return r;
}

inline RationalSeries mul(const RationalSeries& a, const RationalSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  RationalSeries r(n);
  for (std::size_t i = 0; i <= n; ++i) {
    if (a.coeff[i] == 0) continue;
    for (std::size_t j = 0; i + j <= n; ++j) {
      if (b.coeff[j] == 0) continue;
      r.coeff[i + j] += a.coeff[i] * b.coeff[j];
    }
  }
  return r;
}

// Multiply by z^k.
inline RationalSeries shift(const RationalSeries& a, std::size_t k) {
  RationalSeries r(a.order());
  for (std::size_t i = k; i <= a.order(); ++i) r.coeff[i] = a.coeff[i - k];
  return r;
}

// f(g(z)) for g with zero constant term, truncated at min order (Horner).
inline RationalSeries compose(const RationalSeries& f, const RationalSeries& g) {
  if (g.coeff.empty() || g.coeff[0] != 0)
    throw std::invalid_argument("compose: inner series must have zero constant term");
  const std::size_t n = std::min(f.order(), g.order());
  RationalSeries r = RationalSeries::constant(f.coeff[n], n);
  for (std::size_t i = n; i-- > 0;) {
    r = mul(r, g);
    r.coeff[0] += f.coeff[i];
  }
  return r;
}

inline RationalSeries pow(const RationalSeries& base, unsigned long e) {
  RationalSeries r = RationalSeries::constant(1, base.order());
  RationalSeries b = base;
  while (e > 0) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

inline RationalSeries maps_series(std::size_t order) {
  RationalSeries s(order);
  for (std::size_t i = 0; i <= order; ++i) s.coeff[i] = Rational(count_maps(static_cast<long>(i)));
  return s;
}

inline RationalSeries two_connected_series(std::size_t order) {
  RationalSeries s(order);
  for (std::size_t i = 0; i <= order; ++i)
    s.coeff[i] = Rational(count_two_connected(static_cast<long>(i)));
  return s;
}

// M(z) == C(z M(z)^2) mod z^{N+1}, exactly. The series arguments are exposed
// so a deliberately corrupted series can be checked against.
inline bool compose_check_with(const RationalSeries& m, const RationalSeries& c) {
  const RationalSeries inner = shift(mul(m, m), 1);  // z M(z)^2
  const RationalSeries rhs = compose(c, inner);
  const RationalSeries diff = sub(m, rhs);
  for (const auto& q : diff.coeff)
    if (q != 0) return false;
  return true;
}

inline bool compose_check(std::size_t order) {
  if (order < 1) throw std::invalid_argument("compose_check: order must be >= 1");
  return compose_check_with(maps_series(order), two_connected_series(order));
}

// Lagrange inversion of h = y C(h^2), h(y) = y M(y^2):
//   M_n == (1/(2n+1)) [u^n] C(u)^{2n+1}, exactly.
// (Sanity anchor: n = 1 gives (1/3) * 3 C_0^2 C_1 = 2 = M_1.)
inline bool lagrange_check(long n) {
  if (n < 0) throw std::invalid_argument("lagrange_check: n < 0");
  const std::size_t ord = static_cast<std::size_t>(n);
  const RationalSeries cpow = pow(two_connected_series(ord), static_cast<unsigned long>(2 * n + 1));
  const Rational lhs = Rational(count_maps(n)) * (2 * n + 1);
  return lhs == cpow.coeff[ord];
}

}  // namespace mapblocks
