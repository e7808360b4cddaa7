#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "mapblocks/counting.hpp"
#include "mapblocks/rng.hpp"

namespace mapblocks {

// ---------------------------------------------------------------------------
// The critical offspring law mu on even integers:
//   mu({2k}) = (3/4) * C_k * (4/27)^k,  C_k = count_two_connected(k).
// z = 4/27 is the radius of convergence of C, so the tail is polynomial:
// mu({2k}) ~ (108 pi)^{-1/2} k^{-5/2}.
// ---------------------------------------------------------------------------

// t_k = C_k (4/27)^k, the k-th term of C(4/27).
inline Rational mu_term(long k) {
  Rational r(count_two_connected(k));
  for (long i = 0; i < k; ++i) r *= Rational(4, 27);
  return r;
}

inline Rational mu_pmf(long k) { return Rational(3, 4) * mu_term(k); }

// Term ratios, exact:
//   t_{k+1}/t_k           = p(k)/q(k)
//   ((k+1) t_{k+1})/(k t_k) = p(k)/qhat(k)   (k >= 1)
inline void term_ratio(long j, BigInt& p, BigInt& q) {
  if (j == 0) {
    p = 8;
    q = 27;
  } else {
    p = BigInt(2) * (3 * j - 1) * (3 * j - 2);
    q = BigInt(9) * (j + 1) * (2 * j + 1);
  }
}

inline void weighted_term_ratio(long j, BigInt& p, BigInt& q) {
  p = BigInt(2) * (3 * j - 1) * (3 * j - 2);
  q = BigInt(9) * j * (2 * j + 1);
}

namespace detail {

struct SplitResult {
  BigInt p, q, t;  // p/q = t_b/t_a over [a,b); t/q = sum_{k=a}^{b-1} t_k/t_a
};

template <typename RatioFn>
SplitResult binary_split(long a, long b, const RatioFn& ratio) {
  if (b - a == 1) {
    BigInt p, q;
    ratio(a, p, q);
    return {p, q, q};
  }
  const long m = a + (b - a) / 2;
  SplitResult l = binary_split(a, m, ratio);
  SplitResult r = binary_split(m, b, ratio);
  return {l.p * r.p, l.q * r.q, l.t * r.q + l.p * r.t};
}

}  // namespace detail

// Partial sum S_K = sum_{k=0}^{K} t_k together with t_K, exact.
inline void critical_partial_sum(long K, Rational& sum, Rational& t_last) {
  if (K == 0) {
    sum = 1;
    t_last = 1;
    return;
  }
  const auto res = detail::binary_split(0, K, [](long j, BigInt& p, BigInt& q) {
    term_ratio(j, p, q);
  });
  t_last = Rational(res.p, res.q);
  sum = Rational(res.t, res.q) + t_last;
}

// Partial sum sum_{k=1}^{K} k t_k, exact.
inline Rational critical_weighted_partial_sum(long K) {
  if (K < 1) return 0;
  const Rational u1(8, 27);
  if (K == 1) return u1;
  const auto res = detail::binary_split(1, K, [](long j, BigInt& p, BigInt& q) {
    weighted_term_ratio(j, p, q);
  });
  return u1 * (Rational(res.t, res.q) + Rational(res.p, res.q));
}

// Rigorous tail majorants. Both rest on the exact ratio bound
//   t_{j+1}/t_j = 2(3j-1)(3j-2) / (9(j+1)(2j+1)) <= (j/(j+1))^{5/2}   (j >= 1),
// equivalent after squaring to
//   4 (3j-1)^2 (3j-2)^2 (j+1)^3 <= 81 j^5 (2j+1)^2,
// whose difference expands to 585 j^5 + 360 j^4 - 340 j^3 - 84 j^2 + 96 j - 16 >= 0.
// Hence t_j <= t_K (K/j)^{5/2} for j >= K >= 1, and
//   sum_{j>K} t_j   <= t_K K^{5/2} * int_K^inf x^{-5/2} dx = (2/3) t_K K,
//   sum_{j>K} j t_j <= t_K K^{5/2} * int_K^inf x^{-3/2} dx = 2 t_K K^2.
inline Rational critical_tail_bound(const Rational& t_K, long K) {
  return Rational(2, 3) * t_K * K;
}

inline Rational critical_weighted_tail_bound(const Rational& t_K, long K) {
  return 2 * t_K * K * K;
}

struct CriticalBrackets {
  Rational c_lo, c_hi;        // bracket for C(4/27)
  Rational chat_lo, chat_hi;  // bracket for sum_k k (4/27)^k C_k
};

struct TermCorruption {
  long k;
  Rational delta;
};

// Rigorous brackets from exact partial sums plus the tail majorants above.
// The optional corruption perturbs one term; it exists so the checker's
// sensitivity can be tested.
inline CriticalBrackets critical_values(long K,
                                        std::optional<TermCorruption> corrupt = std::nullopt) {
  if (K < 2) throw std::invalid_argument("critical_values: increase K (need K >= 2)");
  Rational s, t_last;
  critical_partial_sum(K, s, t_last);
  Rational sw = critical_weighted_partial_sum(K);
  if (corrupt && corrupt->k <= K) {
    s += corrupt->delta;
    sw += corrupt->delta * corrupt->k;
  }
  CriticalBrackets b;
  b.c_lo = s;
  b.c_hi = s + critical_tail_bound(t_last, K);
  b.chat_lo = sw;
  b.chat_hi = sw + critical_weighted_tail_bound(t_last, K);
  return b;
}

// ---------------------------------------------------------------------------
// Exact critical constants. The generating function C(y) of the 2-connected
// counts admits the algebraic parametrization
//   y = t (1-t)^2,   C = 1 + 2t - 3t^2,
// whose Lagrange inversion gives, term by term,
//   C_k = (2/k) * (binom(3k-2, k-1) - 3 binom(3k-3, k-2))      (k >= 1).
// We verify that identity exactly for k <= depth, then evaluate at the branch
// point t = 1/3 (y = 4/27):
//   C(4/27) = 1 + 2/3 - 1/3 = 4/3,     y C'(y) = 2t(1-t) -> 4/9.
// ---------------------------------------------------------------------------
inline bool parametrization_identity_check(long depth) {
  for (long k = 1; k <= depth; ++k) {
    const BigInt lhs = k * count_two_connected(k);
    const BigInt rhs = 2 * (binomial(3 * k - 2, k - 1) - 3 * binomial(3 * k - 3, k - 2));
    if (lhs != rhs) return false;
  }
  return true;
}

struct CriticalConstants {
  Rational c;     // C(4/27) = 4/3
  Rational chat;  // sum_k k (4/27)^k C_k = 4/9
};

inline const CriticalConstants& critical_constants() {
  static const CriticalConstants cc = [] {
    if (!parametrization_identity_check(128))
      throw std::logic_error("critical_constants: parametrization identity failed");
    const auto b = critical_values(1024);
    const Rational c(4, 3), chat(4, 9);
    if (!(b.c_lo <= c && c <= b.c_hi && b.chat_lo <= chat && chat <= b.chat_hi))
      throw std::logic_error("critical_constants: bracket containment failed");
    return CriticalConstants{c, chat};
  }();
  return cc;
}

// Mean of mu: sum_k 2k mu({2k}) = 2 chat / c = 2/3, exact; also checks the
// value sits inside the interval implied by the partial-sum brackets.
inline bool mu_mean_check() {
  const auto& cc = critical_constants();
  const Rational mean = 2 * cc.chat / cc.c;
  if (mean != Rational(2, 3)) return false;
  const auto b = critical_values(1024);
  const Rational lo = 2 * b.chat_lo / b.c_hi;
  const Rational hi = 2 * b.chat_hi / b.c_lo;
  return lo <= Rational(2, 3) && Rational(2, 3) <= hi;
}

// mu({2j}) * (2j)^{5/2}, evaluated in double. On the value lattice x = 2j the
// pmf satisfies mu({x}) ~ sqrt(8/(27 pi)) x^{-5/2}, so this ratio tends to
// sqrt(8/(27 pi)) ~= 0.307106. (Equivalently mu({2j}) ~ (108 pi)^{-1/2} j^{-5/2}.)
inline double mu_tail_check(long j) {
  if (j < 1) throw std::invalid_argument("mu_tail_check: j >= 1 required");
  double m = 0.75;
  for (long k = 0; k < j; ++k) {
    if (k == 0)
      m *= 8.0 / 27.0;
    else
      m *= 2.0 * (3 * k - 1) * (3 * k - 2) / (9.0 * (k + 1) * (2 * k + 1));
  }
  return m * std::pow(2.0 * static_cast<double>(j), 2.5);
}

inline double stirling_tail_constant() { return std::sqrt(8.0 / (27.0 * 3.14159265358979323846)); }

// ---------------------------------------------------------------------------
// Sampling table: float CDF of mu({0}), mu({2}), ..., mu({2 cap}) plus the
// exact residual mass bound beyond the cap. Per-draw bias is bounded by the
// rounding of the table entries, <= (cap+2) * 2^-53 in total variation.
// ---------------------------------------------------------------------------
struct OffspringTable {
  long cap = 0;
  std::vector<double> pmf;   // pmf[j] ~= mu({2j})
  std::vector<double> cdf;   // cdf[j] = sum_{i<=j} pmf[i]
  double tail_mass_bound = 0;   // rigorous upper bound on mu beyond the cap
  Rational cdf_cap_exact;       // exact sum_{j<=cap} mu({2j})
};

// pmf[j] ~= mu({2j}) in doubles, by the term-ratio recurrence.
inline std::vector<double> mu_pmf_doubles(long cap) {
  std::vector<double> pmf(cap + 1);
  double m = 0.75;
  for (long j = 0; j <= cap; ++j) {
    if (j > 0) {
      if (j == 1)
        m *= 8.0 / 27.0;
      else {
        const long k = j - 1;
        m *= 2.0 * (3 * k - 1) * (3 * k - 2) / (9.0 * (k + 1) * (2 * k + 1));
      }
    }
    pmf[j] = m;
  }
  return pmf;
}

inline OffspringTable mu_cdf_table(long cap) {
  if (cap < 1) throw std::invalid_argument("mu_cdf_table: cap >= 1 required");
  OffspringTable t;
  t.cap = cap;
  t.pmf = mu_pmf_doubles(cap);
  t.cdf.resize(cap + 1);
  double acc = 0;
  for (long j = 0; j <= cap; ++j) {
    acc += t.pmf[j];
    t.cdf[j] = acc;
  }
  Rational s, t_last;
  critical_partial_sum(cap, s, t_last);
  t.cdf_cap_exact = Rational(3, 4) * s;
  const Rational bound = Rational(3, 4) * critical_tail_bound(t_last, cap);
  t.tail_mass_bound = static_cast<double>(bound);
  return t;
}

// Draw from the table; returns the half-value j in [0, cap], or -1 when the
// uniform falls beyond the table (mass above the cap).
inline long offspring_draw_or_tail(const OffspringTable& t, Xoshiro256pp& rng) {
  const double u = rng.u01();
  if (u < t.cdf[0]) return 0;
  if (t.cap >= 1 && u < t.cdf[1]) return 1;
  if (t.cap >= 2 && u < t.cdf[2]) return 2;
  if (u >= t.cdf[t.cap]) return -1;
  // binary search: first j with cdf[j] > u
  long lo = 3, hi = t.cap;
  while (lo < hi) {
    const long mid = lo + (hi - lo) / 2;
    if (t.cdf[mid] > u)
      hi = mid;
    else
      lo = mid + 1;
  }
  return lo;
}

// Full-support draw (even value 2j). Falls back to exact rational inversion
// for the tail beyond the cap, continuing from the exact partial sum.
inline long sample_offspring(const OffspringTable& t, Xoshiro256pp& rng) {
  const double u = rng.u01();
  if (u < t.cdf[t.cap]) {
    long lo = 0, hi = t.cap;
    while (lo < hi) {
      const long mid = lo + (hi - lo) / 2;
      if (t.cdf[mid] > u)
        hi = mid;
      else
        lo = mid + 1;
    }
    return 2 * lo;
  }
  const Rational target(u);
  Rational acc = t.cdf_cap_exact;
  Rational term = Rational(3, 4) * mu_term(t.cap);
  long j = t.cap;
  while (acc <= target) {
    BigInt p, q;
    term_ratio(j, p, q);
    term *= Rational(p, q);
    ++j;
    acc += term;
  }
  return 2 * j;
}

}  // namespace mapblocks
