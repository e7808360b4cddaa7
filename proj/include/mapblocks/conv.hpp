#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <vector>

#include "mapblocks/rng.hpp"

namespace mapblocks {

// Iterative radix-2 complex FFT with precomputed twiddles.
class Fft {
 public:
  explicit Fft(int lg) : lg_(lg), n_(1 << lg) {
    rev_.resize(n_);
    for (int i = 1; i < n_; ++i) rev_[i] = (rev_[i >> 1] >> 1) | ((i & 1) << (lg_ - 1));
    w_.resize(n_ / 2);
    const double step = 2.0 * kPi / n_;
    for (int i = 0; i < n_ / 2; ++i) w_[i] = {std::cos(step * i), std::sin(step * i)};
  }

  int size() const { return n_; }

  void forward(std::vector<std::complex<double>>& a) const {
    for (int i = 0; i < n_; ++i)
      if (i < rev_[i]) std::swap(a[i], a[rev_[i]]);
    for (int len = 2; len <= n_; len <<= 1) {
      const int stride = n_ / len;
      for (int i = 0; i < n_; i += len) {
        for (int j = 0; j < len / 2; ++j) {
          const auto u = a[i + j];
          const auto v = a[i + j + len / 2] * w_[j * stride];
          a[i + j] = u + v;
          a[i + j + len / 2] = u - v;
        }
      }
    }
  }

  void inverse(std::vector<std::complex<double>>& a) const {
    for (auto& x : a) x = std::conj(x);
    forward(a);
    const double inv = 1.0 / n_;
    for (auto& x : a) x = std::conj(x) * inv;
  }

 private:
  static constexpr double kPi = 3.14159265358979323846;
  int lg_, n_;
  std::vector<int> rev_;
  std::vector<std::complex<double>> w_;
};

// conv(a, b) truncated to trunc_len entries, entries clamped at zero.
// Packs both real inputs into one complex FFT.
inline std::vector<double> conv_trunc(const std::vector<double>& a, const std::vector<double>& b,
                                      int trunc_len) {
  const int need = static_cast<int>(a.size() + b.size()) - 1;
  int lg = 0;
  while ((1 << lg) < need) ++lg;
  static thread_local std::map<int, std::unique_ptr<Fft>> plans;
  auto& plan = plans[lg];
  if (!plan) plan = std::make_unique<Fft>(lg);
  const int n = plan->size();
  std::vector<std::complex<double>> p(n);
  for (std::size_t i = 0; i < a.size(); ++i) p[i].real(a[i]);
  for (std::size_t i = 0; i < b.size(); ++i) p[i].imag(b[i]);
  plan->forward(p);
  std::vector<std::complex<double>> c(n);
  for (int k = 0; k < n; ++k) {
    const int kk = (n - k) & (n - 1);
    const auto fa = (p[k] + std::conj(p[kk])) * 0.5;
    const auto fb = (p[k] - std::conj(p[kk])) * std::complex<double>(0, -0.5);
    c[k] = fa * fb;
  }
  plan->inverse(c);
  std::vector<double> out(std::min(need, trunc_len));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::max(0.0, c[i].real());
  return out;
}

// Distributions q_k(s) = P(Y_1 + ... + Y_k = s) truncated to s in [0, n],
// for every block size k appearing in the halving recursion of m. Built once
// per n by FFT doubling; read-only afterwards and safe to share across
// threads.
//
// The split sampler draws (Y_1..Y_m | sum = n) top-down: at a node covering k
// variables with remaining target s, the left half's subtotal a follows
//   P(a) = qL(a) qR(s-a) / q_k(s),
// which is the exact conditional law. Truncation at n is harmless because
// every conditional target is <= n. Accuracy is limited only by double
//-precision FFT roundoff; the per-sample law is within ~1e-9 total variation
// of exact (and is cross-checked against the rejection sampler and the small-n
// oracle in the tests).
class ConditionedSumTables {
 public:
  ConditionedSumTables(int n, std::vector<double> base_pmf) : n_(n), len_(n + 1) {
    if (static_cast<int>(base_pmf.size()) != len_)
      throw std::invalid_argument("ConditionedSumTables: base pmf must have n+1 entries");
    m_ = 2 * n + 1;
    q_[1] = std::move(base_pmf);
    build(m_);
  }

  int variables() const { return m_; }
  int target() const { return n_; }

  const std::vector<double>& dist(int k) const { return q_.at(k); }

  // P(S_m = n); diagnostic (e.g. expected rejection trials = 1/value).
  double target_probability() const { return q_.at(m_)[n_]; }

  // Fills out[0..m) with one conditioned vector (Y units).
  void sample(Xoshiro256pp& rng, int* out) const {
    sample_node(m_, n_, out, rng);
  }

 private:
  void build(int k) {
    if (q_.count(k)) return;
    const int l = k / 2, r = k - l;
    build(l);
    build(r);
    q_[k] = conv_trunc(q_.at(l), q_.at(r), len_);
  }

  void sample_node(int k, int s, int* out, Xoshiro256pp& rng) const {
    if (k == 1) {
      *out = s;
      return;
    }
    if (s == 0) {
      std::fill(out, out + k, 0);
      return;
    }
    const int l = k / 2, r = k - l;
    const auto& ql = q_.at(l);
    const auto& qr = q_.at(r);
    double z = 0;
    for (int a = 0; a <= s; ++a) z += ql[a] * qr[s - a];
    if (!(z > 0)) throw std::runtime_error("ConditionedSumTables: zero mass at split");
    const double u = rng.u01() * z;
    double acc = 0;
    int a = 0;
    for (; a < s; ++a) {
      acc += ql[a] * qr[s - a];
      if (acc > u) break;
    }
    sample_node(l, a, out, rng);
    sample_node(r, s - a, out + l, rng);
  }

  int n_, len_, m_;
  std::map<int, std::vector<double>> q_;
};

// Exact (up to fp) conditioned law of the largest and second-largest value:
//   P(max <= B | S_m = n)  and  P(second largest <= B | S_m = n),
// via convolution powers of the pmf restricted to [0, B]. Independent of any
// sampling path; used as a large-n oracle in tests and diagnostics.
struct ExtremeCdfs {
  double largest_le;
  double second_le;
};

inline ExtremeCdfs conditioned_extreme_cdfs(int n, int B, const std::vector<double>& base_pmf) {
  if (B < 0 || B > n) throw std::invalid_argument("conditioned_extreme_cdfs: need 0 <= B <= n");
  const int m = 2 * n + 1;
  const int len = n + 1;
  std::vector<double> restricted(base_pmf.begin(), base_pmf.begin() + (B + 1));
  restricted.resize(len, 0.0);
  std::map<int, std::vector<double>> qb, q;
  qb[1] = restricted;
  q[1] = base_pmf;
  auto build = [len](auto&& self, std::map<int, std::vector<double>>& tbl, int k) -> void {
    if (tbl.count(k)) return;
    const int l = k / 2, r = k - l;
    self(self, tbl, l);
    self(self, tbl, r);
    tbl[k] = conv_trunc(tbl.at(l), tbl.at(r), len);
  };
  build(build, qb, m);
  build(build, qb, m - 1);
  build(build, q, m);
  const double pn = q.at(m)[n];
  const double all_le = qb.at(m)[n] / pn;
  // exactly one variable above B
  double one_above = 0;
  const auto& qm1 = qb.at(m - 1);
  for (int j = B + 1; j <= n; ++j) one_above += base_pmf[j] * qm1[n - j];
  one_above *= m / pn;
  return {all_le, all_le + one_above};
}

}  // namespace mapblocks
