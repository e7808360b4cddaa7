#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "mapblocks/conv.hpp"
#include "mapblocks/offspring.hpp"
#include "mapblocks/rng.hpp"

namespace mapblocks {

// Even outdegree sequence of length 2n+1 summing to 2n (values on the X
// lattice, i.e. doubled block sizes).
struct DegreeSequence {
  int n = 0;
  std::vector<int> values;
};

inline void check_degree_sequence(const DegreeSequence& s) {
  if (static_cast<int>(s.values.size()) != 2 * s.n + 1)
    throw std::invalid_argument("DegreeSequence: length must be 2n+1");
  long sum = 0;
  for (int v : s.values) {
    if (v < 0 || v % 2 != 0) throw std::invalid_argument("DegreeSequence: values must be even");
    sum += v;
  }
  if (sum != 2 * s.n) throw std::invalid_argument("DegreeSequence: values must sum to 2n");
}

// Ordered tree as outdegrees in depth-first order (child structure implied).
struct OrderedTree {
  std::vector<int> outdeg;
};

enum class ConditionedStrategy { Auto, Rejection, Split };

// Exact sampler of 2n+1 iid offspring values conditioned on total 2n.
//
// Two interchangeable strategies:
//  - Rejection with early abort: draw values until the running sum exceeds
//    the target or the sequence completes; accept on exact hit. Exact, but
//    the acceptance probability decays like ~9.6 n^{-3/2} (the conditioning
//    is a large-deviation event resolved by one giant value), so it is only
//    usable for small n.
//  - Split: top-down conditional sampling over a halving recursion with
//    precomputed convolution tables (see ConditionedSumTables). Near-linear
//    per sample; distributional error at double-precision roundoff level.
// Auto picks Rejection for n <= 512 and Split above.
class ConditionedSampler {
 public:
  explicit ConditionedSampler(int n, ConditionedStrategy strategy = ConditionedStrategy::Auto)
      : n_(n) {
    if (n < 1) throw std::invalid_argument("ConditionedSampler: n >= 1");
    strategy_ = strategy == ConditionedStrategy::Auto
                    ? (n <= kAutoSplitThreshold ? ConditionedStrategy::Rejection
                                                : ConditionedStrategy::Split)
                    : strategy;
    if (strategy_ == ConditionedStrategy::Rejection) {
      table_ = std::make_shared<const OffspringTable>(mu_cdf_table(n));
    } else {
      split_ = std::make_shared<const ConditionedSumTables>(n, mu_pmf_doubles(n));
    }
  }

  int n() const { return n_; }
  ConditionedStrategy strategy() const { return strategy_; }

  // Exchangeable in law; trials counts rejection attempts (1 for Split).
  DegreeSequence sample(Xoshiro256pp& rng, std::uint64_t* trials_out = nullptr) const {
    DegreeSequence seq;
    seq.n = n_;
    const int m = 2 * n_ + 1;
    seq.values.resize(m);
    if (strategy_ == ConditionedStrategy::Rejection) {
      std::uint64_t trials = 0;
      for (;;) {
        ++trials;
        int sum = 0;
        bool ok = true;
        for (int i = 0; i < m; ++i) {
          const long j = offspring_draw_or_tail(*table_, rng);
          if (j < 0 || (sum += static_cast<int>(j)) > n_) {  // early abort
            ok = false;
            break;
          }
          seq.values[i] = static_cast<int>(2 * j);
        }
        if (ok && sum == n_) break;
      }
      if (trials_out) *trials_out = trials;
    } else {
      std::vector<int> y(m);
      split_->sample(rng, y.data());
      for (int i = 0; i < m; ++i) seq.values[i] = 2 * y[i];
      if (trials_out) *trials_out = 1;
    }
    return seq;
  }

  static constexpr int kAutoSplitThreshold = 512;

 private:
  int n_;
  ConditionedStrategy strategy_;
  std::shared_ptr<const OffspringTable> table_;
  std::shared_ptr<const ConditionedSumTables> split_;
};

inline DegreeSequence sample_conditioned(int n, Xoshiro256pp& rng,
                                         std::uint64_t* trials_out = nullptr,
                                         ConditionedStrategy strategy = ConditionedStrategy::Auto) {
  return ConditionedSampler(n, strategy).sample(rng, trials_out);
}

// Cycle lemma: for even values summing to length-1 (after the -1 step shift)
// exactly one cyclic rotation is a depth-first outdegree sequence. Returns
// that rotation's start index: one past the first minimum of the prefix walk.
inline int cycle_shift(const DegreeSequence& s) {
  check_degree_sequence(s);
  const int m = static_cast<int>(s.values.size());
  long walk = 0, min_walk = 0;
  int argmin = m - 1;
  for (int i = 0; i < m; ++i) {
    walk += s.values[i] - 1;
    if (walk < min_walk) {
      min_walk = walk;
      argmin = i;
    }
  }
  return (argmin + 1) % m;
}

// Decode a rotated sequence into a tree, verifying the depth-first property:
// the walk stays nonnegative strictly before the last step and ends at -1.
inline OrderedTree tree_from_degrees(const std::vector<int>& outdeg) {
  long walk = 1;
  for (std::size_t i = 0; i < outdeg.size(); ++i) {
    walk += outdeg[i] - 1;
    if (walk <= 0 && i + 1 < outdeg.size())
      throw std::invalid_argument("tree_from_degrees: walk dies before the end");
  }
  if (walk != 0) throw std::invalid_argument("tree_from_degrees: walk does not end at -1");
  return {outdeg};
}

inline OrderedTree tree_from_degrees(const DegreeSequence& s, int rotation) {
  const int m = static_cast<int>(s.values.size());
  std::vector<int> rotated(m);
  for (int i = 0; i < m; ++i) rotated[i] = s.values[(rotation + i) % m];
  return tree_from_degrees(rotated);
}

// One draw of the descending block edge-count vector of a uniform random map
// with n edges: conditioned sequence -> cycle rotation -> tree -> halved
// nonzero outdegrees.
struct BlockSizeSample {
  int n = 0;
  long long replica = 0;
  long long sample_index = 0;
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;
  std::vector<int> sizes;
};

inline BlockSizeSample block_sizes(const ConditionedSampler& sampler, Xoshiro256pp& rng) {
  BlockSizeSample out;
  out.n = sampler.n();
  const DegreeSequence seq = sampler.sample(rng, &out.trials);
  const OrderedTree tree = tree_from_degrees(seq, cycle_shift(seq));
  for (int d : tree.outdeg)
    if (d > 0) out.sizes.push_back(d / 2);
  std::sort(out.sizes.rbegin(), out.sizes.rend());
  return out;
}

inline BlockSizeSample block_sizes(int n, Xoshiro256pp& rng,
                                   ConditionedStrategy strategy = ConditionedStrategy::Auto) {
  return block_sizes(ConditionedSampler(n, strategy), rng);
}

}  // namespace mapblocks
