#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <numeric>

#include "mapblocks/conv.hpp"
#include "mapblocks/gw_sampler.hpp"
#include "mapblocks/limit_laws.hpp"
#include "mapblocks/map_sampler.hpp"
#include "mapblocks/oracle.hpp"

using namespace mapblocks;

namespace {

// total variation against an exact law over sequences/vectors
template <typename Key>
double tv_distance(const std::map<Key, long>& counts, long total, const ExactLaw<Key>& law) {
  double tv = 0;
  std::set<Key> keys;
  for (const auto& [k, v] : counts) keys.insert(k);
  for (const auto& [k, v] : law) keys.insert(k);
  for (const auto& k : keys) {
    const auto ci = counts.find(k);
    const double emp = ci == counts.end() ? 0.0 : double(ci->second) / total;
    const auto li = law.find(k);
    const double ex = li == law.end() ? 0.0 : static_cast<double>(li->second);
    tv += std::abs(emp - ex);
  }
  return tv / 2;
}

}  // namespace

TEST_CASE("conditioned sequences satisfy the postconditions", "[sampler]") {
  Xoshiro256pp rng(11);
  for (int n : {1, 2, 5, 17, 40}) {
    for (auto strat : {ConditionedStrategy::Rejection, ConditionedStrategy::Split}) {
      const ConditionedSampler s(n, strat);
      for (int rep = 0; rep < 20; ++rep) {
        std::uint64_t trials = 0;
        const auto seq = s.sample(rng, &trials);
        REQUIRE_NOTHROW(check_degree_sequence(seq));
        REQUIRE(trials >= 1);
      }
    }
  }
}

TEST_CASE("n = 1: the three conditioned sequences are equidistributed", "[sampler]") {
  const ConditionedSampler s(1);
  Xoshiro256pp rng(5);
  std::map<std::vector<int>, long> counts;
  const long N = 100000;
  for (long i = 0; i < N; ++i) counts[s.sample(rng).values]++;
  REQUIRE(counts.size() == 3);
  const double sigma4 = 4 * std::sqrt((1.0 / 3) * (2.0 / 3) / N);
  for (const auto& [seq, c] : counts) REQUIRE(std::abs(double(c) / N - 1.0 / 3) < sigma4);
}

TEST_CASE("n = 2: empirical sequence law matches the exact conditional law", "[sampler]") {
  const auto law = exact_sequence_law(2);
  for (auto strat : {ConditionedStrategy::Rejection, ConditionedStrategy::Split}) {
    const ConditionedSampler s(2, strat);
    Xoshiro256pp rng(99);
    std::map<std::vector<int>, long> counts;
    const long N = 100000;
    for (long i = 0; i < N; ++i) counts[s.sample(rng).values]++;
    REQUIRE(tv_distance(counts, N, law) < 0.02);
  }
}

TEST_CASE("cycle lemma rotation", "[sampler]") {
  REQUIRE(cycle_shift({1, {0, 2, 0}}) == 1);
  REQUIRE(cycle_shift({1, {2, 0, 0}}) == 0);
  REQUIRE_THROWS_AS(cycle_shift({3, {0, 0, 4, 0, 2}}), std::invalid_argument);  // bad length

  // exhaustive uniqueness for n <= 3: exactly one rotation decodes to a tree,
  // and cycle_shift finds it
  for (int n = 1; n <= 3; ++n) {
    const int m = 2 * n + 1;
    std::vector<int> cur(m);
    auto rec = [&](auto&& self, int i, int sum) -> void {
      if (i == m) {
        if (sum != 2 * n) return;
        const DegreeSequence seq{n, cur};
        int valid = 0, found = -1;
        for (int r = 0; r < m; ++r) {
          try {
            tree_from_degrees(seq, r);
            ++valid;
            found = r;
          } catch (const std::invalid_argument&) {
          }
        }
        REQUIRE(valid == 1);
        REQUIRE(cycle_shift(seq) == found);
        return;
      }
      for (int v = 0; sum + v <= 2 * n; v += 2) {
        cur[i] = v;
        self(self, i + 1, sum + v);
      }
    };
    rec(rec, 0, 0);
  }
}

TEST_CASE("tree decoding", "[sampler]") {
  REQUIRE(tree_from_degrees({2, 0, 0}).outdeg == std::vector<int>{2, 0, 0});
  REQUIRE(tree_from_degrees({2, 2, 0, 0, 0}).outdeg == std::vector<int>{2, 2, 0, 0, 0});
  REQUIRE(tree_from_degrees({4, 0, 0, 0, 0}).outdeg == std::vector<int>{4, 0, 0, 0, 0});
  REQUIRE_THROWS_AS(tree_from_degrees({0, 2, 0}), std::invalid_argument);
  REQUIRE_THROWS_AS(tree_from_degrees({2, 0}), std::invalid_argument);
}

TEST_CASE("block sizes: small-n laws", "[sampler]") {
  {
    const ConditionedSampler s(1);
    Xoshiro256pp rng(3);
    for (int i = 0; i < 50; ++i) REQUIRE(block_sizes(s, rng).sizes == std::vector<int>{1});
  }
  for (int n : {2, 3}) {
    const auto law = exact_block_sizes_law(n);
    for (auto strat : {ConditionedStrategy::Rejection, ConditionedStrategy::Split}) {
      const ConditionedSampler s(n, strat);
      Xoshiro256pp rng(12345);
      std::map<std::vector<int>, long> counts;
      const long N = 100000;
      for (long i = 0; i < N; ++i) {
        auto smp = block_sizes(s, rng);
        REQUIRE(std::accumulate(smp.sizes.begin(), smp.sizes.end(), 0) == n);
        counts[smp.sizes]++;
      }
      REQUIRE(tv_distance(counts, N, law) < 0.02);
    }
  }
}

TEST_CASE("rejection and split strategies agree at n = 200", "[sampler]") {
  const long N = 10000;
  std::vector<double> a, b;
  {
    const ConditionedSampler s(200, ConditionedStrategy::Rejection);
    Xoshiro256pp rng(77);
    for (long i = 0; i < N; ++i) a.push_back(block_sizes(s, rng).sizes[0]);
  }
  {
    const ConditionedSampler s(200, ConditionedStrategy::Split);
    Xoshiro256pp rng(78);
    for (long i = 0; i < N; ++i) b.push_back(block_sizes(s, rng).sizes[0]);
  }
  REQUIRE(ks_two_sample(a, b) < ks_threshold_two_sample_99(N, N));
}

TEST_CASE("split sampler against the conditioned convolution law at n = 2000", "[sampler]") {
  const int n = 2000;
  const auto table = mu_cdf_table(n);
  // exact P(L1 <= B) at three anchors around n/3
  const ConditionedSampler s(n, ConditionedStrategy::Split);
  Xoshiro256pp rng(2024);
  const long N = 10000;
  std::vector<int> l1;
  l1.reserve(N);
  for (long i = 0; i < N; ++i) l1.push_back(block_sizes(s, rng).sizes[0]);
  for (int B : {600, 667, 740}) {
    const auto exact = conditioned_extreme_cdfs(n, B, table.pmf);
    long c = 0;
    for (int v : l1) c += v <= B;
    const double emp = double(c) / N;
    const double band = 4 * std::sqrt(exact.largest_le * (1 - exact.largest_le) / N) + 1e-3;
    REQUIRE(std::abs(emp - exact.largest_le) < band);
  }
}

TEST_CASE("largest block mean near n/3 at n = 10000", "[sampler]") {
  const int n = 10000;
  const ConditionedSampler s(n, ConditionedStrategy::Split);
  Xoshiro256pp rng(31415);
  double sum = 0;
  const int N = 2000;
  for (int i = 0; i < N; ++i) sum += block_sizes(s, rng).sizes[0];
  const double ratio = sum / N / n;
  REQUIRE(ratio > 1.0 / 3 - 0.02);
  REQUIRE(ratio < 1.0 / 3 + 0.02);
}

TEST_CASE("uniform map sampling", "[sampler]") {
  {
    Xoshiro256pp rng(8);
    std::map<RootedMap, long> counts;
    const long N = 20000;
    for (long i = 0; i < N; ++i) counts[sample_map(1, rng)]++;
    REQUIRE(counts.size() == 2);
    for (const auto& [m, c] : counts) {
      REQUIRE(validate(m).empty());
      REQUIRE(std::abs(double(c) / N - 0.5) < 4 * std::sqrt(0.25 / N));
    }
  }
  {
    Xoshiro256pp rng(9);
    std::map<RootedMap, long> counts;
    const long N = 100000;
    for (long i = 0; i < N; ++i) {
      const auto m = sample_map(2, rng);
      REQUIRE(m.edges() == 2);
      counts[m]++;
    }
    REQUIRE(counts.size() == 9);
    for (const auto& [m, c] : counts) REQUIRE(std::abs(double(c) / N - 1.0 / 9) < 0.005);
  }
  {
    Xoshiro256pp rng(10);
    for (int n = 0; n <= 6; ++n) {
      const auto m = sample_map(n, rng);
      REQUIRE(validate(m).empty());
      REQUIRE(m.edges() == n);
    }
    REQUIRE_THROWS_AS(sample_map(7, rng), std::invalid_argument);
  }
}
