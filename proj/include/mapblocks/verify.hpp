#pragma once

#include <cmath>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "mapblocks/gw_sampler.hpp"
#include "mapblocks/limit_laws.hpp"
#include "mapblocks/map_sampler.hpp"
#include "mapblocks/oracle.hpp"
#include "mapblocks/series.hpp"

namespace mapblocks {

struct CheckResult {
  std::string name;
  bool pass;
  std::string detail;
};

enum class FaultInjection { None, Compose, Critical };

// Self-verification suite behind `verify`. The fast tier covers the exact
// identities and the small-map bijection; the full tier adds the exhaustive
// 3-edge enumeration and sampler distribution checks. FaultInjection
// deliberately corrupts one input so the checks' sensitivity is testable.
inline std::vector<CheckResult> run_verify(bool full, FaultInjection fault = FaultInjection::None) {
  std::vector<CheckResult> out;
  auto add = [&](const std::string& name, bool pass, std::string detail = "") {
    out.push_back({name, pass, std::move(detail)});
  };

  {
    const long expected[] = {1, 2, 9, 54, 378, 2916};
    bool ok = true;
    for (long n = 0; n <= 5; ++n) ok &= count_maps(n) == expected[n];
    BigInt m = 1;
    for (long n = 1; n <= 12; ++n) {
      m = m * 6 * (2 * n - 1) / (n + 2);
      ok &= m == count_maps(n);
    }
    add("counts/maps", ok);
  }
  {
    const long expected[] = {1, 2, 1, 2, 6, 22, 91};
    bool ok = true;
    for (long k = 0; k <= 6; ++k) ok &= count_two_connected(k) == expected[k];
    add("counts/two-connected", ok);
  }
  {
    bool ok;
    if (fault == FaultInjection::Compose) {
      auto c = two_connected_series(24);
      c.coeff[3] += 1;
      ok = compose_check_with(maps_series(24), c);
    } else {
      ok = compose_check(24);
    }
    add("series/composition", ok);
  }
  {
    bool ok = true;
    for (long n = 0; n <= 12; ++n) ok &= lagrange_check(n);
    add("series/lagrange", ok);
  }
  {
    const auto b = fault == FaultInjection::Critical
                       ? critical_values(5000, TermCorruption{5, Rational(1, 1000)})
                       : critical_values(5000);
    const Rational c(4, 3), chat(4, 9);
    const bool contains = b.c_lo <= c && c <= b.c_hi && b.chat_lo <= chat && chat <= b.chat_hi;
    std::ostringstream d;
    d << "widths " << static_cast<double>(b.c_hi - b.c_lo) << ", "
      << static_cast<double>(b.chat_hi - b.chat_lo);
    add("critical/brackets", contains, d.str());
  }
  {
    bool ok = parametrization_identity_check(128);
    if (ok) {
      const auto& cc = critical_constants();
      ok = cc.c == Rational(4, 3) && cc.chat == Rational(4, 9) && mu_mean_check();
    }
    add("critical/exact-constants", ok);
  }
  {
    const double r = mu_tail_check(10000);
    add("offspring/tail-asymptotics", std::abs(r / stirling_tail_constant() - 1) < 0.02,
        "ratio " + std::to_string(r));
  }
  {
    bool ok = true;
    for (long n = 1; n <= 6; ++n) ok &= weight_sum_check(n);
    add("oracle/weight-sums", ok);
  }
  {
    // cycle lemma uniqueness, exhaustive over n <= 3
    bool ok = true;
    for (int n = 1; n <= 3 && ok; ++n) {
      const int m = 2 * n + 1;
      std::vector<int> cur(m);
      auto rec = [&](auto&& self, int i, int sum) -> bool {
        if (i == m) {
          if (sum != 2 * n) return true;
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
          return valid == 1 && cycle_shift(seq) == found;
        }
        for (int v = 0; sum + v <= 2 * n; v += 2) {
          cur[i] = v;
          if (!self(self, i + 1, sum + v)) return false;
        }
        return true;
      };
      ok = rec(rec, 0, 0);
    }
    add("sampler/cycle-lemma-uniqueness", ok);
  }
  {
    bool ok = true;
    for (long n = 1; n <= 2; ++n)
      for (const auto& m : enum_maps(n)) ok &= assemble(block_tree(m)) == m;
    add("bijection/round-trip-n2", ok);
  }

  if (!full) return out;

  {
    const auto maps = enum_maps(3);
    bool ok = maps.size() == 54;
    for (const auto& m : maps) ok &= validate(m).empty();
    add("oracle/enumeration-n3", ok);
  }
  {
    bool ok = true;
    for (const auto& m : enum_maps(3)) ok &= assemble(block_tree(m)) == m;
    add("bijection/round-trip-n3", ok);
  }
  {
    add("oracle/tree-law-groups", verify_prop1(1) && verify_prop1(2) && verify_prop1(3));
  }
  {
    bool ok = true;
    for (int n : {2, 3}) {
      const auto law = exact_block_sizes_law(n);
      const ConditionedSampler s(n);
      Xoshiro256pp rng(1000 + n);
      std::map<std::vector<int>, long> counts;
      const long N = 100000;
      for (long i = 0; i < N; ++i) counts[block_sizes(s, rng).sizes]++;
      double tv = 0;
      for (const auto& [k, p] : law) {
        const auto it = counts.find(k);
        const double emp = it == counts.end() ? 0.0 : double(it->second) / N;
        tv += std::abs(emp - static_cast<double>(p));
      }
      for (const auto& [k, cnt] : counts)
        if (!law.count(k)) tv += double(cnt) / N;
      ok &= tv / 2 < 0.02;
    }
    add("sampler/small-n-distribution", ok);
  }
  {
    std::vector<double> a, b;
    const long N = 5000;
    const ConditionedSampler sr(200, ConditionedStrategy::Rejection);
    const ConditionedSampler ss(200, ConditionedStrategy::Split);
    Xoshiro256pp r1(21), r2(22);
    for (long i = 0; i < N; ++i) {
      a.push_back(block_sizes(sr, r1).sizes[0]);
      b.push_back(block_sizes(ss, r2).sizes[0]);
    }
    add("sampler/strategies-agree", ks_two_sample(a, b) < ks_threshold_two_sample_99(N, N));
  }
  {
    Xoshiro256pp rng(9);
    std::map<RootedMap, long> counts;
    const long N = 90000;
    bool ok = true;
    for (long i = 0; i < N; ++i) {
      const auto m = sample_map(2, rng);
      ok &= m.edges() == 2 && validate(m).empty();
      counts[m]++;
    }
    ok &= counts.size() == 9;
    for (const auto& [m, c] : counts) ok &= std::abs(double(c) / N - 1.0 / 9) < 0.006;
    add("sampler/uniform-maps-n2", ok);
  }

  return out;
}

}  // namespace mapblocks
