// Minimal usage example: draw a few block-size profiles of uniform random
// rooted planar maps and print them next to the n/3 law of the giant block.

#include <cstdio>

#include "mapblocks/gw_sampler.hpp"

int main() {
  using namespace mapblocks;
  const int n = 5000;
  const ConditionedSampler sampler(n);
  Xoshiro256pp rng(1);
  std::printf("n = %d, giant block should hover near n/3 = %.0f\n", n, n / 3.0);
  for (int i = 0; i < 5; ++i) {
    const auto s = block_sizes(sampler, rng);
    std::printf("sample %d: %zu blocks, largest:", i, s.sizes.size());
    for (std::size_t j = 0; j < 5 && j < s.sizes.size(); ++j) std::printf(" %d", s.sizes[j]);
    std::printf(" ...\n");
  }
  return 0;
}
