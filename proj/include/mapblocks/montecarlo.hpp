#pragma once

#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"
#include "mapblocks/gw_sampler.hpp"
#include "mapblocks/rng.hpp"

namespace mapblocks {

// Reproducible block-size experiment driver. Each sample has a global index
// g = replica * samples_per_replica + sample and is drawn from an RNG stream
// seeded by derive_stream_seed(seed, g). Output therefore depends only on the
// configuration, never on the number of worker threads; replicas are a
// bookkeeping partition of the sample set.
struct MonteCarloConfig {
  int n = 0;
  long long samples_per_replica = 0;
  int replicas = 1;
  std::uint64_t seed = 0;
  int threads = 1;
  ConditionedStrategy strategy = ConditionedStrategy::Auto;
};

inline void run_montecarlo(const MonteCarloConfig& cfg,
                           const std::function<void(const BlockSizeSample&)>& sink) {
  if (cfg.n < 1 || cfg.samples_per_replica < 1 || cfg.replicas < 1 || cfg.threads < 1)
    throw std::invalid_argument("run_montecarlo: all counts must be positive");
  const ConditionedSampler sampler(cfg.n, cfg.strategy);
  const long long total = cfg.samples_per_replica * cfg.replicas;

  auto make_sample = [&](long long g) {
    Xoshiro256pp rng(derive_stream_seed(cfg.seed, static_cast<std::uint64_t>(g)));
    BlockSizeSample s = block_sizes(sampler, rng);
    s.replica = g / cfg.samples_per_replica;
    s.sample_index = g % cfg.samples_per_replica;
    s.seed = derive_stream_seed(cfg.seed, static_cast<std::uint64_t>(g));
    return s;
  };

  if (cfg.threads == 1) {
    for (long long g = 0; g < total; ++g) sink(make_sample(g));
    return;
  }
  // Batched pipeline: workers fill a batch in parallel, the batch is emitted
  // in index order. Bounded memory, deterministic output.
  const long long batch = static_cast<long long>(cfg.threads) * 8;
  std::vector<BlockSizeSample> buf(batch);
  for (long long start = 0; start < total; start += batch) {
    const long long count = std::min(batch, total - start);
    std::vector<std::thread> workers;
    for (int t = 0; t < cfg.threads; ++t) {
      workers.emplace_back([&, t] {
        for (long long i = t; i < count; i += cfg.threads) buf[i] = make_sample(start + i);
      });
    }
    for (auto& w : workers) w.join();
    for (long long i = 0; i < count; ++i) sink(buf[i]);
  }
}

// CSV schema: fixed columns then the descending block sizes as a
// variable-length tail.
inline std::string montecarlo_csv_header() { return "n,replica,sample,seed,trials,L1,L2,L3,..."; }

inline void write_csv_row(std::ostream& os, const BlockSizeSample& s) {
  os << s.n << ',' << s.replica << ',' << s.sample_index << ',' << s.seed << ',' << s.trials;
  for (int v : s.sizes) os << ',' << v;
  os << '\n';
}

inline void write_jsonl_row(std::ostream& os, const BlockSizeSample& s) {
  nlohmann::ordered_json j;
  j["n"] = s.n;
  j["replica"] = s.replica;
  j["sample"] = s.sample_index;
  j["seed"] = s.seed;
  j["trials"] = s.trials;
  j["sizes"] = s.sizes;
  os << j.dump() << '\n';
}

}  // namespace mapblocks
