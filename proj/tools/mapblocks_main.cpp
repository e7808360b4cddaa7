// mapblocks command line: exact counts, self-verification, reproducible
// block-size sampling, and the limit-law experiment.
//
// Exit codes: 0 success, 1 check failure, 2 usage error.

#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "mapblocks/experiment.hpp"
#include "mapblocks/map_json.hpp"
#include "mapblocks/map_sampler.hpp"
#include "mapblocks/montecarlo.hpp"
#include "mapblocks/series.hpp"
#include "mapblocks/verify.hpp"

namespace {

using namespace mapblocks;

bool parse_range(const std::string& s, long& lo, long& hi) {
  const auto pos = s.find("..");
  try {
    if (pos == std::string::npos) {
      lo = hi = std::stol(s);
    } else {
      lo = std::stol(s.substr(0, pos));
      hi = std::stol(s.substr(pos + 2));
    }
  } catch (const std::exception&) {
    return false;
  }
  return lo >= 0 && hi >= lo;
}

std::ostream& open_output(const std::string& path, std::ofstream& file) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) throw CLI::ValidationError("--out", "cannot open " + path);
  return file;
}

std::string rational_string(const Rational& q) {
  std::ostringstream os;
  if (boost::multiprecision::denominator(q) == 1)
    os << boost::multiprecision::numerator(q);
  else
    os << boost::multiprecision::numerator(q) << "/" << boost::multiprecision::denominator(q);
  return os.str();
}

int cmd_count(const std::string& maps_range, const std::string& blocks_range, long series_order,
              long mu_order) {
  long lo = 0, hi = 0;
  if (!maps_range.empty()) {
    if (!parse_range(maps_range, lo, hi)) {
      std::cerr << "count: malformed range '" << maps_range << "'\n";
      return 2;
    }
    for (long n = lo; n <= hi; ++n) std::cout << count_maps(n) << (n < hi ? " " : "\n");
  }
  if (!blocks_range.empty()) {
    if (!parse_range(blocks_range, lo, hi)) {
      std::cerr << "count: malformed range '" << blocks_range << "'\n";
      return 2;
    }
    for (long k = lo; k <= hi; ++k) std::cout << count_two_connected(k) << (k < hi ? " " : "\n");
  }
  if (series_order >= 0) {
    nlohmann::ordered_json j;
    auto dump = [](const RationalSeries& s) {
      std::vector<std::string> out;
      for (const auto& c : s.coeff) out.push_back(rational_string(c));
      return out;
    };
    j["maps"] = dump(maps_series(series_order));
    j["two_connected"] = dump(two_connected_series(series_order));
    std::cout << j.dump() << "\n";
  }
  if (mu_order >= 0) {
    std::vector<std::string> out;
    for (long k = 0; k <= mu_order; ++k) out.push_back(rational_string(mu_pmf(k)));
    std::cout << nlohmann::json(out).dump() << "\n";
  }
  return 0;
}

int cmd_verify(const std::string& level, const std::string& fault) {
  FaultInjection fi = FaultInjection::None;
  if (fault == "compose") fi = FaultInjection::Compose;
  if (fault == "critical") fi = FaultInjection::Critical;
  const auto results = run_verify(level == "full", fi);
  bool all = true;
  for (const auto& r : results) {
    all &= r.pass;
    std::cout << (r.pass ? "[pass] " : "[FAIL] ") << r.name;
    if (!r.detail.empty()) std::cout << "  (" << r.detail << ")";
    std::cout << "\n";
  }
  std::cout << (all ? "verify: all checks passed\n" : "verify: FAILURES\n");
  return all ? 0 : 1;
}

ConditionedStrategy parse_strategy(const std::string& s) {
  if (s == "rejection") return ConditionedStrategy::Rejection;
  if (s == "split") return ConditionedStrategy::Split;
  return ConditionedStrategy::Auto;
}

struct SampleOpts {
  int n = 1;
  long long count = 1;
  int replicas = 1;
  int threads = 1;
  std::uint64_t seed = 0;
  std::string format = "csv";
  std::string out;
  std::string sampler = "auto";
  bool full_map = false;
};

int cmd_sample(const SampleOpts& o) {
  std::ofstream file;
  std::ostream& os = open_output(o.out, file);
  if (o.full_map) {
    if (o.n > kFullMapCap) {
      std::cerr << "sample: --full-map supports n <= " << kFullMapCap
                << " (block enumeration cap exceeded)\n";
      return 2;
    }
    if (o.format == "csv") {
      std::cerr << "sample: --full-map requires --format json\n";
      return 2;
    }
    const long long total = o.count * o.replicas;
    for (long long g = 0; g < total; ++g) {
      const std::uint64_t seed = derive_stream_seed(o.seed, g);
      Xoshiro256pp rng(seed);
      nlohmann::ordered_json j;
      j["n"] = o.n;
      j["replica"] = g / o.count;
      j["sample"] = g % o.count;
      j["seed"] = seed;
      j["map"] = map_to_json(sample_map(o.n, rng));
      os << j.dump() << '\n';
    }
    return 0;
  }
  MonteCarloConfig cfg{.n = o.n,
                       .samples_per_replica = o.count,
                       .replicas = o.replicas,
                       .seed = o.seed,
                       .threads = o.threads,
                       .strategy = parse_strategy(o.sampler)};
  if (o.format == "csv") {
    os << montecarlo_csv_header() << '\n';
    run_montecarlo(cfg, [&](const BlockSizeSample& s) { write_csv_row(os, s); });
  } else {
    run_montecarlo(cfg, [&](const BlockSizeSample& s) { write_jsonl_row(os, s); });
  }
  return 0;
}

struct ExperimentOpts {
  int n = 1000;
  long long count = 1000;
  int replicas = 1;
  int threads = 1;
  std::uint64_t seed = 0;
  int k = 2;
  std::string scale = "proof";
  std::string format = "csv";
  std::string out;
};

int cmd_experiment(const ExperimentOpts& o) {
  const ExperimentResult r = run_experiment({.n = o.n,
                                             .samples_per_replica = o.count,
                                             .replicas = o.replicas,
                                             .seed = o.seed,
                                             .threads = o.threads,
                                             .k = o.k});
  const ScalePreset preset = o.scale == "theorem" ? ScalePreset::Theorem
                             : o.scale == "evt"   ? ScalePreset::Evt
                                                  : ScalePreset::Proof;
  auto report = experiment_report(r);
  report["scale_preset"] = o.scale;
  std::cout << report.dump(2) << '\n';
  if (!o.out.empty()) {
    std::ofstream file;
    std::ostream& os = open_output(o.out, file);
    // raw rescaled samples under the selected preset
    os << "n,replica,sample,seed,trials,L1,L1_rescaled,L" << o.k << ",L" << o.k << "_rescaled\n";
    for (std::size_t i = 0; i < r.top_sizes.size(); ++i) {
      const auto& t = r.top_sizes[i];
      const double l1 = t.empty() ? 0 : t[0];
      const double lk = static_cast<int>(t.size()) >= o.k ? t[o.k - 1] : 0;
      os << o.n << ',' << (i / static_cast<std::size_t>(o.count)) << ','
         << (i % static_cast<std::size_t>(o.count)) << ',' << r.seeds[i] << ',' << r.trials[i]
         << ',' << l1 << ',' << rescale_L1(l1, o.n) << ',' << lk << ','
         << rescale_Lk(lk, o.n, preset) << '\n';
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact combinatorics and samplers for block sizes in random rooted planar maps"};
  app.require_subcommand(1);

  // count
  auto* count = app.add_subcommand("count", "print exact map / 2-connected-map counts");
  std::string maps_range, blocks_range;
  long series_order = -1, mu_order = -1;
  count->add_option("--maps", maps_range, "range a..b of edge counts for M_n");
  count->add_option("--blocks", blocks_range, "range a..b of edge counts for C_k");
  count->add_option("--series", series_order, "dump both counting series to order N as JSON");
  count->add_option("--mu", mu_order, "dump the offspring pmf mu({0..2N}) as JSON p/q strings");

  // verify
  auto* verify = app.add_subcommand("verify", "run the self-verification suite");
  std::string level = "fast";
  verify->add_option("level", level, "fast or full")->check(CLI::IsMember({"fast", "full"}));
  std::string fault;
  verify->add_option("--inject-fault", fault, "corrupt one input (testing the checker)")
      ->check(CLI::IsMember({"compose", "critical"}));

  // sample
  auto* sample = app.add_subcommand("sample", "sample block sizes (or whole maps) of uniform maps");
  SampleOpts so;
  sample->add_option("--n", so.n, "edge count")->required()->check(CLI::PositiveNumber);
  sample->add_option("--count", so.count, "samples per replica")
      ->required()
      ->check(CLI::PositiveNumber);
  sample->add_option("--replicas", so.replicas, "replica count")->check(CLI::PositiveNumber);
  sample->add_option("--threads", so.threads, "worker threads (output-invariant)")
      ->check(CLI::PositiveNumber);
  sample->add_option("--seed", so.seed, "master seed");
  sample->add_option("--format", so.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  sample->add_option("--out", so.out, "output path (default stdout)");
  sample->add_option("--sampler", so.sampler, "conditioned-sampling strategy")
      ->check(CLI::IsMember({"auto", "rejection", "split"}));
  sample->add_flag("--full-map", so.full_map, "emit whole serialized maps (n <= 6)");

  // experiment
  auto* exp = app.add_subcommand("experiment", "limit-law statistics for the largest blocks");
  ExperimentOpts eo;
  exp->add_option("--n", eo.n, "edge count")->required()->check(CLI::PositiveNumber);
  exp->add_option("--count", eo.count, "samples per replica")
      ->required()
      ->check(CLI::PositiveNumber);
  exp->add_option("--replicas", eo.replicas, "replica count")->check(CLI::PositiveNumber);
  exp->add_option("--threads", eo.threads, "worker threads (output-invariant)")
      ->check(CLI::PositiveNumber);
  exp->add_option("--seed", eo.seed, "master seed");
  exp->add_option("--k", eo.k, "order statistic for the k-th largest block (k >= 2)")
      ->check(CLI::Range(2, 64));
  exp->add_option("--scale", eo.scale, "scale preset for the k-th largest")
      ->check(CLI::IsMember({"theorem", "proof", "evt"}));
  exp->add_option("--format", eo.format, "raw-sample format")->check(CLI::IsMember({"csv", "json"}));
  exp->add_option("--out", eo.out, "path for raw rescaled samples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (count->parsed()) {
      if (maps_range.empty() && blocks_range.empty() && series_order < 0 && mu_order < 0) {
        std::cerr << "count: nothing to do (use --maps/--blocks/--series/--mu)\n";
        return 2;
      }
      return cmd_count(maps_range, blocks_range, series_order, mu_order);
    }
    if (verify->parsed()) return cmd_verify(level, fault);
    if (sample->parsed()) return cmd_sample(so);
    if (exp->parsed()) return cmd_experiment(eo);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
