#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hdc/search.hpp"

namespace hdc {

struct ExperimentRow {
  std::size_t trial = 0;
  std::string x_name;
  double x_value = 0.0;
  std::string metric;
  double value = 0.0;
};

struct ExperimentResult {
  std::string experiment;
  nlohmann::json params;
  std::vector<ExperimentRow> rows;

  // Mean over trials of the rows matching (metric, x_value).
  double mean(const std::string& metric, double x_value) const;
  // Distinct x values carrying the metric, ascending.
  std::vector<double> xs(const std::string& metric) const;
};

// CSV schema: experiment,param_json,trial,x_name,x_value,metric,value with
// one row per measurement. Output is byte-identical for identical inputs.
void write_csv(const ExperimentResult& result, std::ostream& out);

// ---------------------------------------------------------------------------
// Experiment protocols. Trials run in parallel over derived per-trial seeds;
// row order is (trial, grid point) regardless of scheduling.
// ---------------------------------------------------------------------------

struct HistogramParams {
  std::vector<std::size_t> sizes = {8, 16, 32, 64, 128, 256};
  std::size_t dim_start = 200, dim_stop = 10000, dim_step = 200;
  std::size_t sims = 100;
  std::int64_t count_max = 1023;  // counters uniform in [0, count_max]
  std::uint64_t seed = 42;
  unsigned threads = 0;
};
ExperimentResult run_histogram(const HistogramParams& p);

struct FsaRecallParams {
  std::size_t n_states = 22, n_symbols = 29;
  std::size_t dim_start = 100, dim_stop = 4000, dim_step = 100;
  std::vector<double> bers = {0.03125, 0.0625, 0.125, 0.25};
  std::size_t inits = 50;
  std::size_t transitions = 1000;
  std::uint64_t seed = 42;
  unsigned threads = 0;
};
ExperimentResult run_fsa_recall(const FsaRecallParams& p);

struct SubstringParams {
  SearchVariant variant = SearchVariant::Original;
  std::vector<std::size_t> base_lens = {6, 10, 14};
  std::size_t query_len = 5;
  std::vector<std::size_t> dims;  // defaults depend on the variant
  std::size_t trials = 20;
  std::size_t searches_per_trial = 50;
  std::size_t calibration_trials = 200;
  std::uint64_t seed = 42;
  unsigned threads = 0;
};
ExperimentResult run_substring(const SubstringParams& p);

// First power-of-two dimension in [2^min_exp, 2^max_exp] where every seeded
// search is decided correctly; nullopt when none is.
struct SubstringSweepParams {
  SearchVariant variant = SearchVariant::Original;
  std::size_t base_len = 6, query_len = 5;
  unsigned min_exp = 4, max_exp = 22;
  std::size_t searches = 100;
  std::size_t calibration_trials = 200;
  std::uint64_t seed = 42;
};
std::optional<std::size_t> substring_first_perfect_dim(
    const SubstringSweepParams& p);

struct TmNoiseParams {
  std::vector<double> bers = {0.05, 0.10, 0.15, 0.20, 0.25, 0.30};
  std::size_t target_steps = 10000;
  std::size_t trials = 20;
  std::size_t start_dim = 16;
  std::uint64_t seed = 42;
  unsigned threads = 0;
};
ExperimentResult run_tm_noise(const TmNoiseParams& p);

struct CaParams {
  std::vector<std::size_t> lengths = {32};
  std::vector<std::size_t> dims = {1024, 2048,  4096,  8192,
                                   16384, 32768, 65536, 131072};
  std::vector<double> noises = {0.0};
  std::size_t steps = 100;
  std::size_t runs = 100;
  unsigned rule = 110;
  std::uint64_t seed = 42;
  unsigned threads = 0;
};
ExperimentResult run_ca(const CaParams& p);

struct ResonatorParams {
  std::size_t factors = 3;
  std::size_t codebook_size = 8;
  std::size_t dim = 2048;
  std::size_t trials = 1000;
  int max_iters = 200;
  std::uint64_t seed = 42;
  unsigned threads = 0;
};
ExperimentResult run_resonator(const ResonatorParams& p);

// ---------------------------------------------------------------------------
// Named dispatch for the CLI.
// ---------------------------------------------------------------------------

struct ExperimentOptions {
  std::uint64_t seed = 42;
  std::optional<std::size_t> trials;
  std::optional<double> noise;
  std::optional<std::vector<std::size_t>> dims;
  bool paper_scale = false;
  unsigned threads = 0;
};

std::vector<std::string> experiment_names();
ExperimentResult run_experiment(const std::string& name,
                                const ExperimentOptions& options);

namespace detail {
// Runs fn(0..count-1) on a small worker pool; results must be written to
// per-index slots so scheduling cannot reorder them.
void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(std::size_t)>& fn);
}  // namespace detail

}  // namespace hdc
