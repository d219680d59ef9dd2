#include "hdc/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "hdc/cellular.hpp"
#include "hdc/encoders.hpp"
#include "hdc/resonator.hpp"
#include "hdc/turing.hpp"

namespace hdc {

namespace detail {

void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(std::size_t)>& fn) {
  unsigned n = threads != 0 ? threads : std::thread::hardware_concurrency();
  if (n == 0) n = 1;
  n = static_cast<unsigned>(std::min<std::size_t>(n, count));
  if (n <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(n);
  for (unsigned t = 0; t < n; ++t)
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        fn(i);
      }
    });
  for (auto& th : pool) th.join();
}

}  // namespace detail

namespace {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (const char c : s) {
    out.push_back(c);
    if (c == '"') out.push_back('"');
  }
  out.push_back('"');
  return out;
}

std::vector<std::size_t> linear_grid(std::size_t start, std::size_t stop,
                                     std::size_t step) {
  std::vector<std::size_t> out;
  for (std::size_t v = start; v <= stop; v += step) out.push_back(v);
  return out;
}

std::string metric_tag(const std::string& base, const std::string& key,
                       const std::string& value) {
  return base + "[" + key + "=" + value + "]";
}

// Flattens per-trial row blocks in trial order.
std::vector<ExperimentRow> flatten(std::vector<std::vector<ExperimentRow>> blocks) {
  std::vector<ExperimentRow> rows;
  for (auto& b : blocks)
    for (auto& r : b) rows.push_back(std::move(r));
  return rows;
}

}  // namespace

double ExperimentResult::mean(const std::string& metric, double x_value) const {
  double sum = 0.0;
  std::size_t n = 0;
  for (const auto& r : rows)
    if (r.metric == metric && r.x_value == x_value) {
      sum += r.value;
      ++n;
    }
  if (n == 0) throw std::invalid_argument("no rows for metric " + metric);
  return sum / static_cast<double>(n);
}

std::vector<double> ExperimentResult::xs(const std::string& metric) const {
  std::vector<double> out;
  for (const auto& r : rows)
    if (r.metric == metric) out.push_back(r.x_value);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void write_csv(const ExperimentResult& result, std::ostream& out) {
  out << "experiment,param_json,trial,x_name,x_value,metric,value\n";
  const std::string params = csv_quote(result.params.dump());
  for (const auto& r : result.rows)
    out << result.experiment << "," << params << "," << r.trial << ","
        << r.x_name << "," << format_double(r.x_value) << "," << r.metric << ","
        << format_double(r.value) << "\n";
}

// ---------------------------------------------------------------------------
// histogram (frequency-distribution decoding quality vs dimension)
// ---------------------------------------------------------------------------

ExperimentResult run_histogram(const HistogramParams& p) {
  const auto dims = linear_grid(p.dim_start, p.dim_stop, p.dim_step);
  ExperimentResult result;
  result.experiment = "histogram";
  result.params = {{"sizes", p.sizes},
                   {"dims", {p.dim_start, p.dim_stop, p.dim_step}},
                   {"sims", p.sims},
                   {"count_max", p.count_max},
                   {"seed", p.seed}};

  std::vector<std::vector<ExperimentRow>> blocks(p.sims);
  detail::parallel_for(p.sims, p.threads, [&](std::size_t sim) {
    const std::uint64_t sim_seed = Rng::derive(p.seed, sim);
    auto& rows = blocks[sim];
    std::size_t point = 0;
    for (const std::size_t size : p.sizes) {
      for (const std::size_t dim : dims) {
        Rng rng(Rng::derive(sim_seed, point++));
        // expand seed vectors once; the weighted sum is the hot loop
        std::vector<Hypervector> seeds;
        seeds.reserve(size);
        for (std::size_t i = 0; i < size; ++i)
          seeds.push_back(random_hypervector(dim, rng));
        const Hypervector ties = random_hypervector(dim, rng);
        std::vector<std::int64_t> counts(size);
        for (auto& c : counts)
          c = static_cast<std::int64_t>(
              rng.bounded(static_cast<std::uint64_t>(p.count_max) + 1));
        Accumulator acc(dim);
        for (std::size_t i = 0; i < size; ++i)
          acc.add_scaled(seeds[i], static_cast<std::int32_t>(counts[i]));
        const Hypervector h = normalize(acc, ties);

        // Pearson correlation between dot estimates and true counters
        double mx = 0, my = 0;
        std::vector<double> est(size);
        for (std::size_t i = 0; i < size; ++i) {
          est[i] = static_cast<double>(dot(h, seeds[i]));
          mx += est[i];
          my += static_cast<double>(counts[i]);
        }
        mx /= static_cast<double>(size);
        my /= static_cast<double>(size);
        double sxy = 0, sxx = 0, syy = 0;
        for (std::size_t i = 0; i < size; ++i) {
          const double dx = est[i] - mx;
          const double dy = static_cast<double>(counts[i]) - my;
          sxy += dx * dy;
          sxx += dx * dx;
          syy += dy * dy;
        }
        const double corr =
            sxx > 0 && syy > 0 ? sxy / std::sqrt(sxx * syy) : 0.0;
        rows.push_back({sim, "dim", static_cast<double>(dim),
                        metric_tag("correlation", "size", std::to_string(size)),
                        corr});
      }
    }
  });
  result.rows = flatten(std::move(blocks));
  return result;
}

// ---------------------------------------------------------------------------
// fsa-recall (next-state recall from a noisy bipolarized automaton)
// ---------------------------------------------------------------------------

ExperimentResult run_fsa_recall(const FsaRecallParams& p) {
  const auto dims = linear_grid(p.dim_start, p.dim_stop, p.dim_step);
  ExperimentResult result;
  result.experiment = "fsa-recall";
  result.params = {{"states", p.n_states},
                   {"symbols", p.n_symbols},
                   {"dims", {p.dim_start, p.dim_stop, p.dim_step}},
                   {"bers", p.bers},
                   {"inits", p.inits},
                   {"transitions", p.transitions},
                   {"out_degree", 1},
                   {"seed", p.seed}};

  std::vector<std::string> state_names, sym_names;
  for (std::size_t i = 0; i < p.n_states; ++i)
    state_names.push_back("q" + std::to_string(i));
  for (std::size_t i = 0; i < p.n_symbols; ++i)
    sym_names.push_back("x" + std::to_string(i));

  std::vector<std::vector<ExperimentRow>> blocks(p.inits);
  detail::parallel_for(p.inits, p.threads, [&](std::size_t init) {
    const std::uint64_t init_seed = Rng::derive(p.seed, init);
    auto& rows = blocks[init];
    for (std::size_t di = 0; di < dims.size(); ++di) {
      const std::size_t dim = dims[di];
      Rng rng(Rng::derive(init_seed, di));
      const ItemMemory state_cb = ItemMemory::random(dim, state_names, rng);
      const ItemMemory sym_cb = ItemMemory::random(dim, sym_names, rng);

      FsaDescriptor desc;
      desc.states = state_names;
      desc.symbols = sym_names;
      desc.start = state_names[0];
      std::vector<std::size_t> sym_of(p.n_states), next_of(p.n_states);
      for (std::size_t s = 0; s < p.n_states; ++s) {
        sym_of[s] = rng.bounded(p.n_symbols);
        next_of[s] = rng.bounded(p.n_states);
        desc.transitions.push_back(
            {state_names[s], sym_names[sym_of[s]], state_names[next_of[s]]});
      }
      const Hypervector a = state_cb.normalize(fsa_encode(desc, state_cb, sym_cb));

      for (std::size_t bi = 0; bi < p.bers.size(); ++bi) {
        const double ber = p.bers[bi];
        Rng trng(Rng::derive(Rng::derive(init_seed, di), bi + 1));
        std::size_t good = 0;
        for (std::size_t t = 0; t < p.transitions; ++t) {
          const std::size_t s = trng.bounded(p.n_states);
          const Hypervector noisy = flip_noise(a, ber, trng);
          const CleanupResult got = fsa_step(noisy, state_cb.vector(s),
                                             sym_cb.vector(sym_of[s]), state_cb);
          good += got.index == next_of[s];
        }
        rows.push_back({init, "dim", static_cast<double>(dim),
                        metric_tag("accuracy", "ber", format_double(ber)),
                        static_cast<double>(good) /
                            static_cast<double>(p.transitions)});
      }
    }
  });
  result.rows = flatten(std::move(blocks));
  return result;
}

// ---------------------------------------------------------------------------
// substring search (both variants)
// ---------------------------------------------------------------------------

namespace {

constexpr std::size_t kSearchAlphabet = 26;

std::vector<std::string> random_base(Rng& rng, std::size_t len) {
  std::vector<std::string> out(len);
  for (auto& s : out)
    s = std::string(1, static_cast<char>('a' + rng.bounded(kSearchAlphabet)));
  return out;
}

// Positive: a random window of the base. Negative: symbols drawn from the
// base's own alphabet, rejected until the naive oracle misses.
std::vector<std::string> sample_query(Rng& rng,
                                      const std::vector<std::string>& base,
                                      std::size_t qlen, bool positive) {
  if (positive) {
    const std::size_t start = rng.bounded(base.size() - qlen + 1);
    return {base.begin() + static_cast<std::ptrdiff_t>(start),
            base.begin() + static_cast<std::ptrdiff_t>(start + qlen)};
  }
  std::vector<std::string> distinct;
  {
    std::vector<std::string> sorted = base;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    distinct = std::move(sorted);
  }
  std::vector<std::string> q(qlen);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    for (auto& s : q) s = distinct[rng.bounded(distinct.size())];
    if (naive_match_end_positions(base, q).empty()) return q;
  }
  throw std::runtime_error("could not sample an absent query");
}

std::int64_t calibrated_threshold_for(SearchVariant variant,
                                      std::size_t base_len, std::size_t qlen,
                                      std::size_t dim, std::size_t trials,
                                      std::uint64_t seed) {
  for (int attempt = 0; attempt < 10; ++attempt) {
    Rng rng(Rng::derive(seed, 7777 + static_cast<std::uint64_t>(attempt)));
    const auto base = random_base(rng, base_len);
    try {
      const StringAutomaton sa = build_string_automaton(base, dim, rng);
      return calibrate_threshold(sa, variant, qlen, rng, trials);
    } catch (const std::runtime_error&) {
      // degenerate base; try the next one
    }
  }
  throw std::runtime_error("threshold calibration failed");
}

double substring_accuracy(SearchVariant variant, std::size_t base_len,
                          std::size_t qlen, std::size_t dim,
                          std::int64_t threshold, std::size_t searches,
                          std::uint64_t seed) {
  Rng rng(seed);
  std::size_t good = 0;
  for (std::size_t i = 0; i < searches; ++i) {
    const auto base = random_base(rng, base_len);
    const StringAutomaton sa = build_string_automaton(base, dim, rng);
    const bool positive = i % 2 == 0;
    const auto query = sample_query(rng, base, qlen, positive);
    const QueryOutcome out = query_string(sa, variant, query, threshold);
    good += out.present == positive;
  }
  return static_cast<double>(good) / static_cast<double>(searches);
}

}  // namespace

ExperimentResult run_substring(const SubstringParams& p) {
  SubstringParams q = p;
  if (q.dims.empty()) {
    if (q.variant == SearchVariant::Original)
      for (unsigned e = 10; e <= 20; ++e) q.dims.push_back(std::size_t{1} << e);
    else
      for (unsigned e = 4; e <= 12; ++e) q.dims.push_back(std::size_t{1} << e);
  }
  ExperimentResult result;
  result.experiment = q.variant == SearchVariant::Original
                          ? "substring-original"
                          : "substring-cleanup";
  result.params = {{"base_lens", q.base_lens},
                   {"query_len", q.query_len},
                   {"dims", q.dims},
                   {"trials", q.trials},
                   {"searches_per_trial", q.searches_per_trial},
                   {"calibration_trials", q.calibration_trials},
                   {"seed", q.seed}};

  // thresholds per (base_len, dim), calibrated once on dedicated automata
  std::vector<std::vector<std::int64_t>> thresholds(q.base_lens.size());
  for (std::size_t b = 0; b < q.base_lens.size(); ++b) {
    thresholds[b].resize(q.dims.size());
    for (std::size_t d = 0; d < q.dims.size(); ++d)
      thresholds[b][d] = calibrated_threshold_for(
          q.variant, q.base_lens[b], q.query_len, q.dims[d],
          q.calibration_trials, Rng::derive(q.seed, b * 1000 + d));
  }

  std::vector<std::vector<ExperimentRow>> blocks(q.trials);
  detail::parallel_for(q.trials, q.threads, [&](std::size_t trial) {
    const std::uint64_t trial_seed = Rng::derive(q.seed, trial);
    auto& rows = blocks[trial];
    for (std::size_t b = 0; b < q.base_lens.size(); ++b)
      for (std::size_t d = 0; d < q.dims.size(); ++d) {
        const double acc = substring_accuracy(
            q.variant, q.base_lens[b], q.query_len, q.dims[d],
            thresholds[b][d], q.searches_per_trial,
            Rng::derive(trial_seed, b * 1000 + d));
        rows.push_back(
            {trial, "dim", static_cast<double>(q.dims[d]),
             metric_tag("accuracy", "base", std::to_string(q.base_lens[b])),
             acc});
      }
  });
  result.rows = flatten(std::move(blocks));
  return result;
}

std::optional<std::size_t> substring_first_perfect_dim(
    const SubstringSweepParams& p) {
  for (unsigned e = p.min_exp; e <= p.max_exp; ++e) {
    const std::size_t dim = std::size_t{1} << e;
    const std::int64_t threshold = calibrated_threshold_for(
        p.variant, p.base_len, p.query_len, dim, p.calibration_trials,
        Rng::derive(p.seed, e));
    const double acc =
        substring_accuracy(p.variant, p.base_len, p.query_len, dim, threshold,
                           p.searches, Rng::derive(p.seed, 100000 + e));
    if (acc == 1.0) return dim;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// tm-noise (dimension search per bit error rate)
// ---------------------------------------------------------------------------

ExperimentResult run_tm_noise(const TmNoiseParams& p) {
  ExperimentResult result;
  result.experiment = "tm-noise";
  result.params = {{"bers", p.bers},
                   {"target_steps", p.target_steps},
                   {"trials", p.trials},
                   {"start_dim", p.start_dim},
                   {"seed", p.seed}};
  const TmBehavior behavior = TmBehavior::two_four();

  std::vector<std::vector<ExperimentRow>> blocks(p.trials);
  detail::parallel_for(p.trials, p.threads, [&](std::size_t trial) {
    auto& rows = blocks[trial];
    for (const double ber : p.bers) {
      TmDimensionSearchOptions opt;
      opt.start_dim = p.start_dim;
      // one searched dimension per (trial, ber); seeds paired across bers
      TmDimensionSearchResult r = tm_dimension_search(
          behavior, ber, p.target_steps, 1, Rng::derive(p.seed, trial), opt);
      rows.push_back(
          {trial, "ber", ber, "dim",
           static_cast<double>(r.per_trial_dims.at(0))});
    }
  });
  result.rows = flatten(std::move(blocks));
  return result;
}

// ---------------------------------------------------------------------------
// ca110 / ca110-noise (error rate after `steps` updates vs the interpreter)
// ---------------------------------------------------------------------------

ExperimentResult run_ca(const CaParams& p) {
  ExperimentResult result;
  result.experiment = p.noises.size() == 1 && p.noises[0] == 0.0
                          ? "ca110"
                          : "ca110-noise";
  result.params = {{"lengths", p.lengths}, {"dims", p.dims},
                   {"noises", p.noises},   {"steps", p.steps},
                   {"runs", p.runs},       {"rule", p.rule},
                   {"seed", p.seed}};
  const CaRule rule = ca_rule_from_number(p.rule);

  std::vector<std::vector<ExperimentRow>> blocks(p.runs);
  detail::parallel_for(p.runs, p.threads, [&](std::size_t run) {
    const std::uint64_t run_seed = Rng::derive(p.seed, run);
    auto& rows = blocks[run];
    std::size_t point = 0;
    for (const std::size_t l : p.lengths)
      for (const double noise : p.noises)
        for (const std::size_t dim : p.dims) {
          Rng rng(Rng::derive(run_seed, point++));
          const CaMachine m = ca_build(rule, dim, rng);
          std::vector<std::uint8_t> bits(l);
          for (auto& b : bits) b = static_cast<std::uint8_t>(rng.bounded(2));
          std::vector<std::uint8_t> shadow = bits;
          CaGrid grid = ca_encode_grid(bits, m);
          for (std::size_t t = 0; t < p.steps; ++t) {
            grid = ca_step(grid, m, noise, rng);
            shadow = ca_symbolic_step(shadow, rule);
          }
          const auto decoded = ca_decode_grid(grid, m);
          std::size_t wrong = 0;
          for (std::size_t j = 0; j < l; ++j) wrong += decoded[j] != shadow[j];
          std::string metric = "error_rate[l=" + std::to_string(l) +
                               ",p=" + format_double(noise) + "]";
          rows.push_back({run, "dim", static_cast<double>(dim), metric,
                          static_cast<double>(wrong) / static_cast<double>(l)});
        }
  });
  result.rows = flatten(std::move(blocks));
  return result;
}

// ---------------------------------------------------------------------------
// resonator (factorization success over random planted products)
// ---------------------------------------------------------------------------

ExperimentResult run_resonator(const ResonatorParams& p) {
  ExperimentResult result;
  result.experiment = "resonator";
  result.params = {{"factors", p.factors},
                   {"codebook_size", p.codebook_size},
                   {"dim", p.dim},
                   {"trials", p.trials},
                   {"max_iters", p.max_iters},
                   {"seed", p.seed}};

  std::vector<std::vector<ExperimentRow>> blocks(p.trials);
  detail::parallel_for(p.trials, p.threads, [&](std::size_t trial) {
    Rng rng(Rng::derive(p.seed, trial));
    std::vector<ItemMemory> cbs;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < p.codebook_size; ++i)
      names.push_back("v" + std::to_string(i));
    for (std::size_t f = 0; f < p.factors; ++f)
      cbs.push_back(ItemMemory::random(p.dim, names, rng));
    std::vector<std::size_t> truth(p.factors);
    Hypervector s(p.dim);
    for (std::size_t f = 0; f < p.factors; ++f) {
      truth[f] = rng.bounded(p.codebook_size);
      s = f == 0 ? cbs[f].vector(truth[f]) : bind(s, cbs[f].vector(truth[f]));
    }
    ResonatorProblem problem;
    problem.input = s;
    for (const auto& cb : cbs) problem.codebooks.push_back(&cb);
    problem.max_iters = p.max_iters;
    const ResonatorResult r = factorize(problem);
    bool correct = r.converged;
    for (std::size_t f = 0; f < p.factors && correct; ++f)
      correct = r.factors[f] == names[truth[f]];
    blocks[trial].push_back({trial, "dim", static_cast<double>(p.dim),
                             "success", correct ? 1.0 : 0.0});
    blocks[trial].push_back({trial, "dim", static_cast<double>(p.dim),
                             "iterations", static_cast<double>(r.iterations)});
  });
  result.rows = flatten(std::move(blocks));
  return result;
}

// ---------------------------------------------------------------------------
// dispatch
// ---------------------------------------------------------------------------

std::vector<std::string> experiment_names() {
  return {"histogram",        "fsa-recall", "substring-original",
          "substring-cleanup", "tm-noise",   "ca110",
          "ca110-noise",       "resonator"};
}

ExperimentResult run_experiment(const std::string& name,
                                const ExperimentOptions& options) {
  if (name == "histogram") {
    HistogramParams p;
    p.seed = options.seed;
    p.threads = options.threads;
    if (options.trials) p.sims = *options.trials;
    return run_histogram(p);
  }
  if (name == "fsa-recall") {
    FsaRecallParams p;
    p.seed = options.seed;
    p.threads = options.threads;
    if (options.trials) p.inits = *options.trials;
    if (options.noise) p.bers = {*options.noise};
    return run_fsa_recall(p);
  }
  if (name == "substring-original" || name == "substring-cleanup") {
    SubstringParams p;
    p.variant = name == "substring-original" ? SearchVariant::Original
                                             : SearchVariant::Cleanup;
    if (p.variant == SearchVariant::Cleanup) {
      p.base_lens = {32, 48, 64};
      p.query_len = 30;
    }
    p.seed = options.seed;
    p.threads = options.threads;
    if (options.trials) p.trials = *options.trials;
    if (options.dims) p.dims = *options.dims;
    if (options.paper_scale) {
      p.trials = 50;
      p.searches_per_trial = 100;
    }
    return run_substring(p);
  }
  if (name == "tm-noise") {
    TmNoiseParams p;
    p.seed = options.seed;
    p.threads = options.threads;
    if (options.trials) p.trials = *options.trials;
    if (options.noise) p.bers = {*options.noise};
    if (options.paper_scale) p.target_steps = 10000000;
    return run_tm_noise(p);
  }
  if (name == "ca110" || name == "ca110-noise") {
    CaParams p;
    p.seed = options.seed;
    p.threads = options.threads;
    if (name == "ca110-noise") p.noises = {0.03125, 0.0625, 0.125, 0.25};
    if (options.noise) p.noises = {*options.noise};
    if (options.trials) p.runs = *options.trials;
    if (options.dims) p.dims = *options.dims;
    if (options.paper_scale) p.lengths = {32, 64, 128, 256, 512, 1024};
    return run_ca(p);
  }
  if (name == "resonator") {
    ResonatorParams p;
    p.seed = options.seed;
    p.threads = options.threads;
    if (options.trials) p.trials = *options.trials;
    if (options.dims && !options.dims->empty()) p.dim = options.dims->front();
    return run_resonator(p);
  }
  throw std::invalid_argument("unknown experiment: " + name);
}

}  // namespace hdc
