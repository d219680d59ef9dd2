#include <doctest.h>

#include <sstream>

#include "hdc/experiments.hpp"

using namespace hdc;

TEST_CASE("csv output is byte identical across runs and thread counts") {
  ResonatorParams p;
  p.trials = 20;
  p.dim = 512;
  p.seed = 77;

  p.threads = 1;
  const ExperimentResult a = run_resonator(p);
  p.threads = 3;
  const ExperimentResult b = run_resonator(p);

  std::stringstream sa, sb;
  write_csv(a, sa);
  write_csv(b, sb);
  CHECK(sa.str() == sb.str());
  CHECK(sa.str().starts_with(
      "experiment,param_json,trial,x_name,x_value,metric,value\n"));
}

TEST_CASE("experiment rows are complete over the declared grid") {
  FsaRecallParams p;
  p.dim_start = 200;
  p.dim_stop = 400;
  p.dim_step = 200;
  p.bers = {0.125, 0.25};
  p.inits = 3;
  p.transitions = 50;
  p.seed = 5;
  const ExperimentResult r = run_fsa_recall(p);
  CHECK(r.rows.size() == 3 * 2 * 2);  // inits x dims x bers
  CHECK(r.xs("accuracy[ber=0.25]") == std::vector<double>{200.0, 400.0});
  const double m = r.mean("accuracy[ber=0.25]", 400.0);
  CHECK(m >= 0.0);
  CHECK(m <= 1.0);
  CHECK_THROWS_AS(r.mean("nope", 1.0), std::invalid_argument);
}

TEST_CASE("histogram experiment improves with dimension") {
  HistogramParams p;
  p.sizes = {16};
  p.dim_start = 256;
  p.dim_stop = 4096;
  p.dim_step = 3840;  // two points: 256 and 4096
  p.sims = 10;
  p.seed = 11;
  const ExperimentResult r = run_histogram(p);
  CHECK(r.mean("correlation[size=16]", 4096.0) >
        r.mean("correlation[size=16]", 256.0));
}

TEST_CASE("named dispatch checks its argument") {
  ExperimentOptions opt;
  CHECK_THROWS_AS(run_experiment("not-an-experiment", opt),
                  std::invalid_argument);
  CHECK(experiment_names().size() == 8);
}

TEST_CASE("resonator experiment reports near-perfect success at scale") {
  ResonatorParams p;
  p.trials = 60;
  p.seed = 13;
  const ExperimentResult r = run_resonator(p);
  CHECK(r.mean("success", 2048.0) >= 0.95);
}
