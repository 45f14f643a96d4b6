#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "nucgrow/harness.hpp"

using namespace nucgrow;

namespace {

ExperimentRow make_row(double beta, int trial, const std::string& obs,
                       double value, bool censored = false) {
  ExperimentRow row;
  row.beta = beta;
  row.trial = trial;
  row.seed = 0;
  row.observable = obs;
  row.value = value;
  row.censored = censored;
  return row;
}

ExperimentResult synthetic_relaxation(const std::vector<ExperimentRow>& rows) {
  ExperimentResult result;
  result.spec.kind = ExperimentKind::Relaxation;
  result.rows = rows;
  return result;
}

}  // namespace

TEST_CASE("exponent fitting recovers exact and affine laws") {
  std::vector<ExperimentRow> rows;
  for (const double beta : {1.0, 2.0, 3.0, 4.0})
    rows.push_back(make_row(beta, 0, "relaxation_time", std::exp(2.5 * beta)));
  const FitResult exact = fit_exponent(synthetic_relaxation(rows));
  CHECK(exact.slope == doctest::Approx(2.5).epsilon(1e-12));
  CHECK(exact.intercept == doctest::Approx(0.0).scale(1.0).epsilon(1e-10));
  CHECK(exact.slope_stderr < 1e-10);
  CHECK(exact.points == 4);

  rows.clear();
  for (const double beta : {0.5, 1.0, 1.5, 2.0, 2.5})
    rows.push_back(
        make_row(beta, 0, "relaxation_time", 7.0 * std::exp(1.2 * beta)));
  const FitResult affine = fit_exponent(synthetic_relaxation(rows));
  CHECK(affine.slope == doctest::Approx(1.2).epsilon(1e-12));
  CHECK(affine.intercept == doctest::Approx(std::log(7.0)).epsilon(1e-12));
  CHECK(affine.slope_stderr < 1e-10);
}

TEST_CASE("exponent fitting recovers a jittered slope within two errors") {
  std::mt19937_64 rng(2024);
  std::normal_distribution<double> jitter(0.0, 0.05);
  std::vector<ExperimentRow> rows;
  for (const double beta : {1.0, 2.0, 3.0, 4.0, 5.0, 6.0})
    for (int t = 0; t < 9; ++t)
      rows.push_back(make_row(beta, t, "relaxation_time",
                              std::exp(0.8 * beta + jitter(rng))));
  const FitResult fit = fit_exponent(synthetic_relaxation(rows));
  CHECK(std::abs(fit.slope - 0.8) < 2.0 * fit.slope_stderr);
  CHECK(fit.points == 6);
}

TEST_CASE("exponent fitting rejects thin or degenerate data") {
  std::vector<ExperimentRow> rows;
  rows.push_back(make_row(1.0, 0, "relaxation_time", 2.0));
  rows.push_back(make_row(2.0, 0, "relaxation_time", 4.0));
  CHECK_THROWS_AS((void)fit_exponent(synthetic_relaxation(rows)),
                  std::domain_error);

  // A fully censored beta point drops out; the fit survives on the rest.
  rows.push_back(make_row(3.0, 0, "relaxation_time", 8.0));
  rows.push_back(make_row(4.0, 0, "relaxation_time", 16.0, true));
  const FitResult fit = fit_exponent(synthetic_relaxation(rows));
  CHECK(fit.points == 3);
  CHECK(fit.slope == doctest::Approx(std::log(2.0)).epsilon(1e-12));

  // ... until censoring starves it below three points.
  rows[2].censored = true;
  CHECK_THROWS_AS((void)fit_exponent(synthetic_relaxation(rows)),
                  std::domain_error);

  rows[2].censored = false;
  rows[2].value = 0.0;
  CHECK_THROWS_AS((void)fit_exponent(synthetic_relaxation(rows)),
                  std::domain_error);
}

TEST_CASE("specs with malformed fields are rejected") {
  ExperimentSpec spec;
  spec.kind = ExperimentKind::Relaxation;
  spec.params.dimension = 1;
  spec.params.gammas = {0.5, 2.0};
  spec.beta_grid = {2.0, 3.0, 4.0};
  spec.sides = {5};
  spec.trials = 4;
  spec.horizon_exponent = 2.5;

  auto broken = spec;
  broken.trials = 0;
  CHECK_THROWS_AS((void)measure_relaxation(broken), std::invalid_argument);
  broken = spec;
  broken.threads = 0;
  CHECK_THROWS_AS((void)measure_relaxation(broken), std::invalid_argument);
  broken = spec;
  broken.beta_grid = {};
  CHECK_THROWS_AS((void)measure_relaxation(broken), std::invalid_argument);
  broken = spec;
  broken.beta_grid = {2.0, -1.0};
  CHECK_THROWS_AS((void)measure_relaxation(broken), std::invalid_argument);
  broken = spec;
  broken.sides = {5, 5};
  CHECK_THROWS_AS((void)measure_relaxation(broken), std::invalid_argument);
  broken = spec;
  broken.sides = {0};
  CHECK_THROWS_AS((void)measure_relaxation(broken), std::invalid_argument);
  broken = spec;
  broken.horizon_exponent = 400.0;  // exp(beta * 400) overflows
  CHECK_THROWS_AS((void)measure_relaxation(broken), std::invalid_argument);

  // Kind dispatch is strict in both directions.
  CHECK_THROWS_AS((void)crossing_experiment(spec), std::invalid_argument);
  broken = spec;
  broken.kind = ExperimentKind::Crossing;
  CHECK_THROWS_AS((void)measure_relaxation(broken), std::invalid_argument);

  broken = spec;
  broken.kind = ExperimentKind::GrowthSpeed;
  CHECK_THROWS_AS((void)growth_speed_experiment(broken),
                  std::invalid_argument);
  broken.diameter_ladder = {2, 2};
  CHECK_THROWS_AS((void)growth_speed_experiment(broken),
                  std::invalid_argument);
  broken.diameter_ladder = {-1, 2};
  CHECK_THROWS_AS((void)growth_speed_experiment(broken),
                  std::invalid_argument);

  broken = spec;
  broken.kind = ExperimentKind::Domination;
  CHECK_THROWS_AS((void)domination_experiment(broken), std::invalid_argument);
  broken.dilation_radius = 1;
  CHECK_THROWS_AS((void)domination_experiment(broken), std::invalid_argument);
}

TEST_CASE("singleton relaxation recovers the nucleation exponent") {
  ExperimentSpec spec;
  spec.kind = ExperimentKind::Relaxation;
  spec.params.dimension = 0;
  spec.params.gammas = {0.5};
  spec.beta_grid = {4.0, 6.0, 8.0, 10.0};
  spec.trials = 200;
  spec.base_seed = 777;
  spec.horizon_exponent = 1.0;

  const ExperimentResult result = measure_relaxation(spec);
  REQUIRE(result.rows.size() == 800);
  REQUIRE(result.fit.has_value());
  CHECK(std::abs(result.fit->slope - 0.5) < 0.05);

  // Occupation is a mark race with rate exp(-beta gamma_0); its median is
  // ln 2 over that rate. Checked at the largest beta.
  const double expected = std::log(2.0) * std::exp(10.0 * 0.5);
  for (const BetaSummary& sum : result.summaries)
    if (sum.beta == 10.0) {
      CHECK(sum.censored == 0);
      CHECK(sum.median > 0.7 * expected);
      CHECK(sum.median < 1.4 * expected);
    }

  // Row bookkeeping: seeds follow base + beta_index * trials + trial.
  CHECK(result.rows[0].seed == 777);
  CHECK(result.rows[205].seed == 777 + 205);
  CHECK(result.rows[205].beta == 6.0);
  CHECK(result.rows[205].trial == 5);
  CHECK(result.rows[205].observable == "relaxation_time");
}

TEST_CASE("experiments are reproducible and thread-count independent") {
  ExperimentSpec spec;
  spec.kind = ExperimentKind::Relaxation;
  spec.params.dimension = 1;
  spec.params.gammas = {0.5, 2.0};
  spec.beta_grid = {2.0, 3.0};
  spec.sides = {5};
  spec.trials = 40;
  spec.base_seed = 11;
  spec.horizon_exponent = 2.5;

  const std::string once = to_csv(measure_relaxation(spec));
  const std::string again = to_csv(measure_relaxation(spec));
  CHECK(once == again);

  auto threaded = spec;
  threaded.threads = 4;
  CHECK(to_csv(measure_relaxation(threaded)) == once);

  auto fast = spec;
  fast.engine = EngineKind::Fast;
  const std::string fast_csv = to_csv(measure_relaxation(fast));
  CHECK(fast_csv == to_csv(measure_relaxation(fast)));
}

TEST_CASE("hopeless horizons censor every row") {
  ExperimentSpec spec;
  spec.kind = ExperimentKind::Relaxation;
  spec.params.dimension = 0;
  spec.params.gammas = {5.0};
  spec.beta_grid = {3.0, 4.0, 5.0};
  spec.trials = 20;
  spec.horizon_exponent = 0.0;  // horizon 1 against a median near exp(5 beta)

  const ExperimentResult result = measure_relaxation(spec);
  CHECK(!result.fit.has_value());
  CHECK_THROWS_AS((void)fit_exponent(result), std::domain_error);
  for (const ExperimentRow& row : result.rows) {
    CHECK(row.censored);
    CHECK(row.value == 1.0);
  }
  for (const BetaSummary& sum : result.summaries) {
    CHECK(sum.count == 0);
    CHECK(sum.censored == 20);
  }
}

TEST_CASE("relaxation honours a custom stop clause") {
  ExperimentSpec spec;
  spec.kind = ExperimentKind::Relaxation;
  spec.params.dimension = 1;
  spec.params.gammas = {0.0, 0.5};
  spec.beta_grid = {1.0, 2.0, 3.0};
  spec.sides = {3};
  spec.trials = 10;
  spec.horizon_exponent = 2.0;
  spec.stop = StopRule::box_full();

  const ExperimentResult result = measure_relaxation(spec);
  for (const ExperimentRow& row : result.rows) {
    CHECK(!row.censored);
    CHECK(row.value > 0.0);
  }
  REQUIRE(result.fit.has_value());
}

TEST_CASE("nucleation-law runs measure the first occupation") {
  ExperimentSpec spec;
  spec.kind = ExperimentKind::NucleationLaw;
  spec.params.dimension = 2;
  spec.params.gammas = {0.0, 1.0, 2.0};
  spec.beta_grid = {3.0};
  spec.sides = {8, 8};
  spec.trials = 100;
  spec.base_seed = 5;
  spec.horizon_exponent = 2.0;

  const ExperimentResult result = measure_relaxation(spec);
  // First occupation anywhere is exponential with rate |box| c(0).
  const double mean = std::exp(6.0) / 64.0;
  const BetaSummary& sum = result.summaries.at(0);
  CHECK(sum.observable == "nucleation_time");
  CHECK(sum.censored == 0);
  CHECK(sum.mean > 0.5 * mean);
  CHECK(sum.mean < 2.0 * mean);
}

TEST_CASE("cluster-bound trials report diameters against the threshold") {
  ExperimentSpec spec;
  spec.kind = ExperimentKind::ClusterBound;
  spec.params.dimension = 2;
  spec.params.gammas = {0.0, 1.0, 3.0};
  spec.beta_grid = {3.0, 4.0};
  spec.sides = {15, 15};
  spec.trials = 30;
  spec.horizon_exponent = 0.3;

  const ExperimentResult low = cluster_bound_experiment(spec);
  for (std::size_t i = 0; i < low.rows.size(); i += 2) {
    CHECK(low.rows[i].observable == "max_diameter");
    CHECK(low.rows[i + 1].observable == "exceeds_threshold");
    // Horizons far below the nucleation scale leave only scattered seeds,
    // never a cluster wider than beta.
    CHECK(low.rows[i + 1].value == 0.0);
  }

  // Zero horizon: nothing ever occupies.
  auto frozen = spec;
  frozen.horizon_exponent = -std::numeric_limits<double>::infinity();
  const ExperimentResult none = cluster_bound_experiment(frozen);
  for (const ExperimentRow& row : none.rows) CHECK(row.value == 0.0);
}

TEST_CASE("crossing trials at zero horizon never cross") {
  ExperimentSpec spec;
  spec.kind = ExperimentKind::Crossing;
  spec.params.dimension = 2;
  spec.params.gammas = {0.0, 1.0, 2.0};
  spec.beta_grid = {2.0};
  spec.sides = {4, 4};
  spec.trials = 10;
  spec.horizon_exponent = -std::numeric_limits<double>::infinity();

  const ExperimentResult result = crossing_experiment(spec);
  for (std::size_t i = 0; i < result.rows.size(); i += 2) {
    CHECK(result.rows[i].observable == "crossed");
    CHECK(result.rows[i].value == 0.0);
    CHECK(result.rows[i + 1].observable == "void");
    CHECK(result.rows[i + 1].value == 1.0);
  }
}

TEST_CASE("sandwiched slice void frequency matches the closed form") {
  ExperimentSpec spec;
  spec.kind = ExperimentKind::Crossing;
  spec.params.dimension = 2;
  spec.params.gammas = {0.0, 1.0, 2.0};
  spec.beta_grid = {3.0};
  spec.sides = {6, 2};
  spec.boundary = BoundaryCondition::sandwich(1);
  spec.trials = 400;
  spec.base_seed = 99;
  spec.horizon_exponent = 0.0;  // horizon 1 at every beta

  const ExperimentResult result = crossing_experiment(spec);
  int voids = 0;
  for (const ExperimentRow& row : result.rows)
    if (row.observable == "void") voids += row.value == 1.0 ? 1 : 0;
  const double p = std::exp(-12.0 * std::exp(-3.0) * 1.0);
  const double freq = voids / 400.0;
  const double se = std::sqrt(p * (1.0 - p) / 400.0);
  CHECK(std::abs(freq - p) < 3.0 * se);

  // A void slice cannot have crossed.
  for (std::size_t i = 0; i < result.rows.size(); i += 2)
    if (result.rows[i + 1].value == 1.0) CHECK(result.rows[i].value == 0.0);
}

TEST_CASE("growth speed ladder times are monotone and fit the step rate") {
  ExperimentSpec spec;
  spec.kind = ExperimentKind::GrowthSpeed;
  spec.params.dimension = 1;
  spec.params.gammas = {0.5, 2.0};
  spec.beta_grid = {2.0, 3.0, 4.0};
  spec.sides = {9};
  spec.trials = 120;
  spec.base_seed = 31;
  spec.horizon_exponent = 1.5;
  spec.diameter_ladder = {0, 1};

  const ExperimentResult result = growth_speed_experiment(spec);
  for (std::size_t i = 0; i < result.rows.size(); i += 2) {
    CHECK(result.rows[i].observable == "time_to_diameter_0");
    CHECK(result.rows[i].value == 0.0);
    CHECK(result.rows[i + 1].value >= result.rows[i].value);
  }
  // One protuberance: the droplet widens at rate 2 exp(-beta gamma_0), so
  // the log median grows with slope gamma_0.
  const FitResult fit = fit_exponent(result, "time_to_diameter_1");
  CHECK(std::abs(fit.slope - 0.5) < 0.12);

  // A tiny horizon censors the wider thresholds.
  auto cramped = spec;
  cramped.beta_grid = {3.0};
  cramped.trials = 15;
  cramped.horizon_exponent = 0.0;
  cramped.diameter_ladder = {0, 1, 6};
  const ExperimentResult cut = growth_speed_experiment(cramped);
  int censored_wide = 0;
  for (const ExperimentRow& row : cut.rows) {
    if (row.censored) {
      CHECK(row.value == 1.0);
      CHECK(row.observable != "time_to_diameter_0");
    }
    if (row.censored && row.observable == "time_to_diameter_6")
      ++censored_wide;
  }
  // Diameter 6 needs six growth steps at rate well below one per time unit;
  // the unit horizon censors it in every trial.
  CHECK(censored_wide == 15);
  CHECK(!cut.fit.has_value());
}

TEST_CASE("domination trials uphold the envelope guarantee") {
  ExperimentSpec spec;
  spec.kind = ExperimentKind::Domination;
  spec.params.dimension = 2;
  spec.params.gammas = {0.0, 1.0, 2.0};
  spec.beta_grid = {3.0, 4.0, 5.0};
  spec.sides = {24, 24};
  spec.trials = 25;
  spec.base_seed = 17;
  spec.horizon_exponent = 0.7;
  spec.dilation_exponent = 0.5;

  const ExperimentResult result = domination_experiment(spec);
  for (std::size_t i = 0; i < result.rows.size(); i += 2) {
    CHECK(result.rows[i].observable == "snapshot_in_inner");
    CHECK(result.rows[i].value == 1.0);
    const double outer = result.rows[i + 1].value;
    CHECK((outer == 0.0 || outer == 1.0));
  }

  auto frozen = spec;
  frozen.dilation_exponent = -1.0;
  frozen.dilation_radius = 3;
  frozen.horizon_exponent = -std::numeric_limits<double>::infinity();
  frozen.trials = 5;
  const ExperimentResult empty = domination_experiment(frozen);
  for (const ExperimentRow& row : empty.rows) CHECK(row.value == 1.0);
}

TEST_CASE("run_experiment dispatches on the spec kind") {
  ExperimentSpec spec;
  spec.kind = ExperimentKind::Crossing;
  spec.params.dimension = 2;
  spec.params.gammas = {0.0, 1.0, 2.0};
  spec.beta_grid = {2.0};
  spec.sides = {4, 4};
  spec.trials = 3;
  spec.horizon_exponent = 0.0;

  const ExperimentResult result = run_experiment(spec);
  CHECK(result.rows.size() == 6);
  CHECK(result.rows[0].observable == "crossed");
}

TEST_CASE("csv and json outputs carry the full result") {
  ExperimentSpec spec;
  spec.kind = ExperimentKind::Relaxation;
  spec.params.dimension = 0;
  spec.params.gammas = {0.5};
  spec.beta_grid = {2.0, 3.0, 4.0};
  spec.trials = 5;
  spec.base_seed = 42;
  spec.horizon_exponent = 1.0;

  const ExperimentResult result = measure_relaxation(spec);
  const std::string csv = to_csv(result);
  std::size_t lines = 0;
  for (const char c : csv) lines += c == '\n' ? 1 : 0;
  CHECK(lines == 1 + result.rows.size());
  CHECK(csv.rfind("beta,trial,seed,observable,value,censored\n", 0) == 0);
  CHECK(csv.find("2,0,42,relaxation_time,") != std::string::npos);

  const auto j = nlohmann::json::parse(to_json(result));
  CHECK(j["spec"]["kind"] == "relaxation");
  CHECK(j["spec"]["base_seed"] == 42);
  CHECK(j["spec"]["engine"] == "graphical");
  CHECK(j["rows"].size() == result.rows.size());
  CHECK(j["summaries"].size() == 3);
  REQUIRE(result.fit.has_value());
  CHECK(j["fit"]["slope"].get<double>() ==
        doctest::Approx(result.fit->slope));

  // Name round trips used by the tools.
  CHECK(kind_from_name(kind_name(ExperimentKind::GrowthSpeed)) ==
        ExperimentKind::GrowthSpeed);
  CHECK(engine_from_name("fast") == EngineKind::Fast);
  CHECK_THROWS_AS((void)kind_from_name("nonsense"), std::invalid_argument);
  CHECK_THROWS_AS((void)engine_from_name("nonsense"), std::invalid_argument);
}
