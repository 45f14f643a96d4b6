#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nucgrow/boundary.hpp"
#include "nucgrow/dynamics.hpp"
#include "nucgrow/model.hpp"

namespace nucgrow {

enum class ExperimentKind {
  Relaxation,     // time until the stop clause fires (origin occupied by default)
  NucleationLaw,  // time of the first occupation anywhere in the box
  ClusterBound,   // max cluster diameter at the horizon vs a threshold
  Crossing,       // crossing and void indicators at the horizon
  GrowthSpeed,    // first-passage times of a droplet through a diameter ladder
  Domination,     // snapshot envelopes vs the dynamics under one field
};

enum class EngineKind { Graphical, Fast };

/// One measurement campaign: a beta grid, a geometry rule, and per-trial
/// dynamics settings. Scales follow exp(beta * exponent): the box is a
/// centred cube of side ceil(exp(beta * volume_exponent)), minimum 1, unless
/// explicit sides are given (also centred); the horizon is
/// exp(beta * horizon_exponent). Trial seeds are
/// base_seed + beta_index * trials + trial, so results are reproducible and
/// independent of the thread count.
struct ExperimentSpec {
  ExperimentKind kind = ExperimentKind::Relaxation;
  ModelParams params;  // beta is taken from the grid, not from this field
  std::vector<double> beta_grid;
  double volume_exponent = 0.0;
  std::vector<std::int64_t> sides;  // explicit box; empty = use the exponent
  std::optional<BoundaryCondition> boundary;  // default Empty; Floor for crossing
  std::optional<ProcessVariant> variant;  // default Full; NonNucleating for
                                          // crossing and growth-speed
  int trials = 1;
  std::uint64_t base_seed = 0;
  double horizon_exponent = 0.0;
  EngineKind engine = EngineKind::Graphical;
  int threads = 1;

  /// Relaxation kinds only: replaces the default stop clause.
  std::optional<StopRule> stop;
  /// Cluster-bound: diameters are compared against exp(beta * exponent) when
  /// >= 0 and against beta itself when negative.
  double threshold_exponent = -1.0;
  /// Growth-speed: strictly increasing diameter thresholds, all >= 0.
  std::vector<std::int64_t> diameter_ladder;
  /// Domination: fixed dilation radius, >= 2 ...
  std::int64_t dilation_radius = 0;
  /// ... or radius max(2, ceil(exp(beta * exponent))) when >= 0.
  double dilation_exponent = -1.0;
};

/// A censored row hit the horizon before its stopping event; its value is the
/// horizon and it is excluded from summaries and fits.
struct ExperimentRow {
  double beta = 0.0;
  int trial = 0;
  std::uint64_t seed = 0;
  std::string observable;
  double value = 0.0;
  bool censored = false;
};

/// Per (beta, observable) aggregate over the uncensored rows.
struct BetaSummary {
  double beta = 0.0;
  std::string observable;
  int count = 0;
  int censored = 0;
  double mean = 0.0;
  double median = 0.0;
};

struct FitResult {
  double slope = 0.0;
  double intercept = 0.0;
  double slope_stderr = 0.0;
  int points = 0;  // beta values that contributed a median
};

struct ExperimentResult {
  ExperimentSpec spec;
  std::vector<ExperimentRow> rows;       // fixed order: beta grid, then trial
  std::vector<BetaSummary> summaries;
  std::optional<FitResult> fit;  // time-valued kinds, when a fit is possible
};

/// Observable the kind is primarily about; fits default to it.
std::string primary_observable(const ExperimentSpec& spec);

ExperimentResult measure_relaxation(const ExperimentSpec& spec);
ExperimentResult cluster_bound_experiment(const ExperimentSpec& spec);
ExperimentResult crossing_experiment(const ExperimentSpec& spec);
ExperimentResult growth_speed_experiment(const ExperimentSpec& spec);
ExperimentResult domination_experiment(const ExperimentSpec& spec);

/// Dispatches on spec.kind.
ExperimentResult run_experiment(const ExperimentSpec& spec);

/// Ordinary least squares of ln(median value) against beta over the
/// uncensored rows of the observable. Throws std::domain_error with fewer
/// than 3 usable beta points or a nonpositive median.
FitResult fit_exponent(const ExperimentResult& result,
                       const std::string& observable);
FitResult fit_exponent(const ExperimentResult& result);

/// Fixed columns: beta,trial,seed,observable,value,censored. Doubles use
/// %.17g so a rerun of the same spec is byte-identical.
std::string to_csv(const ExperimentResult& result);

/// Spec echo plus rows, summaries and fit in one document.
std::string to_json(const ExperimentResult& result);

const char* kind_name(ExperimentKind kind);
ExperimentKind kind_from_name(const std::string& name);
const char* engine_name(EngineKind engine);
EngineKind engine_from_name(const std::string& name);

}  // namespace nucgrow
