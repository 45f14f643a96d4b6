#include "nucgrow/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "bbox_forest.hpp"
#include "json.hpp"
#include "nucgrow/analysis.hpp"
#include "nucgrow/morphology.hpp"
#include "nucgrow/random_field.hpp"

namespace nucgrow {

namespace {

using EngineFn = Trajectory (*)(const BoxRegion&, const ModelParams&,
                                const BoundaryCondition&, ProcessVariant,
                                const Configuration&, const GraphicalField&,
                                const StopRule&, const RunOptions&);

EngineFn engine_fn(EngineKind kind) {
  return kind == EngineKind::Fast ? &run_fast : &run_graphical;
}

/// Per-beta derived quantities, all validated up front so worker threads
/// only ever see well-formed runs.
struct GridPoint {
  ModelParams params;
  BoxRegion box;
  double horizon = 0.0;
  double threshold = 0.0;      // cluster-bound comparison value
  std::int64_t dilation = 0;   // domination radius
};

BoxRegion centered_box(int dimension, const std::vector<std::int64_t>& sides) {
  Coord off(dimension);
  for (int a = 0; a < dimension; ++a) off[a] = -(sides[a] / 2);
  return BoxRegion(std::move(off), sides);
}

std::vector<GridPoint> build_grid(const ExperimentSpec& spec) {
  if (spec.trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (spec.threads < 1) throw std::invalid_argument("threads must be >= 1");
  if (spec.beta_grid.empty())
    throw std::invalid_argument("beta grid must not be empty");
  const int d = spec.params.dimension;
  if (!spec.sides.empty()) {
    if (static_cast<int>(spec.sides.size()) != d)
      throw std::invalid_argument("sides do not match the model dimension");
    for (const auto s : spec.sides)
      if (s < 1) throw std::invalid_argument("sides must be >= 1");
  }
  if (spec.kind == ExperimentKind::Crossing && d < 1)
    throw std::invalid_argument("crossing needs dimension >= 1");
  if (spec.kind == ExperimentKind::GrowthSpeed) {
    if (spec.diameter_ladder.empty())
      throw std::invalid_argument("growth-speed needs a diameter ladder");
    for (std::size_t i = 0; i < spec.diameter_ladder.size(); ++i)
      if (spec.diameter_ladder[i] < 0 ||
          (i > 0 && spec.diameter_ladder[i] <= spec.diameter_ladder[i - 1]))
        throw std::invalid_argument(
            "diameter ladder must be strictly increasing and >= 0");
  }

  std::vector<GridPoint> grid;
  grid.reserve(spec.beta_grid.size());
  for (const double beta : spec.beta_grid) {
    GridPoint g;
    g.params = spec.params;
    g.params.beta = beta;
    require_valid(g.params);

    if (!spec.sides.empty()) {
      g.box = centered_box(d, spec.sides);
    } else {
      const double side = std::exp(beta * spec.volume_exponent);
      if (!(side < 1e15))
        throw std::invalid_argument(
            "box side overflows; lower the volume exponent");
      g.box = BoxRegion::centered_cube(
          d, std::max<std::int64_t>(
                 1, static_cast<std::int64_t>(std::ceil(side))));
    }
    long double vol = 1;
    for (const auto s : g.box.sides) vol *= static_cast<long double>(s);
    if (vol > 1e15L) throw std::invalid_argument("box volume overflows");

    g.horizon = std::exp(beta * spec.horizon_exponent);
    if (!std::isfinite(g.horizon))
      throw std::invalid_argument(
          "horizon must be finite; lower the horizon exponent");

    g.threshold = spec.threshold_exponent >= 0
                      ? std::exp(beta * spec.threshold_exponent)
                      : beta;

    if (spec.kind == ExperimentKind::Domination) {
      if (spec.dilation_radius > 0) {
        if (spec.dilation_radius < 2)
          throw std::invalid_argument("dilation radius must be >= 2");
        g.dilation = spec.dilation_radius;
      } else if (spec.dilation_exponent >= 0) {
        const double l = std::exp(beta * spec.dilation_exponent);
        if (!(l < 1e15))
          throw std::invalid_argument(
              "dilation radius overflows; lower the dilation exponent");
        g.dilation = std::max<std::int64_t>(
            2, static_cast<std::int64_t>(std::ceil(l)));
      } else {
        throw std::invalid_argument(
            "domination needs a dilation radius or exponent");
      }
    }
    grid.push_back(std::move(g));
  }
  return grid;
}

/// Runs one task per (beta, trial) pair, writing into preallocated row
/// slots, so the output is identical for any thread count. The trial
/// function fills observable/value/censored; beta, trial and seed are set
/// here.
template <typename TrialFn>
std::vector<ExperimentRow> fan_out(const ExperimentSpec& spec,
                                   std::size_t rows_per_trial,
                                   const TrialFn& trial_fn) {
  const auto trials = static_cast<std::size_t>(spec.trials);
  const std::size_t total = spec.beta_grid.size() * trials;
  std::vector<ExperimentRow> rows(total * rows_per_trial);
  for (std::size_t task = 0; task < total; ++task) {
    const std::uint64_t seed = spec.base_seed + task;
    for (std::size_t s = 0; s < rows_per_trial; ++s) {
      ExperimentRow& row = rows[task * rows_per_trial + s];
      row.beta = spec.beta_grid[task / trials];
      row.trial = static_cast<int>(task % trials);
      row.seed = seed;
    }
  }

  std::atomic<std::size_t> cursor{0};
  std::atomic<bool> failed{false};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const auto drain = [&] {
    for (;;) {
      if (failed.load(std::memory_order_relaxed)) return;
      const std::size_t task = cursor.fetch_add(1, std::memory_order_relaxed);
      if (task >= total) return;
      try {
        trial_fn(task / trials, rows[task * rows_per_trial].seed,
                 &rows[task * rows_per_trial]);
      } catch (...) {
        const std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        failed.store(true, std::memory_order_relaxed);
      }
    }
  };

  const auto workers = std::min<std::size_t>(
      static_cast<std::size_t>(spec.threads), std::max<std::size_t>(total, 1));
  if (workers <= 1) {
    drain();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t i = 0; i < workers; ++i) pool.emplace_back(drain);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  return rows;
}

double median_of(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  return n % 2 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

bool time_valued(ExperimentKind kind) {
  return kind == ExperimentKind::Relaxation ||
         kind == ExperimentKind::NucleationLaw ||
         kind == ExperimentKind::GrowthSpeed;
}

ExperimentResult finalize(const ExperimentSpec& spec,
                          std::vector<ExperimentRow> rows) {
  ExperimentResult result;
  result.spec = spec;
  result.rows = std::move(rows);

  const auto trials = static_cast<std::size_t>(spec.trials);
  const std::size_t rpt = result.rows.size() / (spec.beta_grid.size() * trials);
  for (std::size_t bi = 0; bi < spec.beta_grid.size(); ++bi) {
    for (std::size_t s = 0; s < rpt; ++s) {
      BetaSummary sum;
      sum.beta = spec.beta_grid[bi];
      sum.observable = result.rows[bi * trials * rpt + s].observable;
      std::vector<double> values;
      values.reserve(trials);
      for (std::size_t t = 0; t < trials; ++t) {
        const ExperimentRow& row = result.rows[(bi * trials + t) * rpt + s];
        if (row.censored)
          ++sum.censored;
        else
          values.push_back(row.value);
      }
      sum.count = static_cast<int>(values.size());
      if (!values.empty()) {
        double total = 0;
        for (const double v : values) total += v;
        sum.mean = total / static_cast<double>(values.size());
        sum.median = median_of(std::move(values));
      }
      result.summaries.push_back(std::move(sum));
    }
  }

  if (time_valued(spec.kind)) {
    try {
      result.fit = fit_exponent(result);
    } catch (const std::domain_error&) {
      // Too few usable points; the rows still stand on their own.
    }
  }
  return result;
}

void require_kind(const ExperimentSpec& spec, ExperimentKind expected) {
  if (spec.kind != expected)
    throw std::invalid_argument("spec kind does not match the experiment");
}

}  // namespace

std::string primary_observable(const ExperimentSpec& spec) {
  switch (spec.kind) {
    case ExperimentKind::Relaxation:
      return "relaxation_time";
    case ExperimentKind::NucleationLaw:
      return "nucleation_time";
    case ExperimentKind::ClusterBound:
      return "exceeds_threshold";
    case ExperimentKind::Crossing:
      return "crossed";
    case ExperimentKind::GrowthSpeed:
      if (spec.diameter_ladder.empty())
        throw std::invalid_argument("growth-speed needs a diameter ladder");
      return "time_to_diameter_" + std::to_string(spec.diameter_ladder.back());
    case ExperimentKind::Domination:
      return "config_in_outer";
  }
  throw std::logic_error("unknown experiment kind");
}

ExperimentResult measure_relaxation(const ExperimentSpec& spec) {
  if (spec.kind != ExperimentKind::Relaxation &&
      spec.kind != ExperimentKind::NucleationLaw)
    throw std::invalid_argument("spec kind does not match the experiment");
  const auto grid = build_grid(spec);
  const StopRule base_stop =
      spec.stop ? *spec.stop
      : spec.kind == ExperimentKind::Relaxation
          ? StopRule::origin_occupied()
          : StopRule::max_cluster_diameter(0);
  const BoundaryCondition bc =
      spec.boundary.value_or(BoundaryCondition::empty());
  const ProcessVariant variant = spec.variant.value_or(ProcessVariant::Full);
  const EngineFn engine = engine_fn(spec.engine);
  const std::string observable = primary_observable(spec);

  auto rows = fan_out(
      spec, 1,
      [&](std::size_t bi, std::uint64_t seed, ExperimentRow* out) {
        const GridPoint& g = grid[bi];
        const GraphicalField field(seed, g.box);
        const Trajectory traj =
            engine(g.box, g.params, bc, variant, Configuration(g.box), field,
                   base_stop | StopRule::time_limit(g.horizon),
                   RunOptions{.record_events = false});
        out->observable = observable;
        out->value = traj.final_time;
        out->censored = traj.stop_reason == StopKind::TimeLimit;
      });
  return finalize(spec, std::move(rows));
}

ExperimentResult cluster_bound_experiment(const ExperimentSpec& spec) {
  require_kind(spec, ExperimentKind::ClusterBound);
  const auto grid = build_grid(spec);
  const BoundaryCondition bc =
      spec.boundary.value_or(BoundaryCondition::empty());
  const ProcessVariant variant = spec.variant.value_or(ProcessVariant::Full);
  const EngineFn engine = engine_fn(spec.engine);

  auto rows = fan_out(
      spec, 2,
      [&](std::size_t bi, std::uint64_t seed, ExperimentRow* out) {
        const GridPoint& g = grid[bi];
        const GraphicalField field(seed, g.box);
        const Trajectory traj =
            engine(g.box, g.params, bc, variant, Configuration(g.box), field,
                   StopRule::time_limit(g.horizon),
                   RunOptions{.record_events = false});
        const auto diam =
            static_cast<double>(max_cluster_diameter(traj.final_config));
        out[0].observable = "max_diameter";
        out[0].value = diam;
        out[1].observable = "exceeds_threshold";
        out[1].value = diam > g.threshold ? 1.0 : 0.0;
      });
  return finalize(spec, std::move(rows));
}

ExperimentResult crossing_experiment(const ExperimentSpec& spec) {
  require_kind(spec, ExperimentKind::Crossing);
  const auto grid = build_grid(spec);
  const BoundaryCondition bc = spec.boundary.value_or(
      BoundaryCondition::floor(spec.params.dimension - 1));
  const int axis = bc.kind() == BoundaryCondition::Kind::Floor ||
                           bc.kind() == BoundaryCondition::Kind::Sandwich
                       ? bc.axis()
                       : spec.params.dimension - 1;
  const ProcessVariant variant =
      spec.variant.value_or(ProcessVariant::NonNucleating);
  const EngineFn engine = engine_fn(spec.engine);

  auto rows = fan_out(
      spec, 2,
      [&](std::size_t bi, std::uint64_t seed, ExperimentRow* out) {
        const GridPoint& g = grid[bi];
        const GraphicalField field(seed, g.box);
        const Trajectory traj =
            engine(g.box, g.params, bc, variant, Configuration(g.box), field,
                   StopRule::crossed(axis) | StopRule::time_limit(g.horizon),
                   RunOptions{.record_events = false});
        out[0].observable = "crossed";
        out[0].value = traj.stop_reason == StopKind::Crossed ? 1.0 : 0.0;
        out[1].observable = "void";
        out[1].value = traj.final_config.empty() ? 1.0 : 0.0;
      });
  return finalize(spec, std::move(rows));
}

ExperimentResult growth_speed_experiment(const ExperimentSpec& spec) {
  require_kind(spec, ExperimentKind::GrowthSpeed);
  const auto grid = build_grid(spec);
  const BoundaryCondition bc =
      spec.boundary.value_or(BoundaryCondition::empty());
  const ProcessVariant variant =
      spec.variant.value_or(ProcessVariant::NonNucleating);
  const EngineFn engine = engine_fn(spec.engine);
  const auto& ladder = spec.diameter_ladder;
  std::vector<std::string> names;
  names.reserve(ladder.size());
  for (const auto k : ladder)
    names.push_back("time_to_diameter_" + std::to_string(k));

  auto rows = fan_out(
      spec, ladder.size(),
      [&](std::size_t bi, std::uint64_t seed, ExperimentRow* out) {
        const GridPoint& g = grid[bi];
        const GraphicalField field(seed, g.box);
        Coord center(g.box.dimension());
        for (int a = 0; a < g.box.dimension(); ++a)
          center[a] = g.box.offset[a] + g.box.sides[a] / 2;
        Configuration initial(g.box);
        initial.set(center);
        const Trajectory traj =
            engine(g.box, g.params, bc, variant, initial, field,
                   StopRule::max_cluster_diameter(ladder.back()) |
                       StopRule::time_limit(g.horizon),
                   RunOptions{.record_events = true});

        // First-passage times of the maximal cluster diameter, replayed
        // from the event log.
        detail::BBoxForest forest(g.box);
        forest.activate(g.box.index_of(center), center);
        std::int64_t best = 0;
        std::size_t next = 0;
        const auto flush = [&](double time) {
          for (; next < ladder.size() && ladder[next] <= best; ++next) {
            out[next].observable = names[next];
            out[next].value = time;
          }
        };
        flush(0.0);
        for (const Event& e : traj.events) {
          const Coord coord = g.box.coord_of(e.site);
          forest.activate(e.site, coord);
          std::uint64_t root = e.site;
          for (const Coord& nb : neighbors(g.box, coord)) {
            const std::uint64_t ni = g.box.index_of(nb);
            if (forest.active(ni)) root = forest.unite(root, ni);
          }
          best = std::max(best, forest.diameter(root));
          flush(e.time);
        }
        for (; next < ladder.size(); ++next) {
          out[next].observable = names[next];
          out[next].value = g.horizon;
          out[next].censored = true;
        }
      });
  return finalize(spec, std::move(rows));
}

ExperimentResult domination_experiment(const ExperimentSpec& spec) {
  require_kind(spec, ExperimentKind::Domination);
  const auto grid = build_grid(spec);
  const BoundaryCondition bc =
      spec.boundary.value_or(BoundaryCondition::empty());
  const ProcessVariant variant = spec.variant.value_or(ProcessVariant::Full);
  const EngineFn engine = engine_fn(spec.engine);

  auto rows = fan_out(
      spec, 2,
      [&](std::size_t bi, std::uint64_t seed, ExperimentRow* out) {
        const GridPoint& g = grid[bi];
        const GraphicalField field(seed, g.box);
        const Configuration snapshot =
            bernoulli_snapshot(field, g.params, 0, g.horizon);
        const DominationEnvelopes env =
            domination_pipeline(snapshot, g.dilation);
        const Trajectory traj =
            engine(g.box, g.params, bc, variant, Configuration(g.box), field,
                   StopRule::time_limit(g.horizon),
                   RunOptions{.record_events = false});
        out[0].observable = "snapshot_in_inner";
        out[0].value = contains(snapshot, env.inner) ? 1.0 : 0.0;
        out[1].observable = "config_in_outer";
        out[1].value = contains(traj.final_config, env.outer) ? 1.0 : 0.0;
      });
  return finalize(spec, std::move(rows));
}

ExperimentResult run_experiment(const ExperimentSpec& spec) {
  switch (spec.kind) {
    case ExperimentKind::Relaxation:
    case ExperimentKind::NucleationLaw:
      return measure_relaxation(spec);
    case ExperimentKind::ClusterBound:
      return cluster_bound_experiment(spec);
    case ExperimentKind::Crossing:
      return crossing_experiment(spec);
    case ExperimentKind::GrowthSpeed:
      return growth_speed_experiment(spec);
    case ExperimentKind::Domination:
      return domination_experiment(spec);
  }
  throw std::logic_error("unknown experiment kind");
}

FitResult fit_exponent(const ExperimentResult& result,
                       const std::string& observable) {
  std::map<double, std::vector<double>> by_beta;
  for (const ExperimentRow& row : result.rows)
    if (!row.censored && row.observable == observable)
      by_beta[row.beta].push_back(row.value);
  if (by_beta.size() < 3)
    throw std::domain_error("need at least 3 uncensored beta points");

  std::vector<double> xs, ys;
  for (auto& [beta, values] : by_beta) {
    const double med = median_of(std::move(values));
    if (!(med > 0))
      throw std::domain_error("medians must be positive for the log fit");
    xs.push_back(beta);
    ys.push_back(std::log(med));
  }

  const auto n = static_cast<double>(xs.size());
  double xbar = 0, ybar = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    xbar += xs[i];
    ybar += ys[i];
  }
  xbar /= n;
  ybar /= n;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - xbar) * (xs[i] - xbar);
    sxy += (xs[i] - xbar) * (ys[i] - ybar);
  }

  FitResult fit;
  fit.points = static_cast<int>(xs.size());
  fit.slope = sxy / sxx;
  fit.intercept = ybar - fit.slope * xbar;
  double rss = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double r = ys[i] - fit.intercept - fit.slope * xs[i];
    rss += r * r;
  }
  fit.slope_stderr = std::sqrt(rss / (n - 2.0) / sxx);
  return fit;
}

FitResult fit_exponent(const ExperimentResult& result) {
  return fit_exponent(result, primary_observable(result.spec));
}

namespace {

void append_double(std::string& out, double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  out += buf;
}

using nlohmann::ordered_json;

const char* boundary_kind_name(BoundaryCondition::Kind kind) {
  switch (kind) {
    case BoundaryCondition::Kind::Empty:
      return "empty";
    case BoundaryCondition::Kind::Floor:
      return "floor";
    case BoundaryCondition::Kind::Sandwich:
      return "sandwich";
    case BoundaryCondition::Kind::External:
      return "external";
  }
  return "?";
}

const char* stop_kind_name(StopKind kind) {
  switch (kind) {
    case StopKind::OriginOccupied:
      return "origin_occupied";
    case StopKind::SiteOccupied:
      return "site_occupied";
    case StopKind::BoxFull:
      return "box_full";
    case StopKind::MaxClusterDiameter:
      return "max_cluster_diameter";
    case StopKind::Crossed:
      return "crossed";
    case StopKind::TimeLimit:
      return "time_limit";
  }
  return "?";
}

ordered_json stop_to_json(const StopRule& stop) {
  ordered_json atoms = ordered_json::array();
  for (const auto& atom : stop.atoms()) {
    ordered_json a;
    a["kind"] = stop_kind_name(atom.kind);
    switch (atom.kind) {
      case StopKind::SiteOccupied:
        a["site"] = atom.site;
        break;
      case StopKind::MaxClusterDiameter:
        a["threshold"] = atom.threshold;
        break;
      case StopKind::Crossed:
        a["axis"] = atom.axis;
        break;
      case StopKind::TimeLimit:
        a["limit"] = atom.limit;
        break;
      default:
        break;
    }
    atoms.push_back(std::move(a));
  }
  return atoms;
}

ordered_json spec_to_json(const ExperimentSpec& spec) {
  ordered_json j;
  j["kind"] = kind_name(spec.kind);
  j["dimension"] = spec.params.dimension;
  j["gammas"] = spec.params.gammas;
  j["rate_at_d"] =
      spec.params.rate_at_d == RateAtD::One ? "one" : "gamma_zero";
  j["beta_grid"] = spec.beta_grid;
  if (spec.sides.empty())
    j["volume_exponent"] = spec.volume_exponent;
  else
    j["sides"] = spec.sides;
  if (spec.boundary)
    j["boundary"] = {{"kind", boundary_kind_name(spec.boundary->kind())},
                     {"axis", spec.boundary->axis()}};
  if (spec.variant)
    j["variant"] = *spec.variant == ProcessVariant::NonNucleating
                       ? "non-nucleating"
                       : "full";
  j["trials"] = spec.trials;
  j["base_seed"] = spec.base_seed;
  j["horizon_exponent"] = spec.horizon_exponent;
  j["engine"] = engine_name(spec.engine);
  j["threads"] = spec.threads;
  if (spec.stop) j["stop"] = stop_to_json(*spec.stop);
  switch (spec.kind) {
    case ExperimentKind::ClusterBound:
      j["threshold_exponent"] = spec.threshold_exponent;
      break;
    case ExperimentKind::GrowthSpeed:
      j["diameter_ladder"] = spec.diameter_ladder;
      break;
    case ExperimentKind::Domination:
      if (spec.dilation_radius > 0)
        j["dilation_radius"] = spec.dilation_radius;
      else
        j["dilation_exponent"] = spec.dilation_exponent;
      break;
    default:
      break;
  }
  return j;
}

}  // namespace

std::string to_csv(const ExperimentResult& result) {
  std::string out = "beta,trial,seed,observable,value,censored\n";
  for (const ExperimentRow& row : result.rows) {
    append_double(out, row.beta);
    out += ',';
    out += std::to_string(row.trial);
    out += ',';
    out += std::to_string(row.seed);
    out += ',';
    out += row.observable;
    out += ',';
    append_double(out, row.value);
    out += ',';
    out += row.censored ? '1' : '0';
    out += '\n';
  }
  return out;
}

std::string to_json(const ExperimentResult& result) {
  ordered_json j;
  j["spec"] = spec_to_json(result.spec);
  if (result.fit) {
    j["fit"] = {{"slope", result.fit->slope},
                {"intercept", result.fit->intercept},
                {"slope_stderr", result.fit->slope_stderr},
                {"points", result.fit->points}};
  } else {
    j["fit"] = nullptr;
  }
  j["summaries"] = ordered_json::array();
  for (const BetaSummary& sum : result.summaries)
    j["summaries"].push_back({{"beta", sum.beta},
                              {"observable", sum.observable},
                              {"count", sum.count},
                              {"censored", sum.censored},
                              {"mean", sum.mean},
                              {"median", sum.median}});
  j["rows"] = ordered_json::array();
  for (const ExperimentRow& row : result.rows)
    j["rows"].push_back({{"beta", row.beta},
                         {"trial", row.trial},
                         {"seed", row.seed},
                         {"observable", row.observable},
                         {"value", row.value},
                         {"censored", row.censored}});
  return j.dump(2) + "\n";
}

const char* kind_name(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::Relaxation:
      return "relaxation";
    case ExperimentKind::NucleationLaw:
      return "nucleation-law";
    case ExperimentKind::ClusterBound:
      return "cluster-bound";
    case ExperimentKind::Crossing:
      return "crossing";
    case ExperimentKind::GrowthSpeed:
      return "growth-speed";
    case ExperimentKind::Domination:
      return "domination";
  }
  return "?";
}

ExperimentKind kind_from_name(const std::string& name) {
  for (const auto kind :
       {ExperimentKind::Relaxation, ExperimentKind::NucleationLaw,
        ExperimentKind::ClusterBound, ExperimentKind::Crossing,
        ExperimentKind::GrowthSpeed, ExperimentKind::Domination})
    if (name == kind_name(kind)) return kind;
  throw std::invalid_argument("unknown experiment kind: " + name);
}

const char* engine_name(EngineKind engine) {
  return engine == EngineKind::Fast ? "fast" : "graphical";
}

EngineKind engine_from_name(const std::string& name) {
  if (name == "graphical") return EngineKind::Graphical;
  if (name == "fast") return EngineKind::Fast;
  throw std::invalid_argument("unknown engine: " + name);
}

}  // namespace nucgrow
