// Command line front end: single runs, experiment sweeps, fitting, and the
// bootstrap/coupling utilities, all on top of the library's deterministic
// seeding so every invocation is reproducible.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nucgrow/analysis.hpp"
#include "nucgrow/config_file.hpp"
#include "nucgrow/dynamics.hpp"
#include "nucgrow/harness.hpp"
#include "nucgrow/model.hpp"
#include "nucgrow/morphology.hpp"
#include "nucgrow/random_field.hpp"
#include "nucgrow/serialize.hpp"

namespace {

using namespace nucgrow;

std::string read_file_or_stdin(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& data) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << data;
}

BoundaryCondition parse_boundary(const std::string& text, int dim) {
  std::string name = text;
  int axis = dim - 1;
  if (const auto pos = text.find(':'); pos != std::string::npos) {
    name = text.substr(0, pos);
    axis = std::stoi(text.substr(pos + 1));
  }
  if (name == "empty") return BoundaryCondition::empty();
  if (name == "floor") return BoundaryCondition::floor(axis);
  if (name == "sandwich") return BoundaryCondition::sandwich(axis);
  throw std::runtime_error("unknown boundary: " + text +
                           " (use empty, floor[:axis], sandwich[:axis])");
}

ProcessVariant parse_variant(const std::string& text) {
  if (text == "full") return ProcessVariant::Full;
  if (text == "non-nucleating") return ProcessVariant::NonNucleating;
  throw std::runtime_error("unknown variant: " + text);
}

StopRule parse_stop_atom(const std::string& text, int dim) {
  const auto rest = [&](const char* prefix) {
    return text.substr(std::string(prefix).size());
  };
  if (text == "origin") return StopRule::origin_occupied();
  if (text == "full") return StopRule::box_full();
  if (text == "first") return StopRule::max_cluster_diameter(0);
  if (text.rfind("diameter:", 0) == 0)
    return StopRule::max_cluster_diameter(std::stoll(rest("diameter:")));
  if (text.rfind("crossed:", 0) == 0)
    return StopRule::crossed(std::stoi(rest("crossed:")));
  if (text.rfind("site:", 0) == 0) {
    Coord site;
    for (const double v : parse_double_list(rest("site:")))
      site.push_back(static_cast<std::int64_t>(v));
    if (static_cast<int>(site.size()) != dim)
      throw std::runtime_error("stop site needs one coordinate per axis");
    return StopRule::site_occupied(site);
  }
  throw std::runtime_error(
      "unknown stop clause: " + text +
      " (use origin, full, first, diameter:<m>, crossed:<axis>, site:<x,..>)");
}

// Shared model flags. Explicit flags override --config values.
struct ModelOpts {
  std::string config;
  int dim = 0;
  std::vector<double> gammas;
  std::string rate_at_d = "gamma_zero";
  CLI::Option* dim_opt = nullptr;
  CLI::Option* gammas_opt = nullptr;
  CLI::Option* rate_opt = nullptr;
};

void add_model_opts(CLI::App* sub, ModelOpts& m) {
  sub->add_option("--config", m.config,
                  "key = value file with dim, gammas, beta, rate_at_d, seed");
  m.dim_opt = sub->add_option("--dim", m.dim, "lattice dimension (>= 0)");
  m.gammas_opt =
      sub->add_option("--gammas", m.gammas,
                      "activation energies gamma_0..gamma_d, nondecreasing")
          ->delimiter(',');
  m.rate_opt = sub->add_option("--rate-at-d", m.rate_at_d,
                               "rate with exactly d occupied neighbours")
                   ->check(CLI::IsMember({"gamma_zero", "one"}));
}

ModelParams resolve_params(const ModelOpts& m) {
  ModelParams p;
  p.beta = 1.0;  // placeholder; callers override from --beta or the grid
  if (!m.config.empty())
    p = params_from_config(read_file_or_stdin(m.config), {"seed"});
  if (m.dim_opt->count()) p.dimension = m.dim;
  if (m.gammas_opt->count()) p.gammas = m.gammas;
  if (m.rate_opt->count())
    p.rate_at_d = m.rate_at_d == "one" ? RateAtD::One : RateAtD::GammaZero;
  return p;
}

std::uint64_t resolve_seed(const ModelOpts& m, const CLI::Option* seed_opt,
                           std::uint64_t seed) {
  if (seed_opt->count()) return seed;
  if (!m.config.empty())
    if (const auto s = seed_from_config(read_file_or_stdin(m.config)))
      return *s;
  return seed;
}

// Shared experiment flags for the sweep-style subcommands.
struct SweepOpts {
  std::vector<double> grid;
  double beta = 0.0;
  double volume_exponent = 0.0;
  std::vector<std::int64_t> sides;
  double kappa = 0.0;
  std::string boundary;
  std::string variant;
  int trials = 1;
  std::uint64_t seed = 0;
  std::string engine = "graphical";
  int threads = 1;
  std::string out;
  std::string format = "csv";
  CLI::Option* grid_opt = nullptr;
  CLI::Option* beta_opt = nullptr;
  CLI::Option* seed_opt = nullptr;
};

void add_sweep_opts(CLI::App* sub, SweepOpts& s) {
  s.grid_opt = sub->add_option("--beta-grid", s.grid,
                               "inverse temperatures, e.g. 3,4,5")
                   ->delimiter(',');
  s.beta_opt =
      sub->add_option("--beta", s.beta, "single inverse temperature");
  sub->add_option("--L", s.volume_exponent,
                  "box side exponent: side = ceil(exp(beta * L))");
  sub->add_option("--sides", s.sides, "explicit box sides, e.g. 8,8")
      ->delimiter(',');
  sub->add_option("--kappa", s.kappa,
                  "horizon exponent: horizon = exp(beta * kappa)");
  sub->add_option("--boundary", s.boundary,
                  "empty | floor[:axis] | sandwich[:axis]");
  sub->add_option("--variant", s.variant, "full | non-nucleating")
      ->check(CLI::IsMember({"full", "non-nucleating"}));
  sub->add_option("--trials", s.trials, "trials per beta")
      ->check(CLI::PositiveNumber);
  s.seed_opt = sub->add_option("--seed", s.seed, "base seed");
  sub->add_option("--engine", s.engine, "graphical | fast")
      ->check(CLI::IsMember({"graphical", "fast"}));
  sub->add_option("--threads", s.threads, "worker threads")
      ->check(CLI::PositiveNumber);
  sub->add_option("--out", s.out, "write rows here instead of stdout");
  sub->add_option("--format", s.format, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}));
}

ExperimentSpec build_spec(ExperimentKind kind, const ModelOpts& m,
                          const SweepOpts& s) {
  ExperimentSpec spec;
  spec.kind = kind;
  spec.params = resolve_params(m);
  if (s.grid_opt->count())
    spec.beta_grid = s.grid;
  else if (s.beta_opt->count())
    spec.beta_grid = {s.beta};
  else if (!m.config.empty())
    spec.beta_grid = {spec.params.beta};
  else
    throw std::runtime_error("specify --beta-grid, --beta, or --config");
  spec.volume_exponent = s.volume_exponent;
  spec.sides = s.sides;
  if (!s.boundary.empty())
    spec.boundary = parse_boundary(s.boundary, spec.params.dimension);
  if (!s.variant.empty()) spec.variant = parse_variant(s.variant);
  spec.trials = s.trials;
  spec.base_seed = resolve_seed(m, s.seed_opt, s.seed);
  spec.horizon_exponent = s.kappa;
  spec.engine = engine_from_name(s.engine);
  spec.threads = s.threads;
  return spec;
}

// Rows go to --out or stdout; the human summary goes to the other stream.
void emit_result(const ExperimentResult& result, const SweepOpts& s) {
  const std::string data =
      s.format == "json" ? to_json(result) : to_csv(result);
  std::FILE* info = stdout;
  if (!s.out.empty()) {
    write_file(s.out, data);
  } else {
    std::fwrite(data.data(), 1, data.size(), stdout);
    info = stderr;
  }
  for (const BetaSummary& sum : result.summaries)
    std::fprintf(info,
                 "beta=%g %s: count=%d censored=%d median=%.6g mean=%.6g\n",
                 sum.beta, sum.observable.c_str(), sum.count, sum.censored,
                 sum.median, sum.mean);
  if (result.fit)
    std::fprintf(info, "fit %s: slope=%.6g stderr=%.6g intercept=%.6g points=%d\n",
                 primary_observable(result.spec).c_str(), result.fit->slope,
                 result.fit->slope_stderr, result.fit->intercept,
                 result.fit->points);
}

BoxRegion centered_region(const std::vector<std::int64_t>& sides) {
  Coord off(sides.size());
  for (std::size_t a = 0; a < sides.size(); ++a) off[a] = -(sides[a] / 2);
  return BoxRegion(std::move(off), sides);
}

std::vector<ExperimentRow> rows_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) ||
      line.rfind("beta,trial,seed,observable,value,censored", 0) != 0)
    throw std::runtime_error(
        "unrecognized csv header; expected beta,trial,seed,observable,value,censored");
  std::vector<ExperimentRow> rows;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= line.size(); ++i)
      if (i == line.size() || line[i] == ',') {
        fields.push_back(line.substr(start, i - start));
        start = i + 1;
      }
    if (fields.size() != 6)
      throw std::runtime_error("malformed csv row at line " +
                               std::to_string(lineno));
    ExperimentRow row;
    row.beta = std::stod(fields[0]);
    row.trial = std::stoi(fields[1]);
    row.seed = std::stoull(fields[2]);
    row.observable = fields[3];
    row.value = std::stod(fields[4]);
    row.censored = fields[5] == "1";
    rows.push_back(std::move(row));
  }
  return rows;
}

int run_simulate(const ModelOpts& m, const SweepOpts& s,
                 const std::vector<std::string>& stops, double time,
                 bool time_set, const std::string& init, bool print_grid) {
  ModelParams params = resolve_params(m);
  if (s.beta_opt->count())
    params.beta = s.beta;
  else if (m.config.empty())
    throw std::runtime_error("specify --beta or --config");

  Configuration initial;
  BoxRegion region;
  if (!init.empty()) {
    initial = from_text(read_file_or_stdin(init));
    region = initial.region();
  } else if (!s.sides.empty()) {
    region = centered_region(s.sides);
    initial = Configuration(region);
  } else if (s.volume_exponent > 0 || params.dimension == 0) {
    const double side = std::exp(params.beta * s.volume_exponent);
    if (!(side < 1e15))
      throw std::runtime_error("box side overflows; lower --L");
    region = BoxRegion::centered_cube(
        params.dimension,
        std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(side))));
    initial = Configuration(region);
  } else {
    throw std::runtime_error("specify --sides, --L, or --init");
  }

  std::optional<StopRule> stop;
  for (const auto& text : stops) {
    const StopRule atom = parse_stop_atom(text, region.dimension());
    stop = stop ? *stop | atom : atom;
  }
  if (time_set) {
    const StopRule limit = StopRule::time_limit(time);
    stop = stop ? *stop | limit : limit;
  }
  if (!stop) throw std::runtime_error("specify --stop and/or --time");

  const BoundaryCondition bc =
      s.boundary.empty() ? BoundaryCondition::empty()
                         : parse_boundary(s.boundary, region.dimension());
  const ProcessVariant variant =
      s.variant.empty() ? ProcessVariant::Full : parse_variant(s.variant);
  const GraphicalField field(resolve_seed(m, s.seed_opt, s.seed), region);
  const auto engine =
      engine_from_name(s.engine) == EngineKind::Fast ? run_fast : run_graphical;

  const Trajectory traj =
      engine(region, params, bc, variant, initial, field, *stop, {});

  const char* reason = "time_limit";
  switch (traj.stop_reason) {
    case StopKind::OriginOccupied: reason = "origin_occupied"; break;
    case StopKind::SiteOccupied: reason = "site_occupied"; break;
    case StopKind::BoxFull: reason = "box_full"; break;
    case StopKind::MaxClusterDiameter: reason = "max_cluster_diameter"; break;
    case StopKind::Crossed: reason = "crossed"; break;
    case StopKind::TimeLimit: break;
  }
  std::printf("stop=%s time=%.17g events=%zu occupied=%llu/%llu arrivals=%llu\n",
              reason, traj.final_time, traj.events.size(),
              static_cast<unsigned long long>(traj.final_config.occupied_count()),
              static_cast<unsigned long long>(region.volume()),
              static_cast<unsigned long long>(traj.arrivals_processed));
  if (print_grid) std::fputs(to_ascii(traj.final_config).c_str(), stdout);
  if (!s.out.empty()) write_file(s.out, to_text(traj.final_config));
  return 0;
}

int run_fit(const std::string& in, const std::string& observable,
            const std::string& format) {
  ExperimentResult result;
  result.spec.kind = ExperimentKind::Relaxation;
  result.rows = rows_from_csv(read_file_or_stdin(in));
  const FitResult fit = fit_exponent(result, observable);
  if (format == "json")
    std::printf(
        "{\"observable\": \"%s\", \"slope\": %.17g, \"slope_stderr\": %.17g, "
        "\"intercept\": %.17g, \"points\": %d}\n",
        observable.c_str(), fit.slope, fit.slope_stderr, fit.intercept,
        fit.points);
  else
    std::printf("observable=%s slope=%.10g stderr=%.10g intercept=%.10g points=%d\n",
                observable.c_str(), fit.slope, fit.slope_stderr,
                fit.intercept, fit.points);
  return 0;
}

int run_bootstrap(const std::string& in, const std::string& op,
                  std::int64_t radius, const std::string& out) {
  const Configuration config = from_text(read_file_or_stdin(in));
  Configuration result;
  if (op == "closure") {
    result = bootstrap_closure(config);
  } else if (op == "dilate") {
    result = dilate(config, radius);
  } else if (op == "erode") {
    result = erode(config, radius);
  } else {
    throw std::runtime_error("unknown op: " + op +
                             " (use closure, dilate, erode)");
  }
  char summary[160];
  std::snprintf(summary, sizeof summary,
                "sites=%llu clusters=%zu max_diameter=%lld\n",
                static_cast<unsigned long long>(result.occupied_count()),
                connected_clusters(result).size(),
                static_cast<long long>(max_cluster_diameter(result)));
  if (!out.empty()) {
    write_file(out, to_text(result));
    std::fputs(summary, stdout);
  } else {
    std::fputs(to_text(result).c_str(), stdout);
    std::fputs(summary, stderr);
  }
  return 0;
}

int run_couple(const ModelOpts& m, const SweepOpts& s, double time,
               int seeds, double density) {
  ModelParams params = resolve_params(m);
  if (s.beta_opt->count())
    params.beta = s.beta;
  else if (m.config.empty())
    throw std::runtime_error("specify --beta or --config");
  if (s.sides.empty()) throw std::runtime_error("specify --sides");
  const BoxRegion region = centered_region(s.sides);
  const int d = region.dimension();
  if (d < 1) throw std::runtime_error("couple needs --dim >= 1");
  const std::uint64_t base = resolve_seed(m, s.seed_opt, s.seed);
  const StopRule stop = StopRule::time_limit(time);

  // Containment must hold after every event of either trajectory.
  const auto ordered = [](const Trajectory& lo, const Trajectory& hi) {
    for (const Trajectory* t : {&lo, &hi})
      for (const Event& e : t->events)
        if (!contains(configuration_at(lo, e.time),
                      configuration_at(hi, e.time)))
          return false;
    return contains(lo.final_config, hi.final_config);
  };

  int bad_initial = 0, bad_boundary = 0, bad_variant = 0;
  for (int trial = 0; trial < seeds; ++trial) {
    std::mt19937_64 rng(base + static_cast<std::uint64_t>(trial));
    std::bernoulli_distribution occupy(density);
    Configuration small(region);
    for (std::uint64_t i = 0; i < region.volume(); ++i)
      if (occupy(rng)) small.set(i);
    small.set(Coord(d, 0));  // keep the variant ladder nondegenerate
    Configuration big = small;
    for (std::uint64_t i = 0; i < region.volume(); ++i)
      if (occupy(rng)) big.set(i);

    const GraphicalField field(base + static_cast<std::uint64_t>(trial),
                               region);
    const auto empty_bc = BoundaryCondition::empty();
    const auto by_initial = run_coupled(
        region, params,
        {{empty_bc, ProcessVariant::Full, small, stop},
         {empty_bc, ProcessVariant::Full, big, stop}},
        field);
    bad_initial += ordered(by_initial[0], by_initial[1]) ? 0 : 1;

    const auto by_boundary = run_coupled(
        region, params,
        {{empty_bc, ProcessVariant::Full, small, stop},
         {BoundaryCondition::floor(d - 1), ProcessVariant::Full, small, stop},
         {BoundaryCondition::sandwich(d - 1), ProcessVariant::Full, small,
          stop}},
        field);
    bad_boundary += ordered(by_boundary[0], by_boundary[1]) &&
                            ordered(by_boundary[1], by_boundary[2])
                        ? 0
                        : 1;

    const auto by_variant = run_coupled(
        region, params,
        {{empty_bc, ProcessVariant::NonNucleating, small, stop},
         {empty_bc, ProcessVariant::Full, small, stop}},
        field);
    bad_variant += ordered(by_variant[0], by_variant[1]) ? 0 : 1;
  }

  std::printf("initial ladder: %d runs, %d violations\n", seeds, bad_initial);
  std::printf("boundary ladder: %d runs, %d violations\n", seeds,
              bad_boundary);
  std::printf("variant ladder: %d runs, %d violations\n", seeds, bad_variant);
  return bad_initial + bad_boundary + bad_variant ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"nucleation-and-growth lattice model toolkit"};
  app.require_subcommand(1);

  // simulate
  auto* sim = app.add_subcommand("simulate", "run one trajectory");
  ModelOpts sim_model;
  SweepOpts sim_run;
  std::vector<std::string> sim_stops;
  double sim_time = 0.0;
  std::string sim_init;
  bool sim_print = false;
  add_model_opts(sim, sim_model);
  sim_run.beta_opt = sim->add_option("--beta", sim_run.beta,
                                     "inverse temperature");
  sim->add_option("--sides", sim_run.sides, "explicit box sides")
      ->delimiter(',');
  sim->add_option("--L", sim_run.volume_exponent,
                  "box side exponent: side = ceil(exp(beta * L))");
  sim->add_option("--boundary", sim_run.boundary,
                  "empty | floor[:axis] | sandwich[:axis]");
  sim->add_option("--variant", sim_run.variant, "full | non-nucleating")
      ->check(CLI::IsMember({"full", "non-nucleating"}));
  sim_run.seed_opt = sim->add_option("--seed", sim_run.seed, "field seed");
  sim->add_option("--engine", sim_run.engine, "graphical | fast")
      ->check(CLI::IsMember({"graphical", "fast"}));
  sim->add_option("--stop", sim_stops,
                  "stop clause: origin, full, first, diameter:<m>, "
                  "crossed:<axis>, site:<x,..>; repeatable, first one wins");
  auto* sim_time_opt =
      sim->add_option("--time", sim_time, "time limit for the run");
  sim->add_option("--init", sim_init, "initial configuration file");
  sim->add_flag("--print", sim_print, "draw the final configuration (d <= 2)");
  sim->add_option("--out", sim_run.out, "write the final configuration here");

  // sweep
  auto* sweep = app.add_subcommand(
      "sweep", "relaxation-time sweep over a beta grid");
  ModelOpts sweep_model;
  SweepOpts sweep_run;
  std::string sweep_stop = "origin";
  add_model_opts(sweep, sweep_model);
  add_sweep_opts(sweep, sweep_run);
  sweep->add_option("--stop", sweep_stop,
                    "stopping event: origin | full | first")
      ->check(CLI::IsMember({"origin", "full", "first"}));

  // fit
  auto* fit = app.add_subcommand("fit", "least-squares exponent from rows");
  std::string fit_in, fit_observable = "relaxation_time",
                      fit_format = "text";
  fit->add_option("--in", fit_in, "rows csv (default stdin)");
  fit->add_option("--observable", fit_observable, "observable to fit");
  fit->add_option("--format", fit_format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));

  // bootstrap
  auto* boot = app.add_subcommand(
      "bootstrap", "apply closure/dilate/erode to a configuration");
  std::string boot_in, boot_op = "closure", boot_out;
  std::int64_t boot_radius = 2;
  boot->add_option("--in", boot_in, "configuration file (default stdin)");
  boot->add_option("--op", boot_op, "closure | dilate | erode");
  boot->add_option("--l", boot_radius, "radius for dilate/erode");
  boot->add_option("--out", boot_out, "write the result here");

  // couple
  auto* couple = app.add_subcommand(
      "couple", "audit monotonicity of coupled runs (exit 1 on violation)");
  ModelOpts couple_model;
  SweepOpts couple_run;
  double couple_time = 5.0;
  int couple_seeds = 100;
  double couple_density = 0.05;
  add_model_opts(couple, couple_model);
  couple_run.beta_opt =
      couple->add_option("--beta", couple_run.beta, "inverse temperature");
  couple->add_option("--sides", couple_run.sides, "explicit box sides")
      ->delimiter(',');
  couple_run.seed_opt =
      couple->add_option("--seed", couple_run.seed, "base seed");
  couple->add_option("--time", couple_time, "horizon per run");
  couple->add_option("--seeds", couple_seeds, "number of coupled runs")
      ->check(CLI::PositiveNumber);
  couple->add_option("--density", couple_density,
                     "initial occupation density");

  // cross / speed / dominate share the sweep surface
  auto* cross = app.add_subcommand(
      "cross", "crossing and void frequencies at the horizon");
  ModelOpts cross_model;
  SweepOpts cross_run;
  add_model_opts(cross, cross_model);
  add_sweep_opts(cross, cross_run);

  auto* speed = app.add_subcommand(
      "speed", "droplet growth: first-passage times of a diameter ladder");
  ModelOpts speed_model;
  SweepOpts speed_run;
  std::vector<std::int64_t> speed_ladder;
  add_model_opts(speed, speed_model);
  add_sweep_opts(speed, speed_run);
  speed->add_option("--ladder", speed_ladder,
                    "diameter thresholds, strictly increasing")
      ->delimiter(',')
      ->required();

  auto* dominate = app.add_subcommand(
      "dominate", "snapshot envelopes vs the dynamics under one field");
  ModelOpts dom_model;
  SweepOpts dom_run;
  std::int64_t dom_radius = 0;
  double dom_exponent = -1.0;
  add_model_opts(dominate, dom_model);
  add_sweep_opts(dominate, dom_run);
  dominate->add_option("--l", dom_radius, "dilation radius (>= 2)");
  dominate->add_option("--l-exponent", dom_exponent,
                       "dilation radius exponent: max(2, ceil(exp(beta*e)))");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (sim->parsed())
      return run_simulate(sim_model, sim_run, sim_stops, sim_time,
                          sim_time_opt->count() > 0, sim_init, sim_print);
    if (sweep->parsed()) {
      ExperimentSpec spec = build_spec(sweep_stop == "first"
                                           ? ExperimentKind::NucleationLaw
                                           : ExperimentKind::Relaxation,
                                       sweep_model, sweep_run);
      if (sweep_stop == "full") spec.stop = StopRule::box_full();
      emit_result(run_experiment(spec), sweep_run);
      return 0;
    }
    if (fit->parsed()) return run_fit(fit_in, fit_observable, fit_format);
    if (boot->parsed())
      return run_bootstrap(boot_in, boot_op, boot_radius, boot_out);
    if (couple->parsed())
      return run_couple(couple_model, couple_run, couple_time, couple_seeds,
                        couple_density);
    if (cross->parsed()) {
      emit_result(run_experiment(build_spec(ExperimentKind::Crossing,
                                            cross_model, cross_run)),
                  cross_run);
      return 0;
    }
    if (speed->parsed()) {
      ExperimentSpec spec =
          build_spec(ExperimentKind::GrowthSpeed, speed_model, speed_run);
      spec.diameter_ladder = speed_ladder;
      emit_result(run_experiment(spec), speed_run);
      return 0;
    }
    if (dominate->parsed()) {
      ExperimentSpec spec =
          build_spec(ExperimentKind::Domination, dom_model, dom_run);
      spec.dilation_radius = dom_radius;
      spec.dilation_exponent = dom_exponent;
      emit_result(run_experiment(spec), dom_run);
      return 0;
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}
