#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "nucgrow/analysis.hpp"
#include "nucgrow/dynamics.hpp"
#include "nucgrow/lattice.hpp"
#include "nucgrow/model.hpp"
#include "nucgrow/random_field.hpp"
#include "support.hpp"

using namespace nucgrow;

namespace {

ModelParams planar_params(double beta, std::vector<double> gammas = {0.0, 1.0, 2.0}) {
  ModelParams p;
  p.dimension = 2;
  p.gammas = std::move(gammas);
  p.beta = beta;
  return p;
}

ModelParams line_params(double beta, std::vector<double> gammas = {0.5, 2.0}) {
  ModelParams p;
  p.dimension = 1;
  p.gammas = std::move(gammas);
  p.beta = beta;
  return p;
}

bool same_trajectory(const Trajectory& a, const Trajectory& b) {
  if (a.events.size() != b.events.size()) return false;
  for (std::size_t i = 0; i < a.events.size(); ++i)
    if (a.events[i].time != b.events[i].time ||
        a.events[i].site != b.events[i].site)
      return false;
  return a.final_config == b.final_config && a.stop_reason == b.stop_reason &&
         a.final_time == b.final_time;
}

void check_event_invariants(const Trajectory& traj,
                            const Configuration& initial) {
  double prev = 0.0;
  Configuration replay = initial;
  for (const Event& e : traj.events) {
    CHECK(e.time > prev);
    CHECK(!replay.test(e.site));  // each site occupied at most once
    replay.set(e.site);
    prev = e.time;
  }
  CHECK(replay == traj.final_config);
}

}  // namespace

TEST_CASE("stop rules reject malformed or unreachable compositions") {
  const BoxRegion region({0, 0}, {5, 5});
  const ModelParams params = planar_params(1.0);
  const GraphicalField field(1, region);
  const Configuration empty(region);
  const auto grow = ProcessVariant::Full;
  const auto frozen = ProcessVariant::NonNucleating;
  const auto bc = BoundaryCondition::empty();

  // Structural defects.
  CHECK_THROWS_AS((void)run_graphical(region, params, bc, grow, empty, field,
                                      StopRule::crossed(2)),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)run_graphical(region, params, bc, grow, empty, field,
                                      StopRule::site_occupied({7, 0})),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)run_graphical(region, params, bc, grow, empty, field,
                                      StopRule::time_limit(-1.0)),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)run_graphical(region, params, bc, grow, empty, field,
                                      StopRule::max_cluster_diameter(-2)),
                  std::invalid_argument);
  const BoxRegion away({3, 3}, {2, 2});
  CHECK_THROWS_AS((void)run_graphical(away, params, bc, grow,
                                      Configuration(away), GraphicalField(1, away),
                                      StopRule::origin_occupied()),
                  std::invalid_argument);

  // Unreachable without a time limit: frozen dynamics cannot occupy.
  CHECK_THROWS_AS((void)run_graphical(region, params, bc, frozen, empty, field,
                                      StopRule::box_full()),
                  std::invalid_argument);
  // A diameter no cluster can reach inside the box.
  CHECK_THROWS_AS((void)run_graphical(region, params, bc, grow, empty, field,
                                      StopRule::max_cluster_diameter(5)),
                  std::invalid_argument);
  // The same clauses become valid once a time limit joins the composition.
  CHECK_NOTHROW((void)run_graphical(region, params, bc, frozen, empty, field,
                                    StopRule::box_full() | StopRule::time_limit(1.0)));
  CHECK_NOTHROW((void)run_graphical(region, params, bc, grow, empty, field,
                                    StopRule::max_cluster_diameter(4)));

  // Occupancy makes the frozen process grow again.
  Configuration seeded(region);
  seeded.set(Coord{2, 2});
  CHECK_NOTHROW((void)run_graphical(region, params, bc, frozen, seeded, field,
                                    StopRule::box_full()));
  CHECK_NOTHROW((void)run_graphical(region, params,
                                    BoundaryCondition::floor(1), frozen, empty,
                                    field, StopRule::box_full()));
}

TEST_CASE("non-nucleating runs from nothing stay empty") {
  const BoxRegion region({0, 0}, {6, 6});
  const ModelParams params = planar_params(1.5);
  const GraphicalField field(7, region);
  const Configuration empty(region);
  const StopRule stop = StopRule::time_limit(9.0);

  for (const auto engine : {run_graphical, run_fast}) {
    const Trajectory traj =
        engine(region, params, BoundaryCondition::empty(),
               ProcessVariant::NonNucleating, empty, field, stop, {});
    CHECK(traj.final_config.empty());
    CHECK(traj.events.empty());
    CHECK(traj.stop_reason == StopKind::TimeLimit);
    CHECK(traj.final_time == 9.0);
  }
}

TEST_CASE("a full initial configuration stops at time zero") {
  const BoxRegion region({0, 0}, {4, 4});
  const ModelParams params = planar_params(1.0);
  const GraphicalField field(3, region);
  const Configuration full = Configuration::full(region);
  const StopRule stop = StopRule::box_full();

  const Trajectory a =
      run_graphical(region, params, BoundaryCondition::empty(),
                    ProcessVariant::Full, full, field, stop, {});
  const Trajectory b = run_fast(region, params, BoundaryCondition::empty(),
                                ProcessVariant::Full, full, field, stop, {});
  for (const Trajectory* t : {&a, &b}) {
    CHECK(t->events.empty());
    CHECK(t->stop_reason == StopKind::BoxFull);
    CHECK(t->final_time == 0.0);
    CHECK(t->arrivals_processed == 0);
    CHECK(t->final_config.is_full());
  }
  CHECK(same_trajectory(a, b));
}

TEST_CASE("an initially satisfied clause wins even when dynamics are frozen") {
  const BoxRegion region({0, 0}, {4, 4});
  Configuration seeded(region);
  seeded.set(Coord{3, 3});
  const GraphicalField field(4, region);

  const Trajectory traj = run_graphical(
      region, planar_params(1.0), BoundaryCondition::empty(),
      ProcessVariant::NonNucleating, seeded, field,
      StopRule::site_occupied({3, 3}), {});
  CHECK(traj.events.empty());
  CHECK(traj.stop_reason == StopKind::SiteOccupied);
  CHECK(traj.final_time == 0.0);

  // First occupation is the zero-threshold diameter clause.
  const Trajectory first = run_graphical(
      region, planar_params(1.0), BoundaryCondition::empty(),
      ProcessVariant::Full, Configuration(region), field,
      StopRule::max_cluster_diameter(0), {});
  CHECK(first.events.size() == 1);
  CHECK(first.stop_reason == StopKind::MaxClusterDiameter);
  CHECK(first.final_time == first.events[0].time);
}

TEST_CASE("singleton occupation law matches the exponential") {
  // One site, no neighbours: occupation happens at the first arrival whose
  // mark clears the nucleation rate, an Exp(c) time.
  ModelParams params = line_params(2.0, {0.5, 1.0});
  const BoxRegion region = BoxRegion::centered_cube(1, 1);
  const double c = rate(params, 0);  // exp(-beta gamma_1) = exp(-2)
  const double t_star = 5.0;
  const double p_star = 1.0 - std::exp(-c * t_star);

  const int trials = 2000;
  int hits = 0;
  for (int i = 0; i < trials; ++i) {
    const GraphicalField field(9000 + i, region);
    const Trajectory traj = run_graphical(
        region, params, BoundaryCondition::empty(), ProcessVariant::Full,
        Configuration(region), field, StopRule::origin_occupied(), {});
    CHECK(traj.stop_reason == StopKind::OriginOccupied);
    if (traj.final_time <= t_star) ++hits;
  }
  const double freq = static_cast<double>(hits) / trials;
  const double se = std::sqrt(p_star * (1.0 - p_star) / trials);
  CHECK(std::abs(freq - p_star) < 3.0 * se);
}

TEST_CASE("zero-dimensional runs work") {
  ModelParams params;
  params.dimension = 0;
  params.gammas = {0.5};
  params.beta = 3.0;
  const BoxRegion point({}, {});
  const GraphicalField field(77, point);

  const Trajectory traj = run_graphical(
      point, params, BoundaryCondition::empty(), ProcessVariant::Full,
      Configuration(point), field, StopRule::origin_occupied(), {});
  CHECK(traj.events.size() == 1);
  CHECK(traj.final_config.is_full());
  CHECK(traj.final_time > 0.0);
}

TEST_CASE("engines are deterministic and respect event invariants") {
  const BoxRegion region({0, 0}, {6, 6});
  const ModelParams params = planar_params(1.0, {0.0, 0.5, 1.0});
  const Configuration empty(region);
  const StopRule stop = StopRule::box_full();

  for (const auto engine : {run_graphical, run_fast}) {
    const GraphicalField field(123, region);
    const Trajectory once = engine(region, params, BoundaryCondition::empty(),
                                   ProcessVariant::Full, empty, field, stop, {});
    const Trajectory again = engine(region, params, BoundaryCondition::empty(),
                                    ProcessVariant::Full, empty, field, stop, {});
    CHECK(same_trajectory(once, again));
    CHECK(once.final_config.is_full());
    CHECK(once.stop_reason == StopKind::BoxFull);
    check_event_invariants(once, empty);

    // Intermediate reconstruction.
    CHECK(configuration_at(once, 0.0) == empty);
    CHECK(configuration_at(once, once.final_time) == once.final_config);
    const double mid = once.events[once.events.size() / 2].time;
    const Configuration at_mid = configuration_at(once, mid);
    CHECK(at_mid.occupied_count() == once.events.size() / 2 + 1);
  }
}

TEST_CASE("fast engine matches the graphical law on relaxation times") {
  const ModelParams params = line_params(3.0);  // gammas 0.5, 2
  const BoxRegion region = BoxRegion::centered_cube(1, 9);
  const int n = 500;

  std::vector<double> exact, fast;
  for (int i = 0; i < n; ++i) {
    const GraphicalField field_a(40000 + i, region);
    exact.push_back(run_graphical(region, params, BoundaryCondition::empty(),
                                  ProcessVariant::Full, Configuration(region),
                                  field_a, StopRule::origin_occupied(), {})
                        .final_time);
    const GraphicalField field_b(80000 + i, region);
    fast.push_back(run_fast(region, params, BoundaryCondition::empty(),
                            ProcessVariant::Full, Configuration(region),
                            field_b, StopRule::origin_occupied(), {})
                       .final_time);
  }
  const double stat = testsupport::ks_two_sample(exact, fast);
  CHECK(stat < testsupport::ks_two_sample_critical(0.01, n, n));
}

TEST_CASE("coupled runs preserve every ordering") {
  const BoxRegion region({0, 0}, {5, 5});
  const ModelParams params = planar_params(1.0);
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<std::uint64_t> pick(0, region.volume() - 1);

  const auto ordered_at_all_times = [](const Trajectory& lo,
                                       const Trajectory& hi) {
    bool ok = true;
    for (const Trajectory* t : {&lo, &hi})
      for (const Event& e : t->events)
        ok = ok && contains(configuration_at(lo, e.time),
                            configuration_at(hi, e.time));
    return ok && contains(lo.final_config, hi.final_config);
  };

  int checked = 0;
  for (int seed = 0; seed < 200; ++seed) {
    const GraphicalField field(500 + seed, region);
    Configuration small(region);
    for (int i = 0; i < 3; ++i) small.set(pick(rng));
    Configuration big = small;
    for (int i = 0; i < 3; ++i) big.set(pick(rng));
    const StopRule stop = StopRule::time_limit(6.0);

    // Ordered initial configurations, same boundary.
    const auto by_initial = run_coupled(
        region, params,
        {{BoundaryCondition::empty(), ProcessVariant::Full, small, stop},
         {BoundaryCondition::empty(), ProcessVariant::Full, big, stop}},
        field);
    CHECK(ordered_at_all_times(by_initial[0], by_initial[1]));

    // Ordered boundaries, same initial.
    const auto by_boundary = run_coupled(
        region, params,
        {{BoundaryCondition::empty(), ProcessVariant::Full, small, stop},
         {BoundaryCondition::floor(1), ProcessVariant::Full, small, stop},
         {BoundaryCondition::sandwich(1), ProcessVariant::Full, small, stop}},
        field);
    CHECK(ordered_at_all_times(by_boundary[0], by_boundary[1]));
    CHECK(ordered_at_all_times(by_boundary[1], by_boundary[2]));

    // The non-nucleating process is dominated by the full one.
    const auto by_variant = run_coupled(
        region, params,
        {{BoundaryCondition::empty(), ProcessVariant::NonNucleating, small, stop},
         {BoundaryCondition::empty(), ProcessVariant::Full, small, stop}},
        field);
    CHECK(ordered_at_all_times(by_variant[0], by_variant[1]));
    checked += static_cast<int>(by_initial[1].events.size());
  }
  CHECK(checked > 200);  // the runs actually move

  // Identical inputs give identical trajectories.
  const GraphicalField field(999, region);
  const CoupledRun run{BoundaryCondition::empty(), ProcessVariant::Full,
                       Configuration(region), StopRule::time_limit(4.0)};
  const auto twins = run_coupled(region, params, {run, run}, field);
  CHECK(same_trajectory(twins[0], twins[1]));

  const Configuration mismatched(BoxRegion({0, 0}, {5, 6}));
  CHECK_THROWS_AS((void)run_coupled(region, params,
                                    {{BoundaryCondition::empty(),
                                      ProcessVariant::Full, mismatched,
                                      StopRule::time_limit(1.0)}},
                                    field),
                  std::domain_error);
}

TEST_CASE("nucleation snapshot brackets the dynamics") {
  const BoxRegion region({0, 0}, {8, 8});
  const ModelParams params = planar_params(1.5);
  const double tau = 3.0;

  for (int seed = 0; seed < 30; ++seed) {
    const GraphicalField field(1300 + seed, region);
    const Trajectory traj = run_graphical(
        region, params, BoundaryCondition::empty(), ProcessVariant::Full,
        Configuration(region), field, StopRule::time_limit(tau), {});
    const Configuration snap = bernoulli_snapshot(field, params, 0, tau);

    // Every snapshot site is occupied by the dynamics at the horizon: its
    // qualifying arrival would succeed at any neighbour count.
    CHECK(contains(snap, traj.final_config));

    // Every nucleation acceptance corresponds to a snapshot site.
    Configuration replay(region);
    for (const Event& e : traj.events) {
      const int n = occupied_neighbor_count(replay, BoundaryCondition::empty(),
                                            region.coord_of(e.site));
      if (n == 0) CHECK(snap.test(e.site));
      replay.set(e.site);
    }
  }
}

TEST_CASE("arrival counts track volume times horizon on frozen runs") {
  const BoxRegion region({0, 0}, {10, 10});
  const ModelParams params = planar_params(1.0);
  const GraphicalField field(55, region);
  const double horizon = 20.0;

  const Trajectory traj = run_graphical(
      region, params, BoundaryCondition::empty(),
      ProcessVariant::NonNucleating, Configuration(region), field,
      StopRule::time_limit(horizon), {});
  const double expected = 100.0 * horizon;
  CHECK(std::abs(static_cast<double>(traj.arrivals_processed) - expected) <
        3.0 * std::sqrt(expected));
}

TEST_CASE("event recording can be disabled without changing the outcome") {
  const BoxRegion region({0, 0}, {5, 5});
  const ModelParams params = planar_params(1.0);
  const GraphicalField field(66, region);
  const StopRule stop = StopRule::box_full();

  const Trajectory logged =
      run_graphical(region, params, BoundaryCondition::empty(),
                    ProcessVariant::Full, Configuration(region), field, stop,
                    RunOptions{.record_events = true});
  const Trajectory bare =
      run_graphical(region, params, BoundaryCondition::empty(),
                    ProcessVariant::Full, Configuration(region), field, stop,
                    RunOptions{.record_events = false});
  CHECK(bare.events.empty());
  CHECK(!bare.events_recorded);
  CHECK(bare.final_config == logged.final_config);
  CHECK(bare.final_time == logged.final_time);
  CHECK_THROWS_AS((void)configuration_at(bare, 1.0), std::logic_error);
}

TEST_CASE("multilayer runs partition into sandwiched slices") {
  const ModelParams params = planar_params(1.0);

  const BoxRegion odd({0, 0}, {6, 5});
  CHECK_THROWS_AS(
      (void)multilayer_run(odd, params, 1, GraphicalField(1, odd), 1.0),
      std::domain_error);
  const BoxRegion region({0, 0}, {6, 4});
  const GraphicalField field(21, region);
  CHECK_THROWS_AS((void)multilayer_run(region, params, 2, field, 1.0),
                  std::domain_error);
  CHECK_THROWS_AS((void)multilayer_run(region, params, 1, field, -1.0),
                  std::domain_error);

  CHECK(multilayer_run(region, params, 1, field, 0.0).empty());

  // The concatenation dominates the floor-boundary non-nucleating process
  // running on the whole region under the same field.
  for (int seed = 0; seed < 50; ++seed) {
    const GraphicalField shared(2200 + seed, region);
    const double tau = 2.0;
    const Configuration multi = multilayer_run(region, params, 1, shared, tau);
    const Trajectory floor = run_graphical(
        region, params, BoundaryCondition::floor(1),
        ProcessVariant::NonNucleating, Configuration(region), shared,
        StopRule::time_limit(tau), {});
    CHECK(contains(floor.final_config, multi));

    // An empty slice rules out crossing along the slice axis.
    bool some_slice_empty = false;
    for (std::int64_t h = 0; h < region.sides[1]; h += 2) {
      bool slice_used = false;
      multi.for_each_occupied([&](std::uint64_t idx) {
        const auto y = region.coord_of(idx)[1];
        if (y == h || y == h + 1) slice_used = true;
      });
      if (!slice_used) some_slice_empty = true;
    }
    if (some_slice_empty) CHECK(!crosses(multi, 1));
  }
}

TEST_CASE("slice void probability follows the closed form") {
  // A single sandwiched slice of base 6: every site keeps one occupied
  // neighbour, so the first occupation is exponential with rate
  // 2 * 6 * c(1).
  const ModelParams params = planar_params(1.0);
  const BoxRegion slice({0, 0}, {6, 2});
  const double tau = 0.5;
  const double p_void = std::exp(-12.0 * rate(params, 1) * tau);

  const int trials = 400;
  int voids = 0;
  for (int i = 0; i < trials; ++i)
    if (multilayer_run(slice, params, 1, GraphicalField(3000 + i, slice), tau)
            .empty())
      ++voids;
  const double freq = static_cast<double>(voids) / trials;
  const double se = std::sqrt(p_void * (1.0 - p_void) / trials);
  CHECK(std::abs(freq - p_void) < 3.0 * se);
}
