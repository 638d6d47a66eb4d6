#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "qcross/errors.hpp"
#include "qcross/mathutil.hpp"
#include "qcross/sat.hpp"
#include "qcross/schedule.hpp"

using namespace qcross;

namespace {

SatInstance fixed_instance() {
  // Shared variables by hand: clauses 0-1 share v0, 1-2 share v3, 3 disjoint.
  SatInstance inst;
  inst.n = 8;
  inst.k = 2;
  inst.clauses = {{{0, false}, {1, false}},
                  {{0, true}, {3, false}},
                  {{3, true}, {4, false}},
                  {{6, false}, {7, true}}};
  return inst;
}

}  // namespace

TEST_CASE("collision graph edges match shared variables") {
  CollisionGraph g = build_collision_graph(fixed_instance());
  CHECK(g.n_nodes() == 4);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 0));
  CHECK(g.has_edge(1, 2));
  CHECK(!g.has_edge(0, 2));
  CHECK(!g.has_edge(0, 3));
  CHECK(!g.has_edge(1, 3));
  CHECK(!g.has_edge(2, 3));
  CHECK(g.n_edges() == 2);
  CHECK(g.degree(0) == 1);
  CHECK(g.degree(1) == 2);
  CHECK(g.degree(3) == 0);
  CHECK(g.mean_degree() == doctest::Approx(1.0));
}

TEST_CASE("duplicate shared variables give one edge") {
  SatInstance inst;
  inst.n = 4;
  inst.k = 3;
  inst.clauses = {{{0, false}, {0, true}, {1, false}},
                  {{0, false}, {1, true}, {1, false}}};
  CollisionGraph g = build_collision_graph(inst);
  CHECK(g.n_edges() == 1);
  CHECK(g.has_edge(0, 1));
}

TEST_CASE("both strategies yield proper colorings") {
  for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
    SatInstance inst = generate_instance(30, 3, 4.0, seed);
    CollisionGraph g = build_collision_graph(inst);
    int max_deg = 0;
    for (int i = 0; i < g.n_nodes(); ++i) max_deg = std::max(max_deg, g.degree(i));
    for (ColorStrategy strategy :
         {ColorStrategy::greedy_degree, ColorStrategy::dsatur}) {
      ClausePartition part = color_clauses(g, strategy);
      CHECK(part.c() >= 1);
      CHECK(part.c() <= max_deg + 1);
      CHECK(static_cast<int>(part.color_of.size()) == g.n_nodes());
      std::set<int> seen;
      for (int color = 0; color < part.c(); ++color) {
        CHECK(!part.parts[color].empty());
        for (int node : part.parts[color]) {
          CHECK(part.color_of[node] == color);
          CHECK(seen.insert(node).second);
        }
      }
      CHECK(static_cast<int>(seen.size()) == g.n_nodes());
      for (int i = 0; i < g.n_nodes(); ++i) {
        g.for_each_neighbor(i, [&](int j) {
          CHECK(part.color_of[i] != part.color_of[j]);
        });
      }
    }
  }
}

TEST_CASE("coloring is deterministic") {
  SatInstance inst = generate_instance(40, 3, 4.0, 9);
  CollisionGraph g = build_collision_graph(inst);
  ClausePartition a = color_clauses(g, ColorStrategy::dsatur);
  ClausePartition b = color_clauses(g, ColorStrategy::dsatur);
  CHECK(a.color_of == b.color_of);
}

TEST_CASE("strategy names resolve") {
  CHECK(color_strategy_from_name("dsatur") == ColorStrategy::dsatur);
  CHECK(color_strategy_from_name("greedy-degree") == ColorStrategy::greedy_degree);
  CHECK(color_strategy_from_name("greedy") == ColorStrategy::greedy_degree);
  CHECK_THROWS_AS(color_strategy_from_name("rainbow"), parameter_error);
}

TEST_CASE("task lifetime formula") {
  CHECK(task_lifetime(8, 25) == 4 * 3 + 25 - 1);
  CHECK(task_lifetime(8, 29) == 40);
  CHECK(task_lifetime(2, 10) == 4 * 1 + 10 - 1);
  CHECK(task_lifetime(1, 10) == 9);  // ceil(log2 1) = 0
}

TEST_CASE("jobs bound formula") {
  CHECK(jobs_bound(15, 36, 1) == 540);
  CHECK(jobs_bound(15, 36, 2) == 270);
  CHECK(jobs_bound(15, 36, 7) == ceil_div(15 * 36, 7));
  CHECK(jobs_bound(1, 1, 1) == 1);
}

TEST_CASE("schedule dispatches every clause once within the color budget") {
  SatInstance inst = generate_instance(40, 3, 4.0, 17);
  CollisionGraph g = build_collision_graph(inst);
  ClausePartition part = color_clauses(g, ColorStrategy::dsatur);
  for (int tau : {1, 2, 3}) {
    ClauseSchedule sched = make_schedule(part, inst.k, 25, tau);
    CHECK(sched.tau == tau);
    CHECK(sched.lambda == task_lifetime(inst.k, 25));
    CHECK(sched.n_jobs == jobs_bound(part.s_max(), sched.lambda, tau));

    std::set<int> dispatched;
    for (const auto& cycle : sched.dispatch_cycles) {
      CHECK(cycle.cycle % tau == 0);
      for (int clause : cycle.clause_indices) {
        CHECK(dispatched.insert(clause).second);
      }
    }
    CHECK(static_cast<int>(dispatched.size()) == inst.m());

    // With tau dividing lambda, one part goes out per slot and the plan
    // ends at slot c-1. Otherwise spill slots may stretch the tail, but
    // never past double the nominal span.
    if (sched.lambda % tau == 0) {
      CHECK(sched.last_dispatch_cycle() ==
            static_cast<std::int64_t>(part.c() - 1) * tau);
    } else {
      CHECK(sched.last_dispatch_cycle() <
            2 * static_cast<std::int64_t>(part.c()) * tau);
    }
    CHECK(sched.plan_peak_tasks() <= sched.n_jobs);
  }
}

TEST_CASE("conflicting clauses never share a dispatch cycle") {
  SatInstance inst = generate_instance(25, 3, 3.5, 21);
  CollisionGraph g = build_collision_graph(inst);
  ClausePartition part = color_clauses(g, ColorStrategy::dsatur);
  ClauseSchedule sched = make_schedule(part, inst.k, 25, 2);
  for (const auto& cycle : sched.dispatch_cycles) {
    for (std::size_t i = 0; i < cycle.clause_indices.size(); ++i) {
      for (std::size_t j = i + 1; j < cycle.clause_indices.size(); ++j) {
        CHECK(!g.has_edge(cycle.clause_indices[i], cycle.clause_indices[j]));
      }
    }
  }
}

TEST_CASE("schedule rejects bad tau") {
  SatInstance inst = generate_instance(10, 3, 3.0, 1);
  ClausePartition part =
      color_clauses(build_collision_graph(inst), ColorStrategy::dsatur);
  CHECK_THROWS_AS(make_schedule(part, inst.k, 25, 0), parameter_error);
}
