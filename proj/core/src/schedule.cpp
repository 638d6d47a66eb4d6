#include "qcross/schedule.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include <nlohmann/json.hpp>

#include "qcross/errors.hpp"
#include "qcross/mathutil.hpp"

namespace qcross {

CollisionGraph::CollisionGraph(int n_nodes)
    : n_nodes_(n_nodes),
      words_((static_cast<std::size_t>(n_nodes) + 63) / 64),
      bits_(static_cast<std::size_t>(n_nodes) * ((static_cast<std::size_t>(n_nodes) + 63) / 64), 0) {
  if (n_nodes > 40000) {
    throw capacity_error("CollisionGraph: bit-matrix adjacency capped at 40000 nodes");
  }
}

void CollisionGraph::add_edge(int i, int j) {
  if (i == j) return;
  row(i)[static_cast<std::size_t>(j) >> 6] |= std::uint64_t{1} << (j & 63);
  row(j)[static_cast<std::size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63);
}

int CollisionGraph::degree(int i) const {
  const std::uint64_t* r = row(i);
  int deg = 0;
  for (std::size_t w = 0; w < words_; ++w) deg += std::popcount(r[w]);
  return deg;
}

std::int64_t CollisionGraph::n_edges() const {
  std::int64_t total = 0;
  for (int i = 0; i < n_nodes_; ++i) total += degree(i);
  return total / 2;
}

double CollisionGraph::mean_degree() const {
  if (n_nodes_ == 0) return 0.0;
  return 2.0 * static_cast<double>(n_edges()) / n_nodes_;
}

CollisionGraph build_collision_graph(const SatInstance& inst) {
  CollisionGraph graph(inst.m());
  std::vector<std::vector<int>> occurrences(static_cast<std::size_t>(inst.n));
  for (int j = 0; j < inst.m(); ++j) {
    for (int v : inst.distinct_vars(j)) {
      occurrences[static_cast<std::size_t>(v)].push_back(j);
    }
  }
  for (const std::vector<int>& occ : occurrences) {
    for (std::size_t a = 0; a + 1 < occ.size(); ++a) {
      for (std::size_t b = a + 1; b < occ.size(); ++b) {
        graph.add_edge(occ[a], occ[b]);
      }
    }
  }
  return graph;
}

ColorStrategy color_strategy_from_name(const std::string& name) {
  if (name == "greedy-degree" || name == "greedy") return ColorStrategy::greedy_degree;
  if (name == "dsatur") return ColorStrategy::dsatur;
  throw parameter_error("unknown coloring strategy: " + name);
}

int ClausePartition::s_max() const {
  int best = 0;
  for (const std::vector<int>& part : parts) {
    best = std::max(best, static_cast<int>(part.size()));
  }
  return best;
}

namespace {

ClausePartition finish_partition(std::vector<int> color_of, int n_colors) {
  ClausePartition out;
  out.parts.assign(static_cast<std::size_t>(n_colors), {});
  for (int j = 0; j < static_cast<int>(color_of.size()); ++j) {
    out.parts[static_cast<std::size_t>(color_of[static_cast<std::size_t>(j)])].push_back(j);
  }
  out.color_of = std::move(color_of);
  return out;
}

ClausePartition color_greedy_degree(const CollisionGraph& graph) {
  const int n = graph.n_nodes();
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> degree(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) degree[static_cast<std::size_t>(i)] = graph.degree(i);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return degree[static_cast<std::size_t>(a)] > degree[static_cast<std::size_t>(b)];
  });

  std::vector<int> color_of(static_cast<std::size_t>(n), -1);
  std::vector<int> used_stamp;
  int n_colors = 0;
  for (int node : order) {
    used_stamp.assign(static_cast<std::size_t>(n_colors) + 1, 0);
    graph.for_each_neighbor(node, [&](int nb) {
      const int c = color_of[static_cast<std::size_t>(nb)];
      if (c >= 0 && c < static_cast<int>(used_stamp.size())) used_stamp[static_cast<std::size_t>(c)] = 1;
    });
    int c = 0;
    while (c < static_cast<int>(used_stamp.size()) && used_stamp[static_cast<std::size_t>(c)]) ++c;
    color_of[static_cast<std::size_t>(node)] = c;
    n_colors = std::max(n_colors, c + 1);
  }
  return finish_partition(std::move(color_of), n_colors);
}

class ColorMask {
public:
  ColorMask(int n_nodes, int capacity)
      : words_((static_cast<std::size_t>(capacity) + 63) / 64),
        bits_(static_cast<std::size_t>(n_nodes) * words_, 0) {}

  bool test_and_set(int node, int color) {
    std::uint64_t& w = bits_[static_cast<std::size_t>(node) * words_ + (static_cast<std::size_t>(color) >> 6)];
    const std::uint64_t bit = std::uint64_t{1} << (color & 63);
    if (w & bit) return false;
    w |= bit;
    return true;
  }

  int first_free(int node) const {
    const std::uint64_t* r = bits_.data() + static_cast<std::size_t>(node) * words_;
    for (std::size_t w = 0; w < words_; ++w) {
      if (r[w] != ~std::uint64_t{0}) {
        return static_cast<int>(w * 64) + std::countr_one(r[w]);
      }
    }
    throw capacity_error("dsatur: color capacity exhausted");
  }

private:
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

ClausePartition color_dsatur(const CollisionGraph& graph) {
  const int n = graph.n_nodes();
  if (n == 0) return finish_partition({}, 0);
  // A proper coloring never needs more than max degree + 1 colors.
  int max_deg = 0;
  std::vector<int> degree(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    degree[static_cast<std::size_t>(i)] = graph.degree(i);
    max_deg = std::max(max_deg, degree[static_cast<std::size_t>(i)]);
  }
  ColorMask neighbor_colors(n, max_deg + 2);
  std::vector<int> saturation(static_cast<std::size_t>(n), 0);
  std::vector<int> color_of(static_cast<std::size_t>(n), -1);
  int n_colors = 0;
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int i = 0; i < n; ++i) {
      if (color_of[static_cast<std::size_t>(i)] >= 0) continue;
      if (pick < 0) {
        pick = i;
        continue;
      }
      const int si = saturation[static_cast<std::size_t>(i)];
      const int sp = saturation[static_cast<std::size_t>(pick)];
      if (si > sp || (si == sp && degree[static_cast<std::size_t>(i)] > degree[static_cast<std::size_t>(pick)])) {
        pick = i;
      }
    }
    const int c = neighbor_colors.first_free(pick);
    color_of[static_cast<std::size_t>(pick)] = c;
    n_colors = std::max(n_colors, c + 1);
    graph.for_each_neighbor(pick, [&](int nb) {
      if (color_of[static_cast<std::size_t>(nb)] >= 0) return;
      if (neighbor_colors.test_and_set(nb, c)) ++saturation[static_cast<std::size_t>(nb)];
    });
  }
  return finish_partition(std::move(color_of), n_colors);
}

}  // namespace

ClausePartition color_clauses(const CollisionGraph& graph, ColorStrategy strategy) {
  switch (strategy) {
    case ColorStrategy::greedy_degree:
      return color_greedy_degree(graph);
    case ColorStrategy::dsatur:
      return color_dsatur(graph);
  }
  throw parameter_error("color_clauses: bad strategy");
}

int task_lifetime(int k, int n_P) { return 4 * ceil_log2_int(k) + n_P - 1; }

std::int64_t jobs_bound(std::int64_t s_max, std::int64_t lambda, std::int64_t tau) {
  if (s_max <= 0 || lambda <= 0) return 0;
  return (s_max * lambda + tau - 1) / tau;
}

std::int64_t ClauseSchedule::plan_peak_tasks() const {
  std::vector<std::pair<std::int64_t, int>> starts;  // (cycle, count)
  for (const DispatchCycle& dc : dispatch_cycles) {
    starts.emplace_back(dc.cycle, static_cast<int>(dc.clause_indices.size()));
  }
  std::int64_t peak = 0;
  std::size_t lo = 0;
  std::int64_t active = 0;
  for (std::size_t hi = 0; hi < starts.size(); ++hi) {
    active += starts[hi].second;
    while (starts[lo].first + lambda <= starts[hi].first) {
      active -= starts[lo].second;
      ++lo;
    }
    peak = std::max(peak, active);
  }
  return peak;
}

std::int64_t ClauseSchedule::last_dispatch_cycle() const {
  return dispatch_cycles.empty() ? -1 : dispatch_cycles.back().cycle;
}

ClauseSchedule make_schedule(const ClausePartition& partition, int k, int n_P, int tau) {
  if (tau < 1) throw parameter_error("make_schedule: tau >= 1 required");
  ClauseSchedule sched;
  sched.partition = partition;
  sched.tau = tau;
  sched.lambda = task_lifetime(k, n_P);
  sched.n_jobs = jobs_bound(partition.s_max(), sched.lambda, tau);

  // One part per tau cycles. When tau does not divide lambda the naive plan
  // can exceed the n_jobs bound, so tasks overflow into later tau-slots.
  const std::int64_t window = (sched.lambda + tau - 1) / tau;  // slots one task covers
  const std::int64_t cap = std::max<std::int64_t>(sched.n_jobs, 1);
  std::vector<std::int64_t> started;  // per slot
  auto window_load = [&](std::int64_t slot) {
    std::int64_t load = 0;
    const std::int64_t lo = std::max<std::int64_t>(0, slot - window + 1);
    for (std::int64_t s = lo; s <= slot && s < static_cast<std::int64_t>(started.size()); ++s) {
      load += started[static_cast<std::size_t>(s)];
    }
    return load;
  };
  auto fits_at = [&](std::int64_t slot) {
    for (std::int64_t s = slot; s < slot + window; ++s) {
      if (window_load(s) + 1 > cap) return false;
    }
    return true;
  };
  std::vector<std::vector<int>> slot_tasks;
  auto ensure_slot = [&](std::int64_t slot) {
    if (static_cast<std::int64_t>(slot_tasks.size()) <= slot) {
      slot_tasks.resize(static_cast<std::size_t>(slot) + 1);
      started.resize(static_cast<std::size_t>(slot) + 1, 0);
    }
  };
  // Slots hold clauses of a single part only, so co-dispatched clauses stay
  // variable-disjoint. A part that cannot fully fit under the cap spills its
  // remainder into fresh slots and pushes later parts back.
  std::int64_t slot = 0;
  for (int part = 0; part < partition.c(); ++part) {
    if (slot < part) slot = part;
    const auto& clauses = partition.parts[static_cast<std::size_t>(part)];
    std::size_t next = 0;
    while (next < clauses.size()) {
      ensure_slot(slot);
      if (!fits_at(slot)) {
        ++slot;
        continue;
      }
      slot_tasks[static_cast<std::size_t>(slot)].push_back(
          clauses[next++]);
      ++started[static_cast<std::size_t>(slot)];
    }
    ++slot;
  }
  for (std::int64_t slot = 0; slot < static_cast<std::int64_t>(slot_tasks.size()); ++slot) {
    if (slot_tasks[static_cast<std::size_t>(slot)].empty()) continue;
    ClauseSchedule::DispatchCycle dc;
    dc.cycle = slot * tau;
    dc.clause_indices = std::move(slot_tasks[static_cast<std::size_t>(slot)]);
    sched.dispatch_cycles.push_back(std::move(dc));
  }
  return sched;
}

std::string ClauseSchedule::to_json() const {
  nlohmann::json j;
  j["tau"] = tau;
  j["lambda"] = lambda;
  j["n_jobs"] = n_jobs;
  j["c"] = partition.c();
  j["s_max"] = partition.s_max();
  nlohmann::json cycles = nlohmann::json::array();
  for (const DispatchCycle& dc : dispatch_cycles) {
    cycles.push_back({{"cycle", dc.cycle}, {"clauses", dc.clause_indices}});
  }
  j["cycles"] = std::move(cycles);
  return j.dump(2);
}

}  // namespace qcross
