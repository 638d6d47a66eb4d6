#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qcross/sat.hpp"

namespace qcross {

// Clause collision graph: nodes are clauses, edges join clauses sharing a
// variable. Adjacency is a packed bit matrix; clause counts reach ~12k at the
// coloring-band sizes, so lists would be too heavy.
class CollisionGraph {
public:
  CollisionGraph() = default;
  explicit CollisionGraph(int n_nodes);

  int n_nodes() const { return n_nodes_; }
  void add_edge(int i, int j);
  bool has_edge(int i, int j) const {
    return (row(i)[static_cast<std::size_t>(j) >> 6] >> (j & 63)) & 1u;
  }
  int degree(int i) const;
  std::int64_t n_edges() const;
  double mean_degree() const;

  const std::uint64_t* row(int i) const { return bits_.data() + static_cast<std::size_t>(i) * words_; }
  int words_per_row() const { return static_cast<int>(words_); }

  template <typename Fn>
  void for_each_neighbor(int i, Fn&& fn) const {
    const std::uint64_t* r = row(i);
    for (std::size_t w = 0; w < words_; ++w) {
      std::uint64_t bits = r[w];
      while (bits) {
        const int b = __builtin_ctzll(bits);
        bits &= bits - 1;
        fn(static_cast<int>(w * 64) + b);
      }
    }
  }

private:
  std::uint64_t* row(int i) { return bits_.data() + static_cast<std::size_t>(i) * words_; }

  int n_nodes_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

CollisionGraph build_collision_graph(const SatInstance& inst);

enum class ColorStrategy { greedy_degree, dsatur };

ColorStrategy color_strategy_from_name(const std::string& name);

struct ClausePartition {
  std::vector<std::vector<int>> parts;  // indexed by color
  int c() const { return static_cast<int>(parts.size()); }
  int s_max() const;
  std::vector<int> color_of;  // per clause
};

ClausePartition color_clauses(const CollisionGraph& graph,
                              ColorStrategy strategy = ColorStrategy::dsatur);

// Lifetime of one dispatch task in logical cycles.
int task_lifetime(int k, int n_P);

// Peak concurrent tasks for the analytic cost model.
std::int64_t jobs_bound(std::int64_t s_max, std::int64_t lambda, std::int64_t tau);

struct ClauseSchedule {
  ClausePartition partition;
  int tau = 1;
  int lambda = 0;
  std::int64_t n_jobs = 0;
  // Task start cycles, one entry per dispatch cycle actually used.
  struct DispatchCycle {
    std::int64_t cycle = 0;
    std::vector<int> clause_indices;
  };
  std::vector<DispatchCycle> dispatch_cycles;

  std::int64_t plan_peak_tasks() const;
  std::int64_t last_dispatch_cycle() const;
  std::string to_json() const;
};

ClauseSchedule make_schedule(const ClausePartition& partition, int k, int n_P, int tau);

}  // namespace qcross
