#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qcross/architecture.hpp"
#include "qcross/classical.hpp"
#include "qcross/gadgets.hpp"
#include "qcross/synthesis.hpp"

namespace qcross {

struct QaoaScalingModel {
  double a = 0.69;
  double b_exp = 0.32;
};

// Per-solution-probability layer success 2^{-a * p^{-b_exp} * n}.
double success_prob(int n, double p, const QaoaScalingModel& model = {});

struct AaStage {
  std::int64_t rounds = 0;  // amplification rounds per repetition; 0 = direct measure
  int reps = 0;
};

struct AaSchedule {
  double delta_fail = 1.0 / 16.0;
  std::int64_t base_rounds = 0;
  int overhead = 0;
  std::vector<AaStage> stages;
  std::int64_t query_bound() const { return base_rounds * overhead; }
  std::int64_t total_queries() const;
};

// Repetition plan over geometrically grown round counts, capped so total
// queries stay within base_rounds * overhead.
AaSchedule aa_schedule(double P, double delta_fail = 1.0 / 16.0);

struct EngineConfig {
  int k = 8;
  double r = 176.0;
  double p = 623.0;  // layer count used by sweeps; point queries pass p explicitly
  double delta_fail = 1.0 / 16.0;
  double target_infidelity = 0.01;
  int tau = 1;
  int eta = 22;
  bool results_oracle = false;  // true: aggregate 4c*log2(km/c) form
  std::optional<std::int64_t> colors;  // override analytic c = 12r
  SynthesisScheme scheme = scheme_b057();
  DeltaMode delta_mode = DeltaMode::approx;
  QaoaScalingModel scaling;
  ArchParams arch;
  ClassicalModel classical;
};

struct ResourceEstimate {
  double p = 0.0;
  int n = 0;
  int tau = 1;
  double success = 0.0;
  std::int64_t base_rounds = 0;
  int overhead = 0;
  std::int64_t m = 0;
  std::int64_t c = 0;
  std::int64_t s = 0;
  int eta_eff = 0;
  double eps_T = 0.0;
  double delta = 0.0;
  int N_T = 0;
  int n_P = 0;
  int lambda = 0;
  std::int64_t n_jobs = 0;
  std::int64_t ancillas = 0;
  ComponentTimes times;
  double per_round_cycles = 0.0;
  double logical_depth = 0.0;
  double nonclifford_total = 0.0;  // per full run, without the repetition overhead
  double g_nc_budget = 0.0;        // with the x overhead factor, sets d
  MachineSize machine;
  double t_q_seconds = 0.0;
};

// Full quantum-side resource chain at one (n, p).
ResourceEstimate quantum_tts(int n, double p, const EngineConfig& config);

// Closed-form layer count minimizing p * 2^{a p^{-b} n / 2}, rounded, >= 1.
std::int64_t optimal_p(int n, const QaoaScalingModel& model = {});

struct CrossoverPoint {
  ResourceEstimate quantum;
  double t_c_seconds = 0.0;
  std::int64_t n_cores = 0;
  double watts = 0.0;
  double speedup = 0.0;
};

// Classical time matched to the estimate (power-coupled when mode demands it).
CrossoverPoint attach_classical(const ResourceEstimate& est, const EngineConfig& config);

// Smallest n in [20, 600] with T_q <= T_c. Throws search_error with the best
// observed gap when no crossover exists in range.
CrossoverPoint find_crossover(double p, const EngineConfig& config);

enum class SweepKind { speedup_vs_time, tau_tradeoff, speed_ratio_vs_n, scenario_grid };
SweepKind sweep_kind_from_name(const std::string& name);

struct SweepTable {
  std::vector<std::string> columns;
  std::vector<std::string> row_labels;  // empty when rows are purely numeric
  std::vector<std::vector<double>> rows;
  std::string to_csv() const;
};

SweepTable sweep(SweepKind kind, const EngineConfig& config);

}  // namespace qcross
