#include "qcross/crossover.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "qcross/errors.hpp"
#include "qcross/mathutil.hpp"
#include "qcross/schedule.hpp"

namespace qcross {

double success_prob(int n, double p, const QaoaScalingModel& model) {
  if (n < 1 || p < 1.0) throw parameter_error("success_prob: n, p >= 1 required");
  return std::exp2(-model.a * std::pow(p, -model.b_exp) * n);
}

std::int64_t AaSchedule::total_queries() const {
  std::int64_t total = 0;
  for (const AaStage& st : stages) total += (1 + st.rounds) * st.reps;
  return total;
}

AaSchedule aa_schedule(double P, double delta_fail) {
  if (!(P > 0.0) || !(P <= 1.0)) throw parameter_error("aa_schedule: P in (0, 1] required");
  if (!(delta_fail > 0.0) || !(delta_fail < 1.0)) {
    throw parameter_error("aa_schedule: delta_fail in (0, 1) required");
  }
  AaSchedule sched;
  sched.delta_fail = delta_fail;
  sched.base_rounds = static_cast<std::int64_t>(std::ceil(std::numbers::pi / (4.0 * std::sqrt(P))));
  sched.overhead = static_cast<int>(std::ceil(std::log2(1.0 / delta_fail)));
  std::int64_t budget = sched.query_bound();

  // Direct-measurement stage, then stages whose round counts grow with the
  // halved angle intervals. Later stages get fewer upfront repetitions; the
  // remaining budget is spread back from the deep (cheap-per-success) end.
  const int amp_reps = std::max(1, (sched.overhead + 1) / 2);
  {
    AaStage direct;
    direct.rounds = 0;
    direct.reps = static_cast<int>(std::min<std::int64_t>(sched.overhead, budget));
    budget -= direct.reps;
    sched.stages.push_back(direct);
  }
  for (int stage = 2;; ++stage) {
    const std::int64_t rounds = ((std::int64_t{1} << (stage - 1)) - 1 + 1) / 2;
    const std::int64_t cost = 1 + rounds;
    if (cost > budget) break;
    AaStage st;
    st.rounds = rounds;
    st.reps = static_cast<int>(std::min<std::int64_t>(amp_reps, budget / cost));
    budget -= cost * st.reps;
    sched.stages.push_back(st);
  }
  while (budget > 0) {
    bool placed = false;
    for (std::size_t i = sched.stages.size(); i-- > 0;) {
      const std::int64_t cost = 1 + sched.stages[i].rounds;
      if (cost <= budget) {
        ++sched.stages[i].reps;
        budget -= cost;
        placed = true;
      }
    }
    if (!placed) break;
  }
  return sched;
}

ResourceEstimate quantum_tts(int n, double p, const EngineConfig& config) {
  if (n < 2) throw parameter_error("quantum_tts: n >= 2 required");
  if (p < 1.0) throw parameter_error("quantum_tts: p >= 1 required");

  ResourceEstimate est;
  est.p = p;
  est.n = n;
  est.tau = config.tau;
  est.success = success_prob(n, p, config.scaling);
  const AaSchedule sched = aa_schedule(est.success, config.delta_fail);
  est.base_rounds = sched.base_rounds;
  est.overhead = sched.overhead;

  est.m = std::llround(config.r * n);
  est.c = config.colors.value_or(std::llround(12.0 * config.r));
  est.c = std::min(est.c, est.m);
  if (est.c < 1) throw parameter_error("quantum_tts: empty clause partition");
  est.s = ceil_div(est.m, est.c);

  // T-state quality budget: every arbitrary-angle rotation across the
  // amplified run must fit the target infidelity.
  const double rot_count = (1.0 / std::sqrt(est.success)) * 2.0 * p * static_cast<double>(n + est.m);
  est.eps_T = required_t_infidelity(rot_count, config.target_infidelity, config.scheme,
                                    config.delta_mode);
  est.delta = optimal_delta(est.eps_T, config.scheme, config.delta_mode);
  est.N_T = t_count(est.delta, config.scheme);
  est.n_P = phase_qubits(est.N_T);

  est.lambda = task_lifetime(config.k, est.n_P);
  est.n_jobs = jobs_bound(est.s, est.lambda, config.tau);
  est.ancillas = (13 * static_cast<std::int64_t>(config.k) / 2) * est.n_jobs;

  const int L1 = 4 * ceil_log2_int(config.k) + 4 * ceil_log2_int(est.s) - 1;
  est.eta_eff = std::min(config.eta, L1);
  est.times = component_times(est.c, config.k, n, est.m, est.n_P, config.tau,
                              config.results_oracle ? std::nullopt
                                                    : std::optional<int>(est.eta_eff));
  est.per_round_cycles = 2.0 * p * (est.times.t_mixer + est.times.t_phaser) +
                         est.times.t_oracle + est.times.t_zero;
  est.logical_depth = static_cast<double>(est.base_rounds) * est.per_round_cycles;

  const PhaserNonClifford ph = phaser_nonclifford(est.m, config.k, est.N_T);
  const OracleBudget ob = oracle_budget(est.c, config.k, est.s, est.eta_eff);
  const double per_query_nc =
      2.0 * p * (static_cast<double>(ph.ccz) + static_cast<double>(ph.t) +
                 static_cast<double>(n) * est.N_T) +
      static_cast<double>(ob.R3) + static_cast<double>(n - 1);
  est.nonclifford_total = static_cast<double>(est.base_rounds) * per_query_nc;
  est.g_nc_budget = est.overhead * est.nonclifford_total;

  const int d = code_distance(est.g_nc_budget, config.target_infidelity, config.arch);
  est.machine = machine_size(n, est.ancillas, est.n_jobs, d, config.arch);
  est.t_q_seconds = static_cast<double>(est.overhead) * static_cast<double>(est.base_rounds) *
                    est.per_round_cycles * est.machine.t_lc_us * 1e-6;
  return est;
}

std::int64_t optimal_p(int n, const QaoaScalingModel& model) {
  if (n < 1) throw parameter_error("optimal_p: n >= 1 required");
  const double base = 0.5 * std::numbers::ln2 * model.a * model.b_exp * n;
  const double p = std::pow(base, 1.0 / model.b_exp);
  return std::max<std::int64_t>(1, std::llround(p));
}

CrossoverPoint attach_classical(const ResourceEstimate& est, const EngineConfig& config) {
  CrossoverPoint point;
  point.quantum = est;
  const ClassicalModel& cm = config.classical;
  if (cm.mode == ClassicalMode::power_matched) {
    const PowerBudget budget = cores_from_power(est.machine.n_decoders, cm);
    point.watts = budget.watts;
    point.n_cores = std::max<std::int64_t>(1, budget.cores);
  } else {
    point.n_cores = cm.cores;
    point.watts = static_cast<double>(cm.cores) * cm.watts_per_cpu;
  }
  point.speedup = parallel_speedup(point.n_cores, cm);
  point.t_c_seconds = serial_tts_ns(est.n, cm) / point.speedup * 1e-9;
  return point;
}

CrossoverPoint find_crossover(double p, const EngineConfig& config) {
  double best_ratio = std::numeric_limits<double>::infinity();
  int best_n = -1;
  int infeasible_at = 0;
  for (int n = 20; n <= 600; ++n) {
    CrossoverPoint point;
    try {
      point = attach_classical(quantum_tts(n, p, config), config);
    } catch (const infeasible_error&) {
      // The rotation budget only grows with n; once the T-state target is
      // unreachable the rest of the window is too.
      infeasible_at = n;
      break;
    }
    const double ratio = point.quantum.t_q_seconds / point.t_c_seconds;
    if (ratio <= 1.0) return point;
    if (ratio < best_ratio) {
      best_ratio = ratio;
      best_n = n;
    }
  }
  std::ostringstream msg;
  msg << "find_crossover: no crossover for p=" << p << " in n [20, 600]; closest T_q/T_c = "
      << best_ratio << " at n=" << best_n;
  if (infeasible_at > 0) msg << "; estimates infeasible from n=" << infeasible_at;
  throw search_error(msg.str());
}

SweepKind sweep_kind_from_name(const std::string& name) {
  if (name == "speedup_vs_time") return SweepKind::speedup_vs_time;
  if (name == "tau_tradeoff") return SweepKind::tau_tradeoff;
  if (name == "speed_ratio_vs_n") return SweepKind::speed_ratio_vs_n;
  if (name == "scenario_grid") return SweepKind::scenario_grid;
  throw parameter_error("unknown sweep kind: " + name);
}

std::string SweepTable::to_csv() const {
  std::ostringstream out;
  out.precision(10);
  if (!row_labels.empty()) out << "label,";
  for (std::size_t i = 0; i < columns.size(); ++i) {
    out << columns[i] << (i + 1 < columns.size() ? "," : "\n");
  }
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (!row_labels.empty()) out << row_labels[r] << ",";
    for (std::size_t i = 0; i < rows[r].size(); ++i) {
      out << rows[r][i] << (i + 1 < rows[r].size() ? "," : "\n");
    }
  }
  return out.str();
}

namespace {

constexpr double kSecondsPerHour = 3600.0;

// Layer count whose AA-boosted scaling exponent is 1/rho of the classical one.
double p_for_speed_ratio(double rho, const EngineConfig& config) {
  const double cslope = config.classical.slope;
  const double qcoef = 0.5 * config.scaling.a;  // log2 T_q slope is qcoef * p^-b
  return std::pow(qcoef * rho / cslope, 1.0 / config.scaling.b_exp);
}

SweepTable sweep_speedup_vs_time(const EngineConfig& config) {
  SweepTable table;
  table.columns = {"speed_ratio", "p", "n", "t_q_hours", "t_c_hours"};
  for (double rho = 1.5; rho <= 5.0 + 1e-9; rho += 0.25) {
    const double p = std::max(1.0, std::round(p_for_speed_ratio(rho, config)));
    try {
      const CrossoverPoint pt = find_crossover(p, config);
      table.rows.push_back({rho, p, static_cast<double>(pt.quantum.n),
                            pt.quantum.t_q_seconds / kSecondsPerHour,
                            pt.t_c_seconds / kSecondsPerHour});
    } catch (const search_error&) {
      // outside the searchable window; skip the row
    }
  }
  return table;
}

SweepTable sweep_tau_tradeoff(const EngineConfig& config) {
  SweepTable table;
  table.columns = {"tau", "n", "t_q_hours", "physical_qubits", "n_jobs", "ancillas"};
  for (int tau : {1, 2, 3, 4, 6, 8, 12, 16}) {
    EngineConfig cfg = config;
    cfg.tau = tau;
    const CrossoverPoint pt = find_crossover(config.p, cfg);
    table.rows.push_back({static_cast<double>(tau), static_cast<double>(pt.quantum.n),
                          pt.quantum.t_q_seconds / kSecondsPerHour,
                          pt.quantum.machine.physical_qubits,
                          static_cast<double>(pt.quantum.n_jobs),
                          static_cast<double>(pt.quantum.ancillas)});
  }
  return table;
}

SweepTable sweep_speed_ratio_vs_n(const EngineConfig& config) {
  SweepTable table;
  table.columns = {"target_ratio", "n", "t_q_hours", "t_c_hours", "ratio"};
  for (int n = 20; n <= 600; ++n) {
    const CrossoverPoint pt = attach_classical(quantum_tts(n, config.p, config), config);
    const double ratio = pt.t_c_seconds / pt.quantum.t_q_seconds;
    if (ratio >= 100.0) {
      table.rows.push_back({100.0, static_cast<double>(n),
                            pt.quantum.t_q_seconds / kSecondsPerHour,
                            pt.t_c_seconds / kSecondsPerHour, ratio});
      return table;
    }
  }
  throw search_error("speed_ratio_vs_n: ratio 100 not reached for n <= 600");
}

SweepTable sweep_scenario_grid(const EngineConfig& config) {
  SweepTable table;
  table.columns = {"n", "t_q_hours", "physical_qubits_1e6", "d", "n_cores"};
  const char* scenarios[] = {"none", "factories5", "cycle5", "perr1e4", "combined"};
  for (const std::string lane : {"realistic", "perfect"}) {
    for (const char* scen : scenarios) {
      EngineConfig cfg = config;
      cfg.arch = apply_scenario(config.arch, scenario_from_name(scen));
      if (lane == "realistic") {
        cfg.tau = 2;
        cfg.classical.mode = ClassicalMode::fixed_cores;
      } else {
        cfg.tau = 1;
        cfg.classical.mode = ClassicalMode::perfect;
      }
      const CrossoverPoint pt = find_crossover(config.p, cfg);
      table.row_labels.push_back(lane + "/" + scen);
      table.rows.push_back({static_cast<double>(pt.quantum.n),
                            pt.quantum.t_q_seconds / kSecondsPerHour,
                            pt.quantum.machine.physical_qubits / 1e6,
                            static_cast<double>(pt.quantum.machine.d),
                            static_cast<double>(pt.n_cores)});
    }
  }
  return table;
}

}  // namespace

SweepTable sweep(SweepKind kind, const EngineConfig& config) {
  switch (kind) {
    case SweepKind::speedup_vs_time:
      return sweep_speedup_vs_time(config);
    case SweepKind::tau_tradeoff:
      return sweep_tau_tradeoff(config);
    case SweepKind::speed_ratio_vs_n:
      return sweep_speed_ratio_vs_n(config);
    case SweepKind::scenario_grid:
      return sweep_scenario_grid(config);
  }
  throw parameter_error("sweep: bad kind");
}

}  // namespace qcross
