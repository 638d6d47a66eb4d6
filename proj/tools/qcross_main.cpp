#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qcross/architecture.hpp"
#include "qcross/classical.hpp"
#include "qcross/crossover.hpp"
#include "qcross/errors.hpp"
#include "qcross/gadgets.hpp"
#include "qcross/rng.hpp"
#include "qcross/sat.hpp"
#include "qcross/schedule.hpp"
#include "qcross/sim/fidelity.hpp"
#include "qcross/sim/gadgets_sim.hpp"
#include "qcross/sim/theorem1.hpp"
#include "qcross/synthesis.hpp"
#include "qcross/tables.hpp"

using json = nlohmann::ordered_json;

namespace {

using namespace qcross;

void apply_kv(EngineConfig& cfg, const std::string& key,
              const std::string& value) {
  auto num = [&](double& slot) {
    try {
      slot = std::stod(value);
    } catch (const std::exception&) {
      throw parameter_error("config field '" + key + "': not a number");
    }
  };
  auto integer = [&](auto& slot) {
    try {
      slot = static_cast<std::decay_t<decltype(slot)>>(std::stoll(value));
    } catch (const std::exception&) {
      throw parameter_error("config field '" + key + "': not an integer");
    }
  };
  auto flag = [&](bool& slot) {
    if (value == "1" || value == "true") {
      slot = true;
    } else if (value == "0" || value == "false") {
      slot = false;
    } else {
      throw parameter_error("config field '" + key + "': expected 0/1");
    }
  };
  if (key == "k") {
    integer(cfg.k);
  } else if (key == "r") {
    num(cfg.r);
  } else if (key == "p") {
    num(cfg.p);
  } else if (key == "tau") {
    integer(cfg.tau);
  } else if (key == "eta") {
    integer(cfg.eta);
  } else if (key == "delta_fail") {
    num(cfg.delta_fail);
  } else if (key == "target_infidelity") {
    num(cfg.target_infidelity);
  } else if (key == "results_oracle") {
    flag(cfg.results_oracle);
  } else if (key == "colors") {
    std::int64_t c = 0;
    integer(c);
    cfg.colors = c;
  } else if (key == "scheme") {
    cfg.scheme = scheme_from_name(value);
  } else if (key == "delta_mode") {
    cfg.delta_mode = delta_mode_from_name(value);
  } else if (key == "scenario") {
    cfg.arch = apply_scenario(cfg.arch, scenario_from_name(value));
  } else if (key == "classical") {
    cfg.classical.mode = classical_mode_from_name(value);
  } else if (key == "cores") {
    integer(cfg.classical.cores);
  } else if (key == "p_phys") {
    num(cfg.arch.p_phys);
  } else if (key == "p_th") {
    num(cfg.arch.p_th);
  } else if (key == "cycle_us") {
    num(cfg.arch.cycle_us);
  } else if (key == "factory_footprint") {
    num(cfg.arch.factory_footprint);
  } else if (key == "factories_per_job") {
    num(cfg.arch.factories_per_job);
  } else if (key == "slope") {
    num(cfg.classical.slope);
  } else if (key == "intercept") {
    num(cfg.classical.intercept);
  } else if (key == "watts_per_decoder") {
    num(cfg.classical.watts_per_decoder);
  } else if (key == "watts_per_cpu") {
    num(cfg.classical.watts_per_cpu);
  } else {
    throw parameter_error("unknown config field '" + key + "'");
  }
}

struct Common {
  std::string config_path;
  std::vector<std::string> sets;
  std::string scenario;
  std::string classical;
  std::uint64_t seed = 1;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--config", c.config_path,
                  "config file, one key=value per line");
  cmd->add_option("--set", c.sets, "extra key=value overrides");
  cmd->add_option("--scenario", c.scenario, "hardware scenario")
      ->check(CLI::IsMember(
          {"none", "factories5", "cycle5", "perr1e4", "combined"}));
  cmd->add_option("--classical", c.classical, "classical resource mode")
      ->check(CLI::IsMember({"power", "power_matched", "marenostrum",
                             "fixed_cores", "perfect"}));
  cmd->add_option("--seed", c.seed, "rng seed");
}

EngineConfig build_config(const Common& c) {
  EngineConfig cfg;
  if (!c.config_path.empty()) {
    std::ifstream in(c.config_path);
    if (!in) throw parameter_error("cannot open config " + c.config_path);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      std::size_t hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      std::size_t first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos) continue;
      std::size_t last = line.find_last_not_of(" \t\r");
      std::string body = line.substr(first, last - first + 1);
      std::size_t eq = body.find('=');
      if (eq == std::string::npos) {
        throw parse_error(c.config_path + ":" + std::to_string(line_no) +
                          ": expected key=value");
      }
      apply_kv(cfg, body.substr(0, eq), body.substr(eq + 1));
    }
  }
  for (const std::string& s : c.sets) {
    std::size_t eq = s.find('=');
    if (eq == std::string::npos) {
      throw parameter_error("--set expects key=value, got '" + s + "'");
    }
    apply_kv(cfg, s.substr(0, eq), s.substr(eq + 1));
  }
  if (!c.scenario.empty()) {
    cfg.arch = apply_scenario(cfg.arch, scenario_from_name(c.scenario));
  }
  if (!c.classical.empty()) {
    cfg.classical.mode = classical_mode_from_name(c.classical);
  }
  return cfg;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw parameter_error("cannot write " + path);
  out << text;
}

json machine_json(const MachineSize& m) {
  return json{{"d", m.d},
              {"logical_qubits", m.logical_qubits},
              {"factories", m.n_fac},
              {"decoders", m.n_decoders},
              {"physical_qubits", m.physical_qubits},
              {"logical_cycle_us", m.t_lc_us}};
}

json estimate_json(const ResourceEstimate& e) {
  return json{{"p", e.p},
              {"n", e.n},
              {"tau", e.tau},
              {"success_prob", e.success},
              {"base_rounds", e.base_rounds},
              {"overhead", e.overhead},
              {"m", e.m},
              {"c", e.c},
              {"s", e.s},
              {"eta_eff", e.eta_eff},
              {"eps_t", e.eps_T},
              {"delta", e.delta},
              {"n_t", e.N_T},
              {"n_p", e.n_P},
              {"lambda", e.lambda},
              {"n_jobs", e.n_jobs},
              {"ancillas", e.ancillas},
              {"times",
               json{{"mixer", e.times.t_mixer},
                    {"phaser", e.times.t_phaser},
                    {"oracle", e.times.t_oracle},
                    {"zero", e.times.t_zero}}},
              {"per_round_cycles", e.per_round_cycles},
              {"logical_depth", e.logical_depth},
              {"nonclifford_total", e.nonclifford_total},
              {"g_nc_budget", e.g_nc_budget},
              {"machine", machine_json(e.machine)},
              {"t_q_seconds", e.t_q_seconds},
              {"t_q_hours", e.t_q_seconds / 3600.0}};
}

json point_json(const CrossoverPoint& p) {
  json j = estimate_json(p.quantum);
  j["t_c_seconds"] = p.t_c_seconds;
  j["t_c_hours"] = p.t_c_seconds / 3600.0;
  j["n_cores"] = p.n_cores;
  j["watts"] = p.watts;
  j["speedup"] = p.speedup;
  j["time_ratio"] = p.t_c_seconds / p.quantum.t_q_seconds;
  return j;
}

struct CheckLine {
  std::string name;
  bool pass;
  std::string detail;
};

void gadget_checks(std::vector<CheckLine>& checks, std::uint64_t seed) {
  for (int k = 1; k <= 3; ++k) {
    sim::ZEquivalenceReport r = sim::check_z_equivalence(
        sim::tacu_semantic(k, 0.7), sim::conjunction_diagonal(k, 0.7), seed);
    std::ostringstream d;
    d << "max deviation " << r.max_deviation << " over " << r.branches_checked
      << " branches";
    checks.push_back({"tacu_k" + std::to_string(k), r.pass,
                      r.pass ? d.str() : r.witness});
  }
  bool audit_ok = true;
  std::ostringstream audit_detail;
  for (int k = 1; k <= 16; ++k) {
    sim::AuditReport a = sim::resource_audit(sim::tacu_semantic(k, 0.3));
    if (a.ccz_count != and_tree_ccz(k) || a.max_data_touches != 1) {
      audit_ok = false;
      audit_detail << "k=" << k << " ccz " << a.ccz_count << " expected "
                   << and_tree_ccz(k) << " touches " << a.max_data_touches
                   << "; ";
    }
  }
  checks.push_back({"tacu_audit", audit_ok,
                    audit_ok ? "ccz counts and data touches match for k=1..16"
                             : audit_detail.str()});
  for (int i = 0; i < 2; ++i) {
    SatInstance inst = generate_instance(5, 3, 0.6, seed + 10 + i);
    sim::ZEquivalenceReport r = sim::check_diagonal_action(
        sim::phaser_tiny(inst, 0.9), sim::phaser_diagonal(inst, 0.9), seed);
    checks.push_back({"phaser_instance" + std::to_string(i), r.pass,
                      r.pass ? "deviation " + std::to_string(r.max_deviation)
                             : r.witness});
    sim::ZEquivalenceReport o = sim::check_diagonal_action(
        sim::oracle_tiny(inst), sim::oracle_diagonal(inst), seed);
    checks.push_back({"oracle_instance" + std::to_string(i), o.pass,
                      o.pass ? "deviation " + std::to_string(o.max_deviation)
                             : o.witness});
  }
  sim::ZEquivalenceReport z =
      sim::check_z_equivalence(sim::zero_oracle(4), sim::zero_diagonal(4), seed);
  checks.push_back({"zero_oracle", z.pass,
                    z.pass ? "deviation " + std::to_string(z.max_deviation)
                           : z.witness});
}

void theorem1_checks(std::vector<CheckLine>& checks, std::uint64_t seed) {
  GenerateOptions opts;
  opts.filter_satisfiable = true;
  SatInstance inst = generate_instance(9, 3, 3.0, seed, opts);
  sim::Circuit prep = sim::uniform_prep(inst.n);
  sim::State psi = sim::prep_output(prep);
  double theta =
      std::asin(std::sqrt(static_cast<double>(count_solutions(inst)) /
                          std::pow(2.0, inst.n)));
  bool law_ok = true;
  double law_worst = 0.0;
  for (int m = 0; m <= 10; ++m) {
    double got = sim::grover_amplitude(inst, psi, m);
    double want = std::abs(std::sin((2.0 * m + 1.0) * theta));
    law_worst = std::max(law_worst, std::abs(got - want));
  }
  law_ok = law_worst < 1e-9;
  checks.push_back({"grover_law", law_ok,
                    "max amplitude error " + std::to_string(law_worst)});
  rng draws(seed);
  int runs = 30;
  int hits = 0;
  bool bounded = true;
  for (int run = 0; run < runs; ++run) {
    sim::Theorem1Result r =
        sim::run_theorem1(inst, prep, 1.0 / 16.0, draws.child(run).seed());
    if (r.found) ++hits;
    if (r.queries > r.query_bound) bounded = false;
  }
  bool enough = hits >= runs * 3 / 4;
  std::ostringstream d;
  d << hits << "/" << runs << " runs found a solution, all within budget "
    << (bounded ? "yes" : "no");
  checks.push_back({"staged_search", enough && bounded, d.str()});
}

void fidelity_checks(std::vector<CheckLine>& checks) {
  bool depol_ok = true;
  double worst = 0.0;
  for (int dim : {2, 4}) {
    for (double p : {0.1, 0.5}) {
      sim::DepolarizingCheck c = sim::depolarizing_fidelity_check(dim, p, 4);
      worst = std::max(worst, c.gap);
      if (c.gap > 1e-12) depol_ok = false;
    }
  }
  checks.push_back(
      {"depolarizing", depol_ok, "max closed-form gap " + std::to_string(worst)});
  bool dist_ok = true;
  std::ostringstream d;
  for (double theta : {0.05, 0.2}) {
    sim::DistanceCheck c = sim::distance_fidelity_check(theta);
    if (c.residual > c.bound || c.residual < 0.0 ||
        std::abs(c.d_numeric - c.d_tilde) > 1e-9) {
      dist_ok = false;
    }
    d << "theta " << theta << " residual " << c.residual << " bound " << c.bound
      << "; ";
  }
  checks.push_back({"distance_residual", dist_ok, d.str()});
}

int cmd_verify(const std::string& suite, std::uint64_t seed,
               const std::string& out_path) {
  std::vector<CheckLine> checks;
  if (suite == "all" || suite == "gadgets") gadget_checks(checks, seed);
  if (suite == "all" || suite == "theorem1") theorem1_checks(checks, seed);
  if (suite == "all" || suite == "fidelity") fidelity_checks(checks);
  bool all = true;
  json arr = json::array();
  for (const CheckLine& c : checks) {
    all = all && c.pass;
    arr.push_back(json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  }
  json out{{"suite", suite}, {"checks", arr}, {"all_pass", all}};
  write_text(out_path, out.dump(2) + "\n");
  return all ? 0 : 1;
}

int cmd_report(const EngineConfig& cfg, const std::string& out_dir) {
  GoldenReport rep = evaluate_report(cfg);
  std::string dir = out_dir.empty() ? "." : out_dir;
  std::filesystem::create_directories(dir);
  write_text(dir + "/report.csv", rep.to_csv());
  for (const CellCheck& cell : rep.cells) {
    if (!cell.gated) continue;
    std::cout << (cell.pass ? "pass " : "FAIL ") << cell.table << "/" << cell.row
              << "/" << cell.column << ": computed " << cell.computed
              << " vs golden " << cell.golden << " ["
              << to_string(cell.tol.kind)
              << (cell.tol.kind == TolKind::exact ? "" : " " +
                  std::to_string(cell.tol.value))
              << "]\n";
  }
  std::cout << rep.gated_count << " gated cells, " << rep.failed_count
            << " failures, " << rep.cells.size() - rep.gated_count
            << " informational cells (see " << dir << "/report.csv)\n";
  return rep.failed_count == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"resource estimation and desk-scale verification for the "
               "quantum-classical crossover on random k-SAT"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate a random k-SAT instance");
  int gen_n = 0;
  int gen_k = 8;
  double gen_r = 176.0;
  std::uint64_t gen_seed = 1;
  bool gen_sat = false;
  std::string gen_out;
  gen->add_option("--n", gen_n, "variables")->required();
  gen->add_option("--k", gen_k, "literals per clause");
  gen->add_option("--r", gen_r, "clause ratio m/n");
  gen->add_option("--seed", gen_seed, "rng seed");
  gen->add_flag("--satisfiable", gen_sat,
                "resample until satisfiable (n <= 24)");
  gen->add_option("--output,-o", gen_out, "output file (default stdout)");

  // color
  auto* color = app.add_subcommand(
      "color", "color the clause collision graph and plan dispatch");
  std::string color_in;
  std::string color_strategy = "dsatur";
  int color_tau = 1;
  int color_np = 25;
  std::string color_out;
  std::string color_schedule;
  color->add_option("--input,-i", color_in, "DIMACS file")->required();
  color->add_option("--strategy", color_strategy, "greedy-degree or dsatur")
      ->check(CLI::IsMember({"greedy-degree", "greedy", "dsatur"}));
  color->add_option("--tau", color_tau, "dispatch slowdown factor");
  color->add_option("--n-p", color_np, "phase register width");
  color->add_option("--output,-o", color_out, "summary JSON (default stdout)");
  color->add_option("--schedule-out", color_schedule, "full schedule JSON file");

  // synth
  auto* synth = app.add_subcommand(
      "synth", "rotation synthesis accuracy and T-count");
  std::string synth_scheme = "b0.57";
  std::string synth_mode = "approx";
  double synth_eps = 0.0;
  double synth_rot = 0.0;
  double synth_target = 0.01;
  std::string synth_out;
  synth->add_option("--scheme", synth_scheme, "b0.57 or b3");
  synth->add_option("--delta-mode", synth_mode, "approx or exact");
  synth->add_option("--eps-t", synth_eps, "T-state infidelity");
  synth->add_option("--rotations", synth_rot,
                    "rotation budget (with --target, solves for eps-t)");
  synth->add_option("--target", synth_target, "total infidelity target");
  synth->add_option("--output,-o", synth_out, "output JSON (default stdout)");

  // estimate
  auto* estimate =
      app.add_subcommand("estimate", "resource estimate at one (p, n)");
  double est_p = 623.0;
  int est_n = 0;
  std::string est_out;
  Common est_common;
  estimate->add_option("--p", est_p, "QAOA layer count")->required();
  estimate->add_option("--n", est_n, "variables")->required();
  estimate->add_option("--output,-o", est_out, "output JSON (default stdout)");
  add_common(estimate, est_common);

  // crossover
  auto* crossover =
      app.add_subcommand("crossover", "smallest n with T_q <= T_c");
  double cross_p = 623.0;
  std::string cross_out;
  Common cross_common;
  crossover->add_option("--p", cross_p, "QAOA layer count")->required();
  crossover->add_option("--output,-o", cross_out, "output JSON (default stdout)");
  add_common(crossover, cross_common);

  // sweep
  auto* sweep_cmd = app.add_subcommand("sweep", "figure data as CSV");
  std::string sweep_kind;
  std::string sweep_out;
  Common sweep_common;
  sweep_cmd
      ->add_option("--kind", sweep_kind,
                   "speedup_vs_time, tau_tradeoff, speed_ratio_vs_n, "
                   "scenario_grid")
      ->required()
      ->check(CLI::IsMember({"speedup_vs_time", "tau_tradeoff",
                             "speed_ratio_vs_n", "scenario_grid"}));
  sweep_cmd->add_option("--output,-o", sweep_out, "output CSV (default stdout)");
  add_common(sweep_cmd, sweep_common);

  // verify
  auto* verify = app.add_subcommand("verify", "run the simulator checks");
  std::string verify_suite = "all";
  std::uint64_t verify_seed = 1;
  std::string verify_out;
  verify->add_option("--suite", verify_suite, "all, gadgets, theorem1, fidelity")
      ->check(CLI::IsMember({"all", "gadgets", "theorem1", "fidelity"}));
  verify->add_option("--seed", verify_seed, "rng seed");
  verify->add_option("--output,-o", verify_out, "output JSON (default stdout)");

  // report
  auto* report = app.add_subcommand(
      "report", "recompute the golden tables and diff every cell");
  std::string report_dir = ".";
  Common report_common;
  report->add_option("--output-dir", report_dir, "directory for report.csv");
  add_common(report, report_common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*gen) {
      GenerateOptions opts;
      opts.filter_satisfiable = gen_sat;
      SatInstance inst = generate_instance(gen_n, gen_k, gen_r, gen_seed, opts);
      write_text(gen_out, write_dimacs(inst));
      return 0;
    }
    if (*color) {
      std::ifstream in(color_in);
      if (!in) throw parameter_error("cannot open " + color_in);
      SatInstance inst = read_dimacs(in);
      CollisionGraph graph = build_collision_graph(inst);
      ClausePartition part =
          color_clauses(graph, color_strategy_from_name(color_strategy));
      ClauseSchedule sched = make_schedule(part, inst.k, color_np, color_tau);
      double r = inst.n > 0 ? static_cast<double>(inst.m()) / inst.n : 0.0;
      json out{{"n", inst.n},
               {"m", inst.m()},
               {"k", inst.k},
               {"edges", graph.n_edges()},
               {"mean_degree", graph.mean_degree()},
               {"c", part.c()},
               {"c_over_r", r > 0 ? part.c() / r : 0.0},
               {"s_max", part.s_max()},
               {"lambda", sched.lambda},
               {"tau", sched.tau},
               {"n_jobs", sched.n_jobs},
               {"peak_tasks", sched.plan_peak_tasks()},
               {"last_dispatch_cycle", sched.last_dispatch_cycle()}};
      write_text(color_out, out.dump(2) + "\n");
      if (!color_schedule.empty()) write_text(color_schedule, sched.to_json());
      return 0;
    }
    if (*synth) {
      SynthesisScheme scheme = scheme_from_name(synth_scheme);
      DeltaMode mode = delta_mode_from_name(synth_mode);
      double eps = synth_eps;
      json out;
      if (eps <= 0.0) {
        if (synth_rot <= 0.0) {
          throw parameter_error("give --eps-t or a positive --rotations");
        }
        eps = required_t_infidelity(synth_rot, synth_target, scheme, mode);
        out["rotations"] = synth_rot;
        out["target_infidelity"] = synth_target;
      }
      double delta = optimal_delta(eps, scheme, mode);
      int n_t = t_count(delta, scheme);
      out["scheme_b"] = scheme.b;
      out["scheme_c"] = scheme.c;
      out["eps_t"] = eps;
      out["delta"] = delta;
      out["n_t"] = n_t;
      out["n_p"] = phase_qubits(n_t);
      out["rotation_infidelity"] = ent_infidelity(eps, delta, scheme);
      write_text(synth_out, out.dump(2) + "\n");
      return 0;
    }
    if (*estimate) {
      EngineConfig cfg = build_config(est_common);
      ResourceEstimate est = quantum_tts(est_n, est_p, cfg);
      CrossoverPoint pt = attach_classical(est, cfg);
      write_text(est_out, point_json(pt).dump(2) + "\n");
      return 0;
    }
    if (*crossover) {
      EngineConfig cfg = build_config(cross_common);
      CrossoverPoint pt = find_crossover(cross_p, cfg);
      write_text(cross_out, point_json(pt).dump(2) + "\n");
      return 0;
    }
    if (*sweep_cmd) {
      EngineConfig cfg = build_config(sweep_common);
      SweepTable table = sweep(sweep_kind_from_name(sweep_kind), cfg);
      write_text(sweep_out, table.to_csv());
      return 0;
    }
    if (*verify) {
      return cmd_verify(verify_suite, verify_seed, verify_out);
    }
    if (*report) {
      EngineConfig cfg = build_config(report_common);
      return cmd_report(cfg, report_dir);
    }
  } catch (const parameter_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
