#pragma once

#include <cstdint>
#include <string>

namespace qcross {

struct ArchParams {
  double p_phys = 1e-3;
  double p_th = 1e-2;
  double cycle_us = 1.0;
  double factory_footprint = 42000.0;
  double factories_per_job = 1.3;
};

struct ScenarioFlags {
  bool factory_div5 = false;
  bool cycle_div5 = false;
  bool perr_1e4 = false;
};

// Names: none, factories5, cycle5, perr1e4, combined.
ScenarioFlags scenario_from_name(const std::string& name);
ArchParams apply_scenario(const ArchParams& base, const ScenarioFlags& flags);

struct MachineSize {
  int d = 0;
  std::int64_t logical_qubits = 0;
  std::int64_t n_fac = 0;
  std::int64_t n_decoders = 0;
  double physical_qubits = 0.0;
  double t_lc_us = 0.0;
};

// Smallest distance keeping g_nc non-Clifford operations within total target
// infidelity, via the standard per-operation logical error scaling.
int code_distance(double g_nc, double target_infidelity, const ArchParams& arch);

MachineSize machine_size(int n, std::int64_t ancillas, std::int64_t n_jobs, int d,
                         const ArchParams& arch);

}  // namespace qcross
