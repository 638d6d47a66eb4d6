#include "qcross/architecture.hpp"

#include <algorithm>
#include <cmath>

#include "qcross/errors.hpp"

namespace qcross {

ScenarioFlags scenario_from_name(const std::string& name) {
  ScenarioFlags f;
  if (name == "none" || name.empty()) return f;
  if (name == "factories5") {
    f.factory_div5 = true;
  } else if (name == "cycle5") {
    f.cycle_div5 = true;
  } else if (name == "perr1e4") {
    f.perr_1e4 = true;
  } else if (name == "combined") {
    f.factory_div5 = f.cycle_div5 = f.perr_1e4 = true;
  } else {
    throw parameter_error("unknown scenario: " + name);
  }
  return f;
}

ArchParams apply_scenario(const ArchParams& base, const ScenarioFlags& flags) {
  ArchParams out = base;
  if (flags.factory_div5) out.factory_footprint /= 5.0;
  if (flags.cycle_div5) out.cycle_us /= 5.0;
  if (flags.perr_1e4) out.p_phys = 1e-4;
  return out;
}

int code_distance(double g_nc, double target_infidelity, const ArchParams& arch) {
  if (!(g_nc >= 1.0)) throw parameter_error("code_distance: g_nc >= 1 required");
  if (!(target_infidelity > 0.0) || !(target_infidelity < 1.0)) {
    throw parameter_error("code_distance: target infidelity in (0, 1) required");
  }
  const double ratio = arch.p_phys / arch.p_th;
  if (!(ratio > 0.0) || !(ratio < 1.0)) {
    throw parameter_error("code_distance: p_phys below threshold required");
  }
  const double d = 2.0 * std::log(target_infidelity / g_nc) / std::log(ratio);
  return std::max(3, static_cast<int>(std::ceil(d)));
}

MachineSize machine_size(int n, std::int64_t ancillas, std::int64_t n_jobs, int d,
                         const ArchParams& arch) {
  if (n < 1 || ancillas < 0 || n_jobs < 0 || d < 3) {
    throw parameter_error("machine_size: positive inputs required");
  }
  MachineSize ms;
  ms.d = d;
  ms.logical_qubits = n + ancillas;
  ms.n_fac = static_cast<std::int64_t>(std::ceil(arch.factories_per_job * static_cast<double>(n_jobs)));
  ms.n_decoders = ms.logical_qubits + 10 * n_jobs;
  ms.physical_qubits = 2.0 * static_cast<double>(d) * d * static_cast<double>(ms.logical_qubits) +
                       static_cast<double>(ms.n_fac) * arch.factory_footprint;
  ms.t_lc_us = static_cast<double>(d) * arch.cycle_us;
  return ms;
}

}  // namespace qcross
