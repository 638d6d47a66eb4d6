#pragma once

#include <cstdint>
#include <string>

namespace qcross {

enum class ClassicalMode { power_matched, fixed_cores, perfect };
ClassicalMode classical_mode_from_name(const std::string& name);
std::string to_string(ClassicalMode mode);

struct ClassicalModel {
  double slope = 0.176;        // log2(ns) per variable
  double intercept = 19.369;   // log2(ns)
  double slope_ci = 0.011;     // 90% CI half-widths of the fit
  double intercept_ci = 0.657;
  double lambda = 9.8e-4;      // shifted-exponential rate of per-trial runtime
  double x0 = 6.8;             // runtime shift
  double watts_per_cpu = 280.0 / 48.0;
  double watts_per_decoder = 0.008;
  ClassicalMode mode = ClassicalMode::power_matched;
  std::int64_t cores = 725760;  // used by fixed_cores / perfect (MareNostrum 5)
};

// Median solver time-to-solution on one core, in nanoseconds.
double serial_tts_ns(int n, const ClassicalModel& model);

struct PowerBudget {
  double watts = 0.0;
  std::int64_t cores = 0;
};

// Cores affordable at the power drawn by the quantum machine's decoders.
PowerBudget cores_from_power(std::int64_t n_decoders, const ClassicalModel& model);

// Expected speedup from running independent trials on `cores` cores and taking
// the first finisher, under the shifted-exponential runtime model.
double parallel_speedup(std::int64_t cores, const ClassicalModel& model);

// Parallel time-to-solution in nanoseconds. In power_matched mode `count` is a
// decoder count; otherwise it is ignored and model.cores is used.
double classical_tts_ns(int n, std::int64_t count, const ClassicalModel& model);

}  // namespace qcross
