#include "qcross/classical.hpp"

#include <cmath>

#include "qcross/errors.hpp"

namespace qcross {

ClassicalMode classical_mode_from_name(const std::string& name) {
  if (name == "power" || name == "power_matched") return ClassicalMode::power_matched;
  if (name == "marenostrum" || name == "fixed_cores") return ClassicalMode::fixed_cores;
  if (name == "perfect") return ClassicalMode::perfect;
  throw parameter_error("unknown classical mode: " + name);
}

std::string to_string(ClassicalMode mode) {
  switch (mode) {
    case ClassicalMode::power_matched: return "power_matched";
    case ClassicalMode::fixed_cores: return "fixed_cores";
    case ClassicalMode::perfect: return "perfect";
  }
  return "?";
}

double serial_tts_ns(int n, const ClassicalModel& model) {
  if (n < 0) throw parameter_error("serial_tts_ns: n >= 0 required");
  return std::exp2(model.slope * n + model.intercept);
}

PowerBudget cores_from_power(std::int64_t n_decoders, const ClassicalModel& model) {
  if (n_decoders < 0) throw parameter_error("cores_from_power: n_decoders >= 0 required");
  PowerBudget out;
  out.watts = model.watts_per_decoder * static_cast<double>(n_decoders);
  out.cores = static_cast<std::int64_t>(std::floor(out.watts / model.watts_per_cpu));
  return out;
}

double parallel_speedup(std::int64_t cores, const ClassicalModel& model) {
  if (cores < 1) throw parameter_error("parallel_speedup: cores >= 1 required");
  if (model.mode == ClassicalMode::perfect) return static_cast<double>(cores);
  const double serial = model.x0 + 1.0 / model.lambda;
  const double parallel = model.x0 + 1.0 / (static_cast<double>(cores) * model.lambda);
  return serial / parallel;
}

double classical_tts_ns(int n, std::int64_t count, const ClassicalModel& model) {
  std::int64_t cores = 0;
  if (model.mode == ClassicalMode::power_matched) {
    cores = cores_from_power(count, model).cores;
  } else {
    cores = model.cores;
  }
  if (cores < 1) cores = 1;
  return serial_tts_ns(n, model) / parallel_speedup(cores, model);
}

}  // namespace qcross
