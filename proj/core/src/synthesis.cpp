#include "qcross/synthesis.hpp"

#include <cmath>
#include <numbers>

#include "qcross/errors.hpp"

namespace qcross {

SynthesisScheme scheme_b057() { return {0.57, 8.83}; }
SynthesisScheme scheme_b3() { return {3.0, 9.19}; }

SynthesisScheme scheme_from_name(const std::string& name) {
  if (name == "b0.57" || name == "default") return scheme_b057();
  if (name == "b3" || name == "fallback") return scheme_b3();
  throw parameter_error("unknown synthesis scheme: " + name);
}

namespace {

void check_delta(double delta) {
  if (!(delta > 0.0) || !(delta < 1.0)) {
    throw parameter_error("synthesis accuracy delta must lie in (0, 1)");
  }
}

void check_epsilon(double epsilon) {
  if (!(epsilon > 0.0) || !(epsilon < 1.0)) {
    throw parameter_error("T-state infidelity epsilon must lie in (0, 1)");
  }
}

}  // namespace

double t_count_real(double delta, const SynthesisScheme& scheme) {
  check_delta(delta);
  return scheme.b * std::log2(1.0 / delta) + scheme.c;
}

int t_count(double delta, const SynthesisScheme& scheme) {
  return static_cast<int>(std::ceil(t_count_real(delta, scheme))) + 1;
}

int phase_qubits(int n_T) {
  if (n_T < 1) throw parameter_error("phase_qubits: n_T >= 1 required");
  return n_T + 2;
}

double ent_infidelity(double epsilon, double delta, const SynthesisScheme& scheme) {
  check_epsilon(epsilon);
  const double n_T = t_count_real(delta, scheme);
  // A = (1-eps)^n_T; 1-A via expm1/log1p so tiny eps does not round to zero.
  const double one_minus_A = -std::expm1(n_T * std::log1p(-epsilon));
  const double A = 1.0 - one_minus_A;
  return 0.75 * one_minus_A + 0.25 * (1.0 + 3.0 * A) * delta * delta;
}

DeltaMode delta_mode_from_name(const std::string& name) {
  if (name == "approx") return DeltaMode::approx;
  if (name == "exact") return DeltaMode::exact;
  throw parameter_error("unknown delta mode: " + name);
}

namespace {

// Stationarity of ent_infidelity in delta at fixed epsilon. Positive when
// shrinking delta still pays, negative once extra T cost dominates.
double delta_stationarity(double delta, double epsilon, const SynthesisScheme& scheme) {
  const double n_T = t_count_real(delta, scheme);
  const double A = std::exp(n_T * std::log1p(-epsilon));
  const double d2 = delta * delta;
  return 3.0 * scheme.b * A * (-std::log1p(-epsilon)) * (1.0 - d2) -
         2.0 * d2 * std::numbers::ln2 * (1.0 + 3.0 * A);
}

}  // namespace

double optimal_delta(double epsilon, const SynthesisScheme& scheme, DeltaMode mode) {
  check_epsilon(epsilon);
  if (mode == DeltaMode::approx) {
    return std::sqrt(3.0 * scheme.b * epsilon / (8.0 * std::numbers::ln2));
  }
  double lo = 1e-18;
  double hi = 0.5;
  double g_lo = delta_stationarity(lo, epsilon, scheme);
  double g_hi = delta_stationarity(hi, epsilon, scheme);
  if (g_lo < 0.0) return lo;
  if (g_hi > 0.0) return hi;
  double log_lo = std::log(lo);
  double log_hi = std::log(hi);
  for (int it = 0; it < 200; ++it) {
    const double log_mid = 0.5 * (log_lo + log_hi);
    const double mid = std::exp(log_mid);
    if (delta_stationarity(mid, epsilon, scheme) > 0.0) {
      log_lo = log_mid;
    } else {
      log_hi = log_mid;
    }
    if (log_hi - log_lo < 1e-6) break;
  }
  return std::exp(0.5 * (log_lo + log_hi));
}

double required_t_infidelity(double rot_count, double target_infidelity,
                             const SynthesisScheme& scheme, DeltaMode mode) {
  if (!(rot_count >= 1.0)) throw parameter_error("required_t_infidelity: rot_count >= 1 required");
  if (!(target_infidelity > 0.0) || !(target_infidelity < 1.0)) {
    throw parameter_error("required_t_infidelity: target in (0, 1) required");
  }
  auto total = [&](double epsilon) {
    const double delta = optimal_delta(epsilon, scheme, mode);
    const double per_rot = ent_infidelity(epsilon, delta, scheme);
    // Accumulate rot_count independent rotations, again in log space.
    return -std::expm1(rot_count * std::log1p(-per_rot));
  };
  const double floor_eps = 1e-20;
  double hi = 0.5;
  if (total(hi) <= target_infidelity) return hi;
  if (total(floor_eps) > target_infidelity) {
    throw infeasible_error("required_t_infidelity: target unreachable at epsilon 1e-20");
  }
  double log_lo = std::log(floor_eps);  // feasible
  double log_hi = std::log(hi);        // infeasible
  for (int it = 0; it < 200; ++it) {
    const double log_mid = 0.5 * (log_lo + log_hi);
    if (total(std::exp(log_mid)) <= target_infidelity) {
      log_lo = log_mid;
    } else {
      log_hi = log_mid;
    }
  }
  return std::exp(log_lo);
}

}  // namespace qcross
