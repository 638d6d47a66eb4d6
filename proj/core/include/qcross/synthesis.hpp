#pragma once

#include <string>

namespace qcross {

// Cost model for synthesizing one small-angle rotation from T gates:
// N_T(delta) = b*log2(1/delta) + c for synthesis accuracy delta.
struct SynthesisScheme {
  double b;
  double c;
};

SynthesisScheme scheme_b057();  // b=0.57, c=8.83 (default)
SynthesisScheme scheme_b3();    // b=3, c=9.19 (fallback ladder)
SynthesisScheme scheme_from_name(const std::string& name);

double t_count_real(double delta, const SynthesisScheme& scheme);
// Rounded count with one extra T for the final correction.
int t_count(double delta, const SynthesisScheme& scheme);
// Register width of the phase-kickback resource: N_T plus two endpoint qubits.
int phase_qubits(int n_T);

// Infidelity of one synthesized rotation fed by T states of infidelity epsilon,
// synthesized to accuracy delta. Stable for epsilon down to ~1e-20.
double ent_infidelity(double epsilon, double delta, const SynthesisScheme& scheme);

enum class DeltaMode { approx, exact };
DeltaMode delta_mode_from_name(const std::string& name);

// Accuracy delta minimizing ent_infidelity at fixed epsilon.
// approx: closed form sqrt(3*b*epsilon/(8*ln2)). exact: root of the
// stationarity condition, bracketed bisection on log(delta).
double optimal_delta(double epsilon, const SynthesisScheme& scheme,
                     DeltaMode mode = DeltaMode::approx);

// Largest T-state infidelity epsilon such that rot_count rotations, each at its
// optimal delta, keep the accumulated infidelity within target_infidelity.
// Throws infeasible_error if no epsilon >= 1e-20 works.
double required_t_infidelity(double rot_count, double target_infidelity,
                             const SynthesisScheme& scheme,
                             DeltaMode mode = DeltaMode::approx);

}  // namespace qcross
