#pragma once

namespace qcross::sim {

struct DepolarizingCheck {
  double closed_form = 0.0;  // (1 - 1/dim^2)(1-p)^n + 1/dim^2
  double simulated = 0.0;    // channel applied to half a maximally entangled pair
  double gap = 0.0;
};

// Entanglement fidelity of n applications of the depolarizing channel on a
// dim-dimensional system, via explicit density-matrix evolution.
DepolarizingCheck depolarizing_fidelity_check(int dim, double p, int n_apps);

struct DistanceCheck {
  double theta = 0.0;
  double d_tilde = 0.0;     // 2|sin(theta/4)|
  double d_numeric = 0.0;   // min over global phase of the operator distance
  double fidelity = 0.0;    // cos^2(theta/2)
  double residual = 0.0;    // fidelity - (1 - d_tilde^2)
  double bound = 0.0;       // theta^4
};

// Phase-optimized distance of diag(1, e^{i theta}) from the identity and the
// fourth-order residual linking it to fidelity.
DistanceCheck distance_fidelity_check(double theta);

}  // namespace qcross::sim
