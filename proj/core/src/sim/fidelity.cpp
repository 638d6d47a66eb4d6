#include "qcross/sim/fidelity.hpp"

#include <cmath>
#include <complex>
#include <vector>

#include "qcross/errors.hpp"

namespace qcross::sim {

namespace {

using Cd = std::complex<double>;
using Matrix = std::vector<Cd>;  // row major

}  // namespace

DepolarizingCheck depolarizing_fidelity_check(int dim, double p, int n_apps) {
  if (dim < 2 || dim > 8) throw parameter_error("bad subsystem dimension");
  if (p < 0.0 || p > 1.0) throw parameter_error("bad depolarizing strength");
  if (n_apps < 0 || n_apps > 1000) throw parameter_error("bad application count");

  const int big = dim * dim;
  auto at = [&](int a, int b) { return a * dim + b; };
  Matrix rho(static_cast<std::size_t>(big) * big, Cd(0.0, 0.0));
  for (int a = 0; a < dim; ++a) {
    for (int a2 = 0; a2 < dim; ++a2) {
      rho[at(a, a) * big + at(a2, a2)] = Cd(1.0 / dim, 0.0);
    }
  }

  for (int step = 0; step < n_apps; ++step) {
    Matrix partial(static_cast<std::size_t>(dim) * dim, Cd(0.0, 0.0));
    for (int b = 0; b < dim; ++b) {
      for (int b2 = 0; b2 < dim; ++b2) {
        Cd sum(0.0, 0.0);
        for (int a = 0; a < dim; ++a) {
          sum += rho[at(a, b) * big + at(a, b2)];
        }
        partial[b * dim + b2] = sum;
      }
    }
    Matrix next(static_cast<std::size_t>(big) * big, Cd(0.0, 0.0));
    for (int a = 0; a < dim; ++a) {
      for (int b = 0; b < dim; ++b) {
        for (int a2 = 0; a2 < dim; ++a2) {
          for (int b2 = 0; b2 < dim; ++b2) {
            Cd value = (1.0 - p) * rho[at(a, b) * big + at(a2, b2)];
            if (a == a2) value += p / dim * partial[b * dim + b2];
            next[at(a, b) * big + at(a2, b2)] = value;
          }
        }
      }
    }
    rho = std::move(next);
  }

  Cd overlap(0.0, 0.0);
  for (int a = 0; a < dim; ++a) {
    for (int a2 = 0; a2 < dim; ++a2) {
      overlap += rho[at(a, a) * big + at(a2, a2)];
    }
  }
  DepolarizingCheck check;
  check.simulated = overlap.real() / dim;
  double keep = 1.0 - 1.0 / (static_cast<double>(dim) * dim);
  check.closed_form =
      keep * std::pow(1.0 - p, n_apps) + (1.0 - keep);
  check.gap = std::abs(check.simulated - check.closed_form);
  return check;
}

DistanceCheck distance_fidelity_check(double theta) {
  if (theta <= 0.0 || theta > 3.141592653589793) {
    throw parameter_error("angle must lie in (0, pi]");
  }
  DistanceCheck check;
  check.theta = theta;
  check.d_tilde = 2.0 * std::abs(std::sin(theta / 4.0));
  check.fidelity = std::cos(theta / 2.0) * std::cos(theta / 2.0);
  check.bound = theta * theta * theta * theta;

  // Operator distance of diag(1, e^{i theta}) from e^{i alpha} I, minimized
  // over alpha by ternary search; the max of one rising and one falling sine
  // is unimodal on [0, theta].
  auto dist = [&](double alpha) {
    double first = 2.0 * std::abs(std::sin(alpha / 2.0));
    double second = 2.0 * std::abs(std::sin((theta - alpha) / 2.0));
    return std::max(first, second);
  };
  double lo = 0.0, hi = theta;
  for (int iter = 0; iter < 200; ++iter) {
    double m1 = lo + (hi - lo) / 3.0;
    double m2 = hi - (hi - lo) / 3.0;
    if (dist(m1) < dist(m2)) {
      hi = m2;
    } else {
      lo = m1;
    }
  }
  check.d_numeric = dist(0.5 * (lo + hi));
  check.residual = check.fidelity - (1.0 - check.d_tilde * check.d_tilde);
  return check;
}

}  // namespace qcross::sim
