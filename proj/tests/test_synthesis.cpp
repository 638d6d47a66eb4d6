#include <cmath>
#include <numbers>

#include "doctest.h"
#include "qcross/errors.hpp"
#include "qcross/synthesis.hpp"

using namespace qcross;

TEST_CASE("t_count against pinned accuracies") {
  const SynthesisScheme s = scheme_b057();
  CHECK(t_count(1.41142e-7, s) == 23);
  CHECK(t_count(6.65e-8, s) == 24);
  CHECK(t_count(1.76e-9, s) == 27);
  CHECK(t_count_real(1e-7, s) ==
        doctest::Approx(0.57 * std::log2(1e7) + 8.83).epsilon(1e-12));
  CHECK(phase_qubits(23) == 25);
  CHECK_THROWS_AS(phase_qubits(0), parameter_error);
}

TEST_CASE("scheme lookup by name") {
  CHECK(scheme_from_name("default").b == doctest::Approx(0.57));
  CHECK(scheme_from_name("b0.57").c == doctest::Approx(8.83));
  CHECK(scheme_from_name("fallback").b == doctest::Approx(3.0));
  CHECK(scheme_from_name("b3").c == doctest::Approx(9.19));
  CHECK_THROWS_AS(scheme_from_name("b2"), parameter_error);
}

TEST_CASE("ent_infidelity matches the direct formula at moderate epsilon") {
  const SynthesisScheme s = scheme_b057();
  for (double eps : {1e-6, 1e-9}) {
    for (double delta : {1e-4, 1e-7}) {
      const double n_T = t_count_real(delta, s);
      const double A = std::pow(1.0 - eps, n_T);
      const double direct = 0.75 * (1.0 - A) + 0.25 * (1.0 + 3.0 * A) * delta * delta;
      CHECK(ent_infidelity(eps, delta, s) == doctest::Approx(direct).epsilon(1e-9));
    }
  }
}

TEST_CASE("ent_infidelity keeps the T-state term at tiny epsilon") {
  // The naive (1-eps)^n rounds to 1 below ~1e-16 and the T-state contribution
  // vanishes; the log1p/expm1 form keeps it.
  const SynthesisScheme s = scheme_b057();
  const double v = ent_infidelity(1e-18, 1e-8, s);
  const double naive_floor = 1e-16;  // delta^2 * (1+3)/4 with A == 1
  CHECK(v > naive_floor * 1.05);
  CHECK(v < naive_floor * 2.0);
}

TEST_CASE("approx and exact optimal delta agree within 10 percent") {
  for (const SynthesisScheme& s : {scheme_b057(), scheme_b3()}) {
    for (int i = 0; i <= 10; ++i) {
      const double eps = std::pow(10.0, -16.0 + i);
      const double da = optimal_delta(eps, s, DeltaMode::approx);
      const double de = optimal_delta(eps, s, DeltaMode::exact);
      CHECK(da / de > 0.9);
      CHECK(da / de < 1.1);
    }
  }
}

TEST_CASE("approx optimal delta closed form") {
  const SynthesisScheme s = scheme_b057();
  const double eps = 6.48e-14;
  const double expect = std::sqrt(3.0 * s.b * eps / (8.0 * std::numbers::ln2));
  CHECK(optimal_delta(eps, s) == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("exact optimal delta is a local minimum of ent_infidelity") {
  for (const SynthesisScheme& s : {scheme_b057(), scheme_b3()}) {
    for (double eps : {1e-14, 1e-10, 1e-7}) {
      const double d = optimal_delta(eps, s, DeltaMode::exact);
      const double at = ent_infidelity(eps, d, s);
      CHECK(at <= ent_infidelity(eps, d * 1.05, s));
      CHECK(at <= ent_infidelity(eps, d / 1.05, s));
    }
  }
}

TEST_CASE("required_t_infidelity lands on the target budget") {
  for (const SynthesisScheme& s : {scheme_b057(), scheme_b3()}) {
    for (double rot : {1e3, 1e6, 1e9}) {
      const double eps = required_t_infidelity(rot, 0.01, s);
      const double delta = optimal_delta(eps, s);
      const double per = ent_infidelity(eps, delta, s);
      const double total = -std::expm1(rot * std::log1p(-per));
      CHECK(total <= 0.01);
      CHECK(total > 0.01 * 0.999);
    }
  }
}

TEST_CASE("required_t_infidelity decreases with rotation count") {
  for (const SynthesisScheme& s : {scheme_b057(), scheme_b3()}) {
    double prev = 1.0;
    for (double exp10 = 3.0; exp10 <= 12.0; exp10 += 1.0) {
      const double eps = required_t_infidelity(std::pow(10.0, exp10), 0.01, s);
      CHECK(eps < prev);
      prev = eps;
    }
  }
}

TEST_CASE("synthesis domain errors") {
  const SynthesisScheme s = scheme_b057();
  CHECK_THROWS_AS(t_count_real(0.0, s), parameter_error);
  CHECK_THROWS_AS(t_count_real(1.0, s), parameter_error);
  CHECK_THROWS_AS(ent_infidelity(0.0, 1e-7, s), parameter_error);
  CHECK_THROWS_AS(optimal_delta(1.5, s), parameter_error);
  CHECK_THROWS_AS(required_t_infidelity(0.5, 0.01, s), parameter_error);
  CHECK_THROWS_AS(required_t_infidelity(1e6, 0.0, s), parameter_error);
  CHECK_THROWS_AS(delta_mode_from_name("closed"), parameter_error);
}
