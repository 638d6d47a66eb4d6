#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace qcross {

struct Literal {
  int variable = 0;  // 0-based
  bool negated = false;

  friend bool operator==(const Literal&, const Literal&) = default;
};

using Clause = std::vector<Literal>;
using Assignment = std::vector<std::uint8_t>;  // length n, values 0/1

struct SatInstance {
  int n = 0;
  int k = 0;
  double ratio = 0.0;
  std::uint64_t seed = 0;
  std::vector<Clause> clauses;

  int m() const { return static_cast<int>(clauses.size()); }

  // Distinct variables of clause j (duplicates inside a clause are kept in the
  // literal list but collapse here).
  std::vector<int> distinct_vars(int j) const;
};

struct GenerateOptions {
  // Regenerate until the instance is satisfiable (brute force, so n <= 24).
  bool filter_satisfiable = false;
  int max_attempts = 10000;
};

SatInstance generate_instance(int n, int k, double r, std::uint64_t seed,
                              const GenerateOptions& opts = {});

struct EvalResult {
  int satisfied_clauses = 0;
  bool is_sat = false;
};

EvalResult evaluate(const SatInstance& inst, const Assignment& a);

// Exhaustive solver; n <= 24. Assignments come back in increasing order of
// their integer encoding (bit i = variable i).
std::vector<Assignment> brute_force_solutions(const SatInstance& inst);
std::uint64_t count_solutions(const SatInstance& inst);

Assignment assignment_from_bits(std::uint64_t bits, int n);
std::uint64_t bits_from_assignment(const Assignment& a);

struct DimacsOptions {
  // Require every clause to have the same width and record it as k.
  bool require_uniform_k = true;
};

SatInstance read_dimacs(std::istream& in, const DimacsOptions& opts = {});
SatInstance read_dimacs(const std::string& text, const DimacsOptions& opts = {});
void write_dimacs(const SatInstance& inst, std::ostream& out);
std::string write_dimacs(const SatInstance& inst);

}  // namespace qcross
