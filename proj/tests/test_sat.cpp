#include <doctest.h>

#include <cmath>
#include <set>
#include <sstream>

#include "qcross/errors.hpp"
#include "qcross/sat.hpp"

using namespace qcross;

namespace {

// Reference evaluator, kept deliberately separate from the library one.
bool clause_sat(const Clause& clause, const Assignment& a) {
  for (const Literal& lit : clause) {
    bool value = a[lit.variable] != 0;
    if (value != lit.negated) return true;
  }
  return false;
}

int count_sat(const SatInstance& inst, const Assignment& a) {
  int n = 0;
  for (const Clause& cl : inst.clauses) n += clause_sat(cl, a) ? 1 : 0;
  return n;
}

}  // namespace

TEST_CASE("instance shape follows n, k, r") {
  SatInstance inst = generate_instance(50, 8, 176.0, 7);
  CHECK(inst.n == 50);
  CHECK(inst.k == 8);
  CHECK(inst.m() == 8800);
  for (const Clause& cl : inst.clauses) {
    CHECK(cl.size() == 8);
    for (const Literal& lit : cl) {
      CHECK(lit.variable >= 0);
      CHECK(lit.variable < 50);
    }
  }
  SatInstance small = generate_instance(10, 3, 3.7, 7);
  CHECK(small.m() == 37);
}

TEST_CASE("generation is seed deterministic") {
  SatInstance a = generate_instance(30, 8, 20.0, 42);
  SatInstance b = generate_instance(30, 8, 20.0, 42);
  SatInstance c = generate_instance(30, 8, 20.0, 43);
  CHECK(a.clauses == b.clauses);
  CHECK(a.clauses != c.clauses);
}

TEST_CASE("negation fraction is balanced") {
  SatInstance inst = generate_instance(50, 8, 176.0, 11);
  std::int64_t negated = 0, total = 0;
  for (const Clause& cl : inst.clauses) {
    for (const Literal& lit : cl) {
      negated += lit.negated ? 1 : 0;
      ++total;
    }
  }
  double fraction = static_cast<double>(negated) / total;
  double sigma = 0.5 / std::sqrt(static_cast<double>(total));
  CHECK(std::abs(fraction - 0.5) < 4.0 * sigma);
}

TEST_CASE("evaluate matches a reference evaluator") {
  SatInstance inst = generate_instance(12, 3, 4.0, 3);
  for (std::uint64_t bits : {0ull, 1ull, 100ull, 4095ull, 2731ull}) {
    Assignment a = assignment_from_bits(bits, inst.n);
    EvalResult r = evaluate(inst, a);
    CHECK(r.satisfied_clauses == count_sat(inst, a));
    CHECK(r.is_sat == (r.satisfied_clauses == inst.m()));
    CHECK(bits_from_assignment(a) == bits);
  }
}

TEST_CASE("brute force finds exactly the satisfying assignments") {
  SatInstance inst = generate_instance(10, 3, 3.2, 19);
  std::vector<Assignment> sols = brute_force_solutions(inst);
  CHECK(count_solutions(inst) == sols.size());
  std::set<std::uint64_t> found;
  for (const Assignment& a : sols) {
    CHECK(count_sat(inst, a) == inst.m());
    found.insert(bits_from_assignment(a));
  }
  CHECK(found.size() == sols.size());
  std::uint64_t total = 0;
  for (std::uint64_t bits = 0; bits < (1ull << inst.n); ++bits) {
    if (count_sat(inst, assignment_from_bits(bits, inst.n)) == inst.m()) {
      ++total;
      CHECK(found.count(bits) == 1);
    }
  }
  CHECK(total == sols.size());
}

TEST_CASE("satisfiable filter delivers satisfiable instances") {
  GenerateOptions opts;
  opts.filter_satisfiable = true;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    SatInstance inst = generate_instance(9, 3, 3.5, seed, opts);
    CHECK(count_solutions(inst) > 0);
  }
}

TEST_CASE("distinct vars collapses duplicates") {
  SatInstance inst;
  inst.n = 5;
  inst.k = 3;
  inst.clauses = {{{1, false}, {1, true}, {3, false}},
                  {{2, false}, {2, false}, {2, true}}};
  auto d0 = inst.distinct_vars(0);
  CHECK(d0 == std::vector<int>{1, 3});
  auto d1 = inst.distinct_vars(1);
  CHECK(d1 == std::vector<int>{2});
}

TEST_CASE("dimacs round trip") {
  SatInstance inst = generate_instance(15, 3, 4.0, 23);
  std::string text = write_dimacs(inst);
  SatInstance back = read_dimacs(text);
  CHECK(back.n == inst.n);
  CHECK(back.k == inst.k);
  CHECK(back.clauses == inst.clauses);
}

TEST_CASE("dimacs rejects malformed input") {
  CHECK_THROWS_AS(read_dimacs(std::string("p cnf x y\n")), parse_error);
  CHECK_THROWS_AS(read_dimacs(std::string("1 2 0\n")), parse_error);
  CHECK_THROWS_AS(read_dimacs(std::string("p cnf 3 1\n1 9 0\n")), parse_error);
}

TEST_CASE("generator rejects bad parameters") {
  CHECK_THROWS_AS(generate_instance(0, 3, 4.0, 1), parameter_error);
  CHECK_THROWS_AS(generate_instance(10, 0, 4.0, 1), parameter_error);
  CHECK_THROWS_AS(generate_instance(10, 3, -1.0, 1), parameter_error);
  GenerateOptions opts;
  opts.filter_satisfiable = true;
  CHECK_THROWS_AS(generate_instance(30, 3, 4.0, 1, opts), capacity_error);
}
