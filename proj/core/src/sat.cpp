#include "qcross/sat.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include "qcross/errors.hpp"
#include "qcross/rng.hpp"

namespace qcross {

std::vector<int> SatInstance::distinct_vars(int j) const {
  std::vector<int> vars;
  vars.reserve(k);
  for (const Literal& lit : clauses.at(j)) vars.push_back(lit.variable);
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

namespace {

SatInstance generate_once(int n, int k, double r, std::uint64_t seed) {
  SatInstance inst;
  inst.n = n;
  inst.k = k;
  inst.ratio = r;
  inst.seed = seed;
  const auto m = static_cast<std::int64_t>(std::llround(r * n));
  inst.clauses.reserve(static_cast<std::size_t>(m));
  rng gen(seed);
  for (std::int64_t j = 0; j < m; ++j) {
    Clause clause;
    clause.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
      Literal lit;
      lit.variable = static_cast<int>(gen.bounded(static_cast<std::uint64_t>(n)));
      lit.negated = gen.coin();
      clause.push_back(lit);
    }
    inst.clauses.push_back(std::move(clause));
  }
  return inst;
}

}  // namespace

SatInstance generate_instance(int n, int k, double r, std::uint64_t seed,
                              const GenerateOptions& opts) {
  if (k < 1 || n < k) throw parameter_error("generate_instance: need n >= k >= 1");
  if (!(r > 0.0)) throw parameter_error("generate_instance: need r > 0");
  if (!opts.filter_satisfiable) return generate_once(n, k, r, seed);

  if (n > 24) {
    throw capacity_error("generate_instance: satisfiability filter needs n <= 24");
  }
  rng seeder(seed);
  for (int attempt = 0; attempt < opts.max_attempts; ++attempt) {
    const std::uint64_t sub_seed =
        attempt == 0 ? seed : seeder.child(static_cast<std::uint64_t>(attempt)).seed();
    SatInstance inst = generate_once(n, k, r, sub_seed);
    if (count_solutions(inst) > 0) return inst;
  }
  throw search_error("generate_instance: no satisfiable instance found in " +
                     std::to_string(opts.max_attempts) + " attempts");
}

EvalResult evaluate(const SatInstance& inst, const Assignment& a) {
  if (static_cast<int>(a.size()) != inst.n) {
    throw parameter_error("evaluate: assignment length " + std::to_string(a.size()) +
                          " != n " + std::to_string(inst.n));
  }
  EvalResult res;
  for (const Clause& clause : inst.clauses) {
    for (const Literal& lit : clause) {
      const bool value = a[static_cast<std::size_t>(lit.variable)] != 0;
      if (value != lit.negated) {
        ++res.satisfied_clauses;
        break;
      }
    }
  }
  res.is_sat = res.satisfied_clauses == inst.m();
  return res;
}

Assignment assignment_from_bits(std::uint64_t bits, int n) {
  Assignment a(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) a[static_cast<std::size_t>(i)] = (bits >> i) & 1u;
  return a;
}

std::uint64_t bits_from_assignment(const Assignment& a) {
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i]) bits |= std::uint64_t{1} << i;
  }
  return bits;
}

namespace {

// Clause as (mask, target): satisfied unless (bits & mask) == target, i.e. the
// target pattern is the unique all-literals-false assignment of its variables.
// Clauses containing x and !x are tautologies and get skipped.
struct MaskClause {
  std::uint64_t mask = 0;
  std::uint64_t target = 0;
  bool tautology = false;
};

MaskClause mask_clause(const Clause& clause) {
  MaskClause mc;
  for (const Literal& lit : clause) {
    const std::uint64_t bit = std::uint64_t{1} << lit.variable;
    const std::uint64_t want = lit.negated ? bit : 0;  // literal false
    if (mc.mask & bit) {
      if ((mc.target & bit) != want) {
        mc.tautology = true;
        return mc;
      }
    } else {
      mc.mask |= bit;
      mc.target |= want;
    }
  }
  return mc;
}

}  // namespace

std::vector<Assignment> brute_force_solutions(const SatInstance& inst) {
  if (inst.n > 24) throw capacity_error("brute_force_solutions: n <= 24 required");
  std::vector<MaskClause> mcs;
  mcs.reserve(inst.clauses.size());
  for (const Clause& clause : inst.clauses) {
    MaskClause mc = mask_clause(clause);
    if (!mc.tautology) mcs.push_back(mc);
  }
  std::vector<Assignment> out;
  const std::uint64_t total = std::uint64_t{1} << inst.n;
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    bool ok = true;
    for (const MaskClause& mc : mcs) {
      if ((bits & mc.mask) == mc.target) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(assignment_from_bits(bits, inst.n));
  }
  return out;
}

std::uint64_t count_solutions(const SatInstance& inst) {
  if (inst.n > 24) throw capacity_error("count_solutions: n <= 24 required");
  std::vector<MaskClause> mcs;
  mcs.reserve(inst.clauses.size());
  for (const Clause& clause : inst.clauses) {
    MaskClause mc = mask_clause(clause);
    if (!mc.tautology) mcs.push_back(mc);
  }
  std::uint64_t count = 0;
  const std::uint64_t total = std::uint64_t{1} << inst.n;
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    bool ok = true;
    for (const MaskClause& mc : mcs) {
      if ((bits & mc.mask) == mc.target) {
        ok = false;
        break;
      }
    }
    if (ok) ++count;
  }
  return count;
}

SatInstance read_dimacs(std::istream& in, const DimacsOptions& opts) {
  SatInstance inst;
  int declared_m = -1;
  bool have_header = false;
  Clause current;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == 'c' || line[0] == '%') continue;
    std::istringstream ls(line);
    if (line[0] == 'p') {
      std::string p, fmt;
      ls >> p >> fmt >> inst.n >> declared_m;
      if (ls.fail() || fmt != "cnf" || inst.n < 0 || declared_m < 0) {
        throw parse_error("read_dimacs: malformed header: " + line);
      }
      have_header = true;
      continue;
    }
    if (!have_header) throw parse_error("read_dimacs: clause before 'p cnf' header");
    long long v = 0;
    while (ls >> v) {
      if (v == 0) {
        inst.clauses.push_back(current);
        current.clear();
        continue;
      }
      const long long var = std::llabs(v) - 1;
      if (var >= inst.n) {
        throw parse_error("read_dimacs: variable " + std::to_string(std::llabs(v)) +
                          " exceeds declared count " + std::to_string(inst.n));
      }
      current.push_back(Literal{static_cast<int>(var), v < 0});
    }
    if (!ls.eof()) throw parse_error("read_dimacs: bad token in line: " + line);
  }
  if (!have_header) throw parse_error("read_dimacs: missing 'p cnf' header");
  if (!current.empty()) throw parse_error("read_dimacs: clause not terminated by 0");
  if (inst.m() != declared_m) {
    throw parse_error("read_dimacs: header declares " + std::to_string(declared_m) +
                      " clauses, found " + std::to_string(inst.m()));
  }
  if (opts.require_uniform_k) {
    for (const Clause& clause : inst.clauses) {
      if (inst.k == 0) inst.k = static_cast<int>(clause.size());
      if (static_cast<int>(clause.size()) != inst.k) {
        throw parse_error("read_dimacs: non-uniform clause width");
      }
    }
  } else if (!inst.clauses.empty()) {
    inst.k = static_cast<int>(inst.clauses.front().size());
  }
  inst.ratio = inst.n > 0 ? static_cast<double>(inst.m()) / inst.n : 0.0;
  return inst;
}

SatInstance read_dimacs(const std::string& text, const DimacsOptions& opts) {
  std::istringstream in(text);
  return read_dimacs(in, opts);
}

void write_dimacs(const SatInstance& inst, std::ostream& out) {
  out << "p cnf " << inst.n << ' ' << inst.m() << '\n';
  for (const Clause& clause : inst.clauses) {
    for (const Literal& lit : clause) {
      out << (lit.negated ? -(lit.variable + 1) : (lit.variable + 1)) << ' ';
    }
    out << "0\n";
  }
}

std::string write_dimacs(const SatInstance& inst) {
  std::ostringstream out;
  write_dimacs(inst, out);
  return out.str();
}

}  // namespace qcross
