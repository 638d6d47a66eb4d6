#pragma once

#include <string>
#include <vector>

#include "qcross/crossover.hpp"

namespace qcross {

enum class TolKind { exact, abs, pct, factor, info };

struct Tol {
  TolKind kind = TolKind::info;
  double value = 0.0;  // abs bound, percentage, or allowed factor
};

std::string to_string(TolKind kind);

struct CellCheck {
  std::string table;
  std::string row;
  std::string column;
  double golden = 0.0;
  double computed = 0.0;
  Tol tol;
  bool gated = false;  // info cells are recorded but never fail
  bool pass = true;
};

struct GoldenReport {
  std::vector<CellCheck> cells;
  int gated_count = 0;
  int failed_count = 0;
  bool all_pass = true;

  // table,row,column,golden,computed,tolerance,bound,gated,pass
  std::string to_csv() const;
};

// Recomputes the headline crossover table, the three extended configuration
// tables, the improvement grid, and the ratio-100 point, then diffs every cell
// against the embedded golden values. Gated cells use the pinned acceptance
// tolerances; the rest are informational.
GoldenReport evaluate_report(const EngineConfig& base);

}  // namespace qcross
