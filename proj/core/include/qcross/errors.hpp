#pragma once

#include <stdexcept>
#include <string>

namespace qcross {

class error : public std::runtime_error {
public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Precondition violations: bad ranges, mismatched lengths, mode/argument mismatch.
class parameter_error : public error {
public:
  using error::error;
};

// Problem size exceeds a hard guard (brute force, simulator width).
class capacity_error : public error {
public:
  using error::error;
};

// Root finding or fixed-point iteration failed to converge.
class numeric_error : public error {
public:
  using error::error;
};

// No feasible value exists above the configured floor.
class infeasible_error : public numeric_error {
public:
  using numeric_error::numeric_error;
};

// Malformed input text (DIMACS, config).
class parse_error : public error {
public:
  using error::error;
};

// Internal invariant broke (non-normalized branch, entangled release, audit mismatch).
class consistency_error : public error {
public:
  using error::error;
};

// A scan over the search range found no qualifying point.
class search_error : public error {
public:
  using error::error;
};

}  // namespace qcross
