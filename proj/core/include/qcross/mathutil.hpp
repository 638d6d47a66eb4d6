#pragma once

#include <cstdint>
#include <stdexcept>

namespace qcross {

// Smallest t with 2^t >= x. ceil_log2_int(1) == 0.
inline int ceil_log2_int(std::int64_t x) {
  if (x <= 0) throw std::invalid_argument("ceil_log2_int: positive argument required");
  int t = 0;
  std::int64_t v = 1;
  while (v < x) {
    v <<= 1;
    ++t;
  }
  return t;
}

inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

}  // namespace qcross
