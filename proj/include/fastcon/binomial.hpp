#pragma once

#include <cstdint>

namespace fastcon {

// C(k, j). Exact unsigned-integer arithmetic for k <= 62 (the largest k for
// which every C(k, j) fits in 64 bits); multiplicative recurrence in double
// beyond that. j outside [0, k] yields 0.
inline double binomial(std::int64_t k, std::int64_t j) {
  if (j < 0 || j > k) return 0.0;
  if (j > k - j) j = k - j;
  if (j == 0) return 1.0;
  if (k <= 62) {
    std::uint64_t c = 1;
    for (std::int64_t t = 1; t <= j; ++t) {
      c = c * static_cast<std::uint64_t>(k - j + t) / static_cast<std::uint64_t>(t);
    }
    return static_cast<double>(c);
  }
  double c = 1.0;
  for (std::int64_t t = 1; t <= j; ++t) {
    c *= static_cast<double>(k - j + t) / static_cast<double>(t);
  }
  return c;
}

}  // namespace fastcon
