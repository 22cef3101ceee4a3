#pragma once

#include <cstdint>

#include <Eigen/Core>

namespace modcert {

using Vertex = std::uint32_t;

/// Integer-valued function on an ordered vertex set (degrees, tail counts).
using IntVector = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

/// Mathematical remainder in [0, m) for m > 0.
constexpr std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

constexpr bool is_power_of_two(std::int64_t q) { return q > 0 && (q & (q - 1)) == 0; }

/// True iff every entry of v is congruent to every other modulo m (m >= 1).
inline bool is_constant_mod(const IntVector& v, std::int64_t m) {
  if (v.size() == 0) return true;
  const std::int64_t r = floor_mod(v(0), m);
  for (Eigen::Index i = 1; i < v.size(); ++i)
    if (floor_mod(v(i), m) != r) return false;
  return true;
}

}  // namespace modcert
