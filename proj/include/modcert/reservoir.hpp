#pragma once

// Monte-Carlo model of a tail whose traces are independent draws from a
// distribution on subsets of a core of size m.

#include <cstdint>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "modcert/gf2.hpp"
#include "modcert/traces.hpp"

namespace modcert::reservoir {

inline constexpr std::string_view kRngAlgorithm = "mt19937_64/splitmix64(seed,trial)";
inline constexpr std::size_t kMaxCoreSize = 62;

struct Uniform {};

struct Explicit {
  /// (trace mask over core positions, probability); probabilities sum to 1.
  std::vector<std::pair<gf2::BitVector, double>> weights;
  /// m-1 traces whose quotient classes form a basis.
  std::vector<gf2::BitVector> basis;
};

using Distribution = std::variant<Uniform, Explicit>;

struct ReservoirSpec {
  std::size_t m = 1;
  std::int64_t q = 2;
  Distribution distribution = Uniform{};
  std::size_t samples = 1;  ///< N
  std::size_t trials = 1;
  std::uint64_t seed = 0;
};

/// Throws InvalidInput on a bad spec (q not a power of two, N = 0, m outside
/// [1, 62], probabilities not summing to 1 within 1e-12, basis not a basis).
void validate(const ReservoirSpec& spec);

/// Basis family and the least of their probabilities. Uniform: the singletons
/// {u}, u != u0, each with probability 2^-m.
std::pair<std::vector<gf2::BitVector>, double> basis_family(const ReservoirSpec& spec);

/// N draws aggregated into a table over the synthetic core {0..m-1}; the k-th
/// draw is realized by vertex m + k. Deterministic in (spec.seed, trial).
TraceTable sample_reservoir(const ReservoirSpec& spec, std::size_t trial = 0);

struct AvailabilityEstimate {
  std::vector<bool> failed;      ///< some basis trace drew fewer than q times
  std::vector<bool> rank_rich;   ///< available classes span the quotient
  double failure_rate = 0.0;
  double rank_rich_rate = 0.0;
  double p = 0.0;
  double bound = 0.0;            ///< (m-1) exp(-N p / 8)
  bool within_hypothesis = true; ///< N p >= 2q
};

AvailabilityEstimate estimate_availability(const ReservoirSpec& spec);

/// (m-1) exp(-N p / 8).
double failure_bound(std::size_t m, std::size_t samples, double p);

/// max(2^(m+1) q, ceil(8 2^m ln((m-1)/delta))), for m >= 2 and 0 < delta < 1.
std::size_t uniform_sample_size(std::size_t m, std::int64_t q, double delta);

}  // namespace modcert::reservoir
