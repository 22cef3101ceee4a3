#pragma once

// Exhaustive ground truth for small instances. Nothing here touches the
// quotient algebra used by the absorption engine.

#include <cstdint>
#include <optional>
#include <vector>

#include "modcert/absorb.hpp"
#include "modcert/gf2.hpp"
#include "modcert/graph.hpp"

namespace modcert::oracle {

inline constexpr std::size_t kMaxOrder = 24;
inline constexpr std::size_t kMaxAvailableTraces = 20;

struct MaxRegular {
  std::size_t size = 0;
  /// Lexicographically smallest sorted member list among maximum regular sets.
  std::vector<Vertex> witness;
};

/// f(G) by Gray-code enumeration of all 2^n subsets with incremental degree
/// bookkeeping. Throws InvalidInput for n > 24.
MaxRegular brute_force_fG(const Graph& g);

struct AlphaOmega {
  std::size_t alpha = 0;
  std::size_t omega = 0;
};

/// Independence and clique numbers by branch and bound. n <= 24.
AlphaOmega brute_force_alpha_omega(const Graph& g);

struct AbsorptionSearch {
  bool exists = false;
  /// First successful selection over the available traces (in table order),
  /// enumerated as integers 0, 1, 2, ...
  std::optional<gf2::BitVector> selection;
};

/// Tries every subset of available traces, deleting q realizers per chosen
/// trace and recomputing the core degrees directly. Realizers are the q
/// lowest ids, or a random q-subset per trace when `tuple_seed` is given.
/// Throws InvalidInput for more than 20 available traces.
AbsorptionSearch brute_force_absorption(const AbsorptionProblem& p,
                                        std::optional<std::uint64_t> tuple_seed = std::nullopt);

}  // namespace modcert::oracle
