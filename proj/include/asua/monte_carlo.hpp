#pragma once

#include "asua/chain.hpp"
#include "asua/graph.hpp"

#include <cstdint>

namespace asua {

struct WalkConfig {
  VertexId start = 0;
  std::uint64_t walk_count = 100000;
  std::uint64_t seed = 0;
  std::uint64_t step_cap = 1000000000;
  /// 0 = one worker per hardware thread. Never changes the result.
  unsigned threads = 0;
};

struct SimEstimate {
  double mean = 0.0;
  /// Standard error of the mean over completed walks (sample variance, n-1).
  double stderr_ = 0.0;
  std::uint64_t walks_completed = 0;
  std::uint64_t walks_capped = 0;
};

/// Runs walk_count independent walks from cfg.start; each step picks the
/// next vertex uniformly from the neighbor multiset. Walk i draws from
/// Xoshiro256::substream(cfg.seed, i) and results are reduced in walk order,
/// so the estimate is bit-identical for any thread count. Walks reaching
/// step_cap are excluded from the mean and counted in walks_capped.
/// Throws StartIsAbsorbing, EmptyAbsorbingSet, UnreachableAbsorber.
SimEstimate simulate(const Graph& g, const WalkConfig& cfg);

/// Same estimator over an arbitrary chain. Each row's probabilities are
/// brought to a common denominator and sampled as integer weights; throws
/// OutOfRange if that denominator does not fit 64 bits.
SimEstimate simulate(const TransitionMatrix& tm, const WalkConfig& cfg);

}  // namespace asua
