#pragma once

#include <cstdint>

#include "gtra/game.hpp"
#include "gtra/solver.hpp"

namespace gtra {

enum class PartOnesOrder {
  Index,             // targets in input order
  DescendingReward,  // highest R^a first, ties by index
};

// Fully protects targets in order until the budget runs out; the first
// target that does not fit receives the fractional remainder.
DefenseStrategy part_ones(const GameInstance& g,
                          PartOnesOrder order = PartOnesOrder::Index);

// q_i = r_i M / sum_j r_j w_j with r ~ U(0,1), clamped to [0, 1].
DefenseStrategy rand_strategy(const GameInstance& g, std::uint64_t stream_seed);

// Equal budget share per target: q_i = min(1, (M/N) / w_i).
DefenseStrategy average_strategy(const GameInstance& g);

// Protects every target; ignores the budget and is flagged when it overspends.
DefenseStrategy all_ones(const GameInstance& g);

DefenseStrategy ne_strategy(const GameInstance& g,
                            int times = kDefaultRestarts,
                            const GaParams& params = {});

}  // namespace gtra
