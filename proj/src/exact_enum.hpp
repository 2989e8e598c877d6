#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "model.hpp"

namespace saw {

// Guard rails for the exhaustive oracles; crossing-walk counts grow
// roughly like lambda^(k^2), so small defaults matter.
struct EnumLimits {
    int crossing_count_k = 5;   // largest k for counting crossing walks
    int crossing_weight_k = 4;  // largest k for weighted crossing sums
    int directed_k = 12;        // largest k for exhaustive directed walks
    std::uint64_t nes_states = 10'000'000;  // max (k+1)^l
};

struct LimitExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EnumReport {
    Model model = Model::crossing;
    int k = 0;
    int l = 0;
    BigInt count;
    std::optional<BigInt> weighted_sum;     // sum of 1/p(w)
    std::optional<BigInt> weighted_sq_sum;  // sum of 1/p(w)^2
};

// Exhaustive DFS over crossing walks of the k x k square with the same
// flood-fill pruning as the sampler. Weighted sums are filled in for
// k <= limits.crossing_weight_k.
EnumReport enumerate_crossing(int k, const EnumLimits& limits = {});

// Exhaustive DFS over NE walks of the k x k square. The weighted sum is
// computed both by enumeration and by the closed binomial sum; they are
// cross-checked before returning.
EnumReport enumerate_directed(int k, const EnumLimits& limits = {});

// Enumeration of NES walks of the k x l rectangle through their E-step
// heights (one walk per tuple in [0,k]^l). Weighted sums come from
// nes_walk_stats.
EnumReport enumerate_nes(int k, int l, const EnumLimits& limits = {});

// Every crossing walk of the k x k square with its probability trace,
// in DFS (N,E,S,W) order. Requires k <= limits.crossing_weight_k.
std::vector<Sample> crossing_support(int k, const EnumLimits& limits = {});

}  // namespace saw
