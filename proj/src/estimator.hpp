#pragma once

#include <limits>
#include <stdexcept>
#include <vector>

#include "model.hpp"

namespace saw {

struct EmptyAccumulator : std::invalid_argument {
    EmptyAccumulator() : std::invalid_argument("estimate: empty accumulator") {}
};

// Mergeable moment sums over sampled weights 1/p. The integer sums are
// exact; log_max tracks the largest log10(1/p) seen, for display
// scaling only.
struct MomentAccumulator {
    std::uint64_t n = 0;
    BigInt sum_w;
    BigInt sum_w2;
    double log_max = -std::numeric_limits<double>::infinity();

    void add(const ProbTrace& trace);
    MomentAccumulator& merge(const MomentAccumulator& other);
};

struct EstimateResult {
    BigRat mean;               // sum_w / n, exact
    double std_error;          // sqrt(unbiased sample variance / n); NaN when n < 2
    double relative_variance;  // n * sum_w2 / sum_w^2 - 1
    double log10_mean;
    std::uint64_t n = 0;
};

EstimateResult estimate(const MomentAccumulator& acc);

// Var(X/E(X)) = m2/m1^2 - 1, exactly.
BigRat relative_variance_exact(const BigInt& m1, const BigInt& m2);

struct RunSpec {
    Model model = Model::crossing;
    int k = 0;       // crossing, directed, nes
    int l = 0;       // nes
    int length = 0;  // untrapped
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    unsigned threads = 1;
};

// Run `samples` draws of the configured sampler and accumulate moments.
// Work is split across threads, each with its own (seed, thread-index)
// substream; results are deterministic for a fixed thread count.
MomentAccumulator run_moments(const RunSpec& spec);

// Sequential variant that keeps the samples themselves (thread count is
// ignored; the stream is substream(seed, 0), matching thread 0 of
// run_moments).
std::vector<Sample> run_samples(const RunSpec& spec);

}  // namespace saw
