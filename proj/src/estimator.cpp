#include "estimator.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <thread>

#include "samplers.hpp"

namespace saw {

void MomentAccumulator::add(const ProbTrace& trace) {
    BigInt w = trace.inv_p();
    ++n;
    sum_w += w;
    sum_w2 += w * w;
    log_max = std::max(log_max, trace.log10_inv_p());
}

MomentAccumulator& MomentAccumulator::merge(const MomentAccumulator& other) {
    n += other.n;
    sum_w += other.sum_w;
    sum_w2 += other.sum_w2;
    log_max = std::max(log_max, other.log_max);
    return *this;
}

EstimateResult estimate(const MomentAccumulator& acc) {
    if (acc.n == 0) throw EmptyAccumulator();
    EstimateResult r;
    r.n = acc.n;
    r.mean = BigRat(acc.sum_w, BigInt(acc.n));
    r.log10_mean = (log10(Float50(acc.sum_w)) - log10(Float50(acc.n))).convert_to<double>();

    if (acc.n >= 2) {
        // Unbiased sample variance: (sum_w2 - sum_w^2/n) / (n-1);
        // the standard error of the mean divides by a further n.
        BigInt num = BigInt(acc.n) * acc.sum_w2 - acc.sum_w * acc.sum_w;
        Float50 se2 = Float50(num) /
                      (Float50(acc.n) * Float50(acc.n) * Float50(acc.n - 1));
        r.std_error = sqrt(se2).convert_to<double>();
    } else {
        r.std_error = std::numeric_limits<double>::quiet_NaN();
    }

    Float50 rv = Float50(BigInt(acc.n) * acc.sum_w2) / Float50(acc.sum_w * acc.sum_w);
    r.relative_variance = (rv - 1).convert_to<double>();
    return r;
}

BigRat relative_variance_exact(const BigInt& m1, const BigInt& m2) {
    if (m1 <= 0) throw std::invalid_argument("relative_variance_exact: m1 must be positive");
    return BigRat(m2, m1 * m1) - 1;
}

namespace {

Sample draw(const RunSpec& spec, RandomStream& rng) {
    switch (spec.model) {
        case Model::crossing: return sample_crossing_saw(spec.k, rng);
        case Model::directed: return sample_directed(spec.k, rng);
        case Model::nes: return sample_nes(spec.k, spec.l, rng);
        case Model::untrapped: return sample_untrapped(spec.length, rng);
    }
    throw std::invalid_argument("unknown model");
}

void validate(const RunSpec& spec) {
    switch (spec.model) {
        case Model::crossing:
        case Model::directed:
            if (spec.k < 1) throw std::invalid_argument("run: k must be >= 1");
            break;
        case Model::nes:
            if (spec.k < 1 || spec.l < 1)
                throw std::invalid_argument("run: k and l must be >= 1");
            break;
        case Model::untrapped:
            if (spec.length < 1) throw std::invalid_argument("run: length must be >= 1");
            break;
    }
}

void run_chunk(const RunSpec& spec, std::uint64_t count, std::uint64_t stream_index,
               MomentAccumulator& acc) {
    RandomStream rng = RandomStream::substream(spec.seed, stream_index);
    for (std::uint64_t i = 0; i < count; ++i) acc.add(draw(spec, rng).trace);
}

}  // namespace

MomentAccumulator run_moments(const RunSpec& spec) {
    validate(spec);
    const unsigned threads = std::max(1u, spec.threads);
    if (threads == 1 || spec.samples < threads) {
        MomentAccumulator acc;
        run_chunk(spec, spec.samples, 0, acc);
        return acc;
    }
    std::vector<MomentAccumulator> parts(threads);
    std::vector<std::thread> pool;
    pool.reserve(threads);
    const std::uint64_t base = spec.samples / threads;
    const std::uint64_t extra = spec.samples % threads;
    for (unsigned t = 0; t < threads; ++t) {
        const std::uint64_t cnt = base + (t < extra ? 1 : 0);
        pool.emplace_back(run_chunk, std::cref(spec), cnt, t, std::ref(parts[t]));
    }
    for (auto& th : pool) th.join();
    MomentAccumulator acc;
    for (const auto& p : parts) acc.merge(p);
    return acc;
}

std::vector<Sample> run_samples(const RunSpec& spec) {
    validate(spec);
    RandomStream rng = RandomStream::substream(spec.seed, 0);
    std::vector<Sample> out;
    out.reserve(spec.samples);
    for (std::uint64_t i = 0; i < spec.samples; ++i) out.push_back(draw(spec, rng));
    return out;
}

}  // namespace saw
