#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "rng.hpp"

namespace flagmv {

struct MCConfig {
    long long sample_count = 100000;
    std::uint64_t seed = 42;
    int batch_count = 16;
    int threads = 1;
    std::optional<double> target_rel_error;
};

struct MCEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    long long n = 0;
    std::uint64_t seed = 0;
};

// One weighted draw: the estimator accumulates value * weight.
struct Sample {
    double value = 0.0;
    double weight = 1.0;
};

// Unbiased weighted-mean Monte Carlo estimate with a standard error
// (sample standard deviation / sqrt(n)). Sampling is split into
// batch_count independent substreams and merged in batch order, so the
// result is identical for any thread count. Non-finite sample values
// raise an error carrying the offending sample index.
template <typename Sampler>
MCEstimate mc_integrate(Sampler&& sampler, const MCConfig& config) {
    if (config.sample_count <= 0)
        throw std::invalid_argument("mc_integrate: sample_count must be positive");
    const int B = std::max(1, config.batch_count);
    const long long n = config.sample_count;

    struct BatchAcc {
        double sum = 0.0, sumsq = 0.0;
        long long n = 0;
        long long bad_index = -1;
    };
    std::vector<BatchAcc> acc(std::size_t(B));

    auto run_batch = [&](int b) {
        Rng rng = Rng::substream(config.seed, std::uint64_t(b));
        long long lo = n * b / B, hi = n * (b + 1) / B;
        BatchAcc a;
        for (long long i = lo; i < hi; ++i) {
            Sample s = sampler(rng);
            double v = s.value * s.weight;
            if (!std::isfinite(v)) {
                a.bad_index = i;
                break;
            }
            a.sum += v;
            a.sumsq += v * v;
            ++a.n;
        }
        acc[std::size_t(b)] = a;
    };

    const int T = std::max(1, config.threads);
    if (T == 1) {
        for (int b = 0; b < B; ++b) run_batch(b);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < T; ++t)
            pool.emplace_back([&, t] {
                for (int b = t; b < B; b += T) run_batch(b);
            });
        for (auto& th : pool) th.join();
    }

    double sum = 0.0, sumsq = 0.0;
    long long used = 0;
    for (int b = 0; b < B; ++b) {
        if (acc[std::size_t(b)].bad_index >= 0)
            throw std::runtime_error("mc_integrate: non-finite sample value at index " +
                                     std::to_string(acc[std::size_t(b)].bad_index));
        sum += acc[std::size_t(b)].sum;
        sumsq += acc[std::size_t(b)].sumsq;
        used += acc[std::size_t(b)].n;
    }

    MCEstimate e;
    e.n = used;
    e.seed = config.seed;
    e.mean = sum / double(used);
    double var = std::max(0.0, sumsq / double(used) - e.mean * e.mean);
    if (used > 1) var *= double(used) / double(used - 1);
    e.std_error = std::sqrt(var / double(used));
    return e;
}

} // namespace flagmv
