#pragma once
// Batch benchmark: random instances per size, a-posteriori ratio statistics,
// CSV output.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <string>
#include <thread>
#include <vector>

#include "dubseq/bounds.hpp"
#include "dubseq/instance.hpp"
#include "dubseq/sequence.hpp"

namespace dubseq {

struct BenchConfig {
    std::vector<std::size_t> sizes{12, 15, 18, 21, 24, 27, 30};
    std::size_t count = 100;
    double rho = 100.0;
    double eps = 1e-4;
    std::size_t intervals = 32;
    std::uint64_t seed = 2016;
    bool record_timing = true;
    unsigned threads = 0;  // 0: hardware concurrency
};

struct BenchInstanceResult {
    std::size_t n = 0;
    std::size_t index = 0;
    std::uint64_t seed = 0;
    CandidateLabel chosen = CandidateLabel::F1;
    double cost = 0.0;
    double euclidean_lb = 0.0;
    double grid_proxy_lb = 0.0;
    double runtime_ms = 0.0;

    [[nodiscard]] double ratio() const noexcept { return cost / grid_proxy_lb; }
    [[nodiscard]] double euclidean_ratio() const noexcept { return cost / euclidean_lb; }
};

struct BenchRow {
    std::size_t n = 0;
    std::size_t count = 0;
    double max_ratio = 0.0;
    double avg_ratio = 0.0;
    double max_ratio_euclidean = 0.0;
    double avg_ratio_euclidean = 0.0;
    double avg_runtime_ms = 0.0;
};

/// Seed of instance `index` of size `n`, derived from the master seed.
[[nodiscard]] constexpr std::uint64_t instance_seed(std::uint64_t master, std::size_t n, std::size_t index) noexcept {
    return splitmix64(splitmix64(master ^ (static_cast<std::uint64_t>(n) << 32)) + index);
}

/// Solves every instance; results come back in (n, index) order whatever
/// the thread count.
[[nodiscard]] inline std::vector<BenchInstanceResult> run_bench_instances(const BenchConfig& cfg) {
    std::vector<BenchInstanceResult> results;
    for (std::size_t n : cfg.sizes)
        for (std::size_t i = 0; i < cfg.count; ++i) results.push_back({n, i, instance_seed(cfg.seed, n, i)});

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k = next++; k < results.size(); k = next++) {
            auto& r = results[k];
            const Instance inst = generate(r.n, cfg.rho, r.seed);
            const auto t0 = std::chrono::steady_clock::now();
            const auto sol = approximate_sequence(inst, cfg.eps);
            const auto t1 = std::chrono::steady_clock::now();
            r.chosen = sol.chosen().label;
            r.cost = sol.chosen().cost;
            r.runtime_ms = cfg.record_timing ? std::chrono::duration<double, std::milli>(t1 - t0).count() : 0.0;
            r.euclidean_lb = euclidean_lb(inst);
            r.grid_proxy_lb = heading_grid_dp(inst, HeadingGrid{cfg.intervals}, GridMode::ProxyLowerBound).cost;
        }
    };
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const unsigned threads = std::max(1u, std::min<unsigned>(cfg.threads ? cfg.threads : hw,
                                                             static_cast<unsigned>(results.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return results;
}

[[nodiscard]] inline std::vector<BenchRow> summarize(const BenchConfig& cfg,
                                                     const std::vector<BenchInstanceResult>& results) {
    std::vector<BenchRow> rows;
    for (std::size_t n : cfg.sizes) {
        BenchRow row;
        row.n = n;
        for (const auto& r : results) {
            if (r.n != n) continue;
            ++row.count;
            row.max_ratio = std::max(row.max_ratio, r.ratio());
            row.avg_ratio += r.ratio();
            row.max_ratio_euclidean = std::max(row.max_ratio_euclidean, r.euclidean_ratio());
            row.avg_ratio_euclidean += r.euclidean_ratio();
            row.avg_runtime_ms += r.runtime_ms;
        }
        if (row.count) {
            const auto c = static_cast<double>(row.count);
            row.avg_ratio /= c;
            row.avg_ratio_euclidean /= c;
            row.avg_runtime_ms /= c;
        }
        rows.push_back(row);
    }
    return rows;
}

[[nodiscard]] inline std::vector<BenchRow> run_bench(const BenchConfig& cfg) {
    return summarize(cfg, run_bench_instances(cfg));
}

inline constexpr const char* kBenchCsvHeader =
    "n,theoretical_bound,max_ratio,avg_ratio,avg_runtime_ms,max_ratio_euclidean,avg_ratio_euclidean,count,eps,"
    "ratio_lower_bound";

/// RFC-4180 table. max_ratio / avg_ratio are measured against the grid proxy
/// lower bound, which is not guaranteed (the last column says so); the
/// *_euclidean columns use the guaranteed Euclidean bound. Without timing the
/// runtime column is "NA" and the output is byte-reproducible.
[[nodiscard]] inline std::string bench_csv(const BenchConfig& cfg, const std::vector<BenchRow>& rows) {
    std::string out = std::string(kBenchCsvHeader) + "\r\n";
    char buf[512];
    for (const auto& r : rows) {
        char runtime[32] = "NA";
        if (cfg.record_timing) std::snprintf(runtime, sizeof runtime, "%.3f", r.avg_runtime_ms);
        std::snprintf(buf, sizeof buf, "%zu,%.4f,%.6f,%.6f,%s,%.6f,%.6f,%zu,%g,grid_proxy_nonguaranteed\r\n", r.n,
                      kApproximationFactor, r.max_ratio, r.avg_ratio, runtime, r.max_ratio_euclidean,
                      r.avg_ratio_euclidean, r.count, cfg.eps);
        out += buf;
    }
    return out;
}

}  // namespace dubseq
