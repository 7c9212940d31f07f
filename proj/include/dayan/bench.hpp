#pragma once

// Side-by-side run of the DaYan and extended-Euclid inverses on seeded
// random inputs. Iteration counts are deterministic for a seed; timings are not.

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "dayan/dayan.hpp"
#include "dayan/ext_euclid.hpp"
#include "dayan/random.hpp"

namespace dayan {

template <typename T>
struct Summary {
    T min{};
    T median{}; // lower median
    T max{};
};

template <typename T>
Summary<T> summarize(std::vector<T> values) {
    if (values.empty()) return {};
    std::sort(values.begin(), values.end());
    return {values.front(), values[(values.size() - 1) / 2], values.back()};
}

struct AlgorithmStats {
    std::vector<std::size_t> iterations; // per trial, in sample order
    Summary<std::size_t> iteration_summary;
    Summary<std::int64_t> nanos;
};

struct BenchRow {
    std::size_t bits = 0;
    std::size_t trials = 0;
    AlgorithmStats dayan;
    AlgorithmStats euclid;
    std::size_t disagreements = 0;
};

struct BenchReport {
    std::uint64_t seed = 0;
    std::vector<BenchRow> rows;
};

inline BenchReport bench(const std::vector<std::size_t>& bit_sizes, std::size_t trials,
                         std::uint64_t seed) {
    if (trials == 0) throw domain_error("trials must be at least 1");
    for (const auto b : bit_sizes) {
        if (b < 8) throw domain_error("bit size must be at least 8, got " + std::to_string(b));
    }

    using clock = std::chrono::steady_clock;
    auto elapsed = [](clock::time_point t0) {
        return std::chrono::duration_cast<std::chrono::nanoseconds>(clock::now() - t0).count();
    };

    BenchReport report{seed, {}};
    Rng rng(seed);
    for (const auto bits : bit_sizes) {
        BenchRow row;
        row.bits = bits;
        row.trials = trials;
        std::vector<std::int64_t> dayan_ns, euclid_ns;
        for (std::size_t t = 0; t < trials; ++t) {
            const auto [a, m] = random_coprime_pair(bits, rng);

            auto t0 = clock::now();
            const DayanTrace d = dayan_inverse(a, m);
            dayan_ns.push_back(elapsed(t0));

            t0 = clock::now();
            const EuclidRun e = euclid_inverse(a, m);
            euclid_ns.push_back(elapsed(t0));

            row.dayan.iterations.push_back(d.steps.size());
            row.euclid.iterations.push_back(e.iterations);
            if (d.result != e.normalized) ++row.disagreements;
        }
        row.dayan.iteration_summary = summarize(row.dayan.iterations);
        row.euclid.iteration_summary = summarize(row.euclid.iterations);
        row.dayan.nanos = summarize(std::move(dayan_ns));
        row.euclid.nanos = summarize(std::move(euclid_ns));
        report.rows.push_back(std::move(row));
    }
    return report;
}

} // namespace dayan
