#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "phu/generate.hpp"

namespace phu {

/// Reduction cost of one generated filtration, or the mean over samples when
/// `sample` is negative.
struct BenchRow {
    Model model = Model::erdos_renyi;
    std::size_t n = 0;
    int sample = -1;
    double m_simplices = 0;
    double total_additions = 0;
    double max_usage = 0;
    double avg_usage = 0;
    double max_direct = 0;
    double avg_direct = 0;
    double pct_never_used = 0;
    double pct_used_zero_flag = 0;
    double pct_used_no_zero_flag = 0;
    std::uint64_t seed = 0;

    bool is_average() const { return sample < 0; }
};

struct BenchConfig {
    std::vector<Model> models;
    std::vector<std::size_t> sizes;
    int samples = 1;
    std::uint64_t seed = 0;
    int max_dim = 2;
    std::size_t point_dim = 16;
    int threads = 1;
};

/// Reduces one filtration and fills a row.
BenchRow bench_one(Model model, std::size_t n, int sample, std::uint64_t seed, const BenchConfig& cfg);

/// Rows for every (model, size, sample) followed, per (model, size), by the
/// average row. Ordered by model, size, then sample regardless of threads.
std::vector<BenchRow> run_bench(const BenchConfig& cfg);

/// Least-squares slope of log(y) against log(x) over points with x, y > 0.
double log_log_slope(const std::vector<double>& x, const std::vector<double>& y);

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows);

/// Three log-log scatter panels (total, max, average usage against m) of the
/// average rows with per-model slopes in the legend.
void write_bench_svg(std::ostream& out, const std::vector<BenchRow>& rows);

}  // namespace phu
