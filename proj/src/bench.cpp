#include "phu/bench.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>
#include <sstream>

#include "phu/io.hpp"
#include "phu/reduce.hpp"
#include "phu/rng.hpp"

namespace phu {

BenchRow bench_one(Model model, std::size_t n, int sample, std::uint64_t seed, const BenchConfig& cfg) {
    GenSpec spec;
    spec.model = model;
    spec.n = n;
    spec.max_dim = cfg.max_dim;
    spec.point_dim = cfg.point_dim;
    spec.seed = seed;
    const Filtration f = generate(spec);
    const auto red = sba_reduce(boundary_matrix(f));
    const auto& st = red.stats;

    BenchRow row;
    row.model = model;
    row.n = n;
    row.sample = sample;
    row.seed = seed;
    row.m_simplices = static_cast<double>(f.size());
    row.total_additions = static_cast<double>(st.total_additions);
    row.max_usage = static_cast<double>(st.max_usage());
    row.avg_usage = st.avg_usage();
    row.max_direct = static_cast<double>(st.max_direct());
    row.avg_direct = st.avg_direct();
    std::int64_t never = 0, zero = 0, nonzero = 0;
    for (std::size_t i = 0; i < st.usage_count.size(); ++i) {
        if (st.usage_count[i] == 0)
            ++never;
        else if (st.zero_flag[i])
            ++zero;
        else
            ++nonzero;
    }
    const double m = row.m_simplices > 0 ? row.m_simplices : 1.0;
    row.pct_never_used = 100.0 * static_cast<double>(never) / m;
    row.pct_used_zero_flag = 100.0 * static_cast<double>(zero) / m;
    row.pct_used_no_zero_flag = 100.0 * static_cast<double>(nonzero) / m;
    return row;
}

std::vector<BenchRow> run_bench(const BenchConfig& cfg) {
    struct Job {
        Model model;
        std::size_t n;
        int sample;
        std::uint64_t seed;
    };
    std::vector<Job> jobs;
    std::uint64_t stream = 0;
    for (Model model : cfg.models)
        for (std::size_t n : cfg.sizes)
            for (int s = 0; s < cfg.samples; ++s) jobs.push_back({model, n, s, derive_seed(cfg.seed, stream++)});

    std::vector<BenchRow> done(jobs.size());
    const auto count = static_cast<std::int64_t>(jobs.size());
#pragma omp parallel for schedule(dynamic) num_threads(std::max(1, cfg.threads))
    for (std::int64_t i = 0; i < count; ++i)
        done[i] = bench_one(jobs[i].model, jobs[i].n, jobs[i].sample, jobs[i].seed, cfg);

    std::vector<BenchRow> rows;
    for (std::size_t i = 0; i < jobs.size();) {
        std::size_t j = i;
        BenchRow avg;
        avg.model = jobs[i].model;
        avg.n = jobs[i].n;
        avg.seed = cfg.seed;
        while (j < jobs.size() && jobs[j].model == avg.model && jobs[j].n == avg.n) {
            const BenchRow& r = done[j];
            rows.push_back(r);
            avg.m_simplices += r.m_simplices;
            avg.total_additions += r.total_additions;
            avg.max_usage += r.max_usage;
            avg.avg_usage += r.avg_usage;
            avg.max_direct += r.max_direct;
            avg.avg_direct += r.avg_direct;
            avg.pct_never_used += r.pct_never_used;
            avg.pct_used_zero_flag += r.pct_used_zero_flag;
            avg.pct_used_no_zero_flag += r.pct_used_no_zero_flag;
            ++j;
        }
        const double k = static_cast<double>(j - i);
        avg.m_simplices /= k;
        avg.total_additions /= k;
        avg.max_usage /= k;
        avg.avg_usage /= k;
        avg.max_direct /= k;
        avg.avg_direct /= k;
        avg.pct_never_used /= k;
        avg.pct_used_zero_flag /= k;
        avg.pct_used_no_zero_flag /= k;
        rows.push_back(avg);
        i = j;
    }
    return rows;
}

double log_log_slope(const std::vector<double>& x, const std::vector<double>& y) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    std::size_t k = 0;
    for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
        if (!(x[i] > 0) || !(y[i] > 0)) continue;
        const double lx = std::log(x[i]), ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
        ++k;
    }
    if (k < 2) return 0.0;
    const double denom = static_cast<double>(k) * sxx - sx * sx;
    if (denom == 0.0) return 0.0;
    return (static_cast<double>(k) * sxy - sx * sy) / denom;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
    out << "model,n,sample,m_simplices,total_additions,max_usage,avg_usage,pct_never_used,"
           "pct_used_zero_flag,pct_used_no_zero_flag,seed,max_direct,avg_direct\n";
    for (const auto& r : rows) {
        out << to_string(r.model) << ',' << r.n << ',';
        if (r.is_average())
            out << "avg";
        else
            out << r.sample;
        out << ',' << format_value(r.m_simplices) << ',' << format_value(r.total_additions) << ','
            << format_value(r.max_usage) << ',' << format_value(r.avg_usage) << ','
            << format_value(r.pct_never_used) << ',' << format_value(r.pct_used_zero_flag) << ','
            << format_value(r.pct_used_no_zero_flag) << ',' << r.seed << ',' << format_value(r.max_direct) << ','
            << format_value(r.avg_direct) << '\n';
    }
}

void write_bench_svg(std::ostream& out, const std::vector<BenchRow>& rows) {
    static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd"};
    struct Series {
        std::vector<double> m, total, max, avg;
    };
    std::map<Model, Series> series;
    for (const auto& r : rows) {
        if (!r.is_average()) continue;
        auto& s = series[r.model];
        s.m.push_back(r.m_simplices);
        s.total.push_back(r.total_additions);
        s.max.push_back(r.max_usage);
        s.avg.push_back(r.avg_usage);
    }
    const double panel_w = 300, panel_h = 240, margin = 40;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << 3 * (panel_w + margin) + margin
        << "\" height=\"" << panel_h + 3 * margin + 20 * static_cast<double>(series.size()) << "\">\n";
    const char* titles[] = {"total additions", "max usage", "avg usage"};
    for (int p = 0; p < 3; ++p) {
        double lx0 = 1e300, lx1 = -1e300, ly0 = 1e300, ly1 = -1e300;
        for (auto& [model, s] : series) {
            const auto& ys = p == 0 ? s.total : p == 1 ? s.max : s.avg;
            for (std::size_t i = 0; i < s.m.size(); ++i) {
                if (!(s.m[i] > 0) || !(ys[i] > 0)) continue;
                lx0 = std::min(lx0, std::log10(s.m[i]));
                lx1 = std::max(lx1, std::log10(s.m[i]));
                ly0 = std::min(ly0, std::log10(ys[i]));
                ly1 = std::max(ly1, std::log10(ys[i]));
            }
        }
        if (lx1 <= lx0) lx1 = lx0 + 1;
        if (ly1 <= ly0) ly1 = ly0 + 1;
        const double ox = margin + p * (panel_w + margin), oy = margin;
        out << "<rect x=\"" << ox << "\" y=\"" << oy << "\" width=\"" << panel_w << "\" height=\"" << panel_h
            << "\" fill=\"none\" stroke=\"black\"/>\n";
        out << "<text x=\"" << ox + 4 << "\" y=\"" << oy - 6 << "\" font-size=\"12\">log10 " << titles[p]
            << " vs log10 m</text>\n";
        int c = 0;
        for (auto& [model, s] : series) {
            const auto& ys = p == 0 ? s.total : p == 1 ? s.max : s.avg;
            for (std::size_t i = 0; i < s.m.size(); ++i) {
                if (!(s.m[i] > 0) || !(ys[i] > 0)) continue;
                const double px = ox + (std::log10(s.m[i]) - lx0) / (lx1 - lx0) * panel_w;
                const double py = oy + panel_h - (std::log10(ys[i]) - ly0) / (ly1 - ly0) * panel_h;
                out << "<circle cx=\"" << px << "\" cy=\"" << py << "\" r=\"3\" fill=\"" << colors[c % 4]
                    << "\"/>\n";
            }
            out << "<text x=\"" << ox + 4 << "\" y=\"" << oy + panel_h + 20 + 16 * c << "\" font-size=\"11\" fill=\""
                << colors[c % 4] << "\">" << to_string(model) << " slope " << format_value(log_log_slope(s.m, ys))
                << "</text>\n";
            ++c;
        }
    }
    out << "</svg>\n";
}

}  // namespace phu
