// Serial reference (one worker) against the OpenMP path on the three parallel
// kernels. Results must be identical; only wall time may differ.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "phu/bench.hpp"
#include "phu/generate.hpp"
#include "phu/io.hpp"
#include "phu/verify.hpp"

using namespace phu;

namespace {

struct Timed {
    std::string output;
    double seconds = 0;
};

Timed timed(const std::function<std::string()>& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    Timed t;
    t.output = fn();
    t.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return t;
}

std::string fuzz_digest(const std::vector<FuzzTrial>& trials) {
    std::ostringstream out;
    for (const auto& t : trials)
        out << t.seed << ' ' << t.sigma << ' ' << t.smur.passed() << t.esmur.passed() << ' '
            << t.smur.our_additions << ' ' << t.esmur.our_additions << '\n';
    write_summary_csv(out, summarize(trials));
    return out.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"serial vs parallel timing"};
    int threads = std::max(1, static_cast<int>(std::thread::hardware_concurrency()));
    bool quick = false;
    app.add_option("--threads", threads, "workers for the parallel run")->check(CLI::PositiveNumber);
    app.add_flag("--quick", quick, "small sizes, for a smoke test");
    CLI11_PARSE(app, argc, argv);

    const std::int64_t trials = quick ? 40 : 400;
    const std::size_t points = quick ? 200 : 1500;

    struct Task {
        const char* name;
        std::function<std::string(int)> run;
    };
    const std::vector<Task> tasks{
        {"fuzz_trials er n=12",
         [&](int w) {
             GenSpec spec;
             spec.model = Model::erdos_renyi;
             spec.n = 12;
             return fuzz_digest(fuzz_trials(spec, trials, 5, w));
         }},
        {"fuzz_trials vr n=25",
         [&](int w) {
             GenSpec spec;
             spec.model = Model::vr;
             spec.n = 25;
             spec.point_dim = 3;
             return fuzz_digest(fuzz_trials(spec, trials / 2, 6, w));
         }},
        {"run_bench er+shuffled",
         [&](int w) {
             BenchConfig cfg;
             cfg.models = {Model::erdos_renyi, Model::shuffled};
             cfg.sizes = quick ? std::vector<std::size_t>{10, 15} : std::vector<std::size_t>{20, 30, 40};
             cfg.samples = quick ? 2 : 6;
             cfg.seed = 7;
             cfg.threads = w;
             std::ostringstream out;
             write_bench_csv(out, run_bench(cfg));
             return out.str();
         }},
        {"vr distances R^16",
         [&](int w) {
             omp_set_num_threads(w);
             const auto pc = random_point_cloud(points, 16, 8);
             const auto f = vietoris_rips(pc, 1, 0.45);
             std::ostringstream out;
             write_native(out, f);
             return out.str();
         }},
    };

    std::printf("%-24s %10s %10s %8s  %s\n", "kernel", "serial s", "parallel s", "speedup", "identical");
    bool all_same = true;
    for (const auto& task : tasks) {
        const auto serial = timed([&] { return task.run(1); });
        const auto parallel = timed([&] { return task.run(threads); });
        const bool same = serial.output == parallel.output;
        all_same = all_same && same;
        std::printf("%-24s %10.3f %10.3f %8.2f  %s\n", task.name, serial.seconds, parallel.seconds,
                    parallel.seconds > 0 ? serial.seconds / parallel.seconds : 0.0, same ? "yes" : "NO");
    }
    std::printf("threads=%d\n", threads);
    return all_same ? 0 : 1;
}
