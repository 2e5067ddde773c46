// phu: persistence barcodes with in-place simplex removal.
//
// Subcommands: generate, reduce, remove, bench, verify.
// Exit codes: 0 success, 1 usage error, 2 parse/validation error, 3 verification mismatch.

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <omp.h>

#include "CLI11.hpp"
#include "phu/bench.hpp"
#include "phu/io.hpp"
#include "phu/update.hpp"
#include "phu/verify.hpp"

namespace {

constexpr int exit_usage = 1;
constexpr int exit_parse = 2;
constexpr int exit_mismatch = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int worker_count() {
    int n = omp_get_max_threads();
    if (const char* env = std::getenv("BD_THREADS")) {
        char* end = nullptr;
        const long cap = std::strtol(env, &end, 10);
        if (end != env && cap > 0) n = std::min<long>(n, cap);
    }
    return std::max(1, n);
}

std::ifstream open_in(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open '" + path + "'");
    return in;
}

// Writes to `path`, or to stdout when empty or "-".
class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty() && path != "-") {
            file_ = std::make_unique<std::ofstream>(path);
            if (!*file_) throw UsageError("cannot write '" + path + "'");
        }
    }
    std::ostream& stream() { return file_ ? *file_ : std::cout; }

private:
    std::unique_ptr<std::ofstream> file_;
};

phu::Filtration load_filtration(const std::string& path) {
    auto in = open_in(path);
    phu::Filtration f = phu::read_native(in);
    if (auto v = phu::validate_filtration(f))
        throw phu::ParseError(0, path + ": invalid filtration at position " + std::to_string(v->position) + ": " +
                                     v->reason);
    return f;
}

std::vector<double> values_of(const phu::Filtration& f) {
    std::vector<double> v;
    v.reserve(f.entries.size());
    for (const auto& e : f.entries) v.push_back(e.value);
    return v;
}

struct GenerateArgs {
    std::string model = "er";
    std::size_t n = 0;
    std::size_t dim = 3;
    int max_dim = 2;
    double max_radius = std::numeric_limits<double>::infinity();
    std::uint64_t seed = 0;
    std::string points, values, complex, out;
};

int cmd_generate(const GenerateArgs& a) {
    phu::GenSpec spec;
    spec.model = phu::parse_model(a.model);
    spec.n = a.n;
    spec.point_dim = a.dim;
    spec.max_dim = a.max_dim;
    spec.max_radius = a.max_radius;
    spec.seed = a.seed;
    if (!a.points.empty()) {
        if (spec.model != phu::Model::vr) throw UsageError("--points is only valid with --model vr");
        auto in = open_in(a.points);
        spec.points = phu::read_point_cloud(in);
    }
    if (!a.values.empty() || !a.complex.empty()) {
        if (spec.model != phu::Model::lower_star)
            throw UsageError("--values and --complex are only valid with --model lowerstar");
    }
    if (!a.values.empty()) {
        auto in = open_in(a.values);
        spec.vertex_values = phu::read_vertex_values(in);
    }
    if (!a.complex.empty()) spec.complex = load_filtration(a.complex);
    const bool needs_n = !(spec.model == phu::Model::vr && spec.points) &&
                         !(spec.model == phu::Model::lower_star && spec.complex);
    if (needs_n && a.n == 0) throw UsageError("--n must be positive");
    if (spec.model == phu::Model::vr && !spec.points && a.dim == 0) throw UsageError("--dim must be positive");

    const phu::Filtration f = phu::generate(spec);
    Output out(a.out);
    phu::write_native(out.stream(), f);
    return 0;
}

struct ReduceArgs {
    std::string input, format = "native", barcode, stats;
};

int cmd_reduce(const ReduceArgs& a) {
    phu::BoundaryMatrix D;
    std::vector<double> values;
    if (a.format == "native") {
        const auto f = load_filtration(a.input);
        D = phu::boundary_matrix(f);
        values = values_of(f);
    } else if (a.format == "phat") {
        auto in = open_in(a.input);
        D = phu::read_phat(in);
    } else {
        throw UsageError("--format must be native or phat");
    }
    const auto red = phu::sba_reduce(D);
    const auto bc = phu::extract_barcode(red.dec);
    {
        Output out(a.barcode);
        phu::write_barcode_csv(out.stream(), bc, values);
    }
    if (a.stats.empty() || a.stats == "-") {
        if (a.barcode.empty() || a.barcode == "-") std::cout << '\n';
    }
    Output out(a.stats);
    phu::write_stats_csv(out.stream(), red.stats, D.dims);
    return 0;
}

struct RemoveArgs {
    std::string input, simplex, algorithm = "esmur", barcode, report;
    phu::index_t index = -1;
    bool verify = false;
};

int cmd_remove(const RemoveArgs& a) {
    const auto f = load_filtration(a.input);
    const auto algorithm = phu::parse_algorithm(a.algorithm);
    phu::index_t sigma = a.index;
    if (!a.simplex.empty()) {
        std::istringstream is(a.simplex);
        std::vector<phu::vertex_t> verts;
        phu::vertex_t v;
        while (is >> v) verts.push_back(v);
        if (!is.eof()) throw UsageError("--simplex must be a list of vertex ids");
        std::sort(verts.begin(), verts.end());
        phu::CofaceIndex idx(f);
        auto pos = idx.find(phu::Simplex(verts));
        if (!pos) throw UsageError("simplex '" + a.simplex + "' is not in the filtration");
        sigma = *pos;
    }
    if (sigma < 0 || sigma >= f.size())
        throw UsageError("--index " + std::to_string(sigma) + " out of range [0, " + std::to_string(f.size()) + ")");

    auto red = phu::sba_reduce(phu::boundary_matrix(f));
    phu::CofaceIndex idx(f);
    const auto report = phu::mur_remove(red.dec, f, idx, sigma, algorithm);
    const auto bc = phu::extract_barcode(red.dec);
    {
        Output out(a.barcode);
        phu::write_barcode_csv(out.stream(), bc, values_of(f));
    }
    if ((a.report.empty() || a.report == "-") && (a.barcode.empty() || a.barcode == "-")) std::cout << '\n';
    {
        Output out(a.report);
        phu::write_report_csv(out.stream(), report);
    }
    if (a.verify) {
        const auto res = phu::check_removal(f, sigma, algorithm);
        if (!res.passed()) {
            std::cerr << "verification failed: " << res.mismatches.size() << " mismatched bars"
                      << (res.product_ok ? "" : ", R != D V") << (res.reduced_ok ? "" : ", R not reduced")
                      << (res.error.empty() ? "" : ", error: " + res.error) << '\n';
            for (const auto& m : res.mismatches)
                std::cerr << (m.ours_only ? "  ours only:   " : "  oracle only: ") << "dim " << m.bar.dim << " ["
                          << m.bar.birth.to_string() << "] -> ["
                          << (m.bar.death ? m.bar.death->to_string() : std::string("inf")) << "]\n";
            return exit_mismatch;
        }
        std::cerr << "verified against fresh reduction\n";
    }
    return 0;
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream is(s);
    while (std::getline(is, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

struct BenchArgs {
    std::string models = "er", sizes = "10", out, plot;
    int samples = 1;
    int max_dim = 2;
    std::size_t point_dim = 16;
    std::uint64_t seed = 0;
};

int cmd_bench(const BenchArgs& a) {
    phu::BenchConfig cfg;
    for (const auto& m : split_list(a.models)) cfg.models.push_back(phu::parse_model(m));
    for (const auto& s : split_list(a.sizes)) {
        std::size_t n = 0;
        auto res = std::from_chars(s.data(), s.data() + s.size(), n);
        if (res.ec != std::errc{} || res.ptr != s.data() + s.size() || n == 0)
            throw UsageError("bad size '" + s + "'");
        cfg.sizes.push_back(n);
    }
    if (cfg.models.empty() || cfg.sizes.empty()) throw UsageError("--models and --sizes must be non-empty");
    if (a.samples < 1) throw UsageError("--samples must be positive");
    cfg.samples = a.samples;
    cfg.seed = a.seed;
    cfg.max_dim = a.max_dim;
    cfg.point_dim = a.point_dim;
    cfg.threads = worker_count();
    const auto rows = phu::run_bench(cfg);
    {
        Output out(a.out);
        out.stream() << "# seed=" << a.seed << '\n';
        phu::write_bench_csv(out.stream(), rows);
    }
    if (!a.plot.empty()) {
        Output plot(a.plot);
        phu::write_bench_svg(plot.stream(), rows);
    }
    return 0;
}

struct VerifyArgs {
    std::string model = "er", out;
    std::size_t n = 12;
    std::size_t dim = 3;
    int max_dim = 2;
    std::int64_t trials = 100;
    std::uint64_t seed = 0;
    bool exhaustive_rank = false;
};

int cmd_verify(const VerifyArgs& a) {
    if (a.trials < 0) throw UsageError("--trials must be non-negative");
    phu::GenSpec spec;
    spec.model = phu::parse_model(a.model);
    spec.n = a.n;
    spec.point_dim = a.dim;
    spec.max_dim = a.max_dim;
    if (a.n == 0) throw UsageError("--n must be positive");
    const auto trials = phu::fuzz_trials(spec, a.trials, a.seed, worker_count(), a.exhaustive_rank);
    const auto summaries = phu::summarize(trials);
    {
        Output out(a.out);
        out.stream() << "# seed=" << a.seed << " model=" << a.model << " n=" << a.n << '\n';
        phu::write_summary_csv(out.stream(), a.trials == 0 ? std::vector<phu::FuzzSummary>{} : summaries);
    }
    for (const auto& s : summaries)
        if (s.failures > 0) {
            for (const auto& t : trials)
                for (const auto* r : {&t.smur, &t.esmur})
                    if (!r->passed())
                        std::cerr << "trial seed " << t.seed << " sigma " << t.sigma << " ("
                                  << phu::to_string(r == &t.smur ? phu::Algorithm::smur : phu::Algorithm::esmur)
                                  << "): " << r->mismatches.size() << " mismatched bars"
                                  << (r->error.empty() ? "" : ", error: " + r->error) << '\n';
            return exit_mismatch;
        }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
#ifdef PHU_FAULT_INJECTION
    phu::testing::set_fault_injection(true);
#endif
    CLI::App app{"Persistence barcodes with in-place simplex removal"};
    app.require_subcommand(1);

    GenerateArgs gen;
    auto* g = app.add_subcommand("generate", "Write a seeded filtration in native format");
    g->add_option("--model", gen.model, "vr | er | shuffled | lowerstar")->required();
    g->add_option("--n", gen.n, "Number of vertices / points");
    g->add_option("--dim", gen.dim, "Ambient dimension of random points (vr)");
    g->add_option("--max-dim", gen.max_dim, "Top simplex dimension (vr)");
    g->add_option("--max-radius", gen.max_radius, "Ball radius cap (vr); edges enter up to twice this");
    g->add_option("--seed", gen.seed, "Random seed");
    g->add_option("--points", gen.points, "Point cloud CSV (vr)");
    g->add_option("--values", gen.values, "Vertex values, one per line (lowerstar)");
    g->add_option("--complex", gen.complex, "Native filtration giving the complex (lowerstar)");
    g->add_option("--out", gen.out, "Output file (default stdout)");

    ReduceArgs red;
    auto* r = app.add_subcommand("reduce", "Reduce a filtration; print barcode and column usage");
    r->add_option("input", red.input, "Input file")->required();
    r->add_option("--format", red.format, "native | phat");
    r->add_option("--barcode", red.barcode, "Barcode CSV output (default stdout)");
    r->add_option("--stats", red.stats, "Stats CSV output (default stdout)");

    RemoveArgs rem;
    auto* rm = app.add_subcommand("remove", "Remove a simplex and its cofaces, updating the reduction");
    rm->add_option("input", rem.input, "Native filtration file")->required();
    auto* simplex_opt = rm->add_option("--simplex", rem.simplex, "Vertex ids of the simplex, e.g. \"1 2\"");
    auto* index_opt = rm->add_option("--index", rem.index, "Filtration position of the simplex");
    simplex_opt->excludes(index_opt);
    rm->add_option("--algorithm", rem.algorithm, "smur | esmur");
    rm->add_flag("--verify", rem.verify, "Compare with a fresh reduction of the residual filtration");
    rm->add_option("--barcode", rem.barcode, "Barcode CSV output (default stdout)");
    rm->add_option("--report", rem.report, "Removal report CSV output (default stdout)");

    BenchArgs bench;
    auto* b = app.add_subcommand("bench", "Column-usage statistics over generated filtrations");
    b->add_option("--models", bench.models, "Comma-separated models");
    b->add_option("--sizes", bench.sizes, "Comma-separated vertex counts");
    b->add_option("--samples", bench.samples, "Samples per (model, size)");
    b->add_option("--seed", bench.seed, "Random seed");
    b->add_option("--max-dim", bench.max_dim, "Top simplex dimension (vr)");
    b->add_option("--point-dim", bench.point_dim, "Ambient dimension of random points (vr)");
    b->add_option("--out", bench.out, "CSV output (default stdout)");
    b->add_option("--plot", bench.plot, "SVG scatter plot output");

    VerifyArgs ver;
    auto* v = app.add_subcommand("verify", "Fuzz removals against fresh reductions");
    v->add_option("--model", ver.model, "vr | er | shuffled | lowerstar");
    v->add_option("--n", ver.n, "Number of vertices / points");
    v->add_option("--dim", ver.dim, "Ambient dimension of random points (vr)");
    v->add_option("--max-dim", ver.max_dim, "Top simplex dimension (vr)");
    v->add_option("--trials", ver.trials, "Number of trials");
    v->add_option("--seed", ver.seed, "Random seed");
    v->add_flag("--exhaustive-rank", ver.exhaustive_rank, "Also check lower-left ranks when m <= 12");
    v->add_option("--out", ver.out, "Summary CSV output (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_usage;
    }

    try {
        if (g->parsed()) return cmd_generate(gen);
        if (r->parsed()) return cmd_reduce(red);
        if (rm->parsed()) {
            if (rem.simplex.empty() && rem.index < 0 && index_opt->count() == 0)
                throw UsageError("one of --simplex or --index is required");
            return cmd_remove(rem);
        }
        if (b->parsed()) return cmd_bench(bench);
        if (v->parsed()) return cmd_verify(ver);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const phu::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_parse;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_parse;
    }
    return exit_usage;
}
