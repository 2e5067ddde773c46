#include "phu/verify.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include <omp.h>

#include "phu/rng.hpp"

namespace phu {

NamedBarcode name_barcode(const Filtration& f, const Barcode& bc) {
    NamedBarcode out;
    for (const Bar& b : bc.all()) {
        NamedBar nb{b.dim, f.simplex(b.birth), std::nullopt};
        if (!b.essential()) nb.death = f.simplex(b.death);
        out.push_back(std::move(nb));
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

std::vector<index_t> removed_positions(const Filtration& f, const std::vector<index_t>& removals) {
    CofaceIndex idx(f);
    std::vector<index_t> removed;
    for (index_t sigma : removals) {
        for (index_t p : star(f, idx, sigma)) {
            idx.mark_removed(p);
            removed.push_back(p);
        }
    }
    return removed;
}

NamedBarcode reduce_and_name(const Filtration& f, std::int64_t* additions) {
    auto red = sba_reduce(boundary_matrix(f));
    if (additions) *additions = red.stats.total_additions;
    return name_barcode(f, extract_barcode(red.dec));
}

NamedBarcode oracle_impl(const Filtration& f, const std::vector<index_t>& removals, std::int64_t* additions) {
    Filtration residual = filtration_without(f, removed_positions(f, removals));
    if (auto v = validate_filtration(residual))
        throw std::logic_error("residual filtration invalid at position " + std::to_string(v->position) + ": " +
                               v->reason);
    return reduce_and_name(residual, additions);
}

}  // namespace

NamedBarcode oracle_barcode(const Filtration& f, std::optional<index_t> remove) {
    if (remove) return oracle_impl(f, {*remove}, nullptr);
    return oracle_impl(f, {}, nullptr);
}

NamedBarcode oracle_barcode_after(const Filtration& f, const std::vector<index_t>& removals) {
    return oracle_impl(f, removals, nullptr);
}

std::vector<BarMismatch> diff_barcodes(const NamedBarcode& ours, const NamedBarcode& oracle) {
    std::vector<BarMismatch> out;
    std::vector<NamedBar> only_ours, only_oracle;
    std::set_difference(ours.begin(), ours.end(), oracle.begin(), oracle.end(), std::back_inserter(only_ours));
    std::set_difference(oracle.begin(), oracle.end(), ours.begin(), ours.end(), std::back_inserter(only_oracle));
    for (auto& b : only_ours) out.push_back({std::move(b), true});
    for (auto& b : only_oracle) out.push_back({std::move(b), false});
    return out;
}

OracleResult check_removals(const Filtration& f, const std::vector<index_t>& removals, Algorithm algorithm,
                            bool rank_check) {
    OracleResult res;
    auto red = sba_reduce(boundary_matrix(f));
    Decomposition& dec = red.dec;
    CofaceIndex idx(f);
    try {
        for (index_t sigma : removals) {
            auto rep = mur_remove(dec, f, idx, sigma, algorithm);
            res.report.steps.insert(res.report.steps.end(), rep.steps.begin(), rep.steps.end());
        }
    } catch (const std::exception& e) {
        res.error = e.what();
        return res;
    }
    res.our_additions = res.report.additions_R() + res.report.additions_V();
    res.product_ok = dec.product_holds();
    res.reduced_ok = dec.is_reduced();
    res.triangular_ok = dec.is_triangular();
    const NamedBarcode ours = name_barcode(f, extract_barcode(dec));
    const NamedBarcode oracle = oracle_impl(f, removals, &res.oracle_additions);
    res.mismatches = diff_barcodes(ours, oracle);
    res.match = res.mismatches.empty();
    if (rank_check && dec.live_count() <= default_rank_bound) {
        const auto cm = compact_live(dec);
        res.rank_ok = check_rank_criterion(cm.D, cm.R);
    }
    return res;
}

bool check_rank_criterion(std::span<const Column> D, std::span<const Column> R, index_t bound) {
    const auto m = static_cast<index_t>(D.size());
    if (m > bound)
        throw std::invalid_argument("check_rank_criterion: " + std::to_string(m) + " columns exceed bound " +
                                    std::to_string(bound));
    if (static_cast<index_t>(R.size()) != m) throw std::invalid_argument("check_rank_criterion: size mismatch");
    for (index_t rc = 0; rc <= m; ++rc)
        for (index_t cc = 0; cc <= m; ++cc)
            if (lower_left_rank(D, m, rc, cc) != lower_left_rank(R, m, rc, cc)) return false;
    return true;
}

CompactMatrices compact_live(const Decomposition& dec) {
    std::vector<index_t> rename(dec.size(), no_index);
    index_t next = 0;
    for (index_t j = 0; j < dec.size(); ++j)
        if (dec.live[j]) rename[j] = next++;
    auto remap = [&](const Column& c) {
        Column out;
        out.reserve(c.size());
        for (index_t r : c) {
            if (rename[r] == no_index) throw std::logic_error("compact_live: dead row " + std::to_string(r));
            out.push_back(rename[r]);
        }
        return out;  // renaming is monotone, order kept
    };
    CompactMatrices cm;
    for (index_t j = 0; j < dec.size(); ++j) {
        if (!dec.live[j]) continue;
        cm.D.push_back(remap(dec.D.columns[j]));
        cm.R.push_back(remap(dec.R[j]));
    }
    return cm;
}

const char* to_string(MaximalCase c) {
    switch (c) {
        case MaximalCase::positive: return "positive";
        case MaximalCase::negative_free: return "negative-free";
        case MaximalCase::negative_cycle: return "negative-cycle";
        case MaximalCase::unclassified: return "unclassified";
    }
    return "?";
}

namespace {

NamedBarcode remove_one(NamedBarcode bars, const NamedBar& b) {
    auto it = std::find(bars.begin(), bars.end(), b);
    if (it == bars.end()) throw std::logic_error("bar not present");
    bars.erase(it);
    return bars;
}

bool matches_positive(const NamedBarcode& before, const NamedBarcode& after, const Simplex& tau) {
    const NamedBar lost{tau.dim(), tau, std::nullopt};
    if (std::find(before.begin(), before.end(), lost) == before.end()) return false;
    return remove_one(before, lost) == after;
}

std::optional<NamedBar> killed_by(const NamedBarcode& bars, const Simplex& tau) {
    for (const auto& b : bars)
        if (b.death && *b.death == tau) return b;
    return std::nullopt;
}

// Bars of dimension `dim` as (births, deaths) multisets.
std::pair<std::vector<Simplex>, std::vector<Simplex>> ends(const NamedBarcode& bars, int dim) {
    std::vector<Simplex> births, deaths;
    for (const auto& b : bars) {
        if (b.dim != dim) continue;
        births.push_back(b.birth);
        if (b.death) deaths.push_back(*b.death);
    }
    std::sort(births.begin(), births.end());
    std::sort(deaths.begin(), deaths.end());
    return {births, deaths};
}

NamedBarcode without_dim(const NamedBarcode& bars, int dim) {
    NamedBarcode out;
    for (const auto& b : bars)
        if (b.dim != dim) out.push_back(b);
    return out;
}

// The freed class may re-pair with later merges in the dimension below (elder
// rule), so compare endpoints there rather than bars.
bool matches_negative_free(const NamedBarcode& before, const NamedBarcode& after, const Simplex& tau) {
    if (!killed_by(before, tau)) return false;
    const int low = tau.dim() - 1;
    if (without_dim(before, low) != without_dim(after, low)) return false;
    auto [b_before, d_before] = ends(before, low);
    auto [b_after, d_after] = ends(after, low);
    d_before.erase(std::find(d_before.begin(), d_before.end(), tau));
    return b_before == b_after && d_before == d_after;
}

bool matches_negative_cycle(const NamedBarcode& before, const NamedBarcode& after, const Simplex& tau) {
    auto killed = killed_by(before, tau);
    if (!killed) return false;
    const int d = tau.dim();
    const int low = d - 1;
    int hits = 0;
    for (const auto& cand : before) {
        if (cand.dim != d || cand.death || cand.birth == tau) continue;
        // the essential class born at cand.birth is gone ...
        if (without_dim(remove_one(before, cand), low) != without_dim(after, low)) continue;
        // ... and in the dimension below, cand.birth took over tau's role as a death
        auto [b_before, d_before] = ends(before, low);
        auto [b_after, d_after] = ends(after, low);
        d_before.erase(std::find(d_before.begin(), d_before.end(), tau));
        d_before.push_back(cand.birth);
        std::sort(d_before.begin(), d_before.end());
        if (b_before != b_after || d_before != d_after) continue;
        bool still_finite = false;
        for (const auto& b : after)
            if (b.dim == low && b.birth == killed->birth && b.death) still_finite = true;
        if (still_finite) ++hits;
    }
    return hits == 1;
}

}  // namespace

MaximalCase classify_maximal_removal(const NamedBarcode& before, const NamedBarcode& after, const Simplex& tau) {
    const bool pos = matches_positive(before, after, tau);
    const bool free = matches_negative_free(before, after, tau);
    const bool cyc = matches_negative_cycle(before, after, tau);
    if (pos + free + cyc != 1) return MaximalCase::unclassified;
    if (pos) return MaximalCase::positive;
    if (free) return MaximalCase::negative_free;
    return MaximalCase::negative_cycle;
}

std::vector<FuzzTrial> fuzz_trials(const GenSpec& spec, std::int64_t trials, std::uint64_t seed, int threads,
                                   bool rank_check) {
    std::vector<FuzzTrial> out(static_cast<std::size_t>(std::max<std::int64_t>(trials, 0)));
    const int workers = std::max(1, threads);
#pragma omp parallel for schedule(dynamic) num_threads(workers)
    for (std::int64_t t = 0; t < trials; ++t) {
        FuzzTrial& trial = out[t];
        trial.seed = derive_seed(seed, static_cast<std::uint64_t>(t));
        GenSpec s = spec;
        s.seed = trial.seed;
        const Filtration f = generate(s);
        trial.m = f.size();
        Rng pick(derive_seed(trial.seed, 0x5157));
        trial.sigma = static_cast<index_t>(pick.below(static_cast<std::uint64_t>(f.size())));
        trial.smur = check_removal(f, trial.sigma, Algorithm::smur, rank_check);
        trial.esmur = check_removal(f, trial.sigma, Algorithm::esmur, rank_check);
    }
    return out;
}

std::vector<FuzzSummary> summarize(const std::vector<FuzzTrial>& trials) {
    std::vector<FuzzSummary> out(2);
    out[0].algorithm = Algorithm::smur;
    out[1].algorithm = Algorithm::esmur;
    for (const auto& t : trials) {
        for (int k = 0; k < 2; ++k) {
            const OracleResult& r = k == 0 ? t.smur : t.esmur;
            FuzzSummary& s = out[k];
            ++s.trials;
            if (r.passed())
                ++s.passes;
            else
                ++s.failures;
            for (const auto& step : r.report.steps) {
                switch (step.branch) {
                    case Branch::zero_column: ++s.branch_zero; break;
                    case Branch::swap: ++s.branch_swap; break;
                    case Branch::else_branch: ++s.branch_else; break;
                    case Branch::trivial: ++s.branch_trivial; break;
                }
            }
            s.max_additions = std::max(s.max_additions, r.our_additions);
        }
    }
    return out;
}

}  // namespace phu
