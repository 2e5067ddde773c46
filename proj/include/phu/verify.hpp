#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "phu/complex.hpp"
#include "phu/generate.hpp"
#include "phu/reduce.hpp"
#include "phu/update.hpp"

namespace phu {

/// A bar identified by simplices rather than positions, so bars from an updated
/// decomposition and from a fresh reduction of the residual filtration compare.
struct NamedBar {
    int dim = 0;
    Simplex birth;
    std::optional<Simplex> death;

    friend bool operator==(const NamedBar&, const NamedBar&) = default;
    friend auto operator<=>(const NamedBar&, const NamedBar&) = default;
};

/// Sorted multiset of bars.
using NamedBarcode = std::vector<NamedBar>;

NamedBarcode name_barcode(const Filtration& f, const Barcode& bc);

/// Fresh reduction of `f`, or of `f` minus the star of `remove`.
NamedBarcode oracle_barcode(const Filtration& f, std::optional<index_t> remove = std::nullopt);

/// Fresh reduction of `f` minus the stars of each position in `removals`, taken
/// one after another.
NamedBarcode oracle_barcode_after(const Filtration& f, const std::vector<index_t>& removals);

struct BarMismatch {
    NamedBar bar;
    bool ours_only = false;
};

struct OracleResult {
    bool match = false;
    std::vector<BarMismatch> mismatches;
    bool product_ok = false;
    bool reduced_ok = false;
    bool triangular_ok = false;
    std::optional<bool> rank_ok;  // set when the rank criterion was checked
    std::string error;            // non-empty when the update threw
    std::int64_t our_additions = 0;
    std::int64_t oracle_additions = 0;
    RemovalReport report;

    bool passed() const { return match && product_ok && reduced_ok && triangular_ok && rank_ok.value_or(true) && error.empty(); }
};

std::vector<BarMismatch> diff_barcodes(const NamedBarcode& ours, const NamedBarcode& oracle);

/// Reduces `f`, removes the stars of `removals` in turn with `algorithm`, and
/// compares against the oracle on the residual filtration. With `rank_check`,
/// the rank criterion is also checked on the result when it has at most
/// default_rank_bound live simplices.
OracleResult check_removals(const Filtration& f, const std::vector<index_t>& removals, Algorithm algorithm,
                            bool rank_check = false);

inline OracleResult check_removal(const Filtration& f, index_t sigma, Algorithm algorithm,
                                  bool rank_check = false) {
    return check_removals(f, {sigma}, algorithm, rank_check);
}

inline constexpr index_t default_rank_bound = 12;

/// Lower-left ranks of D and R agree for every pair of cuts. Throws
/// std::invalid_argument when m exceeds `bound`.
bool check_rank_criterion(std::span<const Column> D, std::span<const Column> R,
                          index_t bound = default_rank_bound);

/// Live part of a decomposition with rows and columns renumbered densely in
/// slot order; pairs (D, R) suitable for check_rank_criterion.
struct CompactMatrices {
    std::vector<Column> D;
    std::vector<Column> R;
};
CompactMatrices compact_live(const Decomposition& dec);

/// Effect of removing one maximal simplex on the barcode.
enum class MaximalCase {
    positive,        // one essential bar in dim(tau) disappears
    negative_free,   // tau stops being a death; one more essential bar a dimension down
    negative_cycle,  // an essential bar disappears and its birth takes over tau's death
    unclassified
};

const char* to_string(MaximalCase c);

/// Classifies the change from `before` to `after` when the maximal simplex `tau`
/// was removed. Matches against all three patterns; more or less than one match
/// is reported as unclassified.
MaximalCase classify_maximal_removal(const NamedBarcode& before, const NamedBarcode& after, const Simplex& tau);

struct FuzzSummary {
    Algorithm algorithm = Algorithm::esmur;
    std::int64_t trials = 0;
    std::int64_t passes = 0;
    std::int64_t failures = 0;
    std::int64_t branch_zero = 0;
    std::int64_t branch_swap = 0;
    std::int64_t branch_else = 0;
    std::int64_t branch_trivial = 0;
    std::int64_t max_additions = 0;
};

/// One fuzz trial: the generated filtration, the chosen simplex and both runs.
struct FuzzTrial {
    std::uint64_t seed = 0;
    index_t sigma = 0;
    index_t m = 0;
    OracleResult smur;
    OracleResult esmur;
};

/// Runs `trials` independent trials (filtration from `spec` with a derived seed,
/// uniform sigma) in both modes. Trials run on up to `threads` OpenMP workers;
/// results are in trial order regardless of scheduling.
std::vector<FuzzTrial> fuzz_trials(const GenSpec& spec, std::int64_t trials, std::uint64_t seed,
                                   int threads = 1, bool rank_check = false);

/// Per-mode summaries, smur first.
std::vector<FuzzSummary> summarize(const std::vector<FuzzTrial>& trials);

inline std::vector<FuzzSummary> fuzz_removals(const GenSpec& spec, std::int64_t trials, std::uint64_t seed,
                                              int threads = 1, bool rank_check = false) {
    return summarize(fuzz_trials(spec, trials, seed, threads, rank_check));
}

}  // namespace phu
