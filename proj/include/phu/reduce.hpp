#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "phu/matrix.hpp"

namespace phu {

inline constexpr index_t no_index = -1;

/// R = D V with bookkeeping for in-place removals.
///
/// Column slots and row ids are the positions of the original filtration and are
/// never renumbered. Removed positions stay allocated with empty columns and
/// live[pos] == 0. pivot_owner[row] is the slot whose R column has that pivot,
/// or no_index.
struct Decomposition {
    BoundaryMatrix D;
    std::vector<Column> R;
    std::vector<Column> V;
    std::vector<index_t> pivot_owner;
    std::vector<char> live;
    /// Simplex that each slot's column stands for. Identity after reduction.
    std::vector<index_t> labels;

    index_t size() const { return static_cast<index_t>(R.size()); }
    int dim(index_t slot) const { return D.dims[slot]; }
    index_t live_count() const;

    bool is_positive(index_t slot) const { return R[slot].empty(); }
    /// True iff `row` is the pivot of some live column.
    bool is_paired_row(index_t row) const { return pivot_owner[row] != no_index; }

    /// Non-empty R columns have distinct pivots and pivot_owner matches them.
    bool is_reduced() const;
    /// Every live V column ends in its own slot.
    bool is_triangular() const;
    /// matrix_product_check on the live part.
    bool product_holds() const;
};

struct ReductionStats {
    std::vector<std::int64_t> usage_count;
    /// Times each column was itself the source of an addition, not counting what it carried.
    std::vector<std::int64_t> direct_uses;
    std::vector<char> zero_flag;
    std::int64_t total_additions = 0;

    std::int64_t max_usage() const;
    /// Mean over all columns.
    double avg_usage() const;
    /// Mean over columns with usage_count > 0; 0 when none were used.
    double avg_usage_used() const;
    std::int64_t max_direct() const;
    double avg_direct() const;
};

struct Reduction {
    Decomposition dec;
    ReductionStats stats;
};

/// Standard left-to-right column reduction keeping V. Flags are finalized.
Reduction sba_reduce(const BoundaryMatrix& D);

/// Counts one addition of slot `src` with V column `src_v`: every simplex carried
/// by it is charged once.
void record_addition(ReductionStats& stats, index_t src, const Column& src_v);

/// zero_flag[t] = some other live column rho has t in V[rho] and R[rho] empty.
void finalize_flags(const Decomposition& dec, ReductionStats& stats);

struct Bar {
    int dim = 0;
    index_t birth = 0;
    index_t death = no_index;  // no_index for essential bars

    bool essential() const { return death == no_index; }
    friend bool operator==(const Bar&, const Bar&) = default;
    friend auto operator<=>(const Bar&, const Bar&) = default;
};

struct Barcode {
    std::vector<Bar> pairs;
    std::vector<Bar> essentials;

    std::vector<Bar> all() const;
};

/// Reads pivot pairs off the live part of a reduced decomposition. Births and
/// deaths are reported through `labels`.
Barcode extract_barcode(const Decomposition& dec);

/// Z2 rank of the block of `M` with rows >= row_cut and columns < col_cut.
/// Throws std::out_of_range when a cut exceeds the matrix size.
std::int64_t lower_left_rank(std::span<const Column> M, index_t n_rows, index_t row_cut,
                             index_t col_cut);

}  // namespace phu
