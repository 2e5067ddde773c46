#include "phu/reduce.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace phu {

index_t Decomposition::live_count() const {
    return std::count(live.begin(), live.end(), static_cast<char>(1));
}

bool Decomposition::is_reduced() const {
    std::vector<index_t> owner(R.size(), no_index);
    for (index_t j = 0; j < size(); ++j) {
        if (!live[j]) {
            if (!R[j].empty() || !V[j].empty()) return false;
            continue;
        }
        auto p = pivot(R[j]);
        if (!p) continue;
        if (owner[*p] != no_index) return false;
        owner[*p] = j;
    }
    return owner == pivot_owner;
}

bool Decomposition::is_triangular() const {
    for (index_t j = 0; j < size(); ++j)
        if (live[j] && (V[j].empty() || V[j].back() != j)) return false;
    return true;
}

bool Decomposition::product_holds() const {
    return matrix_product_check(D, V, R, live);
}

std::int64_t ReductionStats::max_usage() const {
    if (usage_count.empty()) return 0;
    return *std::max_element(usage_count.begin(), usage_count.end());
}

double ReductionStats::avg_usage() const {
    if (usage_count.empty()) return 0.0;
    const double sum = std::accumulate(usage_count.begin(), usage_count.end(), 0.0);
    return sum / static_cast<double>(usage_count.size());
}

double ReductionStats::avg_usage_used() const {
    double sum = 0.0;
    std::int64_t used = 0;
    for (auto c : usage_count) {
        if (c > 0) {
            sum += static_cast<double>(c);
            ++used;
        }
    }
    return used ? sum / static_cast<double>(used) : 0.0;
}

std::int64_t ReductionStats::max_direct() const {
    if (direct_uses.empty()) return 0;
    return *std::max_element(direct_uses.begin(), direct_uses.end());
}

double ReductionStats::avg_direct() const {
    if (direct_uses.empty()) return 0.0;
    return std::accumulate(direct_uses.begin(), direct_uses.end(), 0.0) / static_cast<double>(direct_uses.size());
}

void record_addition(ReductionStats& stats, index_t src, const Column& src_v) {
    for (index_t k : src_v) ++stats.usage_count[k];
    ++stats.direct_uses[src];
    ++stats.total_additions;
}

void finalize_flags(const Decomposition& dec, ReductionStats& stats) {
    stats.zero_flag.assign(dec.R.size(), 0);
    for (index_t rho = 0; rho < dec.size(); ++rho) {
        if (!dec.live[rho] || !dec.R[rho].empty()) continue;
        for (index_t t : dec.V[rho])
            if (t != rho) stats.zero_flag[t] = 1;
    }
}

Reduction sba_reduce(const BoundaryMatrix& D) {
    const index_t m = D.size();
    Reduction out;
    Decomposition& dec = out.dec;
    ReductionStats& stats = out.stats;
    dec.D = D;
    dec.R = D.columns;
    dec.V.resize(m);
    dec.pivot_owner.assign(m, no_index);
    dec.live.assign(m, 1);
    dec.labels.resize(m);
    std::iota(dec.labels.begin(), dec.labels.end(), index_t{0});
    stats.usage_count.assign(m, 0);
    stats.direct_uses.assign(m, 0);

    Column scratch;
    for (index_t j = 0; j < m; ++j) {
        dec.V[j] = {j};
        Column& col = dec.R[j];
        while (!col.empty()) {
            const index_t owner = dec.pivot_owner[col.back()];
            if (owner == no_index) break;
            record_addition(stats, owner, dec.V[owner]);
            add_into(col, dec.R[owner], scratch);
            add_into(dec.V[j], dec.V[owner], scratch);
        }
        if (!col.empty()) dec.pivot_owner[col.back()] = j;
    }
    finalize_flags(dec, stats);
    return out;
}

std::vector<Bar> Barcode::all() const {
    std::vector<Bar> out = pairs;
    out.insert(out.end(), essentials.begin(), essentials.end());
    return out;
}

Barcode extract_barcode(const Decomposition& dec) {
    Barcode bc;
    for (index_t j = 0; j < dec.size(); ++j) {
        if (!dec.live[j]) continue;
        if (auto p = pivot(dec.R[j])) {
            bc.pairs.push_back({dec.dim(*p), *p, dec.labels[j]});
        } else if (!dec.is_paired_row(dec.labels[j])) {
            bc.essentials.push_back({dec.dim(dec.labels[j]), dec.labels[j], no_index});
        }
    }
    std::sort(bc.pairs.begin(), bc.pairs.end());
    std::sort(bc.essentials.begin(), bc.essentials.end());
    return bc;
}

std::int64_t lower_left_rank(std::span<const Column> M, index_t n_rows, index_t row_cut,
                             index_t col_cut) {
    if (row_cut < 0 || row_cut > n_rows || col_cut < 0 || col_cut > static_cast<index_t>(M.size()))
        throw std::out_of_range("lower_left_rank: cut out of range");
    std::unordered_map<index_t, Column> by_pivot;
    std::int64_t rank = 0;
    Column scratch;
    for (index_t j = 0; j < col_cut; ++j) {
        Column col;
        for (index_t r : M[j]) {
            if (r >= n_rows) throw std::out_of_range("lower_left_rank: row id beyond n_rows");
            if (r >= row_cut) col.push_back(r);
        }
        while (!col.empty()) {
            auto it = by_pivot.find(col.back());
            if (it == by_pivot.end()) break;
            add_into(col, it->second, scratch);
        }
        if (!col.empty()) {
            by_pivot.emplace(col.back(), std::move(col));
            ++rank;
        }
    }
    return rank;
}

}  // namespace phu
