#include "phu/update.hpp"

#include <algorithm>
#include <atomic>

namespace phu {

namespace {

std::atomic<bool> g_fault{false};

void drop_owner(Decomposition& dec, index_t slot) {
    if (auto p = pivot(dec.R[slot]); p && dec.pivot_owner[*p] == slot) dec.pivot_owner[*p] = no_index;
}

void claim_owner(Decomposition& dec, index_t slot) {
    auto p = pivot(dec.R[slot]);
    if (!p) return;
    if (dec.pivot_owner[*p] != no_index && dec.pivot_owner[*p] != slot)
        throw ConsistencyError("pivot " + std::to_string(*p) + " claimed by slots " +
                               std::to_string(dec.pivot_owner[*p]) + " and " + std::to_string(slot));
    dec.pivot_owner[*p] = slot;
}

void clear_column(Decomposition& dec, index_t tau) {
    drop_owner(dec, tau);
    dec.R[tau].clear();
    dec.R[tau].shrink_to_fit();
    dec.V[tau].clear();
    dec.V[tau].shrink_to_fit();
}

void require_live(const Decomposition& dec, index_t tau) {
    if (tau < 0 || tau >= dec.size() || !dec.live[tau])
        throw PreconditionError("position " + std::to_string(tau) + " is not live");
}

// Standard reduction restricted to live columns of dimension `d` at slots >= `from`.
void rereduce_from(Decomposition& dec, int d, index_t from, StepReport& step) {
    std::vector<index_t> cols;
    for (index_t j = from; j < dec.size(); ++j)
        if (dec.live[j] && dec.dim(j) == d) cols.push_back(j);
    for (index_t j : cols) drop_owner(dec, j);
    Column scratch;
    for (index_t j : cols) {
        Column& col = dec.R[j];
        while (!col.empty()) {
            const index_t owner = dec.pivot_owner[col.back()];
            if (owner == no_index) break;
            if (owner == j || dec.R[owner].empty() || dec.R[owner].back() != col.back())
                throw ConsistencyError("stale pivot owner for row " + std::to_string(col.back()));
            add_into(col, dec.R[owner], scratch);
            add_into(dec.V[j], dec.V[owner], scratch);
            ++step.additions_R;
            ++step.additions_V;
        }
        claim_owner(dec, j);
    }
}


Branch classify(const Decomposition& dec, const std::vector<index_t>& support) {
    if (support.empty()) return Branch::trivial;
    for (index_t rho : support)
        if (dec.R[rho].empty()) return Branch::swap;
    return Branch::else_branch;
}

StepReport smur_steps(Decomposition& dec, index_t tau, const std::vector<index_t>& support, StepReport step) {
    for (index_t rho : support) drop_owner(dec, rho);
    Column scratch;
    for (index_t rho : support) {
        add_into(dec.R[rho], dec.R[tau], scratch);
        add_into(dec.V[rho], dec.V[tau], scratch);
        ++step.additions_R;
        ++step.additions_V;
    }
    clear_column(dec, tau);
    if (!support.empty()) rereduce_from(dec, step.dim, support.front(), step);
    return step;
}

}  // namespace

const char* to_string(Algorithm a) { return a == Algorithm::smur ? "smur" : "esmur"; }

const char* to_string(Branch b) {
    switch (b) {
        case Branch::zero_column: return "zero-column";
        case Branch::swap: return "swap";
        case Branch::else_branch: return "else";
        case Branch::trivial: return "trivial";
    }
    return "?";
}

Algorithm parse_algorithm(const std::string& s) {
    if (s == "smur") return Algorithm::smur;
    if (s == "esmur") return Algorithm::esmur;
    throw std::invalid_argument("unknown algorithm '" + s + "' (expected smur or esmur)");
}

std::vector<index_t> RemovalReport::removed() const {
    std::vector<index_t> out;
    out.reserve(steps.size());
    for (const auto& s : steps) out.push_back(s.position);
    return out;
}

std::int64_t RemovalReport::additions_R() const {
    std::int64_t n = 0;
    for (const auto& s : steps) n += s.additions_R;
    return n;
}

std::int64_t RemovalReport::additions_V() const {
    std::int64_t n = 0;
    for (const auto& s : steps) n += s.additions_V;
    return n;
}

std::int64_t RemovalReport::swaps() const {
    std::int64_t n = 0;
    for (const auto& s : steps) n += s.swaps;
    return n;
}

std::vector<index_t> support_set(const Decomposition& dec, index_t tau) {
    std::vector<index_t> out;
    const int d = dec.dim(tau);
    for (index_t j = 0; j < dec.size(); ++j) {
        if (j == tau || !dec.live[j] || dec.dim(j) != d) continue;
        if (contains(dec.V[j], tau)) out.push_back(j);
    }
    return out;
}

StepReport smur_fix(Decomposition& dec, index_t tau) {
    require_live(dec, tau);
    if (dec.R[tau].empty()) throw PreconditionError("smur_fix: column " + std::to_string(tau) + " is zero");
    StepReport step;
    step.position = tau;
    step.dim = dec.dim(tau);
    const auto support = support_set(dec, tau);
    step.support_size = static_cast<std::int64_t>(support.size());
    step.branch = classify(dec, support);
    return smur_steps(dec, tau, support, step);
}

StepReport esmur_fix(Decomposition& dec, index_t tau) {
    require_live(dec, tau);
    if (dec.R[tau].empty()) throw PreconditionError("esmur_fix: column " + std::to_string(tau) + " is zero");
    StepReport step;
    step.position = tau;
    step.dim = dec.dim(tau);
    const auto support = support_set(dec, tau);
    step.support_size = static_cast<std::int64_t>(support.size());
    step.branch = classify(dec, support);

    // Each support column absorbs the earlier column (tau included) with the
    // lowest pivot, a zero column counting as lowest. A column below all earlier
    // pivots inherits the previous lowest one; the others keep their own.
    auto low = [&](index_t c) { return dec.R[c].empty() ? no_index : dec.R[c].back(); };
    std::vector<index_t> parent(support.size());
    index_t best = tau;
    for (std::size_t i = 0; i < support.size(); ++i) {
        parent[i] = best;
        if (low(support[i]) < low(best)) {
            best = support[i];
            ++step.swaps;
        }
    }

    for (index_t rho : support) drop_owner(dec, rho);
    drop_owner(dec, tau);
    const bool fault = g_fault.load(std::memory_order_relaxed);
    Column scratch;
    // right to left, so every parent is still unmodified when it is read
    for (std::size_t i = support.size(); i-- > 0;) {
        const index_t rho = support[i], p = parent[i];
        if (!dec.R[p].empty() && !(fault && low(rho) < low(p))) {
            add_into(dec.R[rho], dec.R[p], scratch);
            ++step.additions_R;
        }
        add_into(dec.V[rho], dec.V[p], scratch);
        ++step.additions_V;
    }
    clear_column(dec, tau);
    for (index_t rho : support) claim_owner(dec, rho);
    return step;
}

StepReport remove_positive_column(Decomposition& dec, index_t tau) {
    require_live(dec, tau);
    if (!dec.R[tau].empty())
        throw PreconditionError("remove_positive_column: column " + std::to_string(tau) + " is nonzero");
    if (dec.is_paired_row(tau))
        throw ConsistencyError("remove_positive_column: " + std::to_string(tau) +
                               " is still killed by a live coface");
    StepReport step;
    step.position = tau;
    step.dim = dec.dim(tau);
    const auto support = support_set(dec, tau);
    step.support_size = static_cast<std::int64_t>(support.size());
    step.branch = support.empty() ? Branch::trivial : Branch::zero_column;
    Column scratch;
    for (index_t rho : support) {
        add_into(dec.V[rho], dec.V[tau], scratch);
        ++step.additions_V;
    }
    clear_column(dec, tau);
    return step;
}

void delete_row(Decomposition& dec, index_t tau) {
    require_live(dec, tau);
    if (!dec.R[tau].empty() || !dec.V[tau].empty())
        throw ConsistencyError("delete_row: column " + std::to_string(tau) + " still present");
    if (dec.is_paired_row(tau))
        throw ConsistencyError("delete_row: row " + std::to_string(tau) + " is a pivot");
    const int d = dec.dim(tau);
    for (index_t j = 0; j < dec.size(); ++j) {
        if (!dec.live[j] || j == tau) continue;
        if (dec.dim(j) == d && contains(dec.V[j], tau))
            throw ConsistencyError("delete_row: row " + std::to_string(tau) + " of V nonzero in column " +
                                   std::to_string(j));
        if (dec.dim(j) == d + 1 && (contains(dec.R[j], tau) || contains(dec.D.columns[j], tau)))
            throw ConsistencyError("delete_row: row " + std::to_string(tau) + " still used by live coface " +
                                   std::to_string(j));
    }
    dec.live[tau] = 0;
}

RemovalReport mur_remove(Decomposition& dec, const Filtration& f, CofaceIndex& idx, index_t sigma,
                         Algorithm algorithm) {
    if (!idx.is_live(sigma) || sigma >= dec.size() || !dec.live[sigma])
        throw PreconditionError("position " + std::to_string(sigma) + " is not live");
    RemovalReport report;
    for (index_t tau : star(f, idx, sigma)) {
        StepReport step;
        if (dec.R[tau].empty())
            step = remove_positive_column(dec, tau);
        else if (algorithm == Algorithm::esmur)
            step = esmur_fix(dec, tau);
        else
            step = smur_fix(dec, tau);
        delete_row(dec, tau);
        idx.mark_removed(tau);
        report.steps.push_back(step);
    }
    return report;
}

namespace testing {
void set_fault_injection(bool on) { g_fault.store(on, std::memory_order_relaxed); }
bool fault_injection() { return g_fault.load(std::memory_order_relaxed); }
}  // namespace testing

}  // namespace phu
