#pragma once

// Fixtures and brute-force oracles shared by the unit tests and the acceptance run.
// Nothing here calls the reduction code.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "phu/complex.hpp"
#include "phu/reduce.hpp"
#include "phu/verify.hpp"

namespace fixtures {

using phu::Filtration;
using phu::Simplex;
using phu::vertex_t;

// v1, v2, v3, e1 = {1,2}, e2 = {1,3}, e3 = {2,3}
inline Filtration triangle() {
    return phu::filtration_from_order({{1}, {2}, {3}, {1, 2}, {1, 3}, {2, 3}});
}

// Four vertices, edges a = 12, b = 23, c = 34 and a closing edge d that differs
// between the three complexes: 13, 24 or 14.
inline Filtration square(int which) {
    const Simplex d = which == 1 ? Simplex{1, 3} : which == 2 ? Simplex{2, 4} : Simplex{1, 4};
    return phu::filtration_from_order({{1}, {2}, {3}, {4}, {1, 2}, {2, 3}, {3, 4}, d});
}

// Vertices 1..n, then edges {i, i+1} in order.
inline Filtration path(int n) {
    std::vector<Simplex> order;
    for (int i = 1; i <= n; ++i) order.push_back({i});
    for (int i = 1; i < n; ++i) order.push_back({i, i + 1});
    return phu::filtration_from_order(order);
}

inline Simplex sorted(std::vector<vertex_t> v) {
    std::sort(v.begin(), v.end());
    return Simplex(std::move(v));
}

// Wheel with hub 0 and rim 1..5. The rim closes up before the hub arrives.
inline Filtration wheel() {
    std::vector<Simplex> order;
    for (int i = 1; i <= 5; ++i) order.push_back({i});
    for (int i = 1; i <= 5; ++i) order.push_back(sorted({i, i % 5 + 1}));
    order.push_back({0});
    for (int i = 1; i <= 5; ++i) order.push_back({0, i});
    for (int i = 1; i <= 5; ++i) order.push_back(sorted({0, i, i % 5 + 1}));
    return phu::filtration_from_order(order);
}

// Same wheel, in an order where dropping rim edge {4,5} shortens one bar and
// deletes another.
inline Filtration wheel_shortening() {
    return phu::filtration_from_order({{0}, {1}, {2}, {3}, {4}, {5},
                                       {0, 4}, {0, 1}, {1, 2}, {0, 2}, {2, 3}, {1, 5}, {4, 5}, {3, 4}, {0, 5}, {0, 3},
                                       {0, 4, 5}, {0, 1, 5}, {0, 1, 2}, {0, 2, 3}, {0, 3, 4}});
}

// n triangles {0, 1, c} glued along the edge {0, 1}, which enters last among edges.
inline Filtration fan(int n) {
    std::vector<Simplex> order;
    for (int v = 0; v < n + 2; ++v) order.push_back({v});
    for (int c = 2; c < n + 2; ++c) {
        order.push_back({0, c});
        order.push_back({1, c});
    }
    order.push_back({0, 1});
    for (int c = 2; c < n + 2; ++c) order.push_back({0, 1, c});
    return phu::filtration_from_order(order);
}

// Boundary of the tetrahedron on 0..3 in lexicographic order per dimension.
inline Filtration tetrahedron_boundary() {
    return phu::filtration_from_order({{0}, {1}, {2}, {3},
                                       {0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
                                       {0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

// Closed complexes of at most seven simplices, as unordered simplex sets.
inline std::vector<std::vector<Simplex>> small_complexes() {
    return {
        {{0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}, {0, 1, 2}},        // filled triangle
        {{0}, {1}, {2}, {3}, {0, 1}, {0, 2}, {1, 2}},              // hollow triangle and a point
        {{0}, {1}, {2}, {3}, {0, 1}, {1, 2}, {2, 3}},              // path
        {{0}, {1}, {2}, {3}, {0, 1}, {0, 2}, {0, 3}},              // claw
        {{0}, {1}, {2}, {3}, {0, 1}, {2, 3}},                      // two segments
        {{0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}},                   // hollow triangle
    };
}

// Calls `visit` with every order of `simplices` that puts faces before cofaces.
inline void for_each_linear_extension(const std::vector<Simplex>& simplices,
                                      const std::function<void(const std::vector<Simplex>&)>& visit) {
    const std::size_t n = simplices.size();
    std::vector<std::vector<std::size_t>> facets(n);
    for (std::size_t j = 0; j < n; ++j)
        for (const auto& fc : simplices[j].facets())
            for (std::size_t i = 0; i < n; ++i)
                if (simplices[i] == fc) facets[j].push_back(i);
    std::vector<char> used(n, 0);
    std::vector<Simplex> order;
    std::function<void()> rec = [&] {
        if (order.size() == n) {
            visit(order);
            return;
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (used[j]) continue;
            bool ready = true;
            for (auto i : facets[j]) ready = ready && used[i];
            if (!ready) continue;
            used[j] = 1;
            order.push_back(simplices[j]);
            rec();
            order.pop_back();
            used[j] = 0;
        }
    };
    rec();
}

// Rank over Z2 of a dense 0/1 matrix given as rows of bits.
inline std::int64_t dense_rank(std::vector<std::vector<char>> rows) {
    std::int64_t rank = 0;
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t c = 0; c < cols && rank < static_cast<std::int64_t>(rows.size()); ++c) {
        std::size_t p = static_cast<std::size_t>(rank);
        while (p < rows.size() && !rows[p][c]) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[static_cast<std::size_t>(rank)]);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != static_cast<std::size_t>(rank) && rows[r][c])
                for (std::size_t k = c; k < cols; ++k) rows[r][k] ^= rows[static_cast<std::size_t>(rank)][k];
        ++rank;
    }
    return rank;
}

// Boundary block: rows = k-simplices among positions [0, row_hi) with position
// >= row_lo, columns = (k+1)-simplices among positions [0, col_hi).
inline std::int64_t boundary_rank(const Filtration& f, int k, phu::index_t row_lo, phu::index_t row_hi,
                                  phu::index_t col_hi) {
    std::vector<phu::index_t> rows, cols;
    for (phu::index_t p = 0; p < f.size(); ++p) {
        if (f.dim(p) == k && p >= row_lo && p < row_hi) rows.push_back(p);
        if (f.dim(p) == k + 1 && p < col_hi) cols.push_back(p);
    }
    std::vector<std::vector<char>> m(rows.size(), std::vector<char>(cols.size(), 0));
    for (std::size_t c = 0; c < cols.size(); ++c) {
        const auto fs = f.simplex(cols[c]).facets();
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (std::find(fs.begin(), fs.end(), f.simplex(rows[r])) != fs.end()) m[r][c] = 1;
    }
    return dense_rank(std::move(m));
}

// Dimension of the image of H_k(K_i) in H_k(K_j), where K_i holds positions <= i.
inline std::int64_t persistent_betti(const Filtration& f, int k, phu::index_t i, phu::index_t j) {
    std::int64_t n_k = 0;
    for (phu::index_t p = 0; p <= i; ++p)
        if (f.dim(p) == k) ++n_k;
    const std::int64_t cycles = n_k - (k == 0 ? 0 : boundary_rank(f, k - 1, 0, i + 1, i + 1));
    // boundaries of K_j that already live in K_i: kernel of the projection onto rows after i
    const std::int64_t bj = boundary_rank(f, k, 0, j + 1, j + 1);
    const std::int64_t outside = boundary_rank(f, k, i + 1, j + 1, j + 1);
    return cycles - (bj - outside);
}

// Same count read off a positional barcode: bars of dim k born at or before i
// and still alive at j.
inline std::int64_t bars_alive(const phu::Barcode& bc, int k, phu::index_t i, phu::index_t j) {
    std::int64_t n = 0;
    for (const auto& b : bc.all())
        if (b.dim == k && b.birth <= i && (b.essential() || b.death > j)) ++n;
    return n;
}

// Compares a barcode against persistent Betti numbers for every i <= j and dim.
inline bool matches_betti_oracle(const Filtration& f, const phu::Barcode& bc) {
    int top = 0;
    for (const auto& e : f.entries) top = std::max(top, e.simplex.dim());
    for (int k = 0; k <= top; ++k)
        for (phu::index_t i = 0; i < f.size(); ++i)
            for (phu::index_t j = i; j < f.size(); ++j)
                if (persistent_betti(f, k, i, j) != bars_alive(bc, k, i, j)) return false;
    return true;
}

inline phu::NamedBar bar(int dim, Simplex birth) { return {dim, std::move(birth), std::nullopt}; }
inline phu::NamedBar bar(int dim, Simplex birth, Simplex death) { return {dim, std::move(birth), std::move(death)}; }

inline phu::NamedBarcode sorted_bars(phu::NamedBarcode bars) {
    std::sort(bars.begin(), bars.end());
    return bars;
}

inline std::int64_t count_essential(const phu::NamedBarcode& bars, int dim) {
    return std::count_if(bars.begin(), bars.end(), [&](const phu::NamedBar& b) { return b.dim == dim && !b.death; });
}

inline std::int64_t count_finite(const phu::NamedBarcode& bars, int dim) {
    return std::count_if(bars.begin(), bars.end(), [&](const phu::NamedBar& b) { return b.dim == dim && b.death; });
}

// Bars of `a` not in `b`, as a multiset difference.
inline phu::NamedBarcode minus(const phu::NamedBarcode& a, const phu::NamedBarcode& b) {
    phu::NamedBarcode out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

// Removes the star of `sigma` in place and names the resulting barcode.
inline phu::NamedBarcode updated_barcode(const Filtration& f, const Simplex& sigma, phu::Algorithm algo,
                                         phu::RemovalReport* report = nullptr) {
    auto red = phu::sba_reduce(phu::boundary_matrix(f));
    phu::CofaceIndex idx(f);
    auto rep = phu::mur_remove(red.dec, f, idx, *idx.find(sigma), algo);
    if (report) *report = rep;
    return phu::name_barcode(f, phu::extract_barcode(red.dec));
}

}  // namespace fixtures
