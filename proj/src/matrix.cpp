#include "phu/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace phu {

void add_into(Column& dst, const Column& src, Column& scratch) {
    if (src.empty()) return;
    scratch.clear();
    scratch.reserve(dst.size() + src.size());
    auto a = dst.begin(), ae = dst.end();
    auto b = src.begin(), be = src.end();
    while (a != ae && b != be) {
        if (*a < *b) {
            scratch.push_back(*a++);
        } else if (*b < *a) {
            scratch.push_back(*b++);
        } else {
            ++a;
            ++b;
        }
    }
    scratch.insert(scratch.end(), a, ae);
    scratch.insert(scratch.end(), b, be);
    dst.swap(scratch);
}

void add_into(Column& dst, const Column& src) {
    Column scratch;
    add_into(dst, src, scratch);
}

Column add_columns(const Column& src, const Column& dst) {
    Column out = dst;
    add_into(out, src);
    return out;
}

BoundaryMatrix boundary_matrix(const Filtration& f) {
    BoundaryMatrix D;
    D.columns.resize(f.entries.size());
    D.dims.resize(f.entries.size());
    std::map<std::vector<vertex_t>, index_t> lookup;
    for (index_t j = 0; j < f.size(); ++j) {
        const Simplex& s = f.simplex(j);
        D.dims[j] = s.dim();
        Column& col = D.columns[j];
        for (const Simplex& facet : s.facets()) {
            auto it = lookup.find(facet.vertices);
            if (it == lookup.end())
                throw std::invalid_argument("facet " + facet.to_string() + " of position " +
                                            std::to_string(j) + " does not appear earlier");
            col.push_back(it->second);
        }
        std::sort(col.begin(), col.end());
        lookup.emplace(s.vertices, j);
    }
    return D;
}

bool matrix_product_check(const BoundaryMatrix& D, std::span<const Column> V,
                          std::span<const Column> R, std::span<const char> live) {
    const std::size_t m = D.columns.size();
    if (V.size() != m || R.size() != m || (!live.empty() && live.size() != m))
        throw std::invalid_argument("matrix_product_check: dimension mismatch");
    Column acc, scratch;
    for (std::size_t j = 0; j < m; ++j) {
        if (!live.empty() && !live[j]) continue;
        acc.clear();
        for (index_t k : V[j]) {
            if (k < 0 || static_cast<std::size_t>(k) >= m) return false;
            if (!live.empty() && !live[k]) return false;
            add_into(acc, D.columns[k], scratch);
        }
        if (acc != R[j]) return false;
    }
    return true;
}

}  // namespace phu
