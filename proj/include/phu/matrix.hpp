#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <vector>

#include "phu/complex.hpp"

namespace phu {

/// Sparse Z2 column: strictly ascending row ids; presence means 1.
using Column = std::vector<index_t>;

/// Symmetric difference of two sorted columns.
Column add_columns(const Column& src, const Column& dst);

/// dst += src over Z2. `scratch` is reused to avoid allocation in hot loops.
void add_into(Column& dst, const Column& src, Column& scratch);
void add_into(Column& dst, const Column& src);

inline std::optional<index_t> pivot(const Column& c) {
    if (c.empty()) return std::nullopt;
    return c.back();
}

inline bool contains(const Column& c, index_t row) {
    auto it = std::lower_bound(c.begin(), c.end(), row);
    return it != c.end() && *it == row;
}

struct BoundaryMatrix {
    std::vector<Column> columns;
    std::vector<int> dims;

    index_t size() const { return static_cast<index_t>(columns.size()); }
};

BoundaryMatrix boundary_matrix(const Filtration& f);

/// True iff for every column j with live[j], the Z2 sum of the D columns named by
/// the rows of V[j] equals R[j]. An empty `live` means every column. Throws
/// std::invalid_argument on size mismatch.
bool matrix_product_check(const BoundaryMatrix& D, std::span<const Column> V,
                          std::span<const Column> R, std::span<const char> live = {});

}  // namespace phu
