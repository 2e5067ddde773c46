#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace phu {

using index_t = std::int64_t;
using vertex_t = std::int64_t;
using value_t = double;

/// A k-simplex: k+1 distinct vertex ids kept in ascending order.
struct Simplex {
    std::vector<vertex_t> vertices;

    Simplex() = default;
    Simplex(std::initializer_list<vertex_t> v) : vertices(v) {}
    explicit Simplex(std::vector<vertex_t> v) : vertices(std::move(v)) {}

    int dim() const { return static_cast<int>(vertices.size()) - 1; }

    /// Facets in the order obtained by dropping vertex 0, 1, ..., k.
    std::vector<Simplex> facets() const;

    bool is_valid() const;

    std::string to_string() const;

    friend bool operator==(const Simplex&, const Simplex&) = default;
    friend auto operator<=>(const Simplex&, const Simplex&) = default;
};

struct FiltrationEntry {
    Simplex simplex;
    value_t value = 0.0;
};

/// Simplices in filtration order; the index into `entries` is the position.
struct Filtration {
    std::vector<FiltrationEntry> entries;

    index_t size() const { return static_cast<index_t>(entries.size()); }
    bool empty() const { return entries.empty(); }
    const Simplex& simplex(index_t pos) const { return entries[pos].simplex; }
    value_t value(index_t pos) const { return entries[pos].value; }
    int dim(index_t pos) const { return entries[pos].simplex.dim(); }

    void push_back(Simplex s, value_t value) { entries.push_back({std::move(s), value}); }
};

/// Builds a filtration whose values are the positions 0, 1, ...
Filtration filtration_from_order(const std::vector<Simplex>& order);

/// Strict weak order used to sort filtrations: value, then dimension, then vertices.
bool filtration_less(const FiltrationEntry& a, const FiltrationEntry& b);

void sort_filtration(Filtration& f);

struct Violation {
    index_t position = 0;
    std::string reason;
};

/// Empty result means the filtration is valid; otherwise the first offending position.
std::optional<Violation> validate_filtration(const Filtration& f);

/// Cofacet graph of a filtration plus a vertex-set lookup. Positions that get
/// removed stay in the tables but are marked dead.
class CofaceIndex {
public:
    CofaceIndex() = default;
    explicit CofaceIndex(const Filtration& f);

    index_t size() const { return static_cast<index_t>(cofacets_.size()); }

    /// Live cofacets of `pos`, ascending.
    std::vector<index_t> cofacets(index_t pos) const;

    std::optional<index_t> find(const Simplex& s) const;

    bool is_live(index_t pos) const { return pos >= 0 && pos < size() && live_[pos]; }
    index_t live_count() const { return live_count_; }

    void mark_removed(index_t pos);

private:
    std::vector<std::vector<index_t>> cofacets_;
    std::map<std::vector<vertex_t>, index_t> lookup_;
    std::vector<char> live_;
    index_t live_count_ = 0;
};

CofaceIndex build_coface_index(const Filtration& f);

/// `sigma` together with all of its live cofaces, highest dimension first and,
/// within a dimension, by descending position. Throws std::out_of_range for an
/// unknown or removed position.
std::vector<index_t> star(const Filtration& f, const CofaceIndex& idx, index_t sigma);

/// Copy of `f` without the given positions, order preserved.
Filtration filtration_without(const Filtration& f, const std::vector<index_t>& removed);

}  // namespace phu
