#include "phu/complex.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace phu {

std::vector<Simplex> Simplex::facets() const {
    std::vector<Simplex> out;
    if (vertices.size() < 2) return out;
    out.reserve(vertices.size());
    for (std::size_t drop = 0; drop < vertices.size(); ++drop) {
        std::vector<vertex_t> v;
        v.reserve(vertices.size() - 1);
        for (std::size_t i = 0; i < vertices.size(); ++i)
            if (i != drop) v.push_back(vertices[i]);
        out.emplace_back(std::move(v));
    }
    return out;
}

bool Simplex::is_valid() const {
    if (vertices.empty()) return false;
    if (vertices.front() < 0) return false;
    for (std::size_t i = 1; i < vertices.size(); ++i)
        if (vertices[i - 1] >= vertices[i]) return false;
    return true;
}

std::string Simplex::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (i) os << ' ';
        os << vertices[i];
    }
    return os.str();
}

Filtration filtration_from_order(const std::vector<Simplex>& order) {
    Filtration f;
    f.entries.reserve(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) f.push_back(order[i], static_cast<value_t>(i));
    return f;
}

bool filtration_less(const FiltrationEntry& a, const FiltrationEntry& b) {
    if (a.value != b.value) return a.value < b.value;
    if (a.simplex.dim() != b.simplex.dim()) return a.simplex.dim() < b.simplex.dim();
    return a.simplex.vertices < b.simplex.vertices;
}

void sort_filtration(Filtration& f) {
    std::stable_sort(f.entries.begin(), f.entries.end(), filtration_less);
}

std::optional<Violation> validate_filtration(const Filtration& f) {
    std::map<std::vector<vertex_t>, index_t> seen;
    for (index_t pos = 0; pos < f.size(); ++pos) {
        const auto& entry = f.entries[pos];
        const Simplex& s = entry.simplex;
        if (!s.is_valid())
            return Violation{pos, "vertices must be non-empty, non-negative and strictly ascending"};
        if (!(entry.value == entry.value))
            return Violation{pos, "entrance value is NaN"};
        if (pos > 0 && filtration_less(entry, f.entries[pos - 1]))
            return Violation{pos, "out of (value, dimension, lexicographic) order"};
        if (seen.count(s.vertices))
            return Violation{pos, "duplicate simplex " + s.to_string()};
        for (const Simplex& facet : s.facets()) {
            if (!seen.count(facet.vertices))
                return Violation{pos, "facet " + facet.to_string() + " of " + s.to_string() +
                                          " does not appear earlier"};
        }
        seen.emplace(s.vertices, pos);
    }
    return std::nullopt;
}

CofaceIndex::CofaceIndex(const Filtration& f)
    : cofacets_(f.entries.size()), live_(f.entries.size(), 1), live_count_(f.size()) {
    for (index_t pos = 0; pos < f.size(); ++pos) lookup_.emplace(f.simplex(pos).vertices, pos);
    for (index_t pos = 0; pos < f.size(); ++pos) {
        for (const Simplex& facet : f.simplex(pos).facets()) {
            auto it = lookup_.find(facet.vertices);
            if (it == lookup_.end())
                throw std::invalid_argument("facet " + facet.to_string() + " missing from filtration");
            cofacets_[it->second].push_back(pos);
        }
    }
    // positions were visited in order, so every list is already ascending
}

std::vector<index_t> CofaceIndex::cofacets(index_t pos) const {
    std::vector<index_t> out;
    for (index_t c : cofacets_.at(pos))
        if (live_[c]) out.push_back(c);
    return out;
}

std::optional<index_t> CofaceIndex::find(const Simplex& s) const {
    auto it = lookup_.find(s.vertices);
    if (it == lookup_.end() || !live_[it->second]) return std::nullopt;
    return it->second;
}

void CofaceIndex::mark_removed(index_t pos) {
    if (!is_live(pos)) throw std::out_of_range("position " + std::to_string(pos) + " is not live");
    live_[pos] = 0;
    --live_count_;
}

CofaceIndex build_coface_index(const Filtration& f) { return CofaceIndex(f); }

std::vector<index_t> star(const Filtration& f, const CofaceIndex& idx, index_t sigma) {
    if (!idx.is_live(sigma))
        throw std::out_of_range("position " + std::to_string(sigma) + " is not a live simplex");
    std::vector<index_t> out{sigma};
    std::vector<char> seen(idx.size(), 0);
    seen[sigma] = 1;
    for (std::size_t head = 0; head < out.size(); ++head) {
        for (index_t c : idx.cofacets(out[head])) {
            if (!seen[c]) {
                seen[c] = 1;
                out.push_back(c);
            }
        }
    }
    std::sort(out.begin(), out.end(), [&](index_t a, index_t b) {
        if (f.dim(a) != f.dim(b)) return f.dim(a) > f.dim(b);
        return a > b;
    });
    return out;
}

Filtration filtration_without(const Filtration& f, const std::vector<index_t>& removed) {
    std::vector<char> drop(f.entries.size(), 0);
    for (index_t r : removed) drop.at(r) = 1;
    Filtration out;
    for (index_t pos = 0; pos < f.size(); ++pos)
        if (!drop[pos]) out.entries.push_back(f.entries[pos]);
    return out;
}

}  // namespace phu
