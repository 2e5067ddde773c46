#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "phu/complex.hpp"

namespace phu {

struct PointCloud {
    std::size_t dim = 0;
    std::vector<std::vector<double>> points;

    std::size_t size() const { return points.size(); }
};

enum class Model { vr, erdos_renyi, shuffled, lower_star };

const char* to_string(Model m);
/// Accepts "vr", "er", "erdos_renyi", "shuffled", "lowerstar", "lower_star".
Model parse_model(const std::string& s);

/// Parameters for one generated filtration. For vr without `points`, a random
/// cloud of n points in [0,1]^point_dim is drawn; for lower_star without
/// `complex`, a random tree on n vertices is used, and without `vertex_values`
/// the values are drawn uniformly from [0,1).
struct GenSpec {
    Model model = Model::erdos_renyi;
    std::size_t n = 0;
    int max_dim = 2;
    std::size_t point_dim = 3;
    double max_radius = std::numeric_limits<double>::infinity();
    std::uint64_t seed = 0;
    std::optional<PointCloud> points;
    std::optional<Filtration> complex;
    std::optional<std::vector<double>> vertex_values;
};

/// Simplices of dimension <= max_dim whose diameter is at most 2 * max_radius.
/// A simplex enters at its diameter (longest edge). Throws on an empty cloud.
Filtration vietoris_rips(const PointCloud& pc, int max_dim,
                         double max_radius = std::numeric_limits<double>::infinity());

/// Vertices, then all edges in seeded random order; each triangle right after its
/// last edge. Values are positions, triangles take their last edge's value.
Filtration erdos_renyi_filtration(std::size_t n, std::uint64_t seed);

/// Vertices, all edges shuffled, then all triangles shuffled. Values are positions.
Filtration shuffled_filtration(std::size_t n, std::uint64_t seed);

/// Each simplex of `complex` takes the largest value among its vertices; the
/// result is re-sorted. Throws std::invalid_argument when a vertex has no value.
Filtration lower_star_filtration(const Filtration& complex, const std::vector<double>& vertex_values);

PointCloud random_point_cloud(std::size_t n, std::size_t d, std::uint64_t seed);

/// Random labelled tree: vertex i > 0 attaches to a uniform earlier vertex.
/// Returned as vertices then edges, values equal to positions.
Filtration random_tree(std::size_t n, std::uint64_t seed);

Filtration generate(const GenSpec& spec);

}  // namespace phu
