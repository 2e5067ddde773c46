#include "phu/generate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "phu/rng.hpp"

namespace phu {

const char* to_string(Model m) {
    switch (m) {
        case Model::vr: return "vr";
        case Model::erdos_renyi: return "er";
        case Model::shuffled: return "shuffled";
        case Model::lower_star: return "lowerstar";
    }
    return "?";
}

Model parse_model(const std::string& s) {
    if (s == "vr") return Model::vr;
    if (s == "er" || s == "erdos_renyi") return Model::erdos_renyi;
    if (s == "shuffled") return Model::shuffled;
    if (s == "lowerstar" || s == "lower_star") return Model::lower_star;
    throw std::invalid_argument("unknown model '" + s + "'");
}

namespace {

std::vector<double> pairwise_distances(const PointCloud& pc) {
    const std::size_t n = pc.size();
    std::vector<double> dist(n * n, 0.0);
    const auto rows = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            double s = 0.0;
            for (std::size_t k = 0; k < pc.dim; ++k) {
                const double d = pc.points[i][k] - pc.points[j][k];
                s += d * d;
            }
            dist[i * n + j] = std::sqrt(s);
        }
    }
    return dist;
}

}  // namespace

Filtration vietoris_rips(const PointCloud& pc, int max_dim, double max_radius) {
    if (pc.points.empty()) throw std::invalid_argument("vietoris_rips: empty point cloud");
    for (const auto& p : pc.points)
        if (p.size() != pc.dim) throw std::invalid_argument("vietoris_rips: ragged point cloud");
    const std::size_t n = pc.size();
    const auto dist = pairwise_distances(pc);
    const double threshold = 2.0 * max_radius;

    Filtration f;
    std::vector<FiltrationEntry> layer;
    for (std::size_t v = 0; v < n; ++v) layer.push_back({Simplex{static_cast<vertex_t>(v)}, 0.0});
    f.entries = layer;
    // grow cliques one vertex at a time, always appending a larger vertex id
    for (int d = 1; d <= max_dim && !layer.empty(); ++d) {
        std::vector<FiltrationEntry> next;
        for (const auto& e : layer) {
            const auto& verts = e.simplex.vertices;
            for (std::size_t v = static_cast<std::size_t>(verts.back()) + 1; v < n; ++v) {
                double value = e.value;
                bool ok = true;
                for (vertex_t u : verts) {
                    const double duv = dist[static_cast<std::size_t>(u) * n + v];
                    if (!(duv <= threshold)) {
                        ok = false;
                        break;
                    }
                    value = std::max(value, duv);
                }
                if (!ok) continue;
                auto vs = verts;
                vs.push_back(static_cast<vertex_t>(v));
                next.push_back({Simplex(std::move(vs)), value});
            }
        }
        f.entries.insert(f.entries.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    sort_filtration(f);
    return f;
}

Filtration erdos_renyi_filtration(std::size_t n, std::uint64_t seed) {
    if (n == 0) throw std::invalid_argument("erdos_renyi_filtration: n must be positive");
    Rng rng(seed);
    std::vector<std::pair<vertex_t, vertex_t>> edges;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    rng.shuffle(edges);

    Filtration f;
    for (std::size_t v = 0; v < n; ++v) f.push_back(Simplex{static_cast<vertex_t>(v)}, static_cast<double>(v));
    std::vector<char> adj(n * n, 0);
    for (auto [u, v] : edges) {
        const double value = static_cast<double>(f.size());
        f.push_back(Simplex{u, v}, value);
        adj[u * n + v] = adj[v * n + u] = 1;
        for (std::size_t w = 0; w < n; ++w) {
            if (!adj[u * n + w] || !adj[v * n + w]) continue;
            std::vector<vertex_t> tri{u, v, static_cast<vertex_t>(w)};
            std::sort(tri.begin(), tri.end());
            f.push_back(Simplex(std::move(tri)), value);
        }
    }
    // triangles closed by the same edge share its value; restore lexicographic ties
    sort_filtration(f);
    return f;
}

Filtration shuffled_filtration(std::size_t n, std::uint64_t seed) {
    if (n == 0) throw std::invalid_argument("shuffled_filtration: n must be positive");
    Rng rng(seed);
    std::vector<Simplex> edges, triangles;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            edges.push_back(Simplex{static_cast<vertex_t>(i), static_cast<vertex_t>(j)});
            for (std::size_t k = j + 1; k < n; ++k)
                triangles.push_back(
                    Simplex{static_cast<vertex_t>(i), static_cast<vertex_t>(j), static_cast<vertex_t>(k)});
        }
    rng.shuffle(edges);
    rng.shuffle(triangles);
    std::vector<Simplex> order;
    for (std::size_t v = 0; v < n; ++v) order.push_back(Simplex{static_cast<vertex_t>(v)});
    order.insert(order.end(), edges.begin(), edges.end());
    order.insert(order.end(), triangles.begin(), triangles.end());
    return filtration_from_order(order);
}

Filtration lower_star_filtration(const Filtration& complex, const std::vector<double>& vertex_values) {
    Filtration f;
    f.entries.reserve(complex.entries.size());
    for (const auto& e : complex.entries) {
        double value = -std::numeric_limits<double>::infinity();
        for (vertex_t v : e.simplex.vertices) {
            if (v < 0 || static_cast<std::size_t>(v) >= vertex_values.size())
                throw std::invalid_argument("lower_star_filtration: vertex " + std::to_string(v) +
                                            " has no value");
            value = std::max(value, vertex_values[v]);
        }
        f.push_back(e.simplex, value);
    }
    sort_filtration(f);
    return f;
}

PointCloud random_point_cloud(std::size_t n, std::size_t d, std::uint64_t seed) {
    Rng rng(seed);
    PointCloud pc;
    pc.dim = d;
    pc.points.assign(n, std::vector<double>(d));
    for (auto& p : pc.points)
        for (auto& x : p) x = rng.uniform01();
    return pc;
}

Filtration random_tree(std::size_t n, std::uint64_t seed) {
    if (n == 0) throw std::invalid_argument("random_tree: n must be positive");
    Rng rng(seed);
    std::vector<Simplex> order;
    for (std::size_t v = 0; v < n; ++v) order.push_back(Simplex{static_cast<vertex_t>(v)});
    for (std::size_t v = 1; v < n; ++v) {
        const auto parent = static_cast<vertex_t>(rng.below(v));
        order.push_back(Simplex{parent, static_cast<vertex_t>(v)});
    }
    return filtration_from_order(order);
}

Filtration generate(const GenSpec& spec) {
    switch (spec.model) {
        case Model::vr: {
            if (spec.points) return vietoris_rips(*spec.points, spec.max_dim, spec.max_radius);
            return vietoris_rips(random_point_cloud(spec.n, spec.point_dim, derive_seed(spec.seed, 1)),
                                 spec.max_dim, spec.max_radius);
        }
        case Model::erdos_renyi: return erdos_renyi_filtration(spec.n, spec.seed);
        case Model::shuffled: return shuffled_filtration(spec.n, spec.seed);
        case Model::lower_star: {
            Filtration complex = spec.complex ? *spec.complex : random_tree(spec.n, derive_seed(spec.seed, 2));
            std::vector<double> values;
            if (spec.vertex_values) {
                values = *spec.vertex_values;
            } else {
                vertex_t top = -1;
                for (const auto& e : complex.entries) top = std::max(top, e.simplex.vertices.back());
                Rng rng(derive_seed(spec.seed, 3));
                values.resize(static_cast<std::size_t>(top + 1));
                for (auto& x : values) x = rng.uniform01();
            }
            return lower_star_filtration(complex, values);
        }
    }
    throw std::invalid_argument("generate: unknown model");
}

}  // namespace phu
