#pragma once

#include <random>
#include <string>
#include <vector>

#include "cmtk/complex.hpp"
#include "cmtk/matroid.hpp"

namespace cmtk_test {

using namespace cmtk;

// Seeded complex on at most 6 vertices; mixes dimensions and purity and
// occasionally produces the (-1)-dimensional complex {∅}.
inline SimplicialComplex random_complex(uint64_t seed) {
    std::mt19937_64 rng(seed);
    if (rng() % 50 == 0) return SimplicialComplex::from_facets({std::vector<Label>{}});
    int n = 1 + int(rng() % 6);
    int m = 1 + int(rng() % (n + 2));
    std::vector<std::vector<Label>> facets;
    for (int i = 0; i < m; ++i) {
        unsigned mask = 1 + unsigned(rng() % ((1u << n) - 1));
        std::vector<Label> f;
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1) f.push_back(int64_t(v));
        facets.push_back(f);
    }
    return SimplicialComplex::from_facets(facets);
}

// Seeded point configuration with small integer coordinates; collinearities
// and repeated points are allowed and welcome.
inline PointConfiguration random_point_config(uint64_t seed) {
    std::mt19937_64 rng(seed);
    int dim = 2 + int(rng() % 2);
    int n = 3 + int(rng() % 4);
    PointConfiguration pc;
    for (int i = 0; i < n; ++i) {
        RationalPoint p;
        p.label = std::string(1, char('a' + i));
        for (int k = 0; k < dim; ++k) p.coords.push_back(mpq_class(long(rng() % 5)));
        pc.points.push_back(std::move(p));
    }
    return pc;
}

inline GeometricLatticeOfFlats complete_graph_lattice(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
    return GeometricLatticeOfFlats::from_graph(n, edges);
}

inline std::string source_path(const std::string& rel) {
    return std::string(CMTK_SOURCE_DIR) + "/" + rel;
}

} // namespace cmtk_test
