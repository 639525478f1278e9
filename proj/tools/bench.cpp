// Compares the OpenMP kernels against their serial reference
// implementations on three representative workloads.

#include <chrono>
#include <cstdio>
#include <random>

#include "cmtk/cm.hpp"
#include "cmtk/filtered.hpp"
#include "cmtk/parallel.hpp"
#include "cmtk/stanley_reisner.hpp"

using namespace cmtk;

namespace {

SimplicialComplex random_complex(int n, int dim, int facet_count, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::vector<Label>> facets;
    for (int i = 0; i < facet_count; ++i) {
        Bitset f(n);
        while (f.count() < dim + 1) f.set(int(rng() % n));
        std::vector<Label> labels;
        f.for_each([&](int v) { labels.push_back(int64_t(v)); });
        facets.push_back(labels);
    }
    return SimplicialComplex::from_facets(facets);
}

// the join of two cycles: a 3-sphere with m*m facets, Cohen-Macaulay,
// so the link scan cannot shortcut
SimplicialComplex sphere_join(int m) {
    std::vector<std::vector<Label>> facets;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            facets.push_back({int64_t(i), int64_t((i + 1) % m), int64_t(m + j),
                              int64_t(m + (j + 1) % m)});
    return SimplicialComplex::from_facets(facets);
}

template <typename F> double timed(const char* name, F&& f) {
    auto a = std::chrono::steady_clock::now();
    f();
    auto b = std::chrono::steady_clock::now();
    double s = std::chrono::duration<double>(b - a).count();
    std::printf("  %-28s %8.3f s\n", name, s);
    return s;
}

} // namespace

int main() {
    std::printf("threads available: %d\n", effective_threads(0));

    {
        std::printf("graded Betti table, 13 vertex complex (8192 subsets):\n");
        SimplicialComplex c = random_complex(13, 2, 14, 7);
        BettiTable serial, parallel;
        double ts = timed("hochster serial", [&] {
            serial = hochster_betti_serial(c, CoefficientSpec::Q(), 16);
        });
        double tp = timed("hochster parallel", [&] {
            parallel = hochster_betti(c, CoefficientSpec::Q(), 16);
        });
        std::printf("  tables agree: %s, speedup %.2fx\n",
                    serial.beta == parallel.beta ? "yes" : "NO", ts / tp);
    }

    {
        std::printf("Cohen-Macaulay link scan, 3-sphere with 256 facets:\n");
        SimplicialComplex c = sphere_join(16);
        bool serial = false, parallel = false;
        double ts = timed("link scan serial", [&] {
            serial = is_cm(c, CoefficientSpec::Q(), ParallelConfig{1});
        });
        double tp = timed("link scan parallel", [&] {
            parallel = is_cm(c, CoefficientSpec::Q(), ParallelConfig{0});
        });
        std::printf("  answers agree: %s (%s), speedup %.2fx\n",
                    serial == parallel ? "yes" : "NO", serial ? "CM" : "not CM", ts / tp);
    }

    {
        std::printf("diameter experiment, K5 cycle matroid, 3000 draws:\n");
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < 5; ++u)
            for (int v = u + 1; v < 5; ++v) edges.push_back({u, v});
        GeometricLatticeOfFlats k5 = GeometricLatticeOfFlats::from_graph(5, edges);
        DiameterExperimentStats serial, parallel;
        double ts = timed("experiment serial", [&] {
            serial = diameter_experiment_serial(k5, 3000, 42);
        });
        double tp = timed("experiment parallel", [&] {
            parallel = diameter_experiment(k5, 3000, 42);
        });
        bool same = serial.max_diameter == parallel.max_diameter &&
                    serial.histogram == parallel.histogram;
        std::printf("  stats agree: %s, speedup %.2fx\n", same ? "yes" : "NO", ts / tp);
    }
    return 0;
}
