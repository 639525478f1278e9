#include "doctest.h"

#include <cstdlib>

#include "cmtk/cm.hpp"
#include "cmtk/filtered.hpp"
#include "cmtk/parallel.hpp"
#include "cmtk/stanley_reisner.hpp"
#include "support.hpp"

using namespace cmtk;
using cmtk_test::complete_graph_lattice;
using cmtk_test::random_complex;

TEST_CASE("effective thread count resolution") {
    CHECK(effective_threads(3) == 3);
    CHECK(effective_threads(1) == 1);

    setenv("CMTK_THREADS", "2", 1);
    CHECK(effective_threads() == 2);
    CHECK(effective_threads(5) == 5); // explicit request beats the env
    setenv("CMTK_THREADS", "garbage", 1);
    CHECK(effective_threads() >= 1);
    unsetenv("CMTK_THREADS");
    CHECK(effective_threads() >= 1);
}

TEST_CASE("parallel Betti tables equal the serial reference") {
    for (uint64_t seed : {11u, 22u, 33u, 44u, 55u}) {
        auto c = random_complex(seed);
        for (auto field : {CoefficientSpec::Q(), CoefficientSpec::Fp(2)}) {
            auto serial = hochster_betti_serial(c, field);
            auto parallel = hochster_betti(c, field);
            CHECK(serial.n == parallel.n);
            CHECK(serial.d == parallel.d);
            CHECK(serial.beta == parallel.beta);
        }
    }
    // a larger named case
    auto serial = hochster_betti_serial(rp2_6(), CoefficientSpec::Fp(2));
    auto parallel = hochster_betti(rp2_6(), CoefficientSpec::Fp(2), 20, ParallelConfig{4});
    CHECK(serial.beta == parallel.beta);
}

TEST_CASE("parallel link scan equals the single-thread scan") {
    std::vector<SimplicialComplex> cases = {rp2_6(), simplex_boundary(4), cycle_complex(7)};
    for (uint64_t seed = 60; seed < 90; ++seed) cases.push_back(random_complex(seed));
    for (const auto& c : cases) {
        for (auto coeff : {CoefficientSpec::Q(), CoefficientSpec::Z(), CoefficientSpec::Fp(2)}) {
            bool one = is_cm(c, coeff, ParallelConfig{1});
            bool many = is_cm(c, coeff, ParallelConfig{0});
            CHECK(one == many);
            CHECK(is_gorenstein_star(c, coeff, ParallelConfig{1}) ==
                  is_gorenstein_star(c, coeff, ParallelConfig{0}));
        }
    }
}

TEST_CASE("parallel diameter experiment equals the serial reference") {
    auto k4 = complete_graph_lattice(4);
    auto serial = diameter_experiment_serial(k4, 300, 17);
    auto parallel = diameter_experiment(k4, 300, 17, 2, 0);
    CHECK(serial.draws == parallel.draws);
    CHECK(serial.max_diameter == parallel.max_diameter);
    CHECK(serial.histogram == parallel.histogram);

    auto two_threads = diameter_experiment(k4, 300, 17, 2, 2);
    CHECK(serial.histogram == two_threads.histogram);
}
