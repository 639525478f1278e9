#include "doctest.h"

#include <vector>

#include "cmtk/cm.hpp"
#include "cmtk/errors.hpp"
#include "support.hpp"

using namespace cmtk;
using cmtk_test::random_complex;

namespace {
const std::vector<CoefficientSpec> kAllCoeffs = {
    CoefficientSpec::Q(), CoefficientSpec::Fp(2), CoefficientSpec::Fp(3), CoefficientSpec::Z()};
}

TEST_CASE("tri helpers") {
    CHECK(tri_str(Tri::True) == "true");
    CHECK(tri_str(Tri::False) == "false");
    CHECK(tri_str(Tri::Unknown) == "unknown");
    CHECK(tri_and(Tri::True, Tri::True) == Tri::True);
    CHECK(tri_and(Tri::True, Tri::Unknown) == Tri::Unknown);
    CHECK(tri_and(Tri::False, Tri::Unknown) == Tri::False);
    CHECK(tri_and(Tri::Unknown, Tri::False) == Tri::False);
}

TEST_CASE("spheres are Cohen-Macaulay and Gorenstein* over everything") {
    for (const auto& c : {simplex_boundary(2), simplex_boundary(3), simplex_boundary(4)}) {
        for (const auto& k : kAllCoeffs) {
            CHECK(is_cm(c, k));
            CHECK(is_gorenstein_star(c, k));
            CHECK(is_gorenstein_star_v2(c, k));
        }
    }
    for (int n : {3, 4, 7}) {
        for (const auto& k : kAllCoeffs) {
            CHECK(is_cm(cycle_complex(n), k));
            CHECK(is_gorenstein_star(cycle_complex(n), k));
        }
    }
}

TEST_CASE("the empty complex is Gorenstein*") {
    for (const auto& k : kAllCoeffs) {
        CHECK(is_cm(empty_complex(), k));
        CHECK(is_gorenstein_star(empty_complex(), k));
        CHECK(is_gorenstein_star_v2(empty_complex(), k));
    }
}

TEST_CASE("full simplices are CM but not Gorenstein*") {
    for (int d = 0; d <= 3; ++d) {
        auto c = full_simplex(d);
        for (const auto& k : kAllCoeffs) {
            CHECK(is_cm(c, k));
            CHECK(!is_gorenstein_star(c, k));
            CHECK(!is_gorenstein_star_v2(c, k));
        }
    }
}

TEST_CASE("projective plane: characteristic-dependent Cohen-Macaulayness") {
    auto rp2 = rp2_6();
    CHECK(is_cm(rp2, CoefficientSpec::Q()));
    CHECK(is_cm(rp2, CoefficientSpec::Fp(3)));
    CHECK(is_cm(rp2, CoefficientSpec::Fp(5)));
    CHECK(!is_cm(rp2, CoefficientSpec::Fp(2)));
    CHECK(!is_cm(rp2, CoefficientSpec::Z()));
    for (const auto& k : kAllCoeffs) {
        CHECK(!is_gorenstein_star(rp2, k));
        CHECK(!is_gorenstein_star_v2(rp2, k));
    }
}

TEST_CASE("low-dimensional and disconnected cases") {
    // any nonempty set of points is CM; it is Gorenstein* iff exactly 2 points
    auto one = full_simplex(0);
    auto two = SimplicialComplex::from_facets({{int64_t(0)}, {int64_t(1)}});
    auto three = SimplicialComplex::from_facets({{int64_t(0)}, {int64_t(1)}, {int64_t(2)}});
    for (const auto& k : kAllCoeffs) {
        CHECK(is_cm(one, k));
        CHECK(is_cm(two, k));
        CHECK(is_cm(three, k));
        CHECK(!is_gorenstein_star(one, k));
        CHECK(is_gorenstein_star(two, k));
        CHECK(!is_gorenstein_star(three, k));
    }
    // disconnected in dimension 1 is never CM
    auto two_edges = SimplicialComplex::from_facets(
        {{int64_t(0), int64_t(1)}, {int64_t(2), int64_t(3)}});
    for (const auto& k : kAllCoeffs) CHECK(!is_cm(two_edges, k));
}

TEST_CASE("cones preserve CM and kill Gorenstein*-ness of spheres") {
    auto coned_cycle = cycle_complex(5).cone(int64_t(100));
    for (const auto& k : kAllCoeffs) {
        CHECK(is_cm(coned_cycle, k));
        CHECK(!is_gorenstein_star(coned_cycle, k));
    }
}

TEST_CASE("both Gorenstein* routes agree across the random corpus") {
    for (uint64_t seed = 0; seed < 300; ++seed) {
        auto c = random_complex(seed);
        for (const auto& k : kAllCoeffs) {
            bool a = is_gorenstein_star(c, k);
            bool b = is_gorenstein_star_v2(c, k);
            CHECK(a == b);
        }
    }
}

TEST_CASE("CM is monotone under field extension of the problem: Q follows from Z") {
    // over Z is the strongest: it implies CM over every field and over Q
    for (uint64_t seed = 300; seed < 420; ++seed) {
        auto c = random_complex(seed);
        if (is_cm(c, CoefficientSpec::Z())) {
            CHECK(is_cm(c, CoefficientSpec::Q()));
            CHECK(is_cm(c, CoefficientSpec::Fp(2)));
            CHECK(is_cm(c, CoefficientSpec::Fp(3)));
        }
        if (is_cm(c, CoefficientSpec::Fp(2))) {
            // F_p CM implies Q CM (universal coefficients: vanishing mod p
            // forces vanishing rationally in the relevant range)
            CHECK(is_cm(c, CoefficientSpec::Q()));
        }
    }
}

TEST_CASE("gorenstein core") {
    // a full simplex is a cone from every vertex; its core is {∅}
    auto rep = gorenstein_core(full_simplex(2), CoefficientSpec::Q());
    CHECK(rep.gorenstein);
    CHECK(rep.apex_count == 3);
    CHECK(rep.core.dim() == -1);

    // cone over a cycle: one apex, core is the cycle, Gorenstein
    auto coned = cycle_complex(4).cone(int64_t(100));
    auto rep2 = gorenstein_core(coned, CoefficientSpec::Q());
    CHECK(rep2.gorenstein);
    CHECK(rep2.apex_count == 1);
    CHECK(rep2.core.canonical_key() == cycle_complex(4).canonical_key());

    // the cycle itself: no apexes, core is itself
    auto rep3 = gorenstein_core(cycle_complex(4), CoefficientSpec::Q());
    CHECK(rep3.gorenstein);
    CHECK(rep3.apex_count == 0);

    // cone over the projective plane: not Gorenstein over Q (core fails G*)
    auto rp2_cone = rp2_6().cone(int64_t(100));
    auto rep4 = gorenstein_core(rp2_cone, CoefficientSpec::Q());
    CHECK(!rep4.gorenstein);
    CHECK(rep4.apex_count == 1);

    // a path of two edges is the cone over two points (a 0-sphere), so it
    // is Gorenstein: the hypersurface k[x,y,z]/(xz)
    auto path = SimplicialComplex::from_facets(
        {{int64_t(0), int64_t(1)}, {int64_t(1), int64_t(2)}});
    auto rep5 = gorenstein_core(path, CoefficientSpec::Q());
    CHECK(rep5.gorenstein);
    CHECK(rep5.apex_count == 1);
    CHECK(rep5.core.dim() == 0);
    CHECK(rep5.core.num_vertices() == 2);

    // three isolated points: core is itself, type 2, not Gorenstein
    auto three = SimplicialComplex::from_facets({{int64_t(0)}, {int64_t(1)}, {int64_t(2)}});
    auto rep6 = gorenstein_core(three, CoefficientSpec::Q());
    CHECK(!rep6.gorenstein);
    CHECK(rep6.apex_count == 0);

    // a path of three edges: core is itself and not Gorenstein*
    auto path3 = SimplicialComplex::from_facets(
        {{int64_t(0), int64_t(1)}, {int64_t(1), int64_t(2)}, {int64_t(2), int64_t(3)}});
    CHECK(!gorenstein_core(path3, CoefficientSpec::Q()).gorenstein);
}

TEST_CASE("shellability: frozen verdicts") {
    for (int d = 2; d <= 4; ++d) {
        auto r = is_shellable(simplex_boundary(d));
        CHECK(r.status == Tri::True);
        CHECK(r.order.size() == simplex_boundary(d).facets().size());
    }
    for (int n : {3, 4, 6}) CHECK(is_shellable(cycle_complex(n)).status == Tri::True);

    // the 6-vertex projective plane is not shellable (exhaustive search)
    auto rp2 = is_shellable(rp2_6(), 50000000);
    CHECK(rp2.status == Tri::False);

    // two disjoint edges cannot be shelled
    auto two_edges = SimplicialComplex::from_facets(
        {{int64_t(0), int64_t(1)}, {int64_t(2), int64_t(3)}});
    CHECK(is_shellable(two_edges).status == Tri::False);

    // non-pure input is rejected
    auto mixed = SimplicialComplex::from_facets({{int64_t(0), int64_t(1)}, {int64_t(2)}});
    CHECK_THROWS_AS(is_shellable(mixed), user_error);

    // a tiny budget yields Unknown on a complex needing real search
    auto tight = is_shellable(rp2_6(), 3);
    CHECK(tight.status == Tri::Unknown);

    // trivial cases
    CHECK(is_shellable(empty_complex()).status == Tri::True);
    CHECK(is_shellable(full_simplex(0)).status == Tri::True);
}

TEST_CASE("shelling witness order is actually a shelling") {
    // every prefix intersection condition re-checked independently
    auto check_witness = [](const SimplicialComplex& c) {
        auto r = is_shellable(c);
        REQUIRE(r.status == Tri::True);
        const auto& facets = c.facets();
        int fsz = c.dim() + 1;
        for (size_t t = 1; t < r.order.size(); ++t) {
            const Bitset& next = facets[r.order[t]];
            // the intersection with the previous prefix must be pure of
            // codimension one: every maximal intersection has size fsz-1
            std::vector<Bitset> inters;
            for (size_t s = 0; s < t; ++s) inters.push_back(next & facets[r.order[s]]);
            bool any_big = false;
            for (const Bitset& g : inters) {
                if ((int)g.count() == fsz - 1) any_big = true;
            }
            if (fsz >= 2) CHECK(any_big);
            for (const Bitset& g : inters) {
                if ((int)g.count() == fsz - 1) continue;
                bool covered = false;
                for (const Bitset& h : inters)
                    if ((int)h.count() == fsz - 1 && g.is_subset_of(h)) covered = true;
                CHECK(covered);
            }
        }
    };
    check_witness(simplex_boundary(3));
    check_witness(cycle_complex(6));
    check_witness(full_simplex(3));
}

TEST_CASE("homotopy Cohen-Macaulay and homotopy Gorenstein*") {
    CHECK(is_homotopy_cm(simplex_boundary(3)) == Tri::True);
    CHECK(is_homotopy_gorenstein_star(simplex_boundary(3)) == Tri::True);
    CHECK(is_homotopy_cm(cycle_complex(5)) == Tri::True);
    CHECK(is_homotopy_gorenstein_star(cycle_complex(5)) == Tri::True);
    CHECK(is_homotopy_cm(rp2_6()) == Tri::False);
    CHECK(is_homotopy_gorenstein_star(rp2_6()) == Tri::False);
    CHECK(is_homotopy_cm(full_simplex(2)) == Tri::True);
    CHECK(is_homotopy_gorenstein_star(full_simplex(2)) == Tri::False);

    auto path = SimplicialComplex::from_facets(
        {{int64_t(0), int64_t(1)}, {int64_t(1), int64_t(2)}});
    CHECK(is_homotopy_cm(path) == Tri::True);
    CHECK(is_homotopy_gorenstein_star(path) == Tri::False);
}

TEST_CASE("classification report structure and hierarchy") {
    auto rep = classify(simplex_boundary(3), kAllCoeffs);
    for (const auto& k : kAllCoeffs) {
        CHECK(rep.cm_over.at(k.str()));
        CHECK(rep.gorenstein_star_over.at(k.str()));
    }
    CHECK(rep.pure);
    CHECK(rep.thin);
    CHECK(rep.pseudomanifold);
    CHECK(rep.euler_condition);
    CHECK(rep.shellable == Tri::True);
    CHECK(rep.homotopy_cm == Tri::True);
    CHECK(rep.homotopy_gorenstein_star == Tri::True);
    CHECK(rep.hierarchy.at("a") == Tri::True);
    CHECK(rep.hierarchy.at("b") == Tri::Unknown);
    CHECK(rep.hierarchy.at("c") == Tri::True);
    CHECK(rep.hierarchy.at("d") == Tri::Unknown);
    CHECK(rep.hierarchy.at("e") == Tri::True);
    CHECK(rep.hierarchy.at("f") == Tri::True);
    CHECK(rep.hierarchy.at("g") == Tri::True);
    CHECK(rep.hierarchy.at("h") == Tri::True);

    auto rp2 = classify(rp2_6(), kAllCoeffs, 50000000);
    CHECK(rp2.cm_over.at("q"));
    CHECK(rp2.cm_over.at("f3"));
    CHECK(!rp2.cm_over.at("f2"));
    CHECK(!rp2.cm_over.at("z"));
    CHECK(!rp2.gorenstein_star_over.at("q"));
    CHECK(rp2.pure);
    CHECK(rp2.thin);
    CHECK(rp2.pseudomanifold);
    CHECK(!rp2.euler_condition); // chi~ = 0, not (-1)^2
    CHECK(rp2.shellable == Tri::False);
    CHECK(rp2.homotopy_cm == Tri::False);
    CHECK(rp2.hierarchy.at("a") == Tri::False);
    CHECK(rp2.hierarchy.at("e") == Tri::False);
    CHECK(rp2.hierarchy.at("g") == Tri::False);
    CHECK(rp2.hierarchy.at("h") == Tri::True);
}

TEST_CASE("classify never reports an inverted hierarchy on the corpus") {
    auto rank = [](Tri t) { return t == Tri::True ? 2 : t == Tri::False ? 0 : 1; };
    for (uint64_t seed = 500; seed < 650; ++seed) {
        auto c = random_complex(seed);
        auto rep = classify(c, kAllCoeffs, 200000);
        // definite True must never sit above a definite False downstream
        const std::string keys = "abcdefgh";
        for (size_t i = 0; i < keys.size(); ++i)
            for (size_t j = i + 1; j < keys.size(); ++j) {
                Tri up = rep.hierarchy.at(std::string(1, keys[i]));
                Tri dn = rep.hierarchy.at(std::string(1, keys[j]));
                if (up == Tri::True && dn == Tri::False) {
                    CHECK_MESSAGE(false, "hierarchy inversion at seed ", seed, ": ", keys[i],
                                  "=true but ", keys[j], "=false");
                }
                (void)rank;
            }
    }
}

TEST_CASE("parallel configuration is accepted") {
    ParallelConfig serial{1};
    CHECK(is_cm(rp2_6(), CoefficientSpec::Q(), serial));
    CHECK(!is_cm(rp2_6(), CoefficientSpec::Fp(2), serial));
}
