// Acceptance suite: ten end-to-end criteria, one PASS/FAIL line each.
// Exit status 0 only when every criterion passes within its time budget.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cmtk/cli.hpp"
#include "cmtk/cm.hpp"
#include "cmtk/errors.hpp"
#include "cmtk/filtered.hpp"
#include "cmtk/homology.hpp"
#include "cmtk/json_io.hpp"
#include "cmtk/matroid.hpp"
#include "cmtk/stanley_reisner.hpp"
#include "support.hpp"

using namespace cmtk;
using cmtk_test::complete_graph_lattice;
using cmtk_test::random_complex;
using cmtk_test::random_point_config;

namespace {

constexpr uint64_t kCorpusBase = 0xC0FFEE;
constexpr int kCorpusSize = 1000;

struct Criterion {
    std::string name;
    double budget_s;
    std::function<bool(std::string&)> run;
};

PointConfiguration quadrilateral_config() {
    PointConfiguration pc;
    auto add = [&](const char* label, long x, long y, long w) {
        RationalPoint p;
        p.label = label;
        p.coords = {mpq_class(x), mpq_class(y)};
        p.weight = w;
        pc.points.push_back(std::move(p));
    };
    add("a", 0, 0, 1);
    add("b", 2, 0, -4);
    add("c", 4, 0, 2);
    add("d", 3, 1, 3);
    add("e", 0, 4, -6);
    add("f", 0, -2, 4);
    return pc;
}

bool expect(bool cond, const std::string& what, std::string& detail) {
    if (!cond && detail.empty()) detail = what;
    return cond;
}

// 1. The 6-vertex projective plane is classified with exact field
//    sensitivity and exact integral torsion.
bool crit_projective_plane(std::string& detail) {
    auto rp2 = rp2_6();
    bool ok = true;
    ok &= expect(is_cm(rp2, CoefficientSpec::Q()), "CM over Q expected", detail);
    ok &= expect(is_cm(rp2, CoefficientSpec::Fp(3)), "CM over F3 expected", detail);
    ok &= expect(!is_cm(rp2, CoefficientSpec::Fp(2)), "not CM over F2 expected", detail);
    ok &= expect(!is_cm(rp2, CoefficientSpec::Z()), "not CM over Z expected", detail);
    auto h = reduced_homology(rp2, CoefficientSpec::Z());
    ok &= expect(h.at(1).rank == 0 && h.at(1).torsion.size() == 1 && h.at(1).torsion[0] == 2,
                 "H~_1 = Z/2 expected", detail);
    ok &= expect(h.at(2).trivial(), "H~_2 = 0 expected", detail);
    ok &= expect(!is_gorenstein_star(rp2, CoefficientSpec::Q()), "not Gorenstein* over Q",
                 detail);
    return ok;
}

// 2. The weighted model configuration: lattice shape and both filtered
//    characteristic polynomials, exactly.
bool crit_filtered_charpoly(std::string& detail) {
    auto pc = quadrilateral_config();
    auto g = GeometricLatticeOfFlats::from_points(pc);
    bool ok = true;
    ok &= expect(g.num_flats() == 15, "15 flats expected", detail);
    int lines = 0;
    for (int r : g.flat_rank()) lines += (r == 2);
    ok &= expect(lines == 7, "7 lines expected", detail);
    std::vector<mpq_class> w;
    for (const auto& p : pc.points) w.push_back(p.weight);
    WeightedFiltration wf(g, w, 0);
    ok &= expect(filtered_characteristic_polynomial(wf).str() == "z^3 - 4z^2 + 3z",
                 "positive-part polynomial mismatch", detail);
    ok &= expect(filtered_characteristic_polynomial(wf.mirrored()).str() == "z^3 - 2z^2 + z",
                 "negative-part polynomial mismatch", detail);
    return ok;
}

// 3. Safe walks on the model configuration: full pairwise connectivity of
//    the positive part, the exact walk, and the exact diameter.
bool crit_safe_walks(std::string& detail) {
    auto pc = quadrilateral_config();
    auto g = GeometricLatticeOfFlats::from_points(pc);
    std::vector<mpq_class> w;
    for (const auto& p : pc.points) w.push_back(p.weight);
    WeightedFiltration wf(g, w, 0);
    bool ok = true;
    std::vector<std::string> pos = {"a", "c", "d", "f"};
    for (const auto& s : pos)
        for (const auto& t : pos) {
            auto walk = safe_walk(wf, s, t);
            ok &= expect(!walk.empty() && walk.front() == s && walk.back() == t,
                         "walk endpoints " + s + "->" + t, detail);
        }
    ok &= expect(safe_walk(wf, "a", "c") == std::vector<std::string>{"a", "d", "f", "c"},
                 "canonical walk a->c mismatch", detail);
    ok &= expect(graph_diameter(wf) == 3, "diameter 3 expected", detail);
    return ok;
}

// 4. Reisner's link criterion and the Betti-table route decide
//    Cohen-Macaulayness identically over a 1000-complex corpus.
bool crit_cm_routes(std::string& detail) {
    for (int i = 0; i < kCorpusSize; ++i) {
        auto c = random_complex(kCorpusBase + i);
        for (auto f : {CoefficientSpec::Q(), CoefficientSpec::Fp(2), CoefficientSpec::Fp(3)}) {
            if (is_cm(c, f) != is_cm_algebraic(c, f)) {
                detail = "CM mismatch at seed " + std::to_string(kCorpusBase + i) + " over " +
                         f.str();
                return false;
            }
        }
    }
    return true;
}

// 5. All Gorenstein* routes agree over the same corpus: sphere-homology
//    links, the structural route, and the algebraic route.
bool crit_gorenstein_routes(std::string& detail) {
    for (int i = 0; i < kCorpusSize; ++i) {
        auto c = random_complex(kCorpusBase + i);
        for (auto f : {CoefficientSpec::Q(), CoefficientSpec::Fp(2), CoefficientSpec::Fp(3),
                       CoefficientSpec::Z()}) {
            bool a = is_gorenstein_star(c, f);
            bool b = is_gorenstein_star_v2(c, f);
            if (a != b) {
                detail = "route mismatch at seed " + std::to_string(kCorpusBase + i) + " over " +
                         f.str();
                return false;
            }
            if (f.is_field() && a != is_gorenstein_star_algebraic(c, f)) {
                detail = "algebraic mismatch at seed " + std::to_string(kCorpusBase + i) +
                         " over " + f.str();
                return false;
            }
        }
    }
    return true;
}

// 6. Resolution invariants stay inside the syzygy window and the Betti
//    table reproduces the Hilbert numerator computed from the f-vector.
bool crit_syzygy_bounds(std::string& detail) {
    for (int i = 0; i < kCorpusSize; ++i) {
        auto c = random_complex(kCorpusBase + i);
        if (c.dim() < 0) continue;
        auto t = hochster_betti(c, CoefficientSpec::Q());
        int pd = t.projective_dimension();
        if (!(pd >= t.n - t.d && pd <= t.n && t.depth() <= t.d && t.type() >= 1)) {
            detail = "syzygy window violated at seed " + std::to_string(kCorpusBase + i);
            return false;
        }
        if (hilbert_numerator_from_f(c) != hilbert_numerator_from_betti(t)) {
            detail = "Hilbert numerator mismatch at seed " + std::to_string(kCorpusBase + i);
            return false;
        }
    }
    return true;
}

// 7. Whitney coefficients of geometric-lattice characteristic polynomials
//    alternate strictly in sign.
bool crit_rota_positivity(std::string& detail) {
    std::vector<GeometricLatticeOfFlats> lattices;
    for (uint64_t seed = 0; seed < 20; ++seed)
        lattices.push_back(GeometricLatticeOfFlats::from_points(random_point_config(seed)));
    for (int n : {3, 4, 5}) lattices.push_back(complete_graph_lattice(n));
    lattices.push_back(GeometricLatticeOfFlats::uniform(4, 2));
    lattices.push_back(GeometricLatticeOfFlats::uniform(6, 3));
    lattices.push_back(GeometricLatticeOfFlats::from_points(quadrilateral_config()));
    for (size_t li = 0; li < lattices.size(); ++li) {
        const auto& g = lattices[li];
        auto chi = g.lattice().characteristic_polynomial();
        int r = g.matroid_rank();
        for (int k = 0; k <= r; ++k) {
            mpz_class c = chi.coeff(r - k);
            bool ok = (k % 2 == 0) ? c > 0 : c < 0;
            if (!ok) {
                detail = "non-alternating coefficient in lattice " + std::to_string(li) +
                         " at k=" + std::to_string(k);
                return false;
            }
        }
    }
    return true;
}

// 8. The filtration theorem, empirically: for seeded generic zero-sum
//    draws on four matroids, the filtered order complex is CM over Z of
//    dimension r-2, on both sides of the filtration, and the positive
//    flat graph is connected.
bool crit_filtration_theorem(std::string& detail) {
    std::vector<std::pair<std::string, GeometricLatticeOfFlats>> lattices;
    lattices.emplace_back("quadrilateral", GeometricLatticeOfFlats::from_points(
                                               quadrilateral_config()));
    lattices.emplace_back("K4", complete_graph_lattice(4));
    lattices.emplace_back("U(6,3)", GeometricLatticeOfFlats::uniform(6, 3));
    lattices.emplace_back("K5", complete_graph_lattice(5));
    for (auto& [name, g] : lattices) {
        std::mt19937_64 rng(0xACCE5500 + g.num_flats());
        for (int t = 0; t < 50; ++t) {
            auto w = random_generic_zero_sum_weights(g, rng);
            WeightedFiltration wf(g, w, 0);
            for (const auto& side : {wf, wf.mirrored()}) {
                FiltrationTheoremReport rep;
                try {
                    rep = check_filtration_theorem(side);
                } catch (const std::exception& e) {
                    detail = name + " draw " + std::to_string(t) + ": " + e.what();
                    return false;
                }
                if (!rep.cm_over_z || !rep.dim_preserved) {
                    detail = name + " draw " + std::to_string(t) + ": cm=" +
                             (rep.cm_over_z ? "true" : "false") + " dim=" +
                             std::to_string(rep.dim) + " expected " +
                             std::to_string(rep.expected_dim);
                    return false;
                }
            }
            try {
                graph_diameter(wf); // throws internal_error when disconnected
            } catch (const std::exception& e) {
                detail = name + " draw " + std::to_string(t) + " connectivity: " + e.what();
                return false;
            }
        }
    }
    return true;
}

// 9. Full classification across the corpus never trips an internal
//    consistency check (route disagreement or hierarchy inversion).
bool crit_classification_consistency(std::string& detail) {
    std::vector<CoefficientSpec> coeffs = {CoefficientSpec::Q(), CoefficientSpec::Fp(2),
                                           CoefficientSpec::Fp(3), CoefficientSpec::Z()};
    for (int i = 0; i < kCorpusSize; ++i) {
        auto c = random_complex(kCorpusBase + i);
        try {
            auto rep = classify(c, coeffs, 50000);
            (void)rep;
        } catch (const internal_error& e) {
            detail = "internal error at seed " + std::to_string(kCorpusBase + i) + ": " +
                     e.what();
            return false;
        }
    }
    return true;
}

// 10. Exact homology: sphere boundaries carry Z exactly on top, and field
//     Betti numbers match the universal-coefficient prediction from the
//     integral answer across the corpus.
bool crit_exact_homology(std::string& detail) {
    for (int n = 1; n <= 3; ++n) {
        auto s = simplex_boundary(n + 1);
        auto h = reduced_homology(s, CoefficientSpec::Z());
        if (!(h.at(n).is_coefficient_ring() && h.all_trivial_below(n))) {
            detail = "sphere homology wrong at n=" + std::to_string(n);
            return false;
        }
    }
    auto count_p = [](const HomologyGroup& g, long p) {
        long long n = 0;
        for (const mpz_class& t : g.torsion)
            if (mpz_divisible_ui_p(t.get_mpz_t(), (unsigned long)p)) ++n;
        return n;
    };
    for (int i = 0; i < 300; ++i) {
        auto c = random_complex(kCorpusBase + i);
        auto hz = reduced_homology(c, CoefficientSpec::Z());
        for (long p : {2L, 3L, 5L}) {
            auto hp = reduced_homology(c, CoefficientSpec::Fp(p));
            for (int k = -1; k <= c.dim(); ++k) {
                long long want = hz.at(k).rank + count_p(hz.at(k), p) + count_p(hz.at(k - 1), p);
                if (hp.at(k).rank != want) {
                    detail = "universal-coefficient mismatch at seed " +
                             std::to_string(kCorpusBase + i) + " p=" + std::to_string(p);
                    return false;
                }
            }
        }
    }
    return true;
}

} // namespace

int main() {
    std::vector<Criterion> criteria = {
        {"projective plane classification", 1.0, crit_projective_plane},
        {"filtered characteristic polynomials", 1.0, crit_filtered_charpoly},
        {"safe walks and diameter", 1.0, crit_safe_walks},
        {"Cohen-Macaulay route agreement (1000 complexes)", 300.0, crit_cm_routes},
        {"Gorenstein* route agreement (1000 complexes)", 300.0, crit_gorenstein_routes},
        {"syzygy bounds and Hilbert identity", 300.0, crit_syzygy_bounds},
        {"Whitney sign alternation", 60.0, crit_rota_positivity},
        {"filtration theorem on random weights", 600.0, crit_filtration_theorem},
        {"classification consistency sweep", 300.0, crit_classification_consistency},
        {"exact homology and universal coefficients", 120.0, crit_exact_homology},
    };

    int passed = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        auto t0 = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = criteria[i].run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs > criteria[i].budget_s) {
            ok = false;
            if (detail.empty())
                detail = "over budget (" + std::to_string(criteria[i].budget_s) + " s)";
        }
        passed += ok ? 1 : 0;
        std::printf("[%2zu] %s %s (%.2f s)%s%s\n", i + 1, ok ? "PASS" : "FAIL",
                    criteria[i].name.c_str(), secs, detail.empty() ? "" : " -- ",
                    detail.c_str());
        std::fflush(stdout);
    }
    std::printf("ACCEPTANCE: %d/%zu passed\n", passed, criteria.size());
    return passed == int(criteria.size()) ? 0 : 1;
}
