#include "cmtk/cm.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <set>
#include <unordered_map>
#include <unordered_set>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cmtk/errors.hpp"
#include "cmtk/parallel.hpp"

namespace cmtk {

std::string tri_str(Tri t) {
    switch (t) {
        case Tri::False: return "false";
        case Tri::True: return "true";
        default: return "unknown";
    }
}

Tri tri_and(Tri a, Tri b) {
    if (a == Tri::False || b == Tri::False) return Tri::False;
    if (a == Tri::True && b == Tri::True) return Tri::True;
    return Tri::Unknown;
}

namespace {

// collect all faces, top dimension first (facet links are {∅} and always pass)
std::vector<Bitset> faces_top_down(const SimplicialComplex& c) {
    auto by_dim = c.faces_by_dim();
    std::vector<Bitset> out;
    for (int k = int(by_dim.size()) - 1; k >= 0; --k)
        for (const Bitset& f : by_dim[k]) out.push_back(f);
    return out;
}

// per-thread memo: canonical link form -> homology profile
using Memo = std::unordered_map<std::string, HomologyProfile>;

const HomologyProfile& link_homology(const SimplicialComplex& link, const CoefficientSpec& coeff,
                                     Memo& memo) {
    std::string key = link.canonical_key();
    auto it = memo.find(key);
    if (it == memo.end()) it = memo.emplace(key, reduced_homology(link, coeff)).first;
    return it->second;
}

// Shared scan over all links: predicate(link profile, dim link) must hold for
// every face. Parallel over faces with an early-abort flag; each thread keeps
// its own memo so the scan is lock-free.
template <class Pred>
bool all_links(const SimplicialComplex& c, const CoefficientSpec& coeff,
               const ParallelConfig& par, Pred pred) {
    std::vector<Bitset> faces = faces_top_down(c);
    std::atomic<bool> ok{true};
    int nt = effective_threads(par.threads);
#pragma omp parallel num_threads(nt)
    {
        Memo memo;
#pragma omp for schedule(dynamic)
        for (long i = 0; i < long(faces.size()); ++i) {
            if (!ok.load(std::memory_order_relaxed)) continue;
            SimplicialComplex lk = c.link(faces[i]);
            const HomologyProfile& h = link_homology(lk, coeff, memo);
            if (!pred(h, lk.dim())) ok.store(false, std::memory_order_relaxed);
        }
    }
    return ok.load();
}

} // namespace

bool is_cm(const SimplicialComplex& c, const CoefficientSpec& coeff, const ParallelConfig& par) {
    return all_links(c, coeff, par, [](const HomologyProfile& h, int d) {
        return h.all_trivial_below(d);
    });
}

bool is_gorenstein_star(const SimplicialComplex& c, const CoefficientSpec& coeff,
                        const ParallelConfig& par) {
    return all_links(c, coeff, par, [](const HomologyProfile& h, int d) {
        return h.all_trivial_below(d) && h.at(d).is_coefficient_ring();
    });
}

bool is_gorenstein_star_v2(const SimplicialComplex& c, const CoefficientSpec& coeff,
                           const ParallelConfig& par) {
    if (!c.is_pure()) return false;
    if (!is_cm(c, coeff, par)) return false;
    if (!c.is_thin()) return false;
    if (coeff.characteristic() != 2) {
        long long want = (c.dim() % 2 == 0) ? 1 : -1;
        if (c.euler_characteristic_reduced() != want) return false;
    }
    return true;
}

GorensteinReport gorenstein_core(const SimplicialComplex& c, const CoefficientSpec& coeff) {
    int n = c.num_vertices();
    Bitset in_all(n);
    for (int i = 0; i < n; ++i) in_all.set(i);
    for (const Bitset& f : c.facets()) in_all = in_all & f;
    Bitset keep(n);
    for (int i = 0; i < n; ++i)
        if (!in_all.test(i)) keep.set(i);
    GorensteinReport rep{false, in_all.count(), c.induced(keep)};
    rep.gorenstein = rep.core == empty_complex() || is_gorenstein_star(rep.core, coeff);
    return rep;
}

Tri is_homotopy_cm(const SimplicialComplex& c, const Pi1Budget& budget) {
    if (!is_cm(c, CoefficientSpec::Z())) return Tri::False;
    // CM over Z already forces links of dimension >= 1 to be connected
    Tri acc = Tri::True;
    auto by_dim = c.faces_by_dim();
    for (const auto& level : by_dim)
        for (const Bitset& f : level) {
            SimplicialComplex lk = c.link(f);
            if (lk.dim() < 2) continue;
            switch (fundamental_group_status(lk, budget)) {
                case Pi1Status::Nontrivial: return Tri::False;
                case Pi1Status::Unknown: acc = Tri::Unknown; break;
                default: break;
            }
        }
    return acc;
}

Tri is_homotopy_gorenstein_star(const SimplicialComplex& c, const Pi1Budget& budget) {
    if (!c.is_pure() || !c.is_thin()) return Tri::False;
    return is_homotopy_cm(c, budget);
}

ShellingResult is_shellable(const SimplicialComplex& c, long long node_budget) {
    if (!c.is_pure()) throw user_error("is_shellable: requires pure complex");
    const auto& facets = c.facets();
    int m = int(facets.size());
    if (m <= 1) return {Tri::True, m ? std::vector<int>{0} : std::vector<int>{}, 1};

    int fsz = c.dim() + 1;
    ShellingResult res;
    // addable(next | chosen): the maximal intersections with chosen facets
    // all have cardinality fsz - 1
    auto addable = [&](int next, const std::vector<int>& chosen) {
        std::vector<Bitset> inters;
        inters.reserve(chosen.size());
        for (int i : chosen) inters.push_back(facets[next] & facets[i]);
        for (const Bitset& g : inters) {
            if (g.count() == fsz - 1) continue;
            bool covered = false;
            for (const Bitset& h : inters)
                if (h.count() == fsz - 1 && g.is_subset_of(h)) {
                    covered = true;
                    break;
                }
            if (!covered) return false;
        }
        // at least one codimension-one contact unless this is dimension 0
        if (fsz >= 2) {
            for (const Bitset& h : inters)
                if (h.count() == fsz - 1) return true;
            return false;
        }
        return true;
    };

    std::unordered_set<uint64_t> failed; // prefix sets (as masks) known not to extend
    bool budget_hit = false;
    std::vector<int> chosen;
    uint64_t chosen_mask = 0;
    bool use_memo = m <= 64;

    std::function<bool()> dfs = [&]() -> bool {
        if (int(chosen.size()) == m) return true;
        if (++res.nodes > node_budget) {
            budget_hit = true;
            return false;
        }
        if (use_memo && failed.count(chosen_mask)) return false;
        for (int next = 0; next < m; ++next) {
            if (use_memo && (chosen_mask >> next) & 1) continue;
            if (!use_memo && std::find(chosen.begin(), chosen.end(), next) != chosen.end())
                continue;
            if (!chosen.empty() && !addable(next, chosen)) continue;
            chosen.push_back(next);
            if (use_memo) chosen_mask |= uint64_t{1} << next;
            if (dfs()) return true;
            chosen.pop_back();
            if (use_memo) chosen_mask &= ~(uint64_t{1} << next);
            if (budget_hit) return false;
        }
        if (use_memo && !budget_hit && failed.size() < (1u << 22)) failed.insert(chosen_mask);
        return false;
    };

    if (dfs()) {
        res.status = Tri::True;
        res.order = chosen;
    } else {
        res.status = budget_hit ? Tri::Unknown : Tri::False;
    }
    return res;
}

namespace {

// primes dividing some torsion coefficient of some link homology group;
// nullopt when a torsion value resists factoring at desk scale
std::optional<std::vector<long>> relevant_torsion_primes(const SimplicialComplex& c) {
    std::vector<Bitset> faces = faces_top_down(c);
    Memo memo;
    std::set<long> primes;
    bool incomplete = false;
    for (const Bitset& f : faces) {
        SimplicialComplex lk = c.link(f);
        const HomologyProfile& h = link_homology(lk, CoefficientSpec::Z(), memo);
        for (const HomologyGroup& g : h.groups)
            for (mpz_class t : g.torsion) {
                for (long d = 2; d * d <= 1000000L && t > 1; ++d)
                    while (t % d == 0) {
                        primes.insert(d);
                        t /= d;
                    }
                if (t > 1) {
                    if (t < (1L << 31) && mpz_probab_prime_p(t.get_mpz_t(), 40))
                        primes.insert(t.get_si());
                    else incomplete = true;
                }
            }
    }
    if (incomplete) return std::nullopt;
    return std::vector<long>(primes.begin(), primes.end());
}

} // namespace

ClassificationReport classify(const SimplicialComplex& c, const std::vector<CoefficientSpec>& coeffs,
                              long long shelling_budget, const Pi1Budget& pi1,
                              const ParallelConfig& par) {
    ClassificationReport rep;
    rep.pure = c.is_pure();
    rep.thin = rep.pure && c.is_thin();
    rep.pseudomanifold = rep.pure && c.is_pseudomanifold();
    long long want = (c.dim() % 2 == 0) ? 1 : -1;
    rep.euler_condition = c.euler_characteristic_reduced() == want;

    for (const CoefficientSpec& k : coeffs) {
        bool cm = is_cm(c, k, par);
        bool ga = is_gorenstein_star(c, k, par);
        bool gb = is_gorenstein_star_v2(c, k, par);
        if (ga != gb)
            throw internal_error("Gorenstein* routes disagree over " + k.str() +
                                 ": link-homology says " + (ga ? "true" : "false") +
                                 ", structural says " + (gb ? "true" : "false"));
        rep.cm_over[k.str()] = cm;
        rep.gorenstein_star_over[k.str()] = ga;
    }

    rep.homotopy_cm = is_homotopy_cm(c, pi1);
    rep.homotopy_gorenstein_star = is_homotopy_gorenstein_star(c, pi1);
    rep.shellable = Tri::Unknown;
    if (rep.pure) rep.shellable = is_shellable(c, shelling_budget).status;

    // hierarchy
    rep.hierarchy["a"] = tri_and(tri_of(rep.thin), rep.shellable);
    rep.hierarchy["b"] = Tri::Unknown;
    rep.hierarchy["c"] = rep.homotopy_gorenstein_star;
    rep.hierarchy["d"] = Tri::Unknown;
    bool gz = is_gorenstein_star(c, CoefficientSpec::Z(), par);
    bool gz2 = is_gorenstein_star_v2(c, CoefficientSpec::Z(), par);
    if (gz != gz2) throw internal_error("Gorenstein* routes disagree over z");
    rep.hierarchy["e"] = tri_of(gz);

    // (f): Gorenstein* over some field. By universal coefficients it is
    // enough to test Q together with the primes dividing some link torsion.
    Tri f = Tri::False;
    if (is_gorenstein_star(c, CoefficientSpec::Q(), par)) f = Tri::True;
    if (f == Tri::False) {
        auto primes = relevant_torsion_primes(c);
        if (!primes) f = Tri::Unknown;
        else
            for (long p : *primes)
                if (is_gorenstein_star(c, CoefficientSpec::Fp(p), par)) {
                    f = Tri::True;
                    break;
                }
    }
    rep.hierarchy["f"] = f;
    rep.hierarchy["g"] = tri_of(rep.pseudomanifold && rep.euler_condition);
    rep.hierarchy["h"] = tri_of(rep.thin);

    // definite links of the chain must not invert
    const char* chain[] = {"a", "c", "e", "f", "g", "h"};
    for (int i = 0; i + 1 < 6; ++i) {
        Tri hi = rep.hierarchy[chain[i]];
        Tri lo = rep.hierarchy[chain[i + 1]];
        if (hi == Tri::True && lo == Tri::False)
            throw internal_error(std::string("hierarchy inversion: (") + chain[i] +
                                 ") holds but (" + chain[i + 1] + ") fails");
    }
    return rep;
}

} // namespace cmtk
