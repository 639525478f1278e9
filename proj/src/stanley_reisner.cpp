#include "cmtk/stanley_reisner.hpp"

#include <algorithm>
#include <set>

#include "cmtk/errors.hpp"
#include "cmtk/parallel.hpp"

namespace cmtk {

std::vector<Bitset> minimal_nonfaces(const SimplicialComplex& c) {
    // level-by-level: candidates at cardinality k+1 extend faces at k; a
    // candidate whose proper maximal subsets are all faces is either a face
    // or a minimal non-face
    int n = c.num_vertices();
    std::vector<Bitset> out;
    std::set<Bitset> level; // k-faces
    level.insert(Bitset(n));
    for (int card = 1; card <= n && !level.empty(); ++card) {
        std::set<Bitset> candidates;
        for (const Bitset& f : level)
            for (int v = 0; v < n; ++v)
                if (!f.test(v)) candidates.insert(f.with(v));
        std::set<Bitset> next;
        for (const Bitset& cand : candidates) {
            bool all_subsets_faces = true;
            cand.for_each([&](int v) {
                if (!level.count(cand.without(v))) all_subsets_faces = false;
            });
            if (!all_subsets_faces) continue;
            if (c.has_face(cand)) next.insert(cand);
            else out.push_back(cand);
        }
        level = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

int BettiTable::projective_dimension() const {
    int pd = 0;
    for (auto& [ij, v] : beta)
        if (v > 0) pd = std::max(pd, ij.first);
    return pd;
}

long long BettiTable::type() const {
    int pd = projective_dimension();
    long long t = 0;
    for (auto& [ij, v] : beta)
        if (ij.first == pd) t += v;
    return t;
}

namespace {

void accumulate_subset(const SimplicialComplex& c, uint64_t mask, const CoefficientSpec& field,
                       BettiTable& table) {
    int n = c.num_vertices();
    Bitset e(n);
    for (int v = 0; v < n; ++v)
        if ((mask >> v) & 1) e.set(v);
    SimplicialComplex sub = c.induced(e);
    HomologyProfile h = reduced_homology(sub, field);
    int j = e.count();
    for (int d = -1; d <= h.dim; ++d) {
        long long b = h.at(d).rank;
        if (b > 0) table.beta[{j - d - 1, j}] += b;
    }
}

BettiTable make_table(const SimplicialComplex& c) {
    BettiTable t;
    t.n = c.num_vertices();
    t.d = c.dim() + 1;
    return t;
}

void check_inputs(const SimplicialComplex& c, const CoefficientSpec& field, int max_vertices) {
    if (!field.is_field()) throw user_error("betti table: field coefficients required");
    if (max_vertices > 62) max_vertices = 62;
    if (c.num_vertices() > max_vertices)
        throw user_error("betti table: complex has " + std::to_string(c.num_vertices()) +
                         " vertices, cap is " + std::to_string(max_vertices) +
                         " (the subset sweep is exponential)");
}

} // namespace

BettiTable hochster_betti_serial(const SimplicialComplex& c, const CoefficientSpec& field,
                                 int max_vertices) {
    check_inputs(c, field, max_vertices);
    BettiTable table = make_table(c);
    uint64_t total = uint64_t{1} << c.num_vertices();
    for (uint64_t mask = 0; mask < total; ++mask) accumulate_subset(c, mask, field, table);
    return table;
}

BettiTable hochster_betti(const SimplicialComplex& c, const CoefficientSpec& field,
                          int max_vertices, const ParallelConfig& par) {
    check_inputs(c, field, max_vertices);
    BettiTable table = make_table(c);
    int64_t total = int64_t{1} << c.num_vertices();
    int nt = effective_threads(par.threads);
    std::vector<BettiTable> local((size_t)nt);
#pragma omp parallel num_threads(nt)
    {
#ifdef _OPENMP
        BettiTable& mine = local[omp_get_thread_num()];
#else
        BettiTable& mine = local[0];
#endif
#pragma omp for schedule(static)
        for (int64_t mask = 0; mask < total; ++mask)
            accumulate_subset(c, (uint64_t)mask, field, mine);
    }
    for (const BettiTable& l : local)
        for (auto& [ij, v] : l.beta) table.beta[ij] += v;
    return table;
}

ZPoly hilbert_numerator_from_f(const SimplicialComplex& c) {
    auto f = c.f_vector();
    int n = c.num_vertices();
    ZPoly one_minus_t(std::vector<mpz_class>{1, -1});
    // powers of (1-t)
    std::vector<ZPoly> pw(n + 1);
    pw[0] = ZPoly(std::vector<mpz_class>{1});
    for (int k = 1; k <= n; ++k) pw[k] = pw[k - 1] * one_minus_t;
    ZPoly num;
    for (int i = 0; i < int(f.size()); ++i)
        num += ZPoly::monomial(mpz_class((long)f[i]), i) * pw[n - i];
    return num;
}

ZPoly hilbert_numerator_from_betti(const BettiTable& t) {
    ZPoly num;
    for (auto& [ij, v] : t.beta) {
        mpz_class coeff((long)v);
        if (ij.first % 2) coeff = -coeff;
        num += ZPoly::monomial(coeff, ij.second);
    }
    return num;
}

bool is_cm_algebraic(const SimplicialComplex& c, const CoefficientSpec& field, int max_vertices,
                     const ParallelConfig& par) {
    return hochster_betti(c, field, max_vertices, par).cohen_macaulay();
}

bool is_gorenstein_algebraic(const SimplicialComplex& c, const CoefficientSpec& field,
                             int max_vertices, const ParallelConfig& par) {
    BettiTable t = hochster_betti(c, field, max_vertices, par);
    return t.cohen_macaulay() && t.type() == 1;
}

bool is_gorenstein_star_algebraic(const SimplicialComplex& c, const CoefficientSpec& field,
                                  int max_vertices, const ParallelConfig& par) {
    if (!is_gorenstein_algebraic(c, field, max_vertices, par)) return false;
    HomologyProfile h = reduced_homology(c, field);
    for (int i = -1; i <= h.dim; ++i)
        if (!h.at(i).trivial()) return true; // not acyclic
    return false;
}

} // namespace cmtk
