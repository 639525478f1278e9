#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cmtk/homology.hpp"

namespace cmtk {

// Three-valued answer for properties decided by bounded searches.
enum class Tri { False, True, Unknown };

inline Tri tri_of(bool b) { return b ? Tri::True : Tri::False; }
std::string tri_str(Tri t);
Tri tri_and(Tri a, Tri b);

struct ParallelConfig {
    int threads = 0; // 0 = library default (all available)
};

// Reisner's criterion: H~_i(link F) = 0 for every face F and every
// i < dim link F. Links are scanned from the top dimension down with
// memoized homology keyed by the link's label-free canonical form.
bool is_cm(const SimplicialComplex& c, const CoefficientSpec& coeff,
           const ParallelConfig& par = {});

// Route A: every link has the reduced homology of a sphere of its dimension
// (vanishing below the top, one copy of the coefficient ring on top).
bool is_gorenstein_star(const SimplicialComplex& c, const CoefficientSpec& coeff,
                        const ParallelConfig& par = {});

// Route B, structural: Cohen-Macaulay and thin; over a coefficient ring of
// characteristic other than 2 additionally requires the Euler condition
// chi~ = (-1)^dim. Non-pure complexes are simply not Gorenstein*.
bool is_gorenstein_star_v2(const SimplicialComplex& c, const CoefficientSpec& coeff,
                           const ParallelConfig& par = {});

// Core: the induced subcomplex on the vertices that do not lie in every
// facet. Gorenstein = the core is Gorenstein* (a full simplex has core {∅},
// which is Gorenstein* as the boundary of a point).
struct GorensteinReport {
    bool gorenstein = false;
    int apex_count = 0;
    SimplicialComplex core;
};
GorensteinReport gorenstein_core(const SimplicialComplex& c, const CoefficientSpec& coeff);

// Homotopy Cohen-Macaulay: CM over Z plus simply connected links in every
// dimension >= 2. Unknown when a fundamental-group check is inconclusive.
Tri is_homotopy_cm(const SimplicialComplex& c, const Pi1Budget& budget = {});
// Homotopy Gorenstein*: homotopy CM and thin.
Tri is_homotopy_gorenstein_star(const SimplicialComplex& c, const Pi1Budget& budget = {});

// Backtracking shelling-order search over a pure complex. True carries a
// witness order; False means the search space was exhausted; Unknown means
// the node budget ran out.
struct ShellingResult {
    Tri status = Tri::Unknown;
    std::vector<int> order; // facet indices, only when status == True
    long long nodes = 0;
};
ShellingResult is_shellable(const SimplicialComplex& c, long long node_budget = 1000000);

// Aggregate report: CM / Gorenstein* per coefficient choice, homotopy
// variants, structural flags, and the implication hierarchy
//   (a) thin+shellable => (b) PL sphere => (c) homotopy Gorenstein* =>
//   (d) sphere => (e) Gorenstein* over Z => (f) Gorenstein* over some field
//   => (g) pseudomanifold with chi~ = (-1)^dim => (h) thin,
// with (b) and (d) always Unknown (no PL/homeomorphism machinery).
struct ClassificationReport {
    std::map<std::string, bool> cm_over;
    std::map<std::string, bool> gorenstein_star_over;
    Tri homotopy_cm = Tri::Unknown;
    Tri homotopy_gorenstein_star = Tri::Unknown;
    bool pure = false;
    bool thin = false;
    bool pseudomanifold = false;
    bool euler_condition = false; // chi~ == (-1)^dim
    Tri shellable = Tri::Unknown;
    std::map<std::string, Tri> hierarchy; // keys "a".."h"
};

// Builds the report over the requested coefficient list. Both Gorenstein*
// routes run for every requested coefficient; a mismatch is an
// internal_error. A hierarchy inversion (a definite True above a definite
// False) is likewise an internal_error.
ClassificationReport classify(const SimplicialComplex& c,
                              const std::vector<CoefficientSpec>& coeffs,
                              long long shelling_budget = 1000000,
                              const Pi1Budget& pi1 = {}, const ParallelConfig& par = {});

} // namespace cmtk
