#pragma once

#include <map>
#include <vector>

#include "cmtk/cm.hpp"
#include "cmtk/homology.hpp"
#include "cmtk/poly.hpp"

namespace cmtk {

// Inclusion-minimal non-faces of the complex: the monomial generators of the
// Stanley-Reisner ideal. Sorted; every listed set is a non-face whose proper
// subsets are all faces.
std::vector<Bitset> minimal_nonfaces(const SimplicialComplex& c);

// Graded Betti table of the Stanley-Reisner ring over a field: beta[{i,j}]
// with homological degree i and internal degree j. Entries are the
// dimensions from the induced-subcomplex homology sum over all vertex
// subsets E with |E| = j.
struct BettiTable {
    int n = 0; // number of vertices (= number of polynomial variables)
    int d = 0; // Krull dimension of the Stanley-Reisner ring (= dim + 1)
    std::map<std::pair<int, int>, long long> beta;

    int projective_dimension() const;        // max i with beta_{i,j} > 0
    int depth() const { return n - projective_dimension(); }
    long long type() const;                  // sum_j beta_{pd,j}
    bool cohen_macaulay() const { return depth() == d; }
};

// The full 2^n subset sweep of the induced-subcomplex homology formula.
// Field coefficients only; complexes above the vertex cap are refused.
// The parallel kernel partitions the subset range across OpenMP threads and
// merges per-thread tables; hochster_betti_serial is the reference
// implementation the kernel is tested against.
BettiTable hochster_betti(const SimplicialComplex& c, const CoefficientSpec& field,
                          int max_vertices = 20, const ParallelConfig& par = {});
BettiTable hochster_betti_serial(const SimplicialComplex& c, const CoefficientSpec& field,
                                 int max_vertices = 20);

// Numerator of the Hilbert series of the Stanley-Reisner ring over
// (1-t)^n, computed from the f-vector: sum_i f_{i-1} t^i (1-t)^{n-i}.
ZPoly hilbert_numerator_from_f(const SimplicialComplex& c);
// The same polynomial from a Betti table: sum_{i,j} (-1)^i beta_{i,j} t^j.
ZPoly hilbert_numerator_from_betti(const BettiTable& t);

// Algebraic route to the ring-theoretic properties, all derived from the
// Betti table. Gorenstein* additionally demands that the complex is not
// acyclic over the field.
bool is_cm_algebraic(const SimplicialComplex& c, const CoefficientSpec& field,
                     int max_vertices = 20, const ParallelConfig& par = {});
bool is_gorenstein_algebraic(const SimplicialComplex& c, const CoefficientSpec& field,
                             int max_vertices = 20, const ParallelConfig& par = {});
bool is_gorenstein_star_algebraic(const SimplicialComplex& c, const CoefficientSpec& field,
                                  int max_vertices = 20, const ParallelConfig& par = {});

} // namespace cmtk
