#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "cmtk/complex.hpp"
#include "cmtk/int_matrix.hpp"

namespace cmtk {

// Coefficient ring for homology: the integers, the rationals, or a prime
// field F_p with p < 2^31.
struct CoefficientSpec {
    enum class Kind { Z, Q, Fp };
    Kind kind = Kind::Z;
    long p = 0;

    static CoefficientSpec Z() { return {Kind::Z, 0}; }
    static CoefficientSpec Q() { return {Kind::Q, 0}; }
    static CoefficientSpec Fp(long p);

    bool is_field() const { return kind != Kind::Z; }
    long characteristic() const { return kind == Kind::Fp ? p : 0; }
    std::string str() const;
    // accepts "z", "q", "f<p>", "fp:<p>"
    static CoefficientSpec parse(const std::string& s);
    bool operator==(const CoefficientSpec& o) const = default;
};

// One reduced homology group: free rank plus invariant-factor torsion list
// (each > 1, in divisibility order). Over a field the torsion list is empty
// and rank is the Betti number.
struct HomologyGroup {
    long long rank = 0;
    std::vector<mpz_class> torsion;

    bool trivial() const { return rank == 0 && torsion.empty(); }
    // isomorphic to one copy of the coefficient ring (Z or the field)
    bool is_coefficient_ring() const { return rank == 1 && torsion.empty(); }
    bool operator==(const HomologyGroup& o) const = default;
};

// Reduced homology in dimensions -1..dim.
struct HomologyProfile {
    int dim = -1; // dimension of the complex
    std::vector<HomologyGroup> groups; // groups[i] = H~_{i-1}

    const HomologyGroup& at(int i) const; // H~_i; trivial outside range
    bool all_trivial_below(int top) const;
    bool operator==(const HomologyProfile& o) const = default;
};

// Faces by dimension plus the boundary maps. boundary[k] is the matrix of
// d_k : C_k -> C_{k-1} with rows indexed by (k-1)-faces (the single empty
// face for k = 0) and columns by k-faces, both in lexicographic order; the
// column entry for omitting the i-th smallest vertex is (-1)^i.
struct BoundaryData {
    std::vector<std::vector<Bitset>> faces; // faces[k+1] = k-faces, k = -1..dim
    std::vector<SparseIntMatrix> boundary;  // boundary[k] = d_k, k = 0..dim
};

BoundaryData boundary_matrices(const SimplicialComplex& c);

// Reduced simplicial homology with exact arithmetic: Smith normal form over
// Z, Gaussian elimination over Q / F_p.
HomologyProfile reduced_homology(const SimplicialComplex& c, const CoefficientSpec& coeff);

enum class Pi1Status { Trivial, Nontrivial, Unknown };

struct Pi1Budget {
    int max_passes = 64;
    size_t max_relator_length = 512;
    size_t max_relators = 8192;
};

// Sound, incomplete triviality check for the fundamental group: Nontrivial
// is certified by H~_1 != 0; Trivial is certified by collapsing the edge-path
// presentation with bounded Tietze simplification; anything else is Unknown.
// The complex must be connected.
Pi1Status fundamental_group_status(const SimplicialComplex& c, const Pi1Budget& budget = {});

std::string pi1_str(Pi1Status s);

} // namespace cmtk
