#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "cmtk/bitset.hpp"
#include "cmtk/label.hpp"

namespace cmtk {

// Abstract simplicial complex on a finite labelled vertex set, stored as the
// antichain of its facets. Vertices are reindexed 0..n-1 in sorted label
// order; all face computations run on index bitsets. The complex {∅} (one
// empty facet, dimension -1) is valid and distinct from "no complex". Every
// vertex of the label table belongs to at least one facet. Instances are
// immutable after construction.
class SimplicialComplex {
  public:
    // Normalizes: dedupes faces, drops dominated ones, sorts facets. The
    // vertex set is the union of the given faces; an empty list yields {∅}.
    static SimplicialComplex from_facets(const std::vector<std::vector<Label>>& facets);

    // As above but with a declared vertex set; declared vertices missing from
    // every face become isolated vertices (singleton facets). It is an error
    // for a face to use a vertex outside the declared set.
    static SimplicialComplex from_facets(const std::vector<Label>& vertices,
                                         const std::vector<std::vector<Label>>& facets);

    // Internal constructor on an existing index universe.
    static SimplicialComplex from_bitsets(std::vector<Label> labels, std::vector<Bitset> faces);

    int num_vertices() const { return int(labels_.size()); }
    int dim() const { return dim_; } // -1 for {∅}
    const std::vector<Label>& vertex_labels() const { return labels_; }
    const std::vector<Bitset>& facets() const { return facets_; }

    bool has_face(const Bitset& f) const;
    bool is_face_labels(const std::vector<Label>& verts) const;
    std::optional<Bitset> face_from_labels(const std::vector<Label>& verts) const;

    // All k-dimensional faces (cardinality k+1), sorted. k = -1 yields {∅}.
    std::vector<Bitset> faces(int k) const;
    // faces_by_dim()[k+1] = sorted k-faces, k = -1..dim.
    std::vector<std::vector<Bitset>> faces_by_dim() const;

    // f-vector (f_{-1}=1, f_0, ..., f_dim).
    std::vector<long long> f_vector() const;
    // h-vector (h_0..h_d), d = dim+1. Exact integers.
    std::vector<mpz_class> h_vector() const;
    // Reduced Euler characteristic = -1 + sum_k (-1)^k f_k.
    long long euler_characteristic_reduced() const;

    // link(F) = {G : G ∩ F = ∅, G ∪ F ∈ Δ}; F must be a face.
    SimplicialComplex link(const Bitset& f) const;
    // Induced subcomplex on a vertex subset E: all faces contained in E.
    SimplicialComplex induced(const Bitset& e) const;
    // Cone with a fresh apex label (must not collide with existing labels).
    SimplicialComplex cone(const Label& apex) const;
    // Join; vertex label sets must be disjoint.
    static SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);

    bool is_pure() const;
    // Facet adjacency: F ~ G iff they share a face of codimension one in both.
    std::vector<std::pair<int, int>> dual_graph() const;
    bool is_dually_connected() const;
    // Every (dim-1)-face lies in exactly two facets. Requires purity.
    bool is_thin() const;
    // Pure + thin + dually connected.
    bool is_pseudomanifold() const;

    // Graph connectivity of the 1-skeleton; {∅} and a point count as connected.
    bool is_connected() const;

    bool operator==(const SimplicialComplex& o) const {
        return labels_ == o.labels_ && facets_ == o.facets_;
    }

    // Label-free canonical key: vertex count plus sorted facet bitsets.
    // Complexes that coincide after forgetting labels share a key.
    std::string canonical_key() const;

  private:
    std::vector<Label> labels_; // sorted
    std::vector<Bitset> facets_;
    int dim_ = -1;
};

// The complex {∅} on no vertices.
SimplicialComplex empty_complex();
// Boundary of the d-simplex on d+1 vertices labelled 0..d (a (d-1)-sphere).
SimplicialComplex simplex_boundary(int d);
// Full d-simplex.
SimplicialComplex full_simplex(int d);
// Cycle (polygon) with n >= 3 vertices labelled 0..n-1.
SimplicialComplex cycle_complex(int n);
// The 6-vertex, 10-facet triangulation of the real projective plane.
SimplicialComplex rp2_6();

} // namespace cmtk
