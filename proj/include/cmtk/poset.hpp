#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cmtk/bitset.hpp"
#include "cmtk/complex.hpp"
#include "cmtk/label.hpp"
#include "cmtk/poly.hpp"

namespace cmtk {

// Finite poset on labelled elements. Input relations may be any acyclic set
// of (lower, upper) pairs; the constructor stores their transitive reduction
// as the cover relation and caches the full transitive closure, so instances
// are immutable and all order queries are O(1) bit tests afterwards.
//
// A poset may carry an explicit rank annotation (e.g. ranks inherited from
// an ambient graded lattice when taking proper parts or rank selections);
// operations that need ranks use the annotation when present and fall back
// to the intrinsic height function when the poset is graded.
class FinitePoset {
  public:
    FinitePoset() = default;
    static FinitePoset from_relations(std::vector<Label> elements,
                                      const std::vector<std::pair<Label, Label>>& relations);
    static FinitePoset from_relations_indexed(std::vector<Label> elements,
                                              const std::vector<std::pair<int, int>>& relations,
                                              std::optional<std::vector<int>> ranks = {});

    int size() const { return int(labels_.size()); }
    const std::vector<Label>& elements() const { return labels_; }
    const std::vector<std::pair<int, int>>& covers() const { return covers_; }
    std::optional<int> index_of(const Label& l) const;

    bool leq(int a, int b) const { return a == b || above_[a].test(b); }
    bool less(int a, int b) const { return a != b && above_[a].test(b); }

    std::vector<int> minimal_elements() const;
    std::vector<int> maximal_elements() const;

    // Moebius function of the interval [x, y]; 0 when x is not below y.
    mpz_class mobius(int x, int y) const;
    // mu(x, z) for all z in one pass.
    std::vector<mpz_class> mobius_row(int x) const;

    // Order complex: vertices are elements, facets are the maximal chains.
    SimplicialComplex order_complex() const;

    // Induced subposet; keeps rank annotations when present.
    FinitePoset induced(const std::vector<int>& keep) const;
    // Elements of [x, y].
    FinitePoset interval(int x, int y) const;

    // True when every cover step raises the height function by one.
    bool is_graded() const;
    // Rank annotation if set, else heights (requires gradedness).
    std::vector<int> ranks() const;
    bool has_rank_annotation() const { return bool(ranks_); }
    // Induced subposet on the elements whose rank lies in keep_ranks.
    FinitePoset rank_selection(const std::vector<int>& keep_ranks) const;

    // linear extension (topological order), cached
    const std::vector<int>& topo_order() const { return topo_; }

  private:
    std::vector<Label> labels_;
    std::vector<std::pair<int, int>> covers_;
    std::vector<Bitset> above_;  // above_[a] = {b : a < b}
    std::vector<int> topo_;
    std::optional<std::vector<int>> ranks_;
    std::vector<int> heights() const;
};

// A finite lattice: bounded poset with total binary meets and joins,
// tabulated at construction. Construction fails with user_error when the
// poset is not a lattice.
class LatticeStructure {
  public:
    explicit LatticeStructure(FinitePoset p);

    const FinitePoset& poset() const { return p_; }
    int bottom() const { return bottom_; }
    int top() const { return top_; }
    int join(int a, int b) const { return join_[a * p_.size() + b]; }
    int meet(int a, int b) const { return meet_[a * p_.size() + b]; }
    std::vector<int> atoms() const; // covers of the bottom

    // All maximal chains share length r and covers raise height by one.
    bool is_graded() const;
    int rank() const; // height of the top (graded lattices)
    std::vector<int> rank_of() const;

    // Semimodular (height inequality on all pairs) and atomistic.
    bool is_geometric() const;

    // chi(L; z) = sum_x mu(0,x) z^(r - rank(x)); requires gradedness.
    ZPoly characteristic_polynomial() const;

    // The poset minus bottom and top, rank-annotated from the lattice.
    FinitePoset proper_part() const;

  private:
    FinitePoset p_;
    int bottom_ = -1, top_ = -1;
    std::vector<int> join_, meet_;
};

// Builders used across tests: the Boolean lattice on n atoms, a chain with
// n + 1 elements (rank n), and an antichain plus bounds when bounded = true.
FinitePoset boolean_lattice(int n);
FinitePoset chain_poset(int n);

} // namespace cmtk
