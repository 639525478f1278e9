#pragma once

#include <gmpxx.h>

#include <functional>
#include <string>
#include <vector>

#include "cmtk/bitset.hpp"
#include "cmtk/poset.hpp"

namespace cmtk {

// Labelled point in rational affine space.
struct RationalPoint {
    std::string label;
    std::vector<mpq_class> coords;
    mpq_class weight = 0;
};

// Affine point configuration with exact rational coordinates. All points
// share one ambient dimension; labels are distinct. Matroid rank of a point
// subset = linear rank of the homogenized vectors (1, p).
struct PointConfiguration {
    std::vector<RationalPoint> points;

    int ambient_dim() const { return points.empty() ? 0 : int(points[0].coords.size()); }
    void validate() const;
    int rank_of(const Bitset& subset) const;
    Bitset closure(const Bitset& subset) const;
};

// The lattice of flats of a matroid on labelled ground elements, enumerated
// bottom-up from the closure operator: each flat of rank k+1 arises as the
// closure of a rank-k flat plus one element, which also yields the cover
// relation. Geometricity is validated at construction.
class GeometricLatticeOfFlats {
  public:
    static GeometricLatticeOfFlats from_points(const PointConfiguration& pc);
    static GeometricLatticeOfFlats from_graph(int num_vertices,
                                              const std::vector<std::pair<int, int>>& edges);
    static GeometricLatticeOfFlats uniform(int n, int r);
    static GeometricLatticeOfFlats from_closure(std::vector<std::string> element_labels,
                                                const std::function<Bitset(const Bitset&)>& cl);

    int num_elements() const { return int(element_labels_.size()); }
    const std::vector<std::string>& element_labels() const { return element_labels_; }
    int num_flats() const { return int(flats_.size()); }
    const std::vector<Bitset>& flats() const { return flats_; }
    const std::vector<int>& flat_rank() const { return rank_; }
    int matroid_rank() const { return matroid_rank_; }
    int bottom_flat() const { return bottom_; }
    int top_flat() const { return top_; }
    const std::vector<std::pair<int, int>>& covers() const { return covers_; }
    int flat_index(const Bitset& f) const; // -1 when absent
    std::string flat_label(int i) const;

    // Poset / lattice views (elements labelled "{a,b,...}").
    FinitePoset poset() const;
    LatticeStructure lattice() const;

  private:
    std::vector<std::string> element_labels_;
    std::vector<Bitset> flats_; // sorted by (rank, set order)
    std::vector<int> rank_;
    std::vector<std::pair<int, int>> covers_;
    int bottom_ = -1, top_ = -1, matroid_rank_ = 0;
};

} // namespace cmtk
