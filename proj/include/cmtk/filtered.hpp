#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cmtk/cm.hpp"
#include "cmtk/matroid.hpp"
#include "cmtk/poly.hpp"
#include "cmtk/poset.hpp"

namespace cmtk {

// A geometric lattice with one exact rational weight per ground element.
// Flat weights are the element sums. The weighting is generic when no two
// distinct nonempty flats share a weight; the first offending pair is kept
// for diagnostics. Genericity is a hypothesis of the filtration theorem,
// not of the filtration itself, so construction records the status and the
// operations that depend on it enforce it.
class WeightedFiltration {
  public:
    WeightedFiltration(GeometricLatticeOfFlats lattice, std::vector<mpq_class> weights,
                       mpq_class threshold);

    const GeometricLatticeOfFlats& lattice() const { return lattice_; }
    const std::vector<mpq_class>& weights() const { return weights_; }
    const mpq_class& threshold() const { return threshold_; }
    const mpq_class& flat_weight(int flat) const { return flat_weight_[flat]; }
    mpq_class total_weight() const { return flat_weight_[lattice_.top_flat()]; }

    bool is_generic() const { return !collision_; }
    // colliding flat labels, e.g. "{d} and {b,d,f}"
    std::string collision_description() const;
    void require_generic() const;

    // same lattice, negated weights and threshold; turns L into its
    // mirror so that the negative part appears as a positive part
    WeightedFiltration mirrored() const;

  private:
    GeometricLatticeOfFlats lattice_;
    std::vector<mpq_class> weights_;
    mpq_class threshold_;
    std::vector<mpq_class> flat_weight_;
    std::optional<std::pair<int, int>> collision_;
};

// Flat ids with weight strictly above the threshold. The empty flat is
// always excluded, the top flat is kept whenever its weight qualifies.
std::vector<int> filtered_flats(const WeightedFiltration& w);

// The filtered subposet with its induced order, elements labelled "{a,b}"
// and annotated with their ambient lattice ranks.
FinitePoset filtered_poset(const WeightedFiltration& w);

// Characteristic polynomial of the filtered poset: a formal bottom is
// adjoined for the Mobius computation, exponents use ambient ranks, and
// the adjoined bottom contributes the leading z^r.
ZPoly filtered_characteristic_polynomial(const WeightedFiltration& w);

struct FiltrationTheoremReport {
    bool cm_over_z = false;
    int dim = -2;          // dim of the order complex of the filtered poset
    int expected_dim = -2; // r - 2
    bool dim_preserved = false;
    Tri homotopy_status = Tri::Unknown;
};

// Checks the filtration theorem's conclusion: the order complex of the
// filtered poset is CM over the integers and has dimension r - 2.
// Requires generic weights and threshold <= min(0, total weight).
FiltrationTheoremReport check_filtration_theorem(const WeightedFiltration& w);

// Graph on the positively weighted ground elements; two of them are
// adjacent when some positive rank-k flat contains both.
struct PositiveFlatGraph {
    std::vector<int> vertices; // ground element ids, ascending
    std::vector<std::pair<int, int>> edges;
    std::map<int, std::vector<int>> adjacency;
};

PositiveFlatGraph positive_flat_graph(const WeightedFiltration& w, int k = 2);

// Shortest walk between two positive elements through the positive flat
// graph, as a list of element labels. Unknown or nonpositive endpoints are
// user errors; a missing path contradicts the filtration theorem and is
// reported as an internal error carrying the witness partition.
std::vector<std::string> safe_walk(const WeightedFiltration& w, const std::string& from,
                                   const std::string& to, int k = 2);

// Max shortest-path distance over pairs of positive elements (0 when
// fewer than two). Disconnection raises the same internal error.
int graph_diameter(const WeightedFiltration& w, int k = 2);

// Integer weights, zero sum, generic over the flats of the lattice;
// sampled from a widening range until both conditions hold.
std::vector<mpq_class> random_generic_zero_sum_weights(const GeometricLatticeOfFlats& lattice,
                                                       std::mt19937_64& rng);

struct DiameterExperimentStats {
    long long draws = 0;
    int max_diameter = 0;
    std::map<int, long long> histogram; // diameter -> count
};

// Repeated seeded weight draws on one lattice, collecting the diameter of
// the positive flat graph. Draw i uses seed + i, so results do not depend
// on scheduling. threads = 0 picks the default.
DiameterExperimentStats diameter_experiment(const GeometricLatticeOfFlats& lattice,
                                            long long n_draws, uint64_t seed, int k = 2,
                                            int threads = 0);
DiameterExperimentStats diameter_experiment_serial(const GeometricLatticeOfFlats& lattice,
                                                   long long n_draws, uint64_t seed, int k = 2);

} // namespace cmtk
