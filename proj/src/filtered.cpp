#include "cmtk/filtered.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <set>

#include "cmtk/errors.hpp"
#include "cmtk/parallel.hpp"

namespace cmtk {

WeightedFiltration::WeightedFiltration(GeometricLatticeOfFlats lattice,
                                       std::vector<mpq_class> weights, mpq_class threshold)
    : lattice_(std::move(lattice)), weights_(std::move(weights)),
      threshold_(std::move(threshold)) {
    if (int(weights_.size()) != lattice_.num_elements())
        throw user_error("weighted filtration: expected one weight per element");
    for (auto& w : weights_) w.canonicalize();
    flat_weight_.reserve(lattice_.num_flats());
    for (const Bitset& f : lattice_.flats()) {
        mpq_class s = 0;
        f.for_each([&](int e) { s += weights_[e]; });
        flat_weight_.push_back(s);
    }

    // genericity scan over nonempty flats, first offending pair wins
    std::vector<int> order;
    for (int i = 0; i < lattice_.num_flats(); ++i)
        if (i != lattice_.bottom_flat()) order.push_back(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (flat_weight_[a] != flat_weight_[b]) return flat_weight_[a] < flat_weight_[b];
        return a < b;
    });
    for (size_t i = 0; i + 1 < order.size(); ++i)
        if (flat_weight_[order[i]] == flat_weight_[order[i + 1]]) {
            collision_ = {order[i], order[i + 1]};
            break;
        }
}

std::string WeightedFiltration::collision_description() const {
    if (!collision_) return "";
    return lattice_.flat_label(collision_->first) + " and " +
           lattice_.flat_label(collision_->second) + " share weight " +
           flat_weight_[collision_->first].get_str();
}

void WeightedFiltration::require_generic() const {
    if (collision_)
        throw user_error("weights are not generic: flats " + collision_description());
}

WeightedFiltration WeightedFiltration::mirrored() const {
    std::vector<mpq_class> neg;
    neg.reserve(weights_.size());
    for (const auto& w : weights_) neg.push_back(-w);
    return WeightedFiltration(lattice_, std::move(neg), -threshold_);
}

std::vector<int> filtered_flats(const WeightedFiltration& w) {
    std::vector<int> kept;
    for (int i = 0; i < w.lattice().num_flats(); ++i) {
        if (i == w.lattice().bottom_flat()) continue;
        if (w.flat_weight(i) > w.threshold()) kept.push_back(i);
    }
    return kept;
}

FinitePoset filtered_poset(const WeightedFiltration& w) {
    std::vector<int> kept = filtered_flats(w);
    const auto& flats = w.lattice().flats();
    std::vector<Label> labels;
    std::vector<int> ranks;
    for (int f : kept) {
        labels.push_back(w.lattice().flat_label(f));
        ranks.push_back(w.lattice().flat_rank()[f]);
    }
    std::vector<std::pair<int, int>> rels;
    for (size_t a = 0; a < kept.size(); ++a)
        for (size_t b = 0; b < kept.size(); ++b)
            if (a != b && flats[kept[a]].is_subset_of(flats[kept[b]]))
                rels.push_back({int(a), int(b)});
    return FinitePoset::from_relations_indexed(std::move(labels), rels, std::move(ranks));
}

ZPoly filtered_characteristic_polynomial(const WeightedFiltration& w) {
    std::vector<int> kept = filtered_flats(w);
    const auto& flats = w.lattice().flats();
    int m = int(kept.size());
    int r = w.lattice().matroid_rank();

    // kept flats plus a formal bottom at index 0
    std::vector<Label> labels{std::string("*")};
    for (int f : kept) labels.push_back(w.lattice().flat_label(f));
    std::vector<std::pair<int, int>> rels;
    for (int a = 0; a < m; ++a) {
        rels.push_back({0, a + 1});
        for (int b = 0; b < m; ++b)
            if (a != b && flats[kept[a]].is_subset_of(flats[kept[b]]))
                rels.push_back({a + 1, b + 1});
    }
    FinitePoset p = FinitePoset::from_relations_indexed(std::move(labels), rels);
    std::vector<mpz_class> mu = p.mobius_row(0);

    ZPoly chi = ZPoly::monomial(mu[0], r);
    for (int a = 0; a < m; ++a)
        chi += ZPoly::monomial(mu[a + 1], r - w.lattice().flat_rank()[kept[a]]);
    return chi;
}

FiltrationTheoremReport check_filtration_theorem(const WeightedFiltration& w) {
    w.require_generic();
    mpq_class total = w.total_weight();
    if (!(w.threshold() <= 0 && w.threshold() <= total))
        throw user_error("filtration theorem check requires threshold <= min(0, total weight)");

    FiltrationTheoremReport rep;
    SimplicialComplex delta = filtered_poset(w).order_complex();
    rep.cm_over_z = is_cm(delta, CoefficientSpec::Z());
    rep.dim = delta.dim();
    rep.expected_dim = w.lattice().matroid_rank() - 2;
    rep.dim_preserved = rep.dim == rep.expected_dim;
    rep.homotopy_status = is_homotopy_cm(delta);
    return rep;
}

PositiveFlatGraph positive_flat_graph(const WeightedFiltration& w, int k) {
    int r = w.lattice().matroid_rank();
    if (!(1 < k && k < r))
        throw user_error("positive flat graph: need 1 < k < rank, got k=" + std::to_string(k) +
                         " with rank " + std::to_string(r));
    PositiveFlatGraph g;
    int n = w.lattice().num_elements();
    for (int e = 0; e < n; ++e)
        if (w.weights()[e] > 0) g.vertices.push_back(e);

    std::set<std::pair<int, int>> edges;
    for (int i = 0; i < w.lattice().num_flats(); ++i) {
        if (w.lattice().flat_rank()[i] != k || !(w.flat_weight(i) > 0)) continue;
        std::vector<int> pos;
        w.lattice().flats()[i].for_each([&](int e) {
            if (w.weights()[e] > 0) pos.push_back(e);
        });
        for (size_t a = 0; a < pos.size(); ++a)
            for (size_t b = a + 1; b < pos.size(); ++b) edges.insert({pos[a], pos[b]});
    }
    g.edges.assign(edges.begin(), edges.end());
    for (int v : g.vertices) g.adjacency[v];
    for (auto [a, b] : g.edges) {
        g.adjacency[a].push_back(b);
        g.adjacency[b].push_back(a);
    }
    return g;
}

namespace {

// BFS distances from src over the positive flat graph; -1 = unreachable
std::map<int, int> bfs_distances(const PositiveFlatGraph& g, int src) {
    std::map<int, int> dist;
    for (int v : g.vertices) dist[v] = -1;
    dist[src] = 0;
    std::deque<int> queue{src};
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        auto it = g.adjacency.find(u);
        if (it == g.adjacency.end()) continue;
        for (int v : it->second)
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
    }
    return dist;
}

[[noreturn]] void throw_disconnected(const WeightedFiltration& w, const PositiveFlatGraph& g,
                                     const std::map<int, int>& dist) {
    std::string reached, separated;
    for (int v : g.vertices) {
        std::string& side = dist.at(v) >= 0 ? reached : separated;
        if (!side.empty()) side += ",";
        side += w.lattice().element_labels()[v];
    }
    throw internal_error("positive part is disconnected, contradicting the filtration "
                         "theorem: {" +
                         reached + "} is separated from {" + separated + "}");
}

} // namespace

std::vector<std::string> safe_walk(const WeightedFiltration& w, const std::string& from,
                                   const std::string& to, int k) {
    const auto& labels = w.lattice().element_labels();
    auto locate = [&](const std::string& name) {
        auto it = std::find(labels.begin(), labels.end(), name);
        if (it == labels.end()) throw user_error("unknown element: " + name);
        int e = int(it - labels.begin());
        if (!(w.weights()[e] > 0)) throw user_error("element is not positive: " + name);
        return e;
    };
    int src = locate(from), dst = locate(to);
    if (src == dst) return {from};

    PositiveFlatGraph g = positive_flat_graph(w, k);
    std::map<int, int> parent;
    for (int v : g.vertices) parent[v] = -2;
    parent[src] = -1;
    std::deque<int> queue{src};
    while (!queue.empty() && parent[dst] == -2) {
        int u = queue.front();
        queue.pop_front();
        for (int v : g.adjacency[u])
            if (parent[v] == -2) {
                parent[v] = u;
                queue.push_back(v);
            }
    }
    if (parent[dst] == -2) {
        std::map<int, int> dist;
        for (int v : g.vertices) dist[v] = parent[v] == -2 ? -1 : 0;
        throw_disconnected(w, g, dist);
    }
    std::vector<std::string> path;
    for (int v = dst; v != -1; v = parent[v]) path.push_back(labels[v]);
    std::reverse(path.begin(), path.end());
    return path;
}

int graph_diameter(const WeightedFiltration& w, int k) {
    PositiveFlatGraph g = positive_flat_graph(w, k);
    int diam = 0;
    for (int src : g.vertices) {
        auto dist = bfs_distances(g, src);
        for (int v : g.vertices) {
            if (dist[v] < 0) throw_disconnected(w, g, dist);
            diam = std::max(diam, dist[v]);
        }
    }
    return diam;
}

std::vector<mpq_class> random_generic_zero_sum_weights(const GeometricLatticeOfFlats& lattice,
                                                       std::mt19937_64& rng) {
    int n = lattice.num_elements();
    // draw v_i in [-range, range] via the portable engine only, then shift
    // to n*v_i - sum(v) which is zero-sum by construction
    long long range = 8 * n + 8;
    for (int attempt = 0; attempt < 40; ++attempt, range *= 2) {
        unsigned long long span = 2 * (unsigned long long)range + 1;
        std::vector<long long> v(n);
        long long s = 0;
        for (int i = 0; i < n; ++i) {
            v[i] = (long long)(rng() % span) - range;
            s += v[i];
        }
        std::vector<mpq_class> w;
        w.reserve(n);
        for (int i = 0; i < n; ++i) w.push_back(mpq_class(long((long long)n * v[i] - s)));
        WeightedFiltration trial(lattice, w, 0);
        if (trial.is_generic()) return w;
    }
    throw internal_error("could not sample generic weights");
}

namespace {

DiameterExperimentStats run_experiment(const GeometricLatticeOfFlats& lattice, long long n_draws,
                                       uint64_t seed, int k, int nt) {
    std::vector<int> diam(std::max<long long>(n_draws, 0), 0);
    std::atomic<bool> failed{false};
    std::string message;

#pragma omp parallel for schedule(dynamic) num_threads(nt)
    for (long long i = 0; i < n_draws; ++i) {
        if (failed.load()) continue;
        try {
            std::mt19937_64 rng(seed + (uint64_t)i);
            auto w = random_generic_zero_sum_weights(lattice, rng);
            diam[i] = graph_diameter(WeightedFiltration(lattice, std::move(w), 0), k);
        } catch (const std::exception& e) {
            bool expected = false;
            if (failed.compare_exchange_strong(expected, true)) message = e.what();
        }
    }
    if (failed.load()) throw internal_error(message);

    DiameterExperimentStats stats;
    stats.draws = std::max<long long>(n_draws, 0);
    for (int d : diam) {
        stats.max_diameter = std::max(stats.max_diameter, d);
        ++stats.histogram[d];
    }
    if (n_draws <= 0) stats.histogram.clear();
    return stats;
}

} // namespace

DiameterExperimentStats diameter_experiment(const GeometricLatticeOfFlats& lattice,
                                            long long n_draws, uint64_t seed, int k,
                                            int threads) {
    return run_experiment(lattice, n_draws, seed, k, effective_threads(threads));
}

DiameterExperimentStats diameter_experiment_serial(const GeometricLatticeOfFlats& lattice,
                                                   long long n_draws, uint64_t seed, int k) {
    return run_experiment(lattice, n_draws, seed, k, 1);
}

} // namespace cmtk
