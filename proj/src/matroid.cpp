#include "cmtk/matroid.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "cmtk/errors.hpp"

namespace cmtk {

void PointConfiguration::validate() const {
    std::set<std::string> labels;
    for (const auto& p : points) {
        if (p.label.empty()) throw user_error("point configuration: empty label");
        if (!labels.insert(p.label).second)
            throw user_error("point configuration: duplicate label: " + p.label);
        if (int(p.coords.size()) != ambient_dim())
            throw user_error("point configuration: inconsistent coordinate dimension at " +
                             p.label);
    }
}

int PointConfiguration::rank_of(const Bitset& subset) const {
    // Gaussian elimination on the homogenized vectors (1, p)
    int m = ambient_dim() + 1;
    std::vector<std::vector<mpq_class>> rows;
    subset.for_each([&](int i) {
        std::vector<mpq_class> v(m);
        v[0] = 1;
        for (int k = 0; k < ambient_dim(); ++k) v[k + 1] = points[i].coords[k];
        rows.push_back(std::move(v));
    });
    int rank = 0;
    for (int c = 0; c < m && rank < int(rows.size()); ++c) {
        int piv = -1;
        for (int r = rank; r < int(rows.size()); ++r)
            if (rows[r][c] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(rows[piv], rows[rank]);
        for (int r = rank + 1; r < int(rows.size()); ++r) {
            if (rows[r][c] == 0) continue;
            mpq_class f = rows[r][c] / rows[rank][c];
            for (int cc = c; cc < m; ++cc) rows[r][cc] -= f * rows[rank][cc];
        }
        ++rank;
    }
    return rank;
}

Bitset PointConfiguration::closure(const Bitset& subset) const {
    int n = int(points.size());
    int r = rank_of(subset);
    Bitset out(n);
    for (int q = 0; q < n; ++q) {
        if (subset.test(q)) {
            out.set(q);
            continue;
        }
        if (rank_of(subset.with(q)) == r) out.set(q);
    }
    return out;
}

GeometricLatticeOfFlats GeometricLatticeOfFlats::from_closure(
    std::vector<std::string> element_labels, const std::function<Bitset(const Bitset&)>& cl) {
    GeometricLatticeOfFlats L;
    L.element_labels_ = std::move(element_labels);
    int n = int(L.element_labels_.size());

    std::map<Bitset, int> index;
    auto intern = [&](const Bitset& f, int rank) {
        auto it = index.find(f);
        if (it != index.end()) {
            if (L.rank_[it->second] != rank)
                throw user_error("matroid: closure operator produced rank-inconsistent flats");
            return it->second;
        }
        int id = int(L.flats_.size());
        index[f] = id;
        L.flats_.push_back(f);
        L.rank_.push_back(rank);
        return id;
    };

    Bitset bottom = cl(Bitset(n));
    if (!bottom.empty())
        throw user_error("matroid: closure of the empty set is nonempty (loops not supported)");
    intern(bottom, 0);

    std::set<std::pair<int, int>> cover_set;
    std::vector<int> frontier{0};
    int rank = 0;
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int fi : frontier) {
            Bitset f = L.flats_[fi];
            std::set<Bitset> children;
            for (int e = 0; e < n; ++e) {
                if (f.test(e)) continue;
                children.insert(cl(f.with(e)));
            }
            for (const Bitset& g : children) {
                bool fresh = !index.count(g);
                int gi = intern(g, rank + 1);
                if (fresh) next.push_back(gi);
                cover_set.insert({fi, gi});
            }
        }
        frontier = std::move(next);
        ++rank;
    }

    // canonical order: by (rank, set order)
    std::vector<int> order(L.flats_.size());
    for (int i = 0; i < int(order.size()); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (L.rank_[a] != L.rank_[b]) return L.rank_[a] < L.rank_[b];
        return L.flats_[a] < L.flats_[b];
    });
    std::vector<int> pos(order.size());
    for (int i = 0; i < int(order.size()); ++i) pos[order[i]] = i;
    std::vector<Bitset> flats;
    std::vector<int> ranks;
    for (int i : order) {
        flats.push_back(L.flats_[i]);
        ranks.push_back(L.rank_[i]);
    }
    L.flats_ = std::move(flats);
    L.rank_ = std::move(ranks);
    for (auto [a, b] : cover_set) L.covers_.push_back({pos[a], pos[b]});
    std::sort(L.covers_.begin(), L.covers_.end());

    L.matroid_rank_ = L.rank_.back();
    L.bottom_ = 0;
    L.top_ = L.num_flats() - 1;
    if (L.rank_[L.top_] != L.matroid_rank_ || L.rank_[L.bottom_] != 0)
        throw internal_error("lattice of flats: malformed rank order");

    // geometricity is a construction invariant; a failure is a bug
    if (!L.lattice().is_geometric())
        throw internal_error("lattice of flats failed the geometric-lattice validation");
    return L;
}

GeometricLatticeOfFlats GeometricLatticeOfFlats::from_points(const PointConfiguration& pc) {
    pc.validate();
    if (pc.points.empty()) throw user_error("point configuration: no points");
    std::vector<std::string> labels;
    for (const auto& p : pc.points) labels.push_back(p.label);
    return from_closure(labels, [&pc](const Bitset& s) { return pc.closure(s); });
}

GeometricLatticeOfFlats GeometricLatticeOfFlats::from_graph(
    int num_vertices, const std::vector<std::pair<int, int>>& edges) {
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : edges) {
        if (u == v) throw user_error("graphic matroid: self-loop");
        if (u < 0 || v < 0 || u >= num_vertices || v >= num_vertices)
            throw user_error("graphic matroid: edge endpoint out of range");
        if (!seen.insert({std::min(u, v), std::max(u, v)}).second)
            throw user_error("graphic matroid: parallel edge");
    }
    std::vector<std::string> labels;
    for (auto [u, v] : edges) labels.push_back(std::to_string(u) + "-" + std::to_string(v));
    int m = int(edges.size());

    auto closure = [num_vertices, edges, m](const Bitset& s) {
        // union-find over vertices touched by s, then add every edge inside
        // a component
        std::vector<int> parent(num_vertices);
        for (int i = 0; i < num_vertices; ++i) parent[i] = i;
        std::function<int(int)> find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        s.for_each([&](int e) { parent[find(edges[e].first)] = find(edges[e].second); });
        Bitset out(m);
        s.for_each([&](int e) { out.set(e); });
        for (int e = 0; e < m; ++e)
            if (find(edges[e].first) == find(edges[e].second)) out.set(e);
        return out;
    };
    return from_closure(std::move(labels), closure);
}

GeometricLatticeOfFlats GeometricLatticeOfFlats::uniform(int n, int r) {
    if (r < 1 || r > n) throw user_error("uniform matroid: need 1 <= r <= n");
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i)
        labels.push_back(n <= 26 ? std::string(1, char('a' + i)) : "e" + std::to_string(i));
    auto closure = [n, r](const Bitset& s) {
        if (s.count() < r) return s;
        Bitset full(n);
        for (int i = 0; i < n; ++i) full.set(i);
        return full;
    };
    return from_closure(std::move(labels), closure);
}

int GeometricLatticeOfFlats::flat_index(const Bitset& f) const {
    for (int i = 0; i < num_flats(); ++i)
        if (flats_[i] == f) return i;
    return -1;
}

std::string GeometricLatticeOfFlats::flat_label(int i) const {
    std::string out = "{";
    bool first = true;
    flats_[i].for_each([&](int e) {
        if (!first) out += ",";
        out += element_labels_[e];
        first = false;
    });
    return out + "}";
}

FinitePoset GeometricLatticeOfFlats::poset() const {
    std::vector<Label> labels;
    for (int i = 0; i < num_flats(); ++i) labels.push_back(flat_label(i));
    return FinitePoset::from_relations_indexed(std::move(labels), covers_, rank_);
}

LatticeStructure GeometricLatticeOfFlats::lattice() const { return LatticeStructure(poset()); }

} // namespace cmtk
