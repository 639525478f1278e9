#include "cmtk/complex.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <unordered_set>

#include "cmtk/errors.hpp"

namespace cmtk {

namespace {

std::vector<Bitset> normalize_antichain(std::vector<Bitset> faces) {
    // drop dominated faces, dedupe, sort
    std::sort(faces.begin(), faces.end(),
              [](const Bitset& a, const Bitset& b) { return a.count() > b.count(); });
    std::vector<Bitset> out;
    for (const Bitset& f : faces) {
        bool dominated = false;
        for (const Bitset& g : out)
            if (f.is_subset_of(g)) {
                dominated = true;
                break;
            }
        if (!dominated) out.push_back(f);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

SimplicialComplex SimplicialComplex::from_bitsets(std::vector<Label> labels,
                                                  std::vector<Bitset> faces) {
    SimplicialComplex c;
    c.labels_ = std::move(labels);
    if (faces.empty()) faces.push_back(Bitset(int(c.labels_.size())));
    c.facets_ = normalize_antichain(std::move(faces));
    c.dim_ = -1;
    for (const Bitset& f : c.facets_) c.dim_ = std::max(c.dim_, f.count() - 1);
    return c;
}

SimplicialComplex SimplicialComplex::from_facets(const std::vector<std::vector<Label>>& facets) {
    std::set<Label, bool (*)(const Label&, const Label&)> verts(label_less);
    for (const auto& f : facets)
        for (const auto& v : f) verts.insert(v);
    std::vector<Label> vl(verts.begin(), verts.end());
    return from_facets(vl, facets);
}

SimplicialComplex SimplicialComplex::from_facets(const std::vector<Label>& vertices,
                                                 const std::vector<std::vector<Label>>& facets) {
    std::vector<Label> vl = vertices;
    std::sort(vl.begin(), vl.end(), label_less);
    vl.erase(std::unique(vl.begin(), vl.end()), vl.end());
    std::map<Label, int, bool (*)(const Label&, const Label&)> index(label_less);
    for (int i = 0; i < int(vl.size()); ++i) index[vl[i]] = i;

    int n = int(vl.size());
    std::vector<Bitset> faces;
    Bitset covered(n);
    for (const auto& f : facets) {
        Bitset b(n);
        for (const auto& v : f) {
            auto it = index.find(v);
            if (it == index.end())
                throw user_error("facet vertex not in declared vertex set: " + label_str(v));
            b.set(it->second);
        }
        covered = covered | b;
        faces.push_back(b);
    }
    // declared vertices missing from every face become isolated vertices
    for (int i = 0; i < n; ++i)
        if (!covered.test(i)) faces.push_back(Bitset::of(n, {i}));
    return from_bitsets(std::move(vl), std::move(faces));
}

bool SimplicialComplex::has_face(const Bitset& f) const {
    for (const Bitset& g : facets_)
        if (f.is_subset_of(g)) return true;
    return false;
}

std::optional<Bitset> SimplicialComplex::face_from_labels(const std::vector<Label>& verts) const {
    Bitset b(num_vertices());
    for (const auto& v : verts) {
        auto it = std::lower_bound(labels_.begin(), labels_.end(), v, label_less);
        if (it == labels_.end() || *it != v) return std::nullopt;
        b.set(int(it - labels_.begin()));
    }
    return b;
}

bool SimplicialComplex::is_face_labels(const std::vector<Label>& verts) const {
    auto b = face_from_labels(verts);
    return b && has_face(*b);
}

std::vector<std::vector<Bitset>> SimplicialComplex::faces_by_dim() const {
    // faces_by_dim()[k+1] = k-faces; enumerate subsets of facets with dedup,
    // level by level from the facets downward
    std::vector<std::set<Bitset>> levels(dim_ + 2);
    for (const Bitset& f : facets_) levels[f.count()].insert(f);
    for (int c = dim_ + 1; c >= 1; --c)
        for (const Bitset& f : levels[c])
            f.for_each([&](int i) { levels[c - 1].insert(f.without(i)); });
    levels[0].insert(Bitset(num_vertices()));
    std::vector<std::vector<Bitset>> out(dim_ + 2);
    for (int c = 0; c <= dim_ + 1; ++c) out[c].assign(levels[c].begin(), levels[c].end());
    return out;
}

std::vector<Bitset> SimplicialComplex::faces(int k) const {
    if (k < -1 || k > dim_) return {};
    return faces_by_dim()[k + 1];
}

std::vector<long long> SimplicialComplex::f_vector() const {
    auto by_dim = faces_by_dim();
    std::vector<long long> f(dim_ + 2);
    for (int c = 0; c <= dim_ + 1; ++c) f[c] = (long long)by_dim[c].size();
    return f;
}

namespace {
mpz_class binom(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), (unsigned long)n, (unsigned long)k);
    return r;
}
} // namespace

std::vector<mpz_class> SimplicialComplex::h_vector() const {
    auto f = f_vector();
    int d = dim_ + 1;
    std::vector<mpz_class> h(d + 1);
    for (int k = 0; k <= d; ++k)
        for (int i = 0; i <= k; ++i) {
            mpz_class term = binom(d - i, k - i) * mpz_class((long)f[i]);
            if ((k - i) % 2) term = -term;
            h[k] += term;
        }
    return h;
}

long long SimplicialComplex::euler_characteristic_reduced() const {
    auto f = f_vector();
    long long chi = 0;
    for (int c = 0; c <= dim_ + 1; ++c) chi += (c % 2 ? f[c] : -f[c]);
    return chi;
}

SimplicialComplex SimplicialComplex::link(const Bitset& f) const {
    if (!has_face(f)) throw user_error("link: not a face");
    int n = num_vertices();
    std::vector<Bitset> lk;
    Bitset used(n);
    for (const Bitset& g : facets_)
        if (f.is_subset_of(g)) {
            Bitset r = g.minus(f);
            used = used | r;
            lk.push_back(r);
        }
    // reindex surviving vertices, keeping label order
    std::vector<int> map(n, -1);
    std::vector<Label> labels;
    used.for_each([&](int i) {
        map[i] = int(labels.size());
        labels.push_back(labels_[i]);
    });
    int m = int(labels.size());
    std::vector<Bitset> faces;
    for (const Bitset& r : lk) {
        Bitset b(m);
        r.for_each([&](int i) { b.set(map[i]); });
        faces.push_back(b);
    }
    return from_bitsets(std::move(labels), std::move(faces));
}

SimplicialComplex SimplicialComplex::induced(const Bitset& e) const {
    int n = num_vertices();
    std::vector<int> map(n, -1);
    std::vector<Label> labels;
    e.for_each([&](int i) {
        map[i] = int(labels.size());
        labels.push_back(labels_[i]);
    });
    int m = int(labels.size());
    std::vector<Bitset> faces;
    for (const Bitset& g : facets_) {
        Bitset r = g & e;
        Bitset b(m);
        r.for_each([&](int i) { b.set(map[i]); });
        faces.push_back(b);
    }
    return from_bitsets(std::move(labels), std::move(faces));
}

SimplicialComplex SimplicialComplex::cone(const Label& apex) const {
    for (const Label& l : labels_)
        if (l == apex) throw user_error("cone: apex label already a vertex: " + label_str(apex));
    std::vector<Label> labels = labels_;
    labels.push_back(apex);
    std::sort(labels.begin(), labels.end(), label_less);
    int n = int(labels.size());
    auto pos = [&](const Label& l) {
        return int(std::lower_bound(labels.begin(), labels.end(), l, label_less) - labels.begin());
    };
    int apex_i = pos(apex);
    std::vector<Bitset> faces;
    for (const Bitset& g : facets_) {
        Bitset b(n);
        g.for_each([&](int i) { b.set(pos(labels_[i])); });
        b.set(apex_i);
        faces.push_back(b);
    }
    return from_bitsets(std::move(labels), std::move(faces));
}

SimplicialComplex SimplicialComplex::join(const SimplicialComplex& a, const SimplicialComplex& b) {
    std::vector<Label> labels = a.labels_;
    for (const Label& l : b.labels_) {
        if (std::binary_search(a.labels_.begin(), a.labels_.end(), l, label_less))
            throw user_error("join: vertex label sets not disjoint: " + label_str(l));
        labels.push_back(l);
    }
    std::sort(labels.begin(), labels.end(), label_less);
    int n = int(labels.size());
    auto pos = [&](const Label& l) {
        return int(std::lower_bound(labels.begin(), labels.end(), l, label_less) - labels.begin());
    };
    std::vector<Bitset> faces;
    for (const Bitset& fa : a.facets_)
        for (const Bitset& fb : b.facets_) {
            Bitset f(n);
            fa.for_each([&](int i) { f.set(pos(a.labels_[i])); });
            fb.for_each([&](int i) { f.set(pos(b.labels_[i])); });
            faces.push_back(f);
        }
    return from_bitsets(std::move(labels), std::move(faces));
}

bool SimplicialComplex::is_pure() const {
    for (const Bitset& f : facets_)
        if (f.count() != dim_ + 1) return false;
    return true;
}

std::vector<std::pair<int, int>> SimplicialComplex::dual_graph() const {
    std::vector<std::pair<int, int>> edges;
    int m = int(facets_.size());
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            int c = (facets_[i] & facets_[j]).count();
            if (c == facets_[i].count() - 1 && c == facets_[j].count() - 1)
                edges.emplace_back(i, j);
        }
    return edges;
}

bool SimplicialComplex::is_dually_connected() const {
    int m = int(facets_.size());
    if (m <= 1) return true;
    std::vector<std::vector<int>> adj(m);
    for (auto [i, j] : dual_graph()) {
        adj[i].push_back(j);
        adj[j].push_back(i);
    }
    std::vector<bool> seen(m, false);
    std::vector<int> stack{0};
    seen[0] = true;
    int cnt = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = true;
                ++cnt;
                stack.push_back(w);
            }
    }
    return cnt == m;
}

bool SimplicialComplex::is_thin() const {
    if (!is_pure()) throw user_error("is_thin: requires pure complex");
    if (dim_ < 0) return true; // {∅}: no codimension-one faces
    // count facet containment of every (dim-1)-face
    std::map<Bitset, int> count;
    for (const Bitset& f : facets_)
        f.for_each([&](int i) { count[f.without(i)]++; });
    for (auto& [face, c] : count)
        if (c != 2) return false;
    return true;
}

bool SimplicialComplex::is_pseudomanifold() const {
    if (!is_pure()) throw user_error("is_pseudomanifold: requires pure complex");
    return is_thin() && is_dually_connected();
}

bool SimplicialComplex::is_connected() const {
    int n = num_vertices();
    if (n <= 1) return true;
    std::vector<std::vector<int>> adj(n);
    for (const Bitset& f : facets_) {
        auto idx = f.to_indices();
        for (size_t a = 0; a + 1 < idx.size(); ++a)
            for (size_t b = a + 1; b < idx.size(); ++b) {
                adj[idx[a]].push_back(idx[b]);
                adj[idx[b]].push_back(idx[a]);
            }
    }
    std::vector<bool> seen(n, false);
    std::vector<int> stack{0};
    seen[0] = true;
    int cnt = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = true;
                ++cnt;
                stack.push_back(w);
            }
    }
    return cnt == n;
}

std::string SimplicialComplex::canonical_key() const {
    std::ostringstream os;
    os << num_vertices() << ';';
    for (const Bitset& f : facets_) {
        for (int i : f.to_indices()) os << i << ',';
        os << '|';
    }
    return os.str();
}

SimplicialComplex empty_complex() { return SimplicialComplex::from_facets({}); }

SimplicialComplex simplex_boundary(int d) {
    if (d < 0) throw user_error("simplex_boundary: dimension must be >= 0");
    std::vector<std::vector<Label>> facets;
    if (d == 0) return empty_complex(); // boundary of a point is {∅}
    for (int omit = 0; omit <= d; ++omit) {
        std::vector<Label> f;
        for (int v = 0; v <= d; ++v)
            if (v != omit) f.push_back(int64_t(v));
        facets.push_back(f);
    }
    return SimplicialComplex::from_facets(facets);
}

SimplicialComplex full_simplex(int d) {
    std::vector<Label> f;
    for (int v = 0; v <= d; ++v) f.push_back(int64_t(v));
    return SimplicialComplex::from_facets({f});
}

SimplicialComplex cycle_complex(int n) {
    if (n < 3) throw user_error("cycle_complex: need n >= 3");
    std::vector<std::vector<Label>> facets;
    for (int i = 0; i < n; ++i) facets.push_back({int64_t(i), int64_t((i + 1) % n)});
    return SimplicialComplex::from_facets(facets);
}

SimplicialComplex rp2_6() {
    const int F[10][3] = {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6},
                          {2, 3, 5}, {2, 4, 6}, {3, 5, 6}, {2, 4, 5}, {3, 4, 6}};
    std::vector<std::vector<Label>> facets;
    for (auto& t : F) facets.push_back({int64_t(t[0]), int64_t(t[1]), int64_t(t[2])});
    return SimplicialComplex::from_facets(facets);
}

} // namespace cmtk
