#include "cmtk/poset.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "cmtk/errors.hpp"

namespace cmtk {

FinitePoset FinitePoset::from_relations(std::vector<Label> elements,
                                        const std::vector<std::pair<Label, Label>>& relations) {
    std::map<Label, int, bool (*)(const Label&, const Label&)> index(label_less);
    for (int i = 0; i < int(elements.size()); ++i) {
        if (index.count(elements[i]))
            throw user_error("poset: duplicate element label: " + label_str(elements[i]));
        index[elements[i]] = i;
    }
    std::vector<std::pair<int, int>> rel;
    for (auto& [a, b] : relations) {
        auto ia = index.find(a), ib = index.find(b);
        if (ia == index.end() || ib == index.end())
            throw user_error("poset: cover references unknown element");
        rel.emplace_back(ia->second, ib->second);
    }
    return from_relations_indexed(std::move(elements), rel);
}

FinitePoset FinitePoset::from_relations_indexed(std::vector<Label> elements,
                                                const std::vector<std::pair<int, int>>& relations,
                                                std::optional<std::vector<int>> ranks) {
    FinitePoset p;
    p.labels_ = std::move(elements);
    p.ranks_ = std::move(ranks);
    int n = int(p.labels_.size());

    std::vector<std::vector<int>> up(n);
    std::vector<int> indeg(n, 0);
    std::set<std::pair<int, int>> seen;
    for (auto& [a, b] : relations) {
        if (a == b) throw user_error("poset: reflexive relation");
        if (a < 0 || b < 0 || a >= n || b >= n) throw user_error("poset: relation out of range");
        if (seen.insert({a, b}).second) {
            up[a].push_back(b);
            indeg[b]++;
        }
    }

    // Kahn topological sort; a leftover node means a cycle
    std::vector<int> order;
    std::vector<int> deg = indeg;
    std::vector<int> stack;
    for (int i = 0; i < n; ++i)
        if (!deg[i]) stack.push_back(i);
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        order.push_back(v);
        for (int w : up[v])
            if (--deg[w] == 0) stack.push_back(w);
    }
    if (int(order.size()) != n) throw user_error("poset: relations contain a cycle");
    p.topo_ = order;

    // transitive closure in reverse topological order
    p.above_.assign(n, Bitset(n));
    for (int k = n - 1; k >= 0; --k) {
        int v = order[k];
        for (int w : up[v]) {
            p.above_[v].set(w);
            p.above_[v] = p.above_[v] | p.above_[w];
        }
    }

    // covers = transitive reduction: a < b with nothing strictly between
    for (int a = 0; a < n; ++a)
        p.above_[a].for_each([&](int b) {
            bool direct = true;
            p.above_[a].for_each([&](int z) {
                if (z != b && p.above_[z].test(b)) direct = false;
            });
            if (direct) p.covers_.emplace_back(a, b);
        });
    std::sort(p.covers_.begin(), p.covers_.end());
    return p;
}

std::optional<int> FinitePoset::index_of(const Label& l) const {
    for (int i = 0; i < size(); ++i)
        if (labels_[i] == l) return i;
    return std::nullopt;
}

std::vector<int> FinitePoset::minimal_elements() const {
    std::vector<bool> has_lower(size(), false);
    for (auto& [a, b] : covers_) has_lower[b] = true;
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
        if (!has_lower[i]) out.push_back(i);
    return out;
}

std::vector<int> FinitePoset::maximal_elements() const {
    std::vector<bool> has_upper(size(), false);
    for (auto& [a, b] : covers_) has_upper[a] = true;
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
        if (!has_upper[i]) out.push_back(i);
    return out;
}

std::vector<mpz_class> FinitePoset::mobius_row(int x) const {
    // mu(x,x) = 1, mu(x,z) = -sum_{x <= w < z} mu(x,w), walking a linear
    // extension so every summand is already final
    std::vector<mpz_class> mu(size(), 0);
    for (int z : topo_) {
        if (z == x) mu[z] = 1;
        else if (less(x, z)) {
            mpz_class s = 0;
            for (int w = 0; w < size(); ++w)
                if ((w == x || less(x, w)) && less(w, z)) s += mu[w];
            mu[z] = -s;
        }
    }
    return mu;
}

mpz_class FinitePoset::mobius(int x, int y) const {
    if (x == y) return 1;
    if (!less(x, y)) return 0;
    return mobius_row(x)[y];
}

SimplicialComplex FinitePoset::order_complex() const {
    // facets = maximal chains = cover paths from minimal to maximal elements
    std::vector<std::vector<int>> up(size());
    for (auto& [a, b] : covers_) up[a].push_back(b);
    std::vector<Bitset> facets;
    std::vector<int> chain;
    auto dfs = [&](auto&& self, int v) -> void {
        chain.push_back(v);
        if (up[v].empty()) {
            Bitset f(size());
            for (int x : chain) f.set(x);
            facets.push_back(f);
        } else {
            for (int w : up[v]) self(self, w);
        }
        chain.pop_back();
    };
    for (int v : minimal_elements()) dfs(dfs, v);
    return SimplicialComplex::from_bitsets(labels_, std::move(facets));
}

FinitePoset FinitePoset::induced(const std::vector<int>& keep) const {
    std::vector<int> pos(size(), -1);
    std::vector<Label> labels;
    for (int i : keep) {
        pos[i] = int(labels.size());
        labels.push_back(labels_[i]);
    }
    std::vector<std::pair<int, int>> rel;
    for (int a : keep)
        for (int b : keep)
            if (less(a, b)) rel.emplace_back(pos[a], pos[b]);
    std::optional<std::vector<int>> ranks;
    if (ranks_) {
        ranks.emplace();
        for (int i : keep) ranks->push_back((*ranks_)[i]);
    }
    return from_relations_indexed(std::move(labels), rel, std::move(ranks));
}

FinitePoset FinitePoset::interval(int x, int y) const {
    if (!leq(x, y)) throw user_error("interval: endpoints not comparable");
    std::vector<int> keep;
    for (int z = 0; z < size(); ++z)
        if (leq(x, z) && leq(z, y)) keep.push_back(z);
    return induced(keep);
}

std::vector<int> FinitePoset::heights() const {
    std::vector<int> h(size(), 0);
    for (auto it = topo_.begin(); it != topo_.end(); ++it) {
        int v = *it;
        for (auto& [a, b] : covers_)
            if (a == v) h[b] = std::max(h[b], h[v] + 1);
    }
    return h;
}

bool FinitePoset::is_graded() const {
    auto h = heights();
    for (auto& [a, b] : covers_)
        if (h[b] != h[a] + 1) return false;
    return true;
}

std::vector<int> FinitePoset::ranks() const {
    if (ranks_) return *ranks_;
    if (!is_graded()) throw user_error("poset: not graded and no rank annotation");
    return heights();
}

FinitePoset FinitePoset::rank_selection(const std::vector<int>& keep_ranks) const {
    std::vector<int> rk = ranks();
    std::set<int> want(keep_ranks.begin(), keep_ranks.end());
    std::vector<int> keep;
    for (int i = 0; i < size(); ++i)
        if (want.count(rk[i])) keep.push_back(i);
    return induced(keep);
}

LatticeStructure::LatticeStructure(FinitePoset p) : p_(std::move(p)) {
    int n = p_.size();
    if (n == 0) throw user_error("lattice: empty poset");
    auto mins = p_.minimal_elements();
    auto maxs = p_.maximal_elements();
    if (mins.size() != 1 || maxs.size() != 1)
        throw user_error("lattice: needs unique bottom and top");
    bottom_ = mins[0];
    top_ = maxs[0];

    join_.assign(size_t(n) * n, -1);
    meet_.assign(size_t(n) * n, -1);
    for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b) {
            // join: unique minimal common upper bound
            int jn = -1, mt = -1;
            {
                std::vector<int> ub;
                for (int z = 0; z < n; ++z)
                    if (p_.leq(a, z) && p_.leq(b, z)) ub.push_back(z);
                for (int z : ub) {
                    bool minimal = true;
                    for (int w : ub)
                        if (w != z && p_.less(w, z)) minimal = false;
                    if (minimal) {
                        if (jn >= 0) throw user_error("lattice: join not unique");
                        jn = z;
                    }
                }
            }
            {
                std::vector<int> lb;
                for (int z = 0; z < n; ++z)
                    if (p_.leq(z, a) && p_.leq(z, b)) lb.push_back(z);
                for (int z : lb) {
                    bool maximal = true;
                    for (int w : lb)
                        if (w != z && p_.less(z, w)) maximal = false;
                    if (maximal) {
                        if (mt >= 0) throw user_error("lattice: meet not unique");
                        mt = z;
                    }
                }
            }
            join_[size_t(a) * n + b] = join_[size_t(b) * n + a] = jn;
            meet_[size_t(a) * n + b] = meet_[size_t(b) * n + a] = mt;
        }
}

std::vector<int> LatticeStructure::atoms() const {
    std::vector<int> out;
    for (auto& [a, b] : p_.covers())
        if (a == bottom_) out.push_back(b);
    return out;
}

bool LatticeStructure::is_graded() const { return p_.is_graded(); }

std::vector<int> LatticeStructure::rank_of() const {
    // height from the bottom; for graded lattices this is the rank function
    std::vector<int> h(p_.size(), 0);
    for (int v : p_.topo_order())
        for (auto& [a, b] : p_.covers())
            if (a == v) h[b] = std::max(h[b], h[v] + 1);
    return h;
}

int LatticeStructure::rank() const { return rank_of()[top_]; }

bool LatticeStructure::is_geometric() const {
    // semimodular: h(x) + h(y) >= h(x meet y) + h(x join y) for all pairs
    // (with h the height function this characterizes semimodularity);
    // atomistic: every element is the join of the atoms below it
    auto h = rank_of();
    int n = p_.size();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (h[a] + h[b] < h[meet(a, b)] + h[join(a, b)]) return false;
    for (int x = 0; x < n; ++x) {
        int acc = bottom_;
        for (int at : atoms())
            if (p_.leq(at, x)) acc = join(acc, at);
        if (acc != x) return false;
    }
    return true;
}

ZPoly LatticeStructure::characteristic_polynomial() const {
    if (!is_graded()) throw user_error("characteristic polynomial: lattice not graded");
    auto rk = rank_of();
    int r = rk[top_];
    auto mu = p_.mobius_row(bottom_);
    ZPoly chi;
    for (int x = 0; x < p_.size(); ++x)
        if (x == bottom_ || p_.less(bottom_, x)) chi += ZPoly::monomial(mu[x], r - rk[x]);
    return chi;
}

FinitePoset LatticeStructure::proper_part() const {
    auto rk = rank_of();
    std::vector<int> keep;
    for (int i = 0; i < p_.size(); ++i)
        if (i != bottom_ && i != top_) keep.push_back(i);
    // annotate with lattice ranks before inducing
    std::vector<Label> labels;
    std::vector<int> ranks;
    std::vector<int> pos(p_.size(), -1);
    for (int i : keep) {
        pos[i] = int(labels.size());
        labels.push_back(p_.elements()[i]);
        ranks.push_back(rk[i]);
    }
    std::vector<std::pair<int, int>> rel;
    for (int a : keep)
        for (int b : keep)
            if (p_.less(a, b)) rel.emplace_back(pos[a], pos[b]);
    return FinitePoset::from_relations_indexed(std::move(labels), rel, std::move(ranks));
}

FinitePoset boolean_lattice(int n) {
    if (n < 0 || n > 20) throw user_error("boolean_lattice: n out of range");
    std::vector<Label> labels;
    std::vector<std::pair<int, int>> rel;
    for (int s = 0; s < (1 << n); ++s) {
        std::string name = "{";
        for (int i = 0; i < n; ++i)
            if ((s >> i) & 1) name += std::string(name.size() > 1 ? "," : "") + char('a' + i);
        name += "}";
        labels.push_back(name);
    }
    for (int s = 0; s < (1 << n); ++s)
        for (int t = 0; t < (1 << n); ++t)
            if (s != t && (s & t) == s) rel.emplace_back(s, t);
    return FinitePoset::from_relations_indexed(std::move(labels), rel);
}

FinitePoset chain_poset(int n) {
    std::vector<Label> labels;
    std::vector<std::pair<int, int>> rel;
    for (int i = 0; i <= n; ++i) labels.push_back(int64_t(i));
    for (int i = 0; i < n; ++i) rel.emplace_back(i, i + 1);
    return FinitePoset::from_relations_indexed(std::move(labels), rel);
}

} // namespace cmtk
