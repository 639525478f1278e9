#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "cmtk/errors.hpp"
#include "cmtk/homology.hpp"

namespace cmtk {

namespace {

// Words over generators: nonzero ints, sign = exponent. Generator g appears
// as +g / -g with g >= 1.
using Word = std::vector<int>;

void free_reduce(Word& w) {
    Word out;
    for (int x : w) {
        if (!out.empty() && out.back() == -x) out.pop_back();
        else out.push_back(x);
    }
    w = std::move(out);
}

void cyclic_reduce(Word& w) {
    free_reduce(w);
    while (w.size() >= 2 && w.front() == -w.back()) {
        w.erase(w.begin());
        w.pop_back();
        free_reduce(w);
    }
}

Word invert(const Word& w) {
    Word out(w.rbegin(), w.rend());
    for (int& x : out) x = -x;
    return out;
}

// Substitute generator g := rep everywhere (rep is a word not using g).
void substitute(Word& w, int g, const Word& rep) {
    Word out;
    Word rep_inv = invert(rep);
    for (int x : w) {
        if (x == g) out.insert(out.end(), rep.begin(), rep.end());
        else if (x == -g) out.insert(out.end(), rep_inv.begin(), rep_inv.end());
        else out.push_back(x);
    }
    free_reduce(out);
    w = std::move(out);
}

struct Presentation {
    std::set<int> generators;
    std::vector<Word> relators;

    void tidy() {
        for (Word& r : relators) cyclic_reduce(r);
        std::sort(relators.begin(), relators.end());
        relators.erase(std::unique(relators.begin(), relators.end()), relators.end());
        relators.erase(std::remove_if(relators.begin(), relators.end(),
                                      [](const Word& w) { return w.empty(); }),
                       relators.end());
    }

    void eliminate(int g, Word rep) {
        // rep must not mention g
        for (Word& r : relators) substitute(r, g, rep);
        generators.erase(g);
        tidy();
    }
};

} // namespace

Pi1Status fundamental_group_status(const SimplicialComplex& c, const Pi1Budget& budget) {
    if (!c.is_connected()) throw user_error("fundamental_group_status: complex not connected");
    if (c.dim() <= 0) return Pi1Status::Trivial; // a point or {∅}: no loops

    // certify Nontrivial via first homology (abelianization)
    HomologyProfile hz = reduced_homology(c, CoefficientSpec::Z());
    if (!hz.at(1).trivial()) return Pi1Status::Nontrivial;

    // edge-path presentation relative to a BFS spanning tree
    int n = c.num_vertices();
    auto by_dim = c.faces_by_dim();
    const auto& edges = by_dim[2];
    std::map<std::pair<int, int>, int> edge_id; // (u<v) -> generator (1-based), 0 for tree edges
    std::vector<std::vector<int>> adj(n);
    for (const Bitset& e : edges) {
        auto idx = e.to_indices();
        adj[idx[0]].push_back(idx[1]);
        adj[idx[1]].push_back(idx[0]);
        edge_id[{idx[0], idx[1]}] = -1; // provisional: non-tree
    }
    std::vector<bool> seen(n, false);
    std::deque<int> queue{0};
    seen[0] = true;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = true;
                edge_id[{std::min(v, w), std::max(v, w)}] = 0; // tree edge
                queue.push_back(w);
            }
    }
    int next_gen = 1;
    for (auto& [e, id] : edge_id)
        if (id < 0) id = next_gen++;

    Presentation pres;
    for (int g = 1; g < next_gen; ++g) pres.generators.insert(g);
    // w(u -> v): empty for tree edges, else the generator with orientation
    auto edge_word = [&](int u, int v) -> Word {
        int id = edge_id.at({std::min(u, v), std::max(u, v)});
        if (id == 0) return {};
        return {u < v ? id : -id};
    };
    if (int(by_dim.size()) > 3)
        for (const Bitset& t : by_dim[3]) {
            auto v = t.to_indices();
            Word r;
            for (int x : edge_word(v[0], v[1])) r.push_back(x);
            for (int x : edge_word(v[1], v[2])) r.push_back(x);
            for (int x : edge_word(v[2], v[0])) r.push_back(x);
            pres.relators.push_back(std::move(r));
        }
    pres.tidy();
    if (pres.relators.size() > budget.max_relators) return Pi1Status::Unknown;

    // bounded Tietze simplification
    for (int pass = 0; pass < budget.max_passes; ++pass) {
        if (pres.generators.empty()) return Pi1Status::Trivial;
        bool changed = false;

        // relators of length 1: the generator dies
        for (const Word& r : pres.relators)
            if (r.size() == 1) {
                pres.eliminate(std::abs(r[0]), {});
                changed = true;
                break;
            }
        if (changed) continue;

        // relators with a generator occurring exactly once: solve and substitute
        for (size_t ri = 0; ri < pres.relators.size() && !changed; ++ri) {
            const Word& r = pres.relators[ri];
            for (size_t k = 0; k < r.size(); ++k) {
                int g = std::abs(r[k]);
                int occ = 0;
                for (int x : r) occ += (std::abs(x) == g);
                if (occ != 1) continue;
                // r = A g^s B  =>  g^s = A^{-1} B^{-1}, g = (A^{-1} B^{-1})^{s}
                Word a(r.begin(), r.begin() + k), b(r.begin() + k + 1, r.end());
                Word rep = invert(a);
                Word binv = invert(b);
                rep.insert(rep.end(), binv.begin(), binv.end());
                if (r[k] < 0) rep = invert(rep);
                free_reduce(rep);
                if (rep.size() > budget.max_relator_length) continue;
                pres.eliminate(g, rep);
                changed = true;
                break;
            }
        }
        if (!changed) break;
        size_t longest = 0;
        for (const Word& r : pres.relators) longest = std::max(longest, r.size());
        if (longest > budget.max_relator_length || pres.relators.size() > budget.max_relators)
            return Pi1Status::Unknown;
    }
    return pres.generators.empty() ? Pi1Status::Trivial : Pi1Status::Unknown;
}

} // namespace cmtk
