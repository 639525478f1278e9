#include "cmtk/homology.hpp"

#include <algorithm>
#include <map>

#include "cmtk/errors.hpp"

namespace cmtk {

CoefficientSpec CoefficientSpec::Fp(long p) {
    if (p < 2 || p >= (1L << 31)) throw user_error("F_p: p must be a prime in [2, 2^31)");
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) throw user_error("F_p: " + std::to_string(p) + " is not prime");
    return {Kind::Fp, p};
}

std::string CoefficientSpec::str() const {
    switch (kind) {
        case Kind::Z: return "z";
        case Kind::Q: return "q";
        default: return "f" + std::to_string(p);
    }
}

CoefficientSpec CoefficientSpec::parse(const std::string& s) {
    if (s == "z" || s == "Z") return Z();
    if (s == "q" || s == "Q") return Q();
    std::string body;
    if (s.rfind("fp:", 0) == 0) body = s.substr(3);
    else if (!s.empty() && (s[0] == 'f' || s[0] == 'F')) body = s.substr(1);
    else throw user_error("unknown coefficient spec: " + s);
    try {
        size_t pos = 0;
        long p = std::stol(body, &pos);
        if (pos != body.size()) throw std::invalid_argument(body);
        return Fp(p);
    } catch (std::logic_error&) {
        throw user_error("unknown coefficient spec: " + s);
    }
}

const HomologyGroup& HomologyProfile::at(int i) const {
    static const HomologyGroup trivial_group{};
    int idx = i + 1;
    if (idx < 0 || idx >= int(groups.size())) return trivial_group;
    return groups[idx];
}

bool HomologyProfile::all_trivial_below(int top) const {
    for (int i = -1; i < top; ++i)
        if (!at(i).trivial()) return false;
    return true;
}

BoundaryData boundary_matrices(const SimplicialComplex& c) {
    BoundaryData bd;
    bd.faces = c.faces_by_dim();
    int dim = c.dim();
    for (int k = 0; k <= dim; ++k) {
        const auto& rows = bd.faces[k];     // (k-1)-faces
        const auto& cols = bd.faces[k + 1]; // k-faces
        std::map<Bitset, int> row_index;
        for (int i = 0; i < int(rows.size()); ++i) row_index[rows[i]] = i;
        SparseIntMatrix m(int(rows.size()), int(cols.size()));
        for (int j = 0; j < int(cols.size()); ++j) {
            int i = 0;
            cols[j].for_each([&](int v) {
                m.set(row_index.at(cols[j].without(v)), j, (i % 2) ? -1 : 1);
                ++i;
            });
        }
        bd.boundary.push_back(std::move(m));
    }
    return bd;
}

HomologyProfile reduced_homology(const SimplicialComplex& c, const CoefficientSpec& coeff) {
    BoundaryData bd = boundary_matrices(c);
    int dim = c.dim();
    HomologyProfile prof;
    prof.dim = dim;
    prof.groups.assign(dim + 2, {});

    // ranks of d_0..d_dim (and the implicit zero maps around them)
    std::vector<int> rk(dim + 2, 0);
    std::vector<SmithResult> smith(dim + 1);
    for (int k = 0; k <= dim; ++k) {
        switch (coeff.kind) {
            case CoefficientSpec::Kind::Z:
                smith[k] = smith_normal_form(bd.boundary[k]);
                rk[k] = smith[k].rank;
                break;
            case CoefficientSpec::Kind::Q: rk[k] = rank_over_q(bd.boundary[k]); break;
            case CoefficientSpec::Kind::Fp: rk[k] = rank_mod_p(bd.boundary[k], coeff.p); break;
        }
    }

    for (int i = -1; i <= dim; ++i) {
        long long faces_i = (i == -1) ? 1 : (long long)bd.faces[i + 1].size();
        long long rank_di = (i == -1) ? 0 : rk[i];
        long long rank_dnext = (i == dim) ? 0 : rk[i + 1];
        HomologyGroup g;
        g.rank = faces_i - rank_di - rank_dnext;
        if (coeff.kind == CoefficientSpec::Kind::Z && i < dim) {
            for (const mpz_class& d : smith[i + 1].invariant_factors)
                if (d > 1) g.torsion.push_back(d);
        }
        prof.groups[i + 1] = std::move(g);
    }
    return prof;
}

std::string pi1_str(Pi1Status s) {
    switch (s) {
        case Pi1Status::Trivial: return "trivial";
        case Pi1Status::Nontrivial: return "nontrivial";
        default: return "unknown";
    }
}

} // namespace cmtk
