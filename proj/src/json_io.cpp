#include "cmtk/json_io.hpp"

#include <fstream>
#include <sstream>

#include "cmtk/errors.hpp"

namespace cmtk {

namespace {

// line and column of a byte offset, 1-based
std::pair<size_t, size_t> line_col(const std::string& text, size_t byte) {
    size_t line = 1, col = 1;
    for (size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

} // namespace

json parse_json(const std::string& text, const std::string& origin) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        auto [line, col] = line_col(text, e.byte > 0 ? e.byte - 1 : 0);
        throw user_error(origin + ": JSON parse error at line " + std::to_string(line) +
                         ", column " + std::to_string(col));
    }
}

json load_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw user_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_json(buf.str(), path);
}

std::string dump_canonical(const json& doc) { return doc.dump(2) + "\n"; }

std::string mpq_str(const mpq_class& q) {
    mpq_class c = q;
    c.canonicalize();
    return c.get_str();
}

mpq_class mpq_from_string(const std::string& s) {
    if (s.empty()) throw user_error("empty rational literal");
    mpq_class q;
    if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
        throw user_error("bad rational literal: " + s);
    if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0)
        throw user_error("bad rational literal (zero denominator): " + s);
    q.canonicalize();
    return q;
}

mpq_class mpq_from_json(const json& v) {
    if (v.is_string()) return mpq_from_string(v.get<std::string>());
    if (v.is_number_integer()) return mpq_class(long(v.get<int64_t>()));
    throw user_error("expected a rational as a string \"p/q\" or an integer");
}

json label_to_json(const Label& l) {
    if (std::holds_alternative<int64_t>(l)) return std::get<int64_t>(l);
    return std::get<std::string>(l);
}

Label label_from_json(const json& v) {
    if (v.is_number_integer()) return Label(v.get<int64_t>());
    if (v.is_string()) return Label(v.get<std::string>());
    throw user_error("labels must be integers or strings");
}

json complex_to_json(const SimplicialComplex& c) {
    json facets = json::array();
    for (const Bitset& f : c.facets()) {
        json fj = json::array();
        f.for_each([&](int i) { fj.push_back(label_to_json(c.vertex_labels()[i])); });
        facets.push_back(fj);
    }
    json verts = json::array();
    for (const Label& l : c.vertex_labels()) verts.push_back(label_to_json(l));
    return json{{"facets", facets}, {"vertices", verts}};
}

SimplicialComplex complex_from_json(const json& doc) {
    if (!doc.is_object() || !doc.contains("facets") || !doc["facets"].is_array())
        throw user_error("complex document needs a \"facets\" array");
    std::vector<std::vector<Label>> facets;
    for (const json& fj : doc["facets"]) {
        if (!fj.is_array()) throw user_error("each facet must be an array of labels");
        std::vector<Label> f;
        for (const json& v : fj) f.push_back(label_from_json(v));
        facets.push_back(std::move(f));
    }
    if (doc.contains("vertices")) {
        if (!doc["vertices"].is_array()) throw user_error("\"vertices\" must be an array");
        std::vector<Label> verts;
        for (const json& v : doc["vertices"]) verts.push_back(label_from_json(v));
        return SimplicialComplex::from_facets(verts, facets);
    }
    return SimplicialComplex::from_facets(facets);
}

json poset_to_json(const FinitePoset& p) {
    json covers = json::array();
    for (auto [a, b] : p.covers())
        covers.push_back(json::array({label_to_json(p.elements()[a]),
                                      label_to_json(p.elements()[b])}));
    json elems = json::array();
    for (const Label& l : p.elements()) elems.push_back(label_to_json(l));
    return json{{"covers", covers}, {"elements", elems}};
}

FinitePoset poset_from_json(const json& doc) {
    if (!doc.is_object() || !doc.contains("elements") || !doc["elements"].is_array())
        throw user_error("poset document needs an \"elements\" array");
    std::vector<Label> elems;
    for (const json& v : doc["elements"]) elems.push_back(label_from_json(v));
    std::vector<std::pair<Label, Label>> rels;
    if (doc.contains("covers")) {
        if (!doc["covers"].is_array()) throw user_error("\"covers\" must be an array of pairs");
        for (const json& c : doc["covers"]) {
            if (!c.is_array() || c.size() != 2)
                throw user_error("each cover must be a pair [a, b]");
            rels.push_back({label_from_json(c[0]), label_from_json(c[1])});
        }
    }
    return FinitePoset::from_relations(std::move(elems), rels);
}

json point_config_to_json(const PointConfiguration& pc) {
    json points = json::array();
    for (const RationalPoint& p : pc.points) {
        json coords = json::array();
        for (const mpq_class& x : p.coords) coords.push_back(mpq_str(x));
        points.push_back(json{{"coords", coords}, {"label", p.label}, {"weight", mpq_str(p.weight)}});
    }
    return json{{"points", points}};
}

PointConfiguration point_config_from_json(const json& doc) {
    if (!doc.is_object() || !doc.contains("points") || !doc["points"].is_array())
        throw user_error("point configuration document needs a \"points\" array");
    PointConfiguration pc;
    for (const json& pj : doc["points"]) {
        if (!pj.is_object() || !pj.contains("label") || !pj.contains("coords"))
            throw user_error("each point needs \"label\" and \"coords\"");
        RationalPoint p;
        if (!pj["label"].is_string()) throw user_error("point labels must be strings");
        p.label = pj["label"].get<std::string>();
        if (!pj["coords"].is_array()) throw user_error("\"coords\" must be an array");
        for (const json& x : pj["coords"]) p.coords.push_back(mpq_from_json(x));
        if (pj.contains("weight")) p.weight = mpq_from_json(pj["weight"]);
        pc.points.push_back(std::move(p));
    }
    pc.validate();
    return pc;
}

json homology_to_json(const HomologyProfile& h) {
    json out = json::object();
    for (int i = 0; i < int(h.groups.size()); ++i) {
        const HomologyGroup& g = h.groups[i];
        json torsion = json::array();
        for (const mpz_class& t : g.torsion) torsion.push_back(t.get_str());
        out[std::to_string(i - 1)] = json{{"rank", g.rank}, {"torsion", torsion}};
    }
    return out;
}

std::string homology_group_str(const HomologyGroup& g, const CoefficientSpec& coeff) {
    std::string ring;
    switch (coeff.kind) {
    case CoefficientSpec::Kind::Z: ring = "Z"; break;
    case CoefficientSpec::Kind::Q: ring = "Q"; break;
    case CoefficientSpec::Kind::Fp: ring = "F" + std::to_string(coeff.p); break;
    }
    std::string out;
    if (g.rank > 0) {
        out = ring;
        if (g.rank > 1) out += "^" + std::to_string(g.rank);
    }
    for (const mpz_class& t : g.torsion) {
        if (!out.empty()) out += " + ";
        out += "Z/" + t.get_str();
    }
    return out.empty() ? "0" : out;
}

std::string homology_text(const HomologyProfile& h, const CoefficientSpec& coeff) {
    std::string out;
    for (int i = 0; i < int(h.groups.size()); ++i)
        out += "H~_" + std::to_string(i - 1) + " = " +
               homology_group_str(h.groups[i], coeff) + "\n";
    return out;
}

json betti_to_json(const BettiTable& t) {
    json entries = json::array();
    for (const auto& [ij, v] : t.beta)
        entries.push_back(json::array({ij.first, ij.second, v}));
    return json{{"cohen_macaulay", t.cohen_macaulay()},
                {"d", t.d},
                {"depth", t.depth()},
                {"entries", entries},
                {"n", t.n},
                {"projective_dimension", t.projective_dimension()},
                {"type", t.type()}};
}

std::string betti_grid_text(const BettiTable& t) {
    int pd = t.projective_dimension();
    int maxrow = 0;
    for (const auto& [ij, v] : t.beta)
        if (v != 0) maxrow = std::max(maxrow, ij.second - ij.first);

    std::vector<long long> total(pd + 1, 0);
    for (const auto& [ij, v] : t.beta) total[ij.first] += v;

    auto cell = [&](int row, int col) -> std::string {
        auto it = t.beta.find({col, col + row});
        if (it == t.beta.end() || it->second == 0) return ".";
        return std::to_string(it->second);
    };

    std::vector<std::string> head{""};
    for (int c = 0; c <= pd; ++c) head.push_back(std::to_string(c));
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> tot{"total:"};
    for (int c = 0; c <= pd; ++c) tot.push_back(std::to_string(total[c]));
    rows.push_back(tot);
    for (int r = 0; r <= maxrow; ++r) {
        std::vector<std::string> row{std::to_string(r) + ":"};
        for (int c = 0; c <= pd; ++c) row.push_back(cell(r, c));
        rows.push_back(row);
    }

    std::vector<size_t> width(pd + 2, 0);
    for (size_t c = 0; c < width.size(); ++c) {
        width[c] = head[c].size();
        for (const auto& row : rows) width[c] = std::max(width[c], row[c].size());
    }
    std::string out;
    auto emit = [&](const std::vector<std::string>& row) {
        std::string line;
        for (size_t c = 0; c < row.size(); ++c) {
            if (c) line += " ";
            line += std::string(width[c] - row[c].size(), ' ') + row[c];
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line + "\n";
    };
    emit(head);
    for (const auto& row : rows) emit(row);
    return out;
}

} // namespace cmtk
