#include "cmtk/cli.hpp"

#include <cctype>
#include <chrono>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "cmtk/cm.hpp"
#include "cmtk/errors.hpp"
#include "cmtk/filtered.hpp"
#include "cmtk/json_io.hpp"
#include "cmtk/stanley_reisner.hpp"
#include "cmtk/version.hpp"

namespace cmtk {

namespace {

json make_manifest(const std::string& sub, const std::vector<std::string>& inputs,
                   const std::vector<std::string>& raw_args,
                   std::optional<uint64_t> seed = {}) {
    json flags = json::array();
    for (const auto& a : raw_args) flags.push_back(a);
    json ins = json::array();
    for (const auto& i : inputs) ins.push_back(i);
    json m{{"flags", flags}, {"inputs", ins}, {"subcommand", sub}, {"version", kVersion}};
    if (seed)
        m["seed"] = *seed;
    else
        m["seed"] = nullptr;
    return m;
}

Label parse_label_arg(const std::string& s) {
    if (!s.empty() && (std::isdigit((unsigned char)s[0]) ||
                       ((s[0] == '-' || s[0] == '+') && s.size() > 1))) {
        try {
            size_t pos = 0;
            long long v = std::stoll(s, &pos);
            if (pos == s.size()) return Label(int64_t(v));
        } catch (...) {
        }
    }
    return Label(s);
}

int find_poset_element(const FinitePoset& p, const std::string& s) {
    Label l = parse_label_arg(s);
    if (auto i = p.index_of(l)) return *i;
    if (std::holds_alternative<int64_t>(l))
        if (auto i = p.index_of(Label(s))) return *i;
    throw user_error("unknown poset element: " + s);
}

std::vector<CoefficientSpec> parse_fields(const std::string& csv) {
    std::vector<CoefficientSpec> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(CoefficientSpec::parse(item));
    if (out.empty()) throw user_error("no coefficient fields given");
    return out;
}

PointConfiguration complete_quadrilateral() {
    auto pt = [](const char* label, long x, long y, long w) {
        RationalPoint p;
        p.label = label;
        p.coords = {mpq_class(x), mpq_class(y)};
        p.weight = w;
        return p;
    };
    PointConfiguration pc;
    pc.points = {pt("a", 0, 0, 1),  pt("b", 2, 0, -4), pt("c", 4, 0, 2),
                 pt("d", 3, 1, 3),  pt("e", 0, 4, -6), pt("f", 0, -2, 4)};
    return pc;
}

struct CliState {
    bool json_mode = false;
    std::vector<std::string> raw_args;
};

void emit(std::ostream& out, const CliState& st, const json& doc, const std::string& text) {
    if (st.json_mode)
        out << dump_canonical(doc);
    else
        out << text;
}

void run_homology(std::ostream& out, const CliState& st, const std::string& input,
                  const std::string& coeff_str) {
    SimplicialComplex c = complex_from_json(load_json_file(input));
    CoefficientSpec coeff = CoefficientSpec::parse(coeff_str);
    HomologyProfile h = reduced_homology(c, coeff);
    json doc{{"coefficients", coeff.str()},
             {"dim", c.dim()},
             {"homology", homology_to_json(h)},
             {"manifest", make_manifest("homology", {input}, st.raw_args)}};
    emit(out, st, doc, homology_text(h, coeff));
}

void run_classify(std::ostream& out, const CliState& st, const std::string& input,
                  const std::string& fields_csv, long long shelling_budget) {
    SimplicialComplex c = complex_from_json(load_json_file(input));
    auto coeffs = parse_fields(fields_csv);
    ClassificationReport rep = classify(c, coeffs, shelling_budget);
    HomologyProfile hz = reduced_homology(c, CoefficientSpec::Z());

    json cm = json::object(), gs = json::object(), hier = json::object();
    for (const auto& [k, v] : rep.cm_over) cm[k] = v;
    for (const auto& [k, v] : rep.gorenstein_star_over) gs[k] = v;
    for (const auto& [k, v] : rep.hierarchy) hier[k] = tri_str(v);
    json doc{{"cm", cm},
             {"dim", c.dim()},
             {"euler_condition", rep.euler_condition},
             {"gorenstein_star", gs},
             {"hierarchy", hier},
             {"homology_z", homology_to_json(hz)},
             {"homotopy_cm", tri_str(rep.homotopy_cm)},
             {"homotopy_gorenstein_star", tri_str(rep.homotopy_gorenstein_star)},
             {"manifest", make_manifest("classify", {input}, st.raw_args)},
             {"pseudomanifold", rep.pseudomanifold},
             {"pure", rep.pure},
             {"shellable", tri_str(rep.shellable)},
             {"thin", rep.thin}};

    std::string text;
    auto flag = [&](const std::string& name, bool v) {
        text += name + ": " + (v ? "true" : "false") + "\n";
    };
    flag("pure", rep.pure);
    flag("thin", rep.thin);
    flag("pseudomanifold", rep.pseudomanifold);
    flag("euler condition", rep.euler_condition);
    text += "shellable: " + tri_str(rep.shellable) + "\n";
    text += "homotopy CM: " + tri_str(rep.homotopy_cm) + "\n";
    text += "homotopy Gorenstein*: " + tri_str(rep.homotopy_gorenstein_star) + "\n";
    for (const auto& co : coeffs) flag("CM over " + co.str(), rep.cm_over.at(co.str()));
    for (const auto& co : coeffs)
        flag("Gorenstein* over " + co.str(), rep.gorenstein_star_over.at(co.str()));
    text += "hierarchy:";
    for (const auto& [k, v] : rep.hierarchy) text += " " + k + "=" + tri_str(v);
    text += "\n";
    for (int i = 0; i < int(hz.groups.size()); ++i)
        text += "H~_" + std::to_string(i - 1) + "(Z) = " +
                homology_group_str(hz.groups[i], CoefficientSpec::Z()) + "\n";
    emit(out, st, doc, text);
}

void run_betti(std::ostream& out, const CliState& st, const std::string& input,
               const std::string& field_str, int max_vertices) {
    SimplicialComplex c = complex_from_json(load_json_file(input));
    CoefficientSpec field = CoefficientSpec::parse(field_str);
    BettiTable t = hochster_betti(c, field, max_vertices);
    json doc = betti_to_json(t);
    doc["field"] = field.str();
    doc["hilbert_numerator"] = hilbert_numerator_from_betti(t).str("t");
    doc["manifest"] = make_manifest("betti", {input}, st.raw_args);
    std::string text = betti_grid_text(t);
    text += "n: " + std::to_string(t.n) + "\n";
    text += "d: " + std::to_string(t.d) + "\n";
    text += "projective dimension: " + std::to_string(t.projective_dimension()) + "\n";
    text += "depth: " + std::to_string(t.depth()) + "\n";
    text += "type: " + std::to_string(t.type()) + "\n";
    text += std::string("Cohen-Macaulay: ") + (t.cohen_macaulay() ? "true" : "false") + "\n";
    emit(out, st, doc, text);
}

void run_poset(std::ostream& out, const CliState& st, const std::string& input,
               const std::vector<std::string>& mobius_args, bool charpoly,
               bool order_complex_flag) {
    FinitePoset p = poset_from_json(load_json_file(input));
    json doc;
    std::string text;
    bool acted = false;
    if (!mobius_args.empty()) {
        int a = find_poset_element(p, mobius_args[0]);
        int b = find_poset_element(p, mobius_args[1]);
        mpz_class mu = p.mobius(a, b);
        doc["mobius"] = mu.get_str();
        text += "mobius: " + mu.get_str() + "\n";
        acted = true;
    }
    if (charpoly) {
        LatticeStructure lat(p);
        ZPoly chi = lat.characteristic_polynomial();
        doc["charpoly"] = chi.str();
        text += charpoly && mobius_args.empty() && !order_complex_flag
                    ? chi.str() + "\n"
                    : "charpoly: " + chi.str() + "\n";
        acted = true;
    }
    if (order_complex_flag) {
        json oc = complex_to_json(p.order_complex());
        doc["order_complex"] = oc;
        text += dump_canonical(oc);
        acted = true;
    }
    if (!acted) {
        doc["elements"] = p.size();
        doc["cover_count"] = int(p.covers().size());
        doc["graded"] = p.is_graded();
        text += "elements: " + std::to_string(p.size()) + "\n";
        text += "covers: " + std::to_string(p.covers().size()) + "\n";
        text += std::string("graded: ") + (p.is_graded() ? "true" : "false") + "\n";
    }
    doc["manifest"] = make_manifest("poset", {input}, st.raw_args);
    emit(out, st, doc, text);
}

void run_filtered(std::ostream& out, std::ostream& err, const CliState& st,
                  const std::string& input, const std::string& threshold_str, bool mirror,
                  bool charpoly, bool check, const std::vector<std::string>& walk_args,
                  bool diameter_flag, long long experiment_draws, uint64_t seed, int k) {
    PointConfiguration pc = point_config_from_json(load_json_file(input));
    GeometricLatticeOfFlats lat = GeometricLatticeOfFlats::from_points(pc);
    std::vector<mpq_class> weights;
    for (const auto& p : pc.points) weights.push_back(p.weight);
    WeightedFiltration w(lat, std::move(weights), mpq_from_string(threshold_str));
    if (mirror) w = w.mirrored();
    if (!w.is_generic())
        err << "warning: weights are not generic: flats " << w.collision_description() << "\n";

    json doc;
    std::string text;
    bool acted = false;
    std::optional<uint64_t> manifest_seed;
    if (charpoly) {
        ZPoly chi = filtered_characteristic_polynomial(w);
        doc["charpoly"] = chi.str();
        text += chi.str() + "\n";
        acted = true;
    }
    if (check) {
        FiltrationTheoremReport rep = check_filtration_theorem(w);
        doc["check"] = json{{"cm_over_z", rep.cm_over_z},
                            {"dim", rep.dim},
                            {"dim_preserved", rep.dim_preserved},
                            {"expected_dim", rep.expected_dim},
                            {"homotopy_cm", tri_str(rep.homotopy_status)}};
        text += std::string("cm over Z: ") + (rep.cm_over_z ? "true" : "false") + "\n";
        text += "dimension: " + std::to_string(rep.dim) + " (expected " +
                std::to_string(rep.expected_dim) + ")\n";
        text += std::string("dimension preserved: ") + (rep.dim_preserved ? "true" : "false") +
                "\n";
        text += "homotopy CM: " + tri_str(rep.homotopy_status) + "\n";
        acted = true;
    }
    if (!walk_args.empty()) {
        auto path = safe_walk(w, walk_args[0], walk_args[1], k);
        json pj = json::array();
        std::string line;
        for (const auto& s : path) {
            pj.push_back(s);
            if (!line.empty()) line += " -> ";
            line += s;
        }
        doc["walk"] = pj;
        doc["walk_length"] = int(path.size()) - 1;
        text += line + "\n";
        text += "length: " + std::to_string(int(path.size()) - 1) + "\n";
        acted = true;
    }
    if (diameter_flag) {
        int d = graph_diameter(w, k);
        doc["diameter"] = d;
        text += "diameter: " + std::to_string(d) + "\n";
        acted = true;
    }
    if (experiment_draws > 0) {
        DiameterExperimentStats stats = diameter_experiment(lat, experiment_draws, seed, k);
        json hist = json::object();
        std::string histline;
        for (const auto& [dv, count] : stats.histogram) {
            hist[std::to_string(dv)] = count;
            if (!histline.empty()) histline += " ";
            histline += std::to_string(dv) + ":" + std::to_string(count);
        }
        doc["experiment"] = json{{"draws", stats.draws},
                                 {"histogram", hist},
                                 {"max_diameter", stats.max_diameter},
                                 {"seed", seed}};
        manifest_seed = seed;
        text += "draws: " + std::to_string(stats.draws) + "\n";
        text += "max diameter: " + std::to_string(stats.max_diameter) + "\n";
        text += "histogram: " + histline + "\n";
        acted = true;
    }
    if (!acted) {
        auto kept = filtered_flats(w);
        doc["filtered_flats"] = int(kept.size());
        doc["flats"] = lat.num_flats();
        doc["rank"] = lat.matroid_rank();
        doc["generic"] = w.is_generic();
        text += "points: " + std::to_string(lat.num_elements()) + "\n";
        text += "flats: " + std::to_string(lat.num_flats()) + "\n";
        text += "rank: " + std::to_string(lat.matroid_rank()) + "\n";
        text += "filtered flats: " + std::to_string(kept.size()) + "\n";
        text += std::string("generic: ") + (w.is_generic() ? "true" : "false") + "\n";
    }
    doc["manifest"] = make_manifest("filtered", {input}, st.raw_args, manifest_seed);
    emit(out, st, doc, text);
}

void run_generate(std::ostream& out, const CliState& st, const std::string& name,
                  std::optional<int> n) {
    auto need_n = [&](const char* what) {
        if (!n) throw user_error(std::string("generate ") + what + " needs a size argument");
        return *n;
    };
    json doc;
    if (name == "simplex-boundary") {
        doc = complex_to_json(simplex_boundary(need_n("simplex-boundary")));
    } else if (name == "cycle") {
        doc = complex_to_json(cycle_complex(need_n("cycle")));
    } else if (name == "rp2-6") {
        doc = complex_to_json(rp2_6());
    } else if (name == "complete-quadrilateral") {
        doc = point_config_to_json(complete_quadrilateral());
    } else if (name == "boolean-lattice") {
        doc = poset_to_json(boolean_lattice(need_n("boolean-lattice")));
    } else {
        throw user_error("unknown generator: " + name +
                         " (try simplex-boundary, cycle, rp2-6, complete-quadrilateral, "
                         "boolean-lattice)");
    }
    doc["manifest"] = make_manifest("generate", {}, st.raw_args);
    out << dump_canonical(doc);
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    auto t0 = std::chrono::steady_clock::now();
    CliState st;
    st.raw_args = args;

    CLI::App app{"exact toolkit for Cohen-Macaulay complexes and filtered geometric lattices"};
    app.name("cmtk");
    app.require_subcommand(0, 1);
    bool text_mode = false;
    auto* opt_json = app.add_flag("--json", st.json_mode, "canonical JSON output");
    app.add_flag("--text", text_mode, "plain text output (default)")->excludes(opt_json);

    std::string h_input, h_coeff = "z";
    auto* sub_h = app.add_subcommand("homology", "reduced simplicial homology");
    sub_h->add_option("input", h_input, "complex JSON file")->required();
    sub_h->add_option("--coeff", h_coeff, "coefficients: z, q, or fp:<p> (default z)");
    sub_h->fallthrough();

    std::string c_input, c_fields = "q,f2,f3,z";
    long long c_budget = 1000000;
    auto* sub_c = app.add_subcommand("classify", "Cohen-Macaulay / Gorenstein* classification");
    sub_c->add_option("input", c_input, "complex JSON file")->required();
    sub_c->add_option("--fields", c_fields, "comma separated coefficient list");
    sub_c->add_option("--shelling-budget", c_budget, "node budget for the shelling search");
    sub_c->fallthrough();

    std::string b_input, b_field = "q";
    int b_maxv = 20;
    auto* sub_b = app.add_subcommand("betti", "graded Betti table of the Stanley-Reisner ring");
    sub_b->add_option("input", b_input, "complex JSON file")->required();
    sub_b->add_option("--field", b_field, "field coefficients: q or fp:<p>");
    sub_b->add_option("--max-vertices", b_maxv, "vertex cap for the subset sweep");
    sub_b->fallthrough();

    std::string p_input;
    std::vector<std::string> p_mobius;
    bool p_charpoly = false, p_order = false;
    auto* sub_p = app.add_subcommand("poset", "finite poset and lattice analysis");
    sub_p->add_option("input", p_input, "poset JSON file")->required();
    sub_p->add_option("--mobius", p_mobius, "two elements x y: print mu(x, y)")->expected(2);
    sub_p->add_flag("--charpoly", p_charpoly, "characteristic polynomial (lattices)");
    sub_p->add_flag("--order-complex", p_order, "emit the order complex as a complex document");
    sub_p->fallthrough();

    std::string f_input, f_threshold = "0";
    bool f_mirror = false, f_charpoly = false, f_check = false, f_diameter = false;
    std::vector<std::string> f_walk;
    long long f_draws = 0;
    uint64_t f_seed = 0;
    int f_k = 2;
    auto* sub_f = app.add_subcommand("filtered", "weight-filtered lattice of flats");
    sub_f->add_option("input", f_input, "point configuration JSON file")->required();
    sub_f->add_option("--threshold", f_threshold, "rational threshold t (default 0)");
    sub_f->add_flag("--mirror", f_mirror, "negate all weights and the threshold");
    sub_f->add_flag("--charpoly", f_charpoly, "filtered characteristic polynomial");
    sub_f->add_flag("--check-filtration", f_check,
                    "check the filtration theorem's conclusion");
    sub_f->add_option("--walk", f_walk, "two positive points: shortest safe walk")->expected(2);
    sub_f->add_flag("--diameter", f_diameter, "diameter of the positive flat graph");
    sub_f->add_option("--experiment", f_draws, "run N random weight draws");
    sub_f->add_option("--seed", f_seed, "experiment seed (default 0)");
    sub_f->add_option("--k", f_k, "flat rank for the walk graph (default 2)");
    sub_f->fallthrough();

    std::string g_name;
    std::optional<int> g_n;
    int g_n_raw = 0;
    auto* sub_g = app.add_subcommand("generate", "emit a bundled example document");
    sub_g->add_option("name", g_name, "simplex-boundary, cycle, rp2-6, "
                                      "complete-quadrilateral, boolean-lattice")
        ->required();
    auto* gopt = sub_g->add_option("n", g_n_raw, "size parameter where applicable");
    sub_g->fallthrough();

    std::vector<std::string> argv_rev(args.rbegin(), args.rend());
    try {
        app.parse(argv_rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (gopt->count() > 0) g_n = g_n_raw;
        if (app.got_subcommand(sub_h))
            run_homology(out, st, h_input, h_coeff);
        else if (app.got_subcommand(sub_c))
            run_classify(out, st, c_input, c_fields, c_budget);
        else if (app.got_subcommand(sub_b))
            run_betti(out, st, b_input, b_field, b_maxv);
        else if (app.got_subcommand(sub_p))
            run_poset(out, st, p_input, p_mobius, p_charpoly, p_order);
        else if (app.got_subcommand(sub_f))
            run_filtered(out, err, st, f_input, f_threshold, f_mirror, f_charpoly, f_check,
                         f_walk, f_diameter, f_draws, f_seed, f_k);
        else if (app.got_subcommand(sub_g))
            run_generate(out, st, g_name, g_n);
        else {
            out << app.help();
            return 0;
        }
    } catch (const internal_error& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    } catch (const user_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    err << "wall time: " << ms << " ms\n";
    return 0;
}

} // namespace cmtk
