#pragma once

#include <gmpxx.h>

#include <string>

#include "json.hpp"

#include "cmtk/complex.hpp"
#include "cmtk/homology.hpp"
#include "cmtk/matroid.hpp"
#include "cmtk/poset.hpp"
#include "cmtk/stanley_reisner.hpp"

namespace cmtk {

using json = nlohmann::json;

// Parses a JSON file; parse failures become user errors with line and
// column diagnostics.
json load_json_file(const std::string& path);
json parse_json(const std::string& text, const std::string& origin);

// Canonical rendering: sorted keys (the container is a sorted map), two
// space indent, trailing newline. All exact numbers travel as strings.
std::string dump_canonical(const json& doc);

std::string mpq_str(const mpq_class& q);
mpq_class mpq_from_json(const json& v);
mpq_class mpq_from_string(const std::string& s);

json label_to_json(const Label& l);
Label label_from_json(const json& v);

// {"vertices":[...], "facets":[[...],...]}; vertices may be omitted on
// input and are then inferred from the facets
json complex_to_json(const SimplicialComplex& c);
SimplicialComplex complex_from_json(const json& doc);

// {"elements":[...], "covers":[[a,b],...]}
json poset_to_json(const FinitePoset& p);
FinitePoset poset_from_json(const json& doc);

// {"points":[{"label":"a","coords":["1","0"],"weight":"1"},...]}
json point_config_to_json(const PointConfiguration& pc);
PointConfiguration point_config_from_json(const json& doc);

// {"-1":{"rank":0,"torsion":[]},"0":{...},...}
json homology_to_json(const HomologyProfile& h);
std::string homology_group_str(const HomologyGroup& g, const CoefficientSpec& coeff);
std::string homology_text(const HomologyProfile& h, const CoefficientSpec& coeff);

json betti_to_json(const BettiTable& t);
std::string betti_grid_text(const BettiTable& t);

} // namespace cmtk
