#pragma once

#include <cstdint>
#include <string>
#include <variant>

namespace cmtk {

// Vertex / poset-element label: an integer or an opaque string, as found in
// the JSON inputs. Integers sort before strings; each kind sorts naturally.
using Label = std::variant<int64_t, std::string>;

inline bool label_less(const Label& a, const Label& b) {
    if (a.index() != b.index()) return a.index() < b.index();
    return a < b;
}

inline std::string label_str(const Label& l) {
    if (std::holds_alternative<int64_t>(l)) return std::to_string(std::get<int64_t>(l));
    return std::get<std::string>(l);
}

} // namespace cmtk
