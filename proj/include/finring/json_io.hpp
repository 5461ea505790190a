#pragma once

#include <json.hpp>

#include "finring/classify.hpp"
#include "finring/ring.hpp"
#include "finring/witness.hpp"

namespace finring {

inline nlohmann::json to_json(const Witness& w) {
    nlohmann::json j = {{"reason", w.reason}};
    for (const auto& [name, value] : w.elements) j[name] = value;
    return j;
}

inline nlohmann::json to_json(const PropertyVerdict& v) {
    return {{"property", std::string(property_name(v.property))},
            {"holds", v.holds},
            {"witness", v.witness ? to_json(*v.witness) : nlohmann::json(nullptr)}};
}

/// Sorted indices plus their renderings.
inline nlohmann::json to_json(const FiniteRing& R, const ElementSubset& S) {
    nlohmann::json idx = nlohmann::json::array(), shown = nlohmann::json::array();
    for (Elem a : S) {
        idx.push_back(a);
        shown.push_back(R.render(a));
    }
    return {{"indices", idx}, {"elements", shown}};
}

}  // namespace finring
