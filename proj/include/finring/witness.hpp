#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "finring/ring.hpp"

namespace finring {

/// Named element indices explaining why a predicate failed.
struct Witness {
    std::string reason;
    std::vector<std::pair<std::string, Elem>> elements;

    std::optional<Elem> get(const std::string& name) const {
        for (const auto& [k, v] : elements)
            if (k == name) return v;
        return std::nullopt;
    }

    Elem at(const std::string& name) const {
        if (auto v = get(name)) return *v;
        throw std::out_of_range("witness has no element '" + name + "'");
    }

    friend bool operator==(const Witness&, const Witness&) = default;
};

/// Boolean outcome of a ring predicate, with a witness when it fails.
struct Check {
    bool holds = true;
    std::optional<Witness> witness;

    static Check pass() { return {}; }
    static Check fail(Witness w) { return {false, std::move(w)}; }
};

}  // namespace finring
