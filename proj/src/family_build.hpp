#pragma once

// Internal helpers shared by the two family builders: expand a cycle
// spec or a tabulated vertex list and fail loudly (naming the cycle and
// subcase) on any structural defect.

#include <initializer_list>
#include <string>
#include <utility>

#include "arcs/family_mod1.hpp"
#include "arcs/sequence_spec.hpp"

namespace arcs::detail {

inline KCycle checked_cycle(const std::string& where, const CycleSpec& spec, int k, int n) {
    KCycle c;
    try {
        c = expand_cycle(spec, k, n);
    } catch (const std::logic_error& e) {
        throw ConstructionError(where, e.what());
    }
    if (c.length() != k)
        throw ConstructionError(where, "expanded to " + std::to_string(c.length()) +
                                           " vertices, expected " + std::to_string(k));
    if (!c.vertices_distinct()) throw ConstructionError(where, "repeated vertex");
    return c;
}

inline KCycle tabulated_cycle(const std::string& where, bool with_infinity,
                              std::initializer_list<std::pair<int, int>> entries, int k) {
    std::vector<Vertex> verts;
    verts.reserve(entries.size() + (with_infinity ? 1 : 0));
    if (with_infinity) verts.push_back(Vertex::infinity());
    for (auto [a, b] : entries) verts.push_back(Vertex::point(a, b, k));
    KCycle c(std::move(verts));
    if (c.length() != k)
        throw ConstructionError(where, "tabulated list has " + std::to_string(c.length()) +
                                           " vertices, expected " + std::to_string(k));
    if (!c.vertices_distinct()) throw ConstructionError(where, "repeated vertex in tabulated list");
    return c;
}

}  // namespace arcs::detail
