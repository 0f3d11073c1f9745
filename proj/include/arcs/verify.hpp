#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "arcs/starter.hpp"

namespace arcs {

// Brute-force certification against the defining properties of a
// k-ARCS(v).  The verifier recounts everything from raw vertex lists and
// shares no arithmetic with the construction path (no translate/delta/
// edge_multiset), so it can serve as an independent oracle.

enum class ClassKind { Almost, Half };

struct ClassReport {
    bool pass = true;
    std::vector<std::string> issues;   // deterministic order
    std::optional<Vertex> missing;     // the one uncovered vertex of a valid almost class
};

// kind Almost: exactly (v-1)/k cycles, pairwise vertex-disjoint, each of
// length k, covering all but exactly one vertex (reported).
// kind Half: exactly (v-1)/(2k) cycles, disjoint, each of length k.
ClassReport verify_class(const CycleClass& cls, int v, int k, ClassKind kind);

struct CheckLine {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerificationReport {
    bool pass = false;
    int k = 0, v = 0;
    std::size_t almost_class_count = 0;
    std::size_t half_cycle_count = 0;
    long long pairs_covered_once = 0;
    long long duplicated_pairs = 0;
    long long uncovered_pairs = 0;
    std::vector<CheckLine> checks;                    // stable order
    std::vector<std::optional<Vertex>> class_missing;  // per almost class

    std::string to_string() const;
};

// Checks (in order): parameters (v = 4k+1), class counts, every class,
// the global exact edge partition over all C(v,2) pairs, and that the
// vertex set of the system is exactly (Z_k x Z_4) u {inf}.
VerificationReport verify_arcs(const ArcsSystem& sys);

// The verifier's own per-pair edge count, exported for cross-checking
// against the construction-side edge accounting.
std::map<std::pair<Vertex, Vertex>, long long> recount_edge_multiplicities(const ArcsSystem& sys);

}  // namespace arcs
