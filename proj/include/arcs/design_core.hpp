#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace arcs {

// Canonical representative of x mod k, in [0, k).
int normalize_residue(long long x, int k);

// A point of (Z_k x Z_4) u {inf}.  Finite points store their residue
// canonically in [0, k) and their level in [0, 4).  The total order puts
// inf first and sorts finite points by (level, residue); canonical cycle
// forms and edge keys rely on it.
class Vertex {
public:
    constexpr Vertex() = default;  // infinity
    static constexpr Vertex infinity() { return Vertex{}; }
    static Vertex point(long long a, int b, int k);

    bool is_infinity() const { return level_ < 0; }
    int residue() const { return residue_; }
    int level() const { return level_; }

    friend constexpr bool operator==(const Vertex&, const Vertex&) = default;
    friend constexpr std::strong_ordering operator<=>(const Vertex& x, const Vertex& y) {
        if (auto c = x.level_ <=> y.level_; c != 0) return c;
        return x.residue_ <=> y.residue_;
    }

private:
    constexpr Vertex(int a, int b) : residue_(a), level_(b) {}
    int residue_ = 0;
    int level_ = -1;  // -1 encodes infinity
};

std::string to_string(const Vertex& x);

// Cyclic vertex sequence; the last vertex is adjacent to the first.
// Deliberately a plain container: validity (distinct vertices, expected
// length) is asserted by the layers that construct or certify cycles, so
// malformed input can still be represented and reported on.
class KCycle {
public:
    KCycle() = default;
    explicit KCycle(std::vector<Vertex> verts) : verts_(std::move(verts)) {}

    int length() const { return static_cast<int>(verts_.size()); }
    const std::vector<Vertex>& vertices() const { return verts_; }
    bool vertices_distinct() const;

    friend bool operator==(const KCycle&, const KCycle&) = default;

private:
    std::vector<Vertex> verts_;
};

using CycleClass = std::vector<KCycle>;

// Image of a cycle under adding (shift, 0); inf is fixed.
KCycle translated(const KCycle& c, int shift, int k);

// Deterministic representative of the rotation/reflection class of a
// cycle: the lexicographically least rotation over both orientations.
KCycle canonicalize(const KCycle& c);

// Equality up to rotation and reflection.
bool same_cycle(const KCycle& a, const KCycle& b);

// Four vertex-disjoint k-cycles covering everything except `missing`.
struct Factor {
    std::array<KCycle, 4> cycles;
    Vertex missing;
};

// Validating constructor; throws std::invalid_argument when the four
// cycles do not cover ((Z_k x Z_4) u {inf}) \ {missing} exactly.
Factor make_factor(std::array<KCycle, 4> cycles, Vertex missing, int k);

Factor translated(const Factor& f, int shift, int k);

// The k translates f + (l, 0), l in Z_k; the translate by 0 is f itself.
std::vector<Factor> develop(const Factor& f, int k);

// Multiset of level-(r,s) differences over a cycle list, as a count per
// residue class.  A same-level edge {(x,p),(y,p)} contributes both x-y
// and y-x; a mixed-level edge {(x,r),(y,s)} contributes x-y only (x read
// at level r).  Edges incident to inf contribute nothing.
std::vector<int> delta(std::span<const KCycle> cycles, int r, int s, int k);

// All sixteen (r,s) difference multisets of a cycle list.
struct DifferenceProfile {
    int k = 0;
    std::array<std::vector<int>, 16> table;

    const std::vector<int>& at(int r, int s) const { return table[static_cast<std::size_t>(4 * r + s)]; }
    std::vector<int>& at(int r, int s) { return table[static_cast<std::size_t>(4 * r + s)]; }
};

DifferenceProfile difference_profile(std::span<const KCycle> cycles, int k);

// Unordered-pair edge multiplicities; keys are (lesser, greater) in
// Vertex order.
struct EdgeMultiset {
    std::map<std::pair<Vertex, Vertex>, long long> counts;

    long long total() const;
    bool all_exactly_once() const;
};

// Accumulates the edges of each cycle (length-k cycle -> k unordered
// edges).  Throws std::invalid_argument on a degenerate cycle (repeated
// vertex or fewer than 3 vertices).
EdgeMultiset edge_multiset(std::span<const KCycle> cycles);
EdgeMultiset edge_multiset(std::span<const CycleClass> classes);

}  // namespace arcs
