#include "arcs/design_core.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace arcs {

int normalize_residue(long long x, int k) {
    if (k <= 0) throw std::invalid_argument("normalize_residue: k must be positive");
    long long r = x % k;
    if (r < 0) r += k;
    return static_cast<int>(r);
}

Vertex Vertex::point(long long a, int b, int k) {
    if (b < 0 || b >= 4) throw std::invalid_argument("Vertex::point: level out of range");
    return Vertex(normalize_residue(a, k), b);
}

std::string to_string(const Vertex& x) {
    if (x.is_infinity()) return "inf";
    return "(" + std::to_string(x.residue()) + "," + std::to_string(x.level()) + ")";
}

bool KCycle::vertices_distinct() const {
    std::set<Vertex> seen(verts_.begin(), verts_.end());
    return seen.size() == verts_.size();
}

KCycle translated(const KCycle& c, int shift, int k) {
    std::vector<Vertex> out;
    out.reserve(c.vertices().size());
    for (const Vertex& x : c.vertices()) {
        if (x.is_infinity())
            out.push_back(x);
        else
            out.push_back(Vertex::point(x.residue() + shift, x.level(), k));
    }
    return KCycle(std::move(out));
}

KCycle canonicalize(const KCycle& c) {
    const std::vector<Vertex>& vs = c.vertices();
    const std::size_t m = vs.size();
    if (m <= 1) return c;

    std::vector<Vertex> best;
    std::vector<Vertex> cand(m);
    auto consider_rotations = [&](const std::vector<Vertex>& seq) {
        for (std::size_t start = 0; start < m; ++start) {
            for (std::size_t j = 0; j < m; ++j) cand[j] = seq[(start + j) % m];
            if (best.empty() || std::lexicographical_compare(cand.begin(), cand.end(),
                                                             best.begin(), best.end()))
                best = cand;
        }
    };
    consider_rotations(vs);
    std::vector<Vertex> rev(vs.rbegin(), vs.rend());
    consider_rotations(rev);
    return KCycle(std::move(best));
}

bool same_cycle(const KCycle& a, const KCycle& b) {
    if (a.length() != b.length()) return false;
    return canonicalize(a).vertices() == canonicalize(b).vertices();
}

Factor make_factor(std::array<KCycle, 4> cycles, Vertex missing, int k) {
    if (missing.is_infinity())
        throw std::invalid_argument("make_factor: missing vertex must be finite");
    std::set<Vertex> covered;
    std::size_t total = 0;
    for (const KCycle& c : cycles) {
        if (c.length() != k)
            throw std::invalid_argument("make_factor: cycle of length " +
                                        std::to_string(c.length()) + ", expected " + std::to_string(k));
        total += c.vertices().size();
        covered.insert(c.vertices().begin(), c.vertices().end());
    }
    if (covered.size() != total)
        throw std::invalid_argument("make_factor: cycles are not vertex-disjoint");
    if (covered.count(missing))
        throw std::invalid_argument("make_factor: declared missing vertex " + to_string(missing) +
                                    " is covered");
    // covered u {missing} must be (Z_k x Z_4) u {inf}
    if (covered.size() != static_cast<std::size_t>(4 * k))
        throw std::invalid_argument("make_factor: covers " + std::to_string(covered.size()) +
                                    " vertices, expected " + std::to_string(4 * k));
    if (!covered.count(Vertex::infinity()))
        throw std::invalid_argument("make_factor: inf not covered");
    for (const Vertex& x : covered)
        if (!x.is_infinity() && x.residue() >= k)
            throw std::invalid_argument("make_factor: residue out of range: " + to_string(x));
    return Factor{std::move(cycles), missing};
}

Factor translated(const Factor& f, int shift, int k) {
    Factor out;
    for (std::size_t i = 0; i < 4; ++i) out.cycles[i] = translated(f.cycles[i], shift, k);
    out.missing = Vertex::point(f.missing.residue() + shift, f.missing.level(), k);
    return out;
}

std::vector<Factor> develop(const Factor& f, int k) {
    std::vector<Factor> out;
    out.reserve(static_cast<std::size_t>(k));
    for (int l = 0; l < k; ++l) out.push_back(translated(f, l, k));
    return out;
}

namespace {

// Visits each cycle edge once as a consecutive pair (with wraparound).
// A 2-vertex list has the single edge {v0,v1}; shorter lists have none.
template <typename F>
void for_each_edge(const KCycle& c, F&& f) {
    const std::vector<Vertex>& vs = c.vertices();
    const std::size_t m = vs.size();
    if (m == 2) {
        f(vs[0], vs[1]);
        return;
    }
    for (std::size_t i = 0; i < m; ++i) f(vs[i], vs[(i + 1) % m]);
}

}  // namespace

std::vector<int> delta(std::span<const KCycle> cycles, int r, int s, int k) {
    std::vector<int> counts(static_cast<std::size_t>(k), 0);
    for (const KCycle& c : cycles) {
        for_each_edge(c, [&](const Vertex& u, const Vertex& w) {
            if (u.is_infinity() || w.is_infinity()) return;
            if (r == s) {
                if (u.level() == r && w.level() == r) {
                    counts[static_cast<std::size_t>(normalize_residue(u.residue() - w.residue(), k))]++;
                    counts[static_cast<std::size_t>(normalize_residue(w.residue() - u.residue(), k))]++;
                }
            } else {
                if (u.level() == r && w.level() == s)
                    counts[static_cast<std::size_t>(normalize_residue(u.residue() - w.residue(), k))]++;
                else if (u.level() == s && w.level() == r)
                    counts[static_cast<std::size_t>(normalize_residue(w.residue() - u.residue(), k))]++;
            }
        });
    }
    return counts;
}

DifferenceProfile difference_profile(std::span<const KCycle> cycles, int k) {
    DifferenceProfile p;
    p.k = k;
    for (int r = 0; r < 4; ++r)
        for (int s = 0; s < 4; ++s) p.at(r, s) = delta(cycles, r, s, k);
    return p;
}

long long EdgeMultiset::total() const {
    long long t = 0;
    for (const auto& [edge, n] : counts) t += n;
    return t;
}

bool EdgeMultiset::all_exactly_once() const {
    for (const auto& [edge, n] : counts)
        if (n != 1) return false;
    return true;
}

EdgeMultiset edge_multiset(std::span<const KCycle> cycles) {
    EdgeMultiset em;
    for (const KCycle& c : cycles) {
        if (c.length() < 3)
            throw std::invalid_argument("edge_multiset: cycle shorter than 3 vertices");
        if (!c.vertices_distinct())
            throw std::invalid_argument("edge_multiset: repeated vertex in cycle");
        for_each_edge(c, [&](const Vertex& u, const Vertex& w) {
            auto key = u < w ? std::make_pair(u, w) : std::make_pair(w, u);
            em.counts[key]++;
        });
    }
    return em;
}

EdgeMultiset edge_multiset(std::span<const CycleClass> classes) {
    EdgeMultiset em;
    for (const CycleClass& cls : classes) {
        EdgeMultiset part = edge_multiset(std::span<const KCycle>(cls));
        for (const auto& [edge, n] : part.counts) em.counts[edge] += n;
    }
    return em;
}

}  // namespace arcs
