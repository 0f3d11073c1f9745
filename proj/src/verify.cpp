#include "arcs/verify.hpp"

#include <algorithm>
#include <sstream>

namespace arcs {

namespace {

// The verifier's own vertex enumeration: inf first, then (a,b) by
// residue-major order.  Intentionally a different layout from the one
// the construction code uses for canonical forms.
std::size_t vertex_slot(const Vertex& x) {
    if (x.is_infinity()) return 0;
    return 1 + static_cast<std::size_t>(x.residue()) * 4 + static_cast<std::size_t>(x.level());
}

std::size_t pair_slot(std::size_t i, std::size_t j, std::size_t v) {
    if (i > j) std::swap(i, j);
    return i * (2 * v - i - 1) / 2 + (j - i - 1);
}

// Consecutive pairs including the wraparound edge; lists shorter than 2
// contribute nothing.
template <typename F>
void for_each_adjacent(const KCycle& c, F&& f) {
    const std::vector<Vertex>& vs = c.vertices();
    const std::size_t m = vs.size();
    if (m < 2) return;
    for (std::size_t i = 0; i < m; ++i) f(vs[i], vs[(i + 1) % m]);
}

std::string slot_vertex_name(std::size_t slot) {
    if (slot == 0) return "inf";
    std::size_t p = slot - 1;
    return "(" + std::to_string(p / 4) + "," + std::to_string(p % 4) + ")";
}

}  // namespace

ClassReport verify_class(const CycleClass& cls, int v, int k, ClassKind kind) {
    ClassReport rep;
    const std::size_t expected =
        kind == ClassKind::Almost ? static_cast<std::size_t>((v - 1) / k)
                                  : static_cast<std::size_t>((v - 1) / (2 * k));
    if (cls.size() != expected)
        rep.issues.push_back("expected " + std::to_string(expected) + " cycles, got " +
                             std::to_string(cls.size()));
    for (std::size_t ci = 0; ci < cls.size(); ++ci)
        if (cls[ci].length() != k)
            rep.issues.push_back("cycle " + std::to_string(ci) + " has length " +
                                 std::to_string(cls[ci].length()) + ", expected " +
                                 std::to_string(k));

    std::vector<int> occupancy(static_cast<std::size_t>(v), 0);
    bool in_range = true;
    for (const KCycle& c : cls)
        for (const Vertex& x : c.vertices()) {
            if (!x.is_infinity() && (x.residue() < 0 || x.residue() >= k)) {
                in_range = false;
                continue;
            }
            occupancy[vertex_slot(x)]++;
        }
    if (!in_range) rep.issues.push_back("vertex residue out of range");

    std::vector<std::string> repeats;
    std::size_t covered = 0, uncovered = 0;
    std::size_t missing_slot = 0;
    for (std::size_t slot = 0; slot < occupancy.size(); ++slot) {
        if (occupancy[slot] > 1) repeats.push_back(slot_vertex_name(slot));
        if (occupancy[slot] > 0) {
            ++covered;
        } else {
            ++uncovered;
            missing_slot = slot;
        }
    }
    if (!repeats.empty()) {
        std::string msg = "not vertex-disjoint:";
        for (const std::string& r : repeats) msg += " " + r;
        rep.issues.push_back(msg);
    }
    if (kind == ClassKind::Almost) {
        if (covered != static_cast<std::size_t>(v - 1) || uncovered != 1) {
            rep.issues.push_back("covers " + std::to_string(covered) + " vertices, expected " +
                                 std::to_string(v - 1));
        } else if (repeats.empty()) {
            if (missing_slot == 0)
                rep.missing = Vertex::infinity();
            else
                rep.missing = Vertex::point(static_cast<long long>((missing_slot - 1) / 4),
                                            static_cast<int>((missing_slot - 1) % 4), k);
        }
    }
    rep.pass = rep.issues.empty();
    return rep;
}

VerificationReport verify_arcs(const ArcsSystem& sys) {
    VerificationReport rep;
    rep.k = sys.k;
    rep.v = sys.v;
    rep.almost_class_count = sys.almost_parallel_classes.size();
    rep.half_cycle_count = sys.half_parallel_class.size();

    const int k = sys.k;
    const int v = sys.v;
    bool params_ok = k >= 3 && k % 2 == 1 && v == 4 * k + 1;
    rep.checks.push_back({"parameters", params_ok,
                          params_ok ? "" : "need odd k >= 3 and v = 4k+1, got k=" +
                                               std::to_string(k) + " v=" + std::to_string(v)});
    if (!params_ok) {
        rep.pass = false;
        return rep;
    }

    const std::size_t expected_classes = static_cast<std::size_t>((v - 1) / 2);
    const std::size_t expected_half = static_cast<std::size_t>((v - 1) / (2 * k));
    {
        bool ok = rep.almost_class_count == expected_classes && rep.half_cycle_count == expected_half;
        std::ostringstream os;
        if (!ok)
            os << "got " << rep.almost_class_count << " almost classes (expected "
               << expected_classes << ") and " << rep.half_cycle_count
               << " half-class cycles (expected " << expected_half << ")";
        rep.checks.push_back({"class-counts", ok, os.str()});
    }

    for (std::size_t i = 0; i < sys.almost_parallel_classes.size(); ++i) {
        ClassReport cr = verify_class(sys.almost_parallel_classes[i], v, k, ClassKind::Almost);
        std::string detail;
        for (const std::string& issue : cr.issues) detail += (detail.empty() ? "" : "; ") + issue;
        if (cr.pass && cr.missing) detail = "missing " + arcs::to_string(*cr.missing);
        rep.checks.push_back({"almost class " + std::to_string(i), cr.pass, detail});
        rep.class_missing.push_back(cr.missing);
    }
    {
        ClassReport cr = verify_class(sys.half_parallel_class, v, k, ClassKind::Half);
        std::string detail;
        for (const std::string& issue : cr.issues) detail += (detail.empty() ? "" : "; ") + issue;
        rep.checks.push_back({"half-class", cr.pass, detail});
    }

    // Global edge partition: every unordered pair exactly once.
    {
        const std::size_t vs = static_cast<std::size_t>(v);
        std::vector<long long> table(vs * (vs - 1) / 2, 0);
        bool degenerate = false;
        auto count_cycle = [&](const KCycle& c) {
            for_each_adjacent(c, [&](const Vertex& a, const Vertex& b) {
                std::size_t ia = vertex_slot(a), ib = vertex_slot(b);
                if (ia == ib || ia >= vs || ib >= vs) {
                    degenerate = true;
                    return;
                }
                table[pair_slot(ia, ib, vs)]++;
            });
        };
        for (const CycleClass& cls : sys.almost_parallel_classes)
            for (const KCycle& c : cls) count_cycle(c);
        for (const KCycle& c : sys.half_parallel_class) count_cycle(c);

        std::vector<std::string> dup_names, unc_names;
        for (std::size_t i = 0; i < vs; ++i)
            for (std::size_t j = i + 1; j < vs; ++j) {
                long long n = table[pair_slot(i, j, vs)];
                if (n == 1) {
                    rep.pairs_covered_once++;
                } else if (n > 1) {
                    rep.duplicated_pairs++;
                    if (dup_names.size() < 12)
                        dup_names.push_back("{" + slot_vertex_name(i) + "," +
                                            slot_vertex_name(j) + "}x" + std::to_string(n));
                } else {
                    rep.uncovered_pairs++;
                    if (unc_names.size() < 12)
                        unc_names.push_back("{" + slot_vertex_name(i) + "," +
                                            slot_vertex_name(j) + "}");
                }
            }
        bool ok = !degenerate && rep.duplicated_pairs == 0 && rep.uncovered_pairs == 0;
        std::ostringstream os;
        if (degenerate) os << "degenerate edge (repeated or out-of-range vertex); ";
        if (rep.duplicated_pairs) {
            os << rep.duplicated_pairs << " duplicated pairs:";
            for (const std::string& s : dup_names) os << " " << s;
            os << "; ";
        }
        if (rep.uncovered_pairs) {
            os << rep.uncovered_pairs << " uncovered pairs:";
            for (const std::string& s : unc_names) os << " " << s;
        }
        if (ok) os << rep.pairs_covered_once << " pairs each covered once";
        rep.checks.push_back({"edge-partition", ok, os.str()});
    }

    // Vertex set of the whole system is exactly (Z_k x Z_4) u {inf}.
    {
        std::vector<char> seen(static_cast<std::size_t>(v), 0);
        auto mark = [&](const KCycle& c) {
            for (const Vertex& x : c.vertices()) {
                std::size_t slot = vertex_slot(x);
                if (slot < seen.size()) seen[slot] = 1;
            }
        };
        for (const CycleClass& cls : sys.almost_parallel_classes)
            for (const KCycle& c : cls) mark(c);
        for (const KCycle& c : sys.half_parallel_class) mark(c);
        std::size_t present = 0;
        for (char s : seen) present += static_cast<std::size_t>(s);
        bool ok = present == static_cast<std::size_t>(v);
        rep.checks.push_back({"vertex-set", ok,
                              ok ? "" : std::to_string(v - static_cast<int>(present)) +
                                            " vertices never appear"});
    }

    rep.pass = std::all_of(rep.checks.begin(), rep.checks.end(),
                           [](const CheckLine& c) { return c.pass; });
    return rep;
}

std::string VerificationReport::to_string() const {
    std::ostringstream os;
    os << "verdict: " << (pass ? "PASS" : "FAIL") << "\n";
    os << "k=" << k << " v=" << v << "\n";
    os << "almost parallel classes: " << almost_class_count << "\n";
    os << "half-parallel class cycles: " << half_cycle_count << "\n";
    os << "pairs covered exactly once: " << pairs_covered_once << " (duplicated "
       << duplicated_pairs << ", uncovered " << uncovered_pairs << ")\n";
    std::size_t class_lines = 0, class_pass = 0;
    for (const CheckLine& c : checks) {
        if (c.name.rfind("almost class ", 0) == 0) {
            ++class_lines;
            if (c.pass) ++class_pass;
        }
    }
    for (const CheckLine& c : checks) {
        if (c.name.rfind("almost class ", 0) == 0 && c.pass) continue;  // summarized below
        os << "  " << c.name << ": " << (c.pass ? "PASS" : "FAIL");
        if (!c.detail.empty()) os << " (" << c.detail << ")";
        os << "\n";
    }
    os << "  almost classes passing: " << class_pass << "/" << class_lines << "\n";
    return os.str();
}

std::map<std::pair<Vertex, Vertex>, long long> recount_edge_multiplicities(const ArcsSystem& sys) {
    std::map<std::pair<Vertex, Vertex>, long long> counts;
    auto count_cycle = [&](const KCycle& c) {
        for_each_adjacent(c, [&](const Vertex& a, const Vertex& b) {
            auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
            counts[key]++;
        });
    };
    for (const CycleClass& cls : sys.almost_parallel_classes)
        for (const KCycle& c : cls) count_cycle(c);
    for (const KCycle& c : sys.half_parallel_class) count_cycle(c);
    return counts;
}

}  // namespace arcs
