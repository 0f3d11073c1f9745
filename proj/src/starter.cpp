#include "arcs/starter.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace arcs {

namespace {

std::string join_residues(const std::vector<int>& xs) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) os << ",";
        os << xs[i];
    }
    os << "}";
    return os.str();
}

// Compares an observed count vector against a 0/1 target; returns a
// deterministic "missing {...} extra {...}" description, empty on match.
std::string diff_against_target(const std::vector<int>& observed, const std::vector<int>& target) {
    std::vector<int> missing, extra;
    for (std::size_t x = 0; x < observed.size(); ++x) {
        int d = observed[x] - target[x];
        for (int j = 0; j < d; ++j) extra.push_back(static_cast<int>(x));
        for (int j = 0; j < -d; ++j) missing.push_back(static_cast<int>(x));
    }
    if (missing.empty() && extra.empty()) return {};
    return "missing " + join_residues(missing) + " extra " + join_residues(extra);
}

}  // namespace

StarterPair make_starter_pair(int k, Factor f1, Factor f2, int d2, int d3) {
    if (std::gcd(d2, k) != 1)
        throw std::invalid_argument("make_starter_pair: gcd(d2, k) != 1");
    if (std::gcd(d3, k) != 1)
        throw std::invalid_argument("make_starter_pair: gcd(d3, k) != 1");
    return StarterPair{k, std::move(f1), std::move(f2), d2, d3};
}

bool ConditionReport::pass() const {
    return std::all_of(ok.begin(), ok.end(), [](bool b) { return b; });
}

const char* ConditionReport::condition_name(int idx) {
    static const char* names[5] = {
        "factor vertex covers",
        "infinity neighbor levels",
        "same-level differences at levels 0,1",
        "same-level differences at levels 2,3",
        "mixed-level differences",
    };
    return names[idx];
}

std::vector<int> ConditionReport::absent_differences(int level) const {
    std::vector<int> out;
    const std::vector<int>& counts = profile.at(level, level);
    for (std::size_t x = 0; x < counts.size(); ++x)
        if (counts[x] == 0) out.push_back(static_cast<int>(x));
    return out;
}

ConditionReport check_conditions(const StarterPair& in) {
    const int k = in.k;
    ConditionReport rep;
    rep.k = k;

    std::vector<KCycle> cycles8;
    cycles8.reserve(8);
    for (const Factor* f : {&in.f1, &in.f2})
        for (const KCycle& c : f->cycles) cycles8.push_back(c);
    rep.profile = difference_profile(cycles8, k);

    // condition 1: vertex cover per factor
    {
        std::ostringstream detocc;
        bool ok = true;
        int fi = 0;
        for (const Factor* f : {&in.f1, &in.f2}) {
            ++fi;
            std::set<Vertex> covered;
            std::size_t total = 0;
            bool lengths_ok = true;
            for (const KCycle& c : f->cycles) {
                if (c.length() != k) lengths_ok = false;
                covered.insert(c.vertices().begin(), c.vertices().end());
                total += c.vertices().size();
            }
            bool disjoint = covered.size() == total;
            std::vector<Vertex> uncovered;
            for (int b = 0; b < 4; ++b)
                for (int a = 0; a < k; ++a) {
                    Vertex x = Vertex::point(a, b, k);
                    if (!covered.count(x)) uncovered.push_back(x);
                }
            if (!covered.count(Vertex::infinity())) uncovered.insert(uncovered.begin(), Vertex::infinity());
            bool cover_ok = lengths_ok && disjoint && uncovered.size() == 1 &&
                            uncovered[0] == f->missing && !f->missing.is_infinity();
            if (!cover_ok) {
                ok = false;
                detocc << "F" << fi << ":";
                if (!lengths_ok) detocc << " wrong cycle length;";
                if (!disjoint) detocc << " cycles not disjoint;";
                detocc << " uncovered";
                for (const Vertex& x : uncovered) detocc << " " << to_string(x);
                detocc << " declared missing " << to_string(f->missing) << "; ";
            }
        }
        rep.ok[0] = ok;
        rep.detail[0] = detocc.str();
    }

    // condition 2: inf sees all four levels
    {
        std::array<int, 4> level_count{};
        int degree = 0;
        for (const KCycle& c : cycles8) {
            const auto& vs = c.vertices();
            const std::size_t m = vs.size();
            for (std::size_t i = 0; i < m; ++i) {
                if (!vs[i].is_infinity()) continue;
                const Vertex& prev = vs[(i + m - 1) % m];
                const Vertex& next = vs[(i + 1) % m];
                for (const Vertex* nb : {&prev, &next}) {
                    if (!nb->is_infinity()) {
                        level_count[static_cast<std::size_t>(nb->level())]++;
                        ++degree;
                    }
                }
            }
        }
        bool ok = degree == 4;
        for (int b = 0; b < 4; ++b) ok = ok && level_count[static_cast<std::size_t>(b)] == 1;
        rep.ok[1] = ok;
        if (!ok) {
            std::ostringstream os;
            os << "inf degree " << degree << ", neighbor levels";
            for (int b = 0; b < 4; ++b) os << " " << b << ":x" << level_count[static_cast<std::size_t>(b)];
            rep.detail[1] = os.str();
        }
    }

    // conditions 3-5: difference multisets against their targets
    auto target_all_once = [&](std::initializer_list<int> excluded) {
        std::vector<int> t(static_cast<std::size_t>(k), 1);
        for (int x : excluded) t[static_cast<std::size_t>(normalize_residue(x, k))] = 0;
        return t;
    };
    {
        std::ostringstream os;
        bool ok = true;
        for (int p : {0, 1}) {
            std::string d = diff_against_target(rep.profile.at(p, p), target_all_once({0}));
            if (!d.empty()) {
                ok = false;
                os << "delta(" << p << "," << p << ") " << d << "; ";
            }
        }
        rep.ok[2] = ok;
        rep.detail[2] = os.str();
    }
    {
        std::ostringstream os;
        bool ok = true;
        const std::array<int, 2> dq{in.d2, in.d3};
        for (int q : {2, 3}) {
            int d = dq[static_cast<std::size_t>(q - 2)];
            std::string diff = diff_against_target(rep.profile.at(q, q), target_all_once({0, d, k - d}));
            if (!diff.empty()) {
                ok = false;
                os << "delta(" << q << "," << q << ") " << diff << "; ";
            }
        }
        rep.ok[3] = ok;
        rep.detail[3] = os.str();
    }
    {
        std::ostringstream os;
        bool ok = true;
        for (int r = 0; r < 4; ++r)
            for (int s = 0; s < 4; ++s) {
                if (r == s) continue;
                std::string d = diff_against_target(rep.profile.at(r, s), target_all_once({}));
                if (!d.empty()) {
                    ok = false;
                    os << "delta(" << r << "," << s << ") " << d << "; ";
                }
            }
        rep.ok[4] = ok;
        rep.detail[4] = os.str();
    }

    return rep;
}

CycleClass half_parallel_class(int k, int d2, int d3) {
    CycleClass out;
    const std::array<std::pair<int, int>, 2> orbits{{{2, d2}, {3, d3}}};
    for (auto [q, d] : orbits) {
        if (std::gcd(d, k) != 1)
            throw std::invalid_argument("half_parallel_class: gcd(d" + std::to_string(q) + ", k) != 1");
        std::vector<Vertex> verts;
        verts.reserve(static_cast<std::size_t>(k));
        for (int j = 0; j < k; ++j)
            verts.push_back(Vertex::point(static_cast<long long>(j) * d, q, k));
        out.emplace_back(std::move(verts));
    }
    return out;
}

ConditionFailure::ConditionFailure(std::string condition, const std::string& detail)
    : std::runtime_error("condition \"" + condition + "\" failed: " + detail),
      condition_(std::move(condition)) {}

ArcsSystem assemble(const StarterPair& in) {
    ConditionReport rep = check_conditions(in);
    if (!rep.pass()) {
        for (int i = 0; i < 5; ++i)
            if (!rep.ok[static_cast<std::size_t>(i)])
                throw ConditionFailure(ConditionReport::condition_name(i),
                                       rep.detail[static_cast<std::size_t>(i)]);
    }

    ArcsSystem sys;
    sys.k = in.k;
    sys.v = 4 * in.k + 1;
    sys.almost_parallel_classes.reserve(static_cast<std::size_t>(2 * in.k));
    for (const Factor* f : {&in.f1, &in.f2}) {
        for (int l = 0; l < in.k; ++l) {
            Factor t = translated(*f, l, in.k);
            CycleClass cls(t.cycles.begin(), t.cycles.end());
            sys.almost_parallel_classes.push_back(std::move(cls));
        }
    }
    sys.half_parallel_class = half_parallel_class(in.k, in.d2, in.d3);
    return sys;
}

}  // namespace arcs
