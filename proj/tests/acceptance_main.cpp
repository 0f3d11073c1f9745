// Acceptance suite: runs every acceptance criterion end to end and
// prints one PASS/FAIL line per criterion.  Exit code 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <vector>

#include "arcs/family_mod1.hpp"
#include "arcs/family_mod3.hpp"
#include "arcs/generate.hpp"
#include "arcs/json_io.hpp"
#include "arcs/verify.hpp"

namespace {

using arcs::ArcsSystem;
using arcs::KCycle;
using arcs::Vertex;

std::vector<int> sweep_orders(int lo, int hi) {
    std::vector<int> ks;
    for (int k = lo; k <= hi; ++k)
        if (arcs::supported_order(k)) ks.push_back(k);
    return ks;
}

int failures = 0;

void report(int idx, const char* name, bool pass, const std::string& detail) {
    std::printf("criterion %d: %-52s %s%s%s\n", idx, name, pass ? "PASS" : "FAIL",
                detail.empty() ? "" : " ", detail.c_str());
    if (!pass) ++failures;
}

// --- criterion 1: full-sweep correctness -------------------------------

void criterion_full_sweep() {
    auto t0 = std::chrono::steady_clock::now();
    const std::vector<int> ks = sweep_orders(11, 199);
    bool pass = ks.size() == 95;
    std::string detail;
    for (int k : ks) {
        ArcsSystem sys;
        try {
            sys = arcs::generate_system(k);
        } catch (const std::exception& e) {
            pass = false;
            detail = "k=" + std::to_string(k) + " construction failed: " + e.what();
            break;
        }
        arcs::VerificationReport rep = arcs::verify_arcs(sys);
        long long want_edges = 2LL * k * (4LL * k + 1);
        bool ok = rep.pass && rep.almost_class_count == static_cast<std::size_t>(2 * k) &&
                  rep.half_cycle_count == 2 && rep.pairs_covered_once == want_edges &&
                  rep.duplicated_pairs == 0 && rep.uncovered_pairs == 0;
        if (!ok) {
            pass = false;
            detail = "k=" + std::to_string(k) + " failed verification";
            break;
        }
    }
    auto t1 = std::chrono::steady_clock::now();
    double secs = std::chrono::duration<double>(t1 - t0).count();
    char buf[96];
    std::snprintf(buf, sizeof buf, "(%zu systems, %.2fs)", ks.size(), secs);
    report(1, "full-sweep correctness, k=11..199", pass, pass ? buf : detail);
}

// --- criterion 2: tabulated-cycle fidelity ------------------------------

struct Fixture {
    int k;
    int mod4;         // which family
    int cycle_index;  // position in F2 (0=C5 .. 3=C8)
    bool with_inf;
    std::vector<std::pair<int, int>> verts;
};

// Second, independent transcription of every tabulated cycle.
const std::vector<Fixture>& fixtures() {
    static const std::vector<Fixture> fx = {
        {13, 1, 2, false,
         {{1, 2}, {-5, 1}, {-5, 2}, {0, 0}, {3, 2}, {-2, 0}, {4, 2}, {3, 0}, {5, 2}, {1, 0},
          {-3, 2}, {-1, 0}, {-2, 2}}},
        {13, 1, 3, true,
         {{2, 0}, {-4, 2}, {-6, 1}, {5, 1}, {4, 1}, {-4, 1}, {6, 1}, {6, 3}, {-6, 2}, {2, 2},
          {6, 2}, {-1, 2}}},
        {25, 1, 2, false,
         {{1, 2},  {-11, 1}, {-11, 2}, {0, 0},  {2, 2},  {1, 0},   {4, 2},  {5, 0},
          {3, 2},  {6, 0},   {10, 2},  {2, 0},  {7, 2},  {-5, 0},  {5, 2},  {-4, 0},
          {11, 2}, {4, 0},   {-8, 2},  {-1, 0}, {-10, 2}, {-2, 0}, {-7, 2}, {-3, 0},
          {8, 2}}},
        {25, 1, 3, true,
         {{3, 0},  {9, 2},   {7, 1},  {-7, 1}, {8, 1},   {-8, 1}, {9, 1},  {11, 1},
          {-10, 1}, {10, 1}, {-9, 1}, {-12, 1}, {12, 1}, {12, 3}, {-12, 2}, {-6, 2},
          {6, 2},  {-3, 2},  {12, 2}, {-2, 2}, {-5, 2},  {-1, 2}, {-9, 2}, {-4, 2}}},
        {21, 1, 3, true,
         {{5, 0},  {-6, 2}, {-6, 1}, {6, 1},  {-7, 1}, {7, 1},   {9, 1},  {-8, 1},
          {8, 1},  {-10, 1}, {10, 1}, {10, 3}, {-10, 2}, {8, 2},  {-5, 2}, {7, 2},
          {-8, 2}, {6, 2},  {10, 2}, {5, 2}}},
        {29, 1, 3, true,
         {{7, 0},  {-8, 2},  {-8, 1}, {8, 1},  {-9, 1},  {9, 1},  {-10, 1}, {10, 1},
          {-14, 1}, {-12, 1}, {13, 1}, {12, 1}, {-11, 1}, {11, 1}, {14, 1},  {14, 3},
          {-14, 2}, {7, 2},  {11, 2}, {14, 2}, {8, 2},   {-7, 2}, {9, 2},   {-9, 2},
          {10, 2}, {-10, 2}, {12, 2}, {-12, 2}}},
        {17, 1, 3, true,
         {{0, 0}, {7, 2},  {7, 1},  {6, 1},  {-8, 1}, {-6, 1}, {5, 1}, {-5, 1}, {8, 1},
          {8, 3}, {-8, 2}, {6, 2},  {-2, 2}, {-7, 2}, {4, 2},  {8, 2}}},
        {33, 1, 3, true,
         {{0, 0},   {15, 2}, {15, 1},  {9, 1},  {-9, 1},  {10, 1}, {-10, 1}, {11, 1},
          {-11, 1}, {12, 1}, {13, 1},  {-12, 1}, {14, 1}, {-14, 1}, {-16, 1}, {-13, 1},
          {16, 1},  {16, 3}, {-16, 2}, {8, 2},  {12, 2},  {-14, 2}, {16, 2},  {-11, 2},
          {14, 2},  {-9, 2}, {10, 2},  {-10, 2}, {11, 2}, {-4, 2},  {13, 2},  {-15, 2}}},
        {41, 1, 3, true,
         {{0, 0},   {19, 2},  {19, 1},  {-12, 1}, {13, 1},  {-13, 1}, {11, 1},  {-11, 1},
          {12, 1},  {-15, 1}, {14, 1},  {-14, 1}, {18, 1},  {15, 1},  {16, 1},  {-17, 1},
          {17, 1},  {-18, 1}, {-20, 1}, {-16, 1}, {20, 1},  {20, 3},  {-20, 2}, {10, 2},
          {13, 2},  {-13, 2}, {14, 2},  {-11, 2}, {12, 2},  {-12, 2}, {17, 2},  {-5, 2},
          {16, 2},  {-19, 2}, {18, 2},  {-14, 2}, {20, 2},  {-16, 2}, {15, 2},  {-18, 2}}},
        {11, 3, 0, false,
         {{0, 1}, {0, 3}, {1, 1}, {2, 3}, {4, 1}, {1, 3}, {5, 1}, {-4, 3}, {2, 1}, {5, 3},
          {-1, 1}}},
        {11, 3, 1, false,
         {{0, 0}, {3, 3}, {1, 0}, {-2, 3}, {3, 0}, {4, 3}, {4, 0}, {-3, 3}, {-1, 0}, {-5, 3},
          {-4, 0}}},
        {11, 3, 2, false,
         {{2, 2}, {-3, 1}, {1, 2}, {-5, 0}, {4, 2}, {-3, 0}, {5, 2}, {2, 0}, {3, 2}, {-2, 0},
          {-3, 2}}},
        {11, 3, 3, true,
         {{5, 0}, {-2, 2}, {-4, 1}, {-2, 1}, {3, 1}, {-5, 1}, {-1, 3}, {0, 2}, {-4, 2},
          {-1, 2}}},
        {15, 3, 2, false,
         {{0, 2}, {-7, 1}, {-1, 2}, {0, 0}, {1, 2}, {3, 0}, {7, 2}, {1, 0}, {-2, 2}, {-4, 0},
          {3, 2}, {-2, 0}, {6, 2}, {-3, 0}, {-7, 2}}},
        {15, 3, 3, true,
         {{2, 0}, {-3, 2}, {-5, 1}, {6, 1}, {7, 1}, {-6, 1}, {-3, 1}, {4, 1}, {4, 3}, {5, 2},
          {2, 2}, {-4, 2}, {-6, 2}, {4, 2}}},
        {19, 3, 2, false,
         {{0, 2},  {-9, 1}, {-7, 2}, {0, 0},  {1, 2},  {2, 0},  {4, 2},  {1, 0},  {7, 2},
          {-4, 0}, {-8, 2}, {3, 0},  {-2, 2}, {4, 0},  {-6, 2}, {-3, 0}, {2, 2},  {-5, 0},
          {5, 2}}},
        {19, 3, 3, true,
         {{-2, 0}, {-4, 2}, {7, 1},  {-8, 1}, {9, 1},  {-7, 1}, {-6, 1}, {8, 1},  {-4, 1},
          {5, 1},  {5, 3},  {6, 2},  {3, 2},  {9, 2},  {-3, 2}, {8, 2},  {-1, 2}, {-5, 2}}},
        {23, 3, 2, false,
         {{1, 2},  {-9, 1}, {2, 2},  {-2, 0}, {4, 2},  {-3, 0}, {5, 2},  {-4, 0}, {6, 2},
          {-5, 0}, {8, 2},  {5, 0},  {-4, 2}, {4, 0},  {3, 2},  {1, 0},  {-1, 2}, {3, 0},
          {-3, 2}, {0, 0},  {-5, 2}, {-6, 0}, {10, 2}}},
        {23, 3, 3, true,
         {{2, 0},   {-9, 2}, {-11, 1}, {8, 1},  {-7, 1},  {11, 1}, {10, 1}, {-10, 1},
          {-8, 1},  {9, 1},  {-5, 1},  {6, 1},  {6, 3},   {7, 2},  {0, 2},  {-11, 2},
          {-8, 2},  {9, 2},  {-10, 2}, {-2, 2}, {11, 2},  {-7, 2}}},
        {27, 3, 2, false,
         {{0, 2},  {-13, 1}, {-11, 2}, {0, 0},  {1, 2},  {2, 0},  {4, 2},  {1, 0},  {5, 2},
          {-7, 0}, {2, 2},   {4, 0},   {9, 2},  {-6, 0}, {7, 2},  {-4, 0}, {3, 2},  {-5, 0},
          {13, 2}, {3, 0},   {-5, 2},  {-2, 0}, {-8, 2}, {-3, 0}, {-7, 2}, {6, 0},  {-4, 2}}},
        {27, 3, 3, true,
         {{5, 0},  {-2, 2},  {13, 1},  {11, 1}, {-12, 1}, {-11, 1}, {-8, 1},  {9, 1},
          {-9, 1}, {12, 1},  {-10, 1}, {10, 1}, {-6, 1},  {7, 1},   {7, 3},   {8, 2},
          {11, 2}, {-6, 2},  {6, 2},   {12, 2}, {-10, 2}, {10, 2},  {-3, 2},  {-12, 2},
          {-1, 2}, {-9, 2}}},
        {35, 3, 2, false,
         {{1, 2},  {-15, 1}, {2, 2},  {-2, 0}, {3, 2},  {-3, 0}, {4, 2},  {-5, 0}, {5, 2},
          {-6, 0}, {6, 2},   {-7, 0}, {7, 2},  {-8, 0}, {8, 2},  {-9, 0}, {11, 2}, {8, 0},
          {9, 2},  {7, 0},   {-9, 2}, {5, 0},  {-8, 2}, {4, 0},  {-7, 2}, {3, 0},  {-6, 2},
          {-4, 0}, {-5, 2},  {0, 0},  {-4, 2}, {2, 0},  {-1, 2}, {6, 0},  {-2, 2}}},
        {35, 3, 3, true,
         {{1, 0},   {-16, 2}, {17, 1},  {-16, 1}, {16, 1},  {-12, 1}, {-17, 1}, {-13, 1},
          {13, 1},  {-14, 1}, {15, 1},  {14, 1},  {-10, 1}, {11, 1},  {-11, 1}, {12, 1},
          {-8, 1},  {9, 1},   {9, 3},   {10, 2},  {-12, 2}, {12, 2},  {-11, 2}, {14, 2},
          {-13, 2}, {16, 2},  {-10, 2}, {-15, 2}, {13, 2},  {-3, 2},  {15, 2},  {0, 2},
          {-14, 2}, {17, 2}}},
        {31, 3, 3, true,
         {{0, 0},   {-15, 2}, {14, 1},  {12, 1},  {-14, 1}, {-15, 1}, {-12, 1}, {15, 1},
          {-10, 1}, {13, 1},  {-11, 1}, {10, 1},  {-9, 1},  {11, 1},  {-7, 1},  {8, 1},
          {8, 3},   {9, 2},   {11, 2},  {-11, 2}, {15, 2},  {-1, 2},  {-13, 2}, {-10, 2},
          {13, 2},  {-4, 2},  {-14, 2}, {-8, 2},  {12, 2},  {-12, 2}}},
        {55, 3, 3, true,
         {{0, 0},   {-27, 2}, {26, 1},  {-26, 1}, {23, 1},  {-27, 1}, {27, 1},  {-24, 1},
          {22, 1},  {-23, 1}, {25, 1},  {-22, 1}, {-20, 1}, {24, 1},  {-19, 1}, {19, 1},
          {-18, 1}, {21, 1},  {-21, 1}, {20, 1},  {-16, 1}, {16, 1},  {-15, 1}, {18, 1},
          {-17, 1}, {17, 1},  {-13, 1}, {14, 1},  {14, 3},  {15, 2},  {-18, 2}, {17, 2},
          {-17, 2}, {19, 2},  {-19, 2}, {18, 2},  {-21, 2}, {20, 2},  {-20, 2}, {22, 2},
          {-22, 2}, {21, 2},  {-25, 2}, {27, 2},  {-1, 2},  {25, 2},  {-7, 2},  {24, 2},
          {-26, 2}, {23, 2},  {-24, 2}, {-14, 2}, {-16, 2}, {-23, 2}}},
        {39, 3, 3, true,
         {{0, 0},   {-19, 2}, {18, 1},  {-18, 1}, {15, 1},  {-19, 1}, {19, 1},  {-16, 1},
          {-14, 1}, {16, 1},  {-15, 1}, {17, 1},  {-12, 1}, {12, 1},  {-11, 1}, {14, 1},
          {-13, 1}, {13, 1},  {-9, 1},  {10, 1},  {10, 3},  {11, 2},  {-14, 2}, {13, 2},
          {-13, 2}, {15, 2},  {-15, 2}, {14, 2},  {-5, 2},  {19, 2},  {16, 2},  {-16, 2},
          {17, 2},  {-1, 2},  {-17, 2}, {-12, 2}, {-10, 2}, {-18, 2}}},
        {47, 3, 3, true,
         {{0, 0},   {-23, 2}, {22, 1},  {-22, 1}, {19, 1},  {-23, 1}, {23, 1},  {-20, 1},
          {20, 1},  {-19, 1}, {-17, 1}, {21, 1},  {-16, 1}, {17, 1},  {-18, 1}, {18, 1},
          {-14, 1}, {14, 1},  {-13, 1}, {16, 1},  {-15, 1}, {15, 1},  {-11, 1}, {12, 1},
          {12, 3},  {13, 2},  {-16, 2}, {18, 2},  {-15, 2}, {17, 2},  {-14, 2}, {16, 2},
          {19, 2},  {-6, 2},  {21, 2},  {-21, 2}, {15, 2},  {-20, 2}, {-1, 2},  {23, 2},
          {-17, 2}, {20, 2},  {-19, 2}, {-13, 2}, {-22, 2}, {-18, 2}}},
    };
    return fx;
}

void criterion_fixtures() {
    bool pass = true;
    std::string detail;
    int checked = 0;
    for (const Fixture& fx : fixtures()) {
        arcs::StarterPair sp =
            fx.mod4 == 1 ? arcs::build_factors_mod1(fx.k) : arcs::build_factors_mod3(fx.k);
        std::vector<Vertex> verts;
        if (fx.with_inf) verts.push_back(Vertex::infinity());
        for (auto [a, b] : fx.verts) verts.push_back(Vertex::point(a, b, fx.k));
        KCycle want(std::move(verts));
        const KCycle& got = sp.f2.cycles[static_cast<std::size_t>(fx.cycle_index)];
        if (!arcs::same_cycle(got, want)) {
            pass = false;
            detail = "k=" + std::to_string(fx.k) + " cycle C" + std::to_string(5 + fx.cycle_index) +
                     " differs";
            break;
        }
        ++checked;
    }
    report(2, "tabulated-cycle fidelity (canonical forms)", pass,
           pass ? "(" + std::to_string(checked) + " cycles)" : detail);
}

// --- criterion 3: starter conditions across the sweep -------------------

void criterion_conditions() {
    bool pass = true;
    std::string detail;
    for (int k : sweep_orders(11, 199)) {
        arcs::StarterPair sp = arcs::starter_for(k);
        arcs::ConditionReport rep = arcs::check_conditions(sp);
        std::vector<int> want2{0, sp.d2, k - sp.d2};
        std::vector<int> want3{0, (k - 1) / 2, (k + 1) / 2};
        if (!rep.pass() || rep.absent_differences(2) != want2 ||
            rep.absent_differences(3) != want3) {
            pass = false;
            detail = "k=" + std::to_string(k);
            break;
        }
    }
    report(3, "starter conditions and absent differences, k=11..199", pass, detail);
}

// --- criterion 4: mutation sensitivity ----------------------------------

void criterion_mutations() {
    std::mt19937 rng(0x5eed);
    int total = 0, false_passes = 0;
    for (int k : {11, 13, 15, 17, 19, 23}) {
        const ArcsSystem sys = arcs::generate_system(k);
        for (int iter = 0; iter < 60; ++iter) {
            ArcsSystem bad = sys;
            std::size_t nclasses = bad.almost_parallel_classes.size() + 1;
            std::size_t pick = rng() % nclasses;
            arcs::CycleClass& cls = pick < bad.almost_parallel_classes.size()
                                        ? bad.almost_parallel_classes[pick]
                                        : bad.half_parallel_class;
            KCycle& cyc = cls[rng() % cls.size()];
            std::vector<Vertex> vs = cyc.vertices();
            std::size_t i = rng() % vs.size();
            std::size_t j = rng() % vs.size();
            while (j == i) j = rng() % vs.size();
            std::swap(vs[i], vs[j]);
            cyc = KCycle(std::move(vs));
            ++total;
            if (arcs::verify_arcs(bad).pass) ++false_passes;
        }
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "(%d mutations, %d false passes)", total, false_passes);
    report(4, "mutation sensitivity, 60 transpositions x 6 orders", false_passes == 0, buf);
}

// --- criterion 5: cross-implementation edge identity ---------------------

void criterion_cross_check() {
    bool pass = true;
    std::string detail;
    for (int k : sweep_orders(11, 199)) {
        ArcsSystem sys = arcs::generate_system(k);
        std::vector<arcs::CycleClass> all = sys.almost_parallel_classes;
        all.push_back(sys.half_parallel_class);
        arcs::EdgeMultiset constructed = arcs::edge_multiset(all);
        if (constructed.counts != arcs::recount_edge_multiplicities(sys)) {
            pass = false;
            detail = "k=" + std::to_string(k);
            break;
        }
    }
    report(5, "edge-count cross-check (two implementations), k=11..199", pass, detail);
}

// --- criterion 6: serialization round-trip -------------------------------

void criterion_round_trip() {
    const std::vector<int> ks = sweep_orders(11, 99);
    bool pass = true;
    std::string detail;
    int docs = 0;
    for (int i = 0; i < 100; ++i) {
        int k = ks[static_cast<std::size_t>(i) % ks.size()];
        ArcsSystem sys = arcs::generate_system(k);
        std::string once = arcs::to_json(sys);
        std::string twice;
        try {
            twice = arcs::to_json(arcs::system_from_json(once));
        } catch (const std::exception& e) {
            pass = false;
            detail = "k=" + std::to_string(k) + " parse failed: " + e.what();
            break;
        }
        if (once != twice) {
            pass = false;
            detail = "k=" + std::to_string(k) + " round trip not byte-identical";
            break;
        }
        ++docs;
    }
    report(6, "serialization round-trip, 100 documents", pass,
           pass ? "(" + std::to_string(docs) + " byte-identical)" : detail);
}

}  // namespace

int main() {
    criterion_full_sweep();
    criterion_fixtures();
    criterion_conditions();
    criterion_mutations();
    criterion_cross_check();
    criterion_round_trip();
    if (failures == 0) {
        std::printf("acceptance: all 6 criteria PASS\n");
        return 0;
    }
    std::printf("acceptance: %d criteria FAILED\n", failures);
    return 1;
}
