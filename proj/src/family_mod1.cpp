#include "arcs/family_mod1.hpp"

#include "arcs/sequence_spec.hpp"
#include "family_build.hpp"

// Construction tables for k = 4n+1.  Each cycle is the concatenation of
// the listed sequences; a seq(last, {...}) block repeats for
// i = 0..last, a fix({...}) block is emitted once.  The long mixed
// cycles C7/C8 depend on k mod 24, with small orders tabulated.

namespace arcs {

namespace {

constexpr SeqTerm v(SeqExpr value, int level) { return term(value, level); }

CycleSpec c1_spec() {
    return {false,
            {
                seq(N - 1, {v(N - I, 0), v(-(N - I), 1)}),
                one(v(0, 0)),
                seq(N - 1, {v(1 + I, 1), v(-(1 + I), 0)}),
            }};
}

CycleSpec c2_spec() {
    return {false,
            {
                seq(N - 1, {v(1 + I, 2), v(-(1 + I), 3)}),
                seq(N - 1, {v(-(N - I), 2), v(N - I, 3)}),
                one(v(0, 2)),
            }};
}

CycleSpec c3_spec() {
    return {false,
            {
                seq(N - 2, {v(N + 1 + I, 1), v(-(N + 1 + I), 2)}),
                seq(N - 1, {v(-(2 * N - I), 1), v(2 * N - I, 2)}),
                fix({v(-2 * N, 0), v(-2 * N, 2), v(0, 1)}),
            }};
}

CycleSpec c4_spec() {
    return {true,
            {
                seq(N - 1, {v(-(2 * N - I), 3), v(2 * N - I, 3)}),
                seq(N - 2, {v(N + 1 + I, 0), v(-(N + 1 + I), 0)}),
                fix({v(2 * N, 0), v(2 * N, 1)}),
            }};
}

CycleSpec c5_spec() {
    return {false,
            {
                seq(N - 1, {v(N - I, 1), v(-(N - I), 3)}),
                one(v(0, 1)),
                seq(N - 1, {v(1 + I, 3), v(-(1 + I), 1)}),
            }};
}

CycleSpec c6_spec() {
    return {false,
            {
                seq(N - 2, {v(-(N + 1 + I), 0), v(N + 1 + I, 3)}),
                fix({v(-2 * N, 0), v(0, 3)}),
                seq(N - 1, {v(2 * N - I, 0), v(-(2 * N - I), 3)}),
                one(v(-N, 0)),
            }};
}

// C7 for k = 5 (mod 8), k >= 21.
CycleSpec c7_case1_spec() {
    return {false,
            {
                fix({v(-(2 * N - 3), 2), v(-(2 * N - 1), 1)}),
                seq((N - 3) / 2, {v(1 + I, 2), v(-(1 + I), 0)}),
                seq((N - 3) / 2, {v(-((N + 1) / 2 + I), 2), v((N + 1) / 2 + I, 0)}),
                fix({v(2 * N - 1, 2), v(0, 0), v(-(2 * N - 1), 2)}),
                seq((N - 3) / 2, {v(1 + I, 0), v(-(1 + I), 2)}),
                seq((N - 3) / 2, {v(-((N + 1) / 2 + I), 0), v((N + 1) / 2 + I, 2)}),
            }};
}

// C7 for k = 1 (mod 8), k >= 17, k != 25.
CycleSpec c7_case2_spec() {
    return {false,
            {
                fix({v(-(2 * N - 3), 2), v(-(2 * N - 1), 1)}),
                seq(N - 2, {v(1 + I, 2), v(-(1 + I), 0)}),
                one(v(-N, 2)),
                seq((N - 4) / 2, {v(1 + I, 0), v(-(1 + I), 2)}),
                fix({v(N / 2, 0), v(-(3 * N) / 2, 2)}),
                seq((N - 4) / 2, {v((N + 2) / 2 + I, 0), v(-((N + 2) / 2 + I), 2)}),
                fix({v(N, 0), v(N + 1, 2)}),
            }};
}

// C8 blocks shared by the three k = 5 (mod 8) subcases.
std::vector<SeqTerm> c8_case1_t3_block() {
    return {v((3 * N + 5) / 2 + 3 * I, 1), v(-((3 * N + 5) / 2 + 3 * I), 1),
            v((3 * N + 3) / 2 + 3 * I, 1), v(-((3 * N + 3) / 2 + 3 * I), 1),
            v((3 * N + 1) / 2 + 3 * I, 1), v(-((3 * N + 1) / 2 + 3 * I), 1)};
}

std::vector<SeqTerm> c8_case1_t5_block() {
    return {v(N + 2 + 3 * I, 2), v(-(N + 2 + 3 * I), 2), v(N + 1 + 3 * I, 2),
            v(-(N + 4 + 3 * I), 2), v(N + 3 + 3 * I, 2), v(-(N + 3 + 3 * I), 2)};
}

CycleSpec c8_case1_spec(CaseTag1 tag) {
    CycleSpec spec{true,
                   {
                       fix({v(N, 0), v(-(N + 1), 2)}),
                       seq((N - 3) / 2, {v(-(N + 1 + I), 1), v(N + 1 + I, 1)}),
                   }};
    auto& s = spec.sequences;
    switch (tag) {
    case CaseTag1::C1_1:
        s.push_back(seq((N - 19) / 6, c8_case1_t3_block()));
        s.push_back(fix({v(2 * N - 4, 1), v(-(2 * N - 3), 1), v(2 * N - 3, 1), v(-(2 * N - 2), 1),
                         v(2 * N - 2, 1), v(-(2 * N - 6), 1), v(2 * N - 6, 1), v(-(2 * N - 5), 1),
                         v(2 * N - 5, 1), v(-(2 * N - 4), 1), v(-2 * N, 1), v(2 * N - 1, 1),
                         v(2 * N, 1), v(2 * N, 3), v(-2 * N, 2), v(N, 2), v(-N, 2)}));
        s.push_back(seq((N - 13) / 6, c8_case1_t5_block()));
        s.push_back(fix({v((3 * N - 3) / 2, 2), v(-(3 * N - 3) / 2, 2), v((3 * N - 1) / 2, 2),
                         v(-(3 * N - 1) / 2, 2), v((3 * N + 3) / 2, 2), v((3 * N - 5) / 2, 2)}));
        s.push_back(seq((N - 19) / 6,
                        {v((3 * N + 5) / 2 + 3 * I, 2), v(-((3 * N + 3) / 2 + 3 * I), 2),
                         v((3 * N + 1) / 2 + 3 * I, 2), v(-((3 * N + 5) / 2 + 3 * I), 2),
                         v((3 * N + 9) / 2 + 3 * I, 2), v(-((3 * N + 1) / 2 + 3 * I), 2)}));
        s.push_back(fix({v(2 * N - 4, 2), v(-(2 * N - 2), 2), v(2 * N, 2), v(-(2 * N - 5), 2),
                         v(2 * N - 6, 2), v(-(2 * N - 4), 2), v(2 * N - 3, 2), v(-(2 * N - 6), 2),
                         v(2 * N - 2, 2)}));
        break;
    case CaseTag1::C1_2:
        s.push_back(seq((N - 9) / 6, c8_case1_t3_block()));
        s.push_back(fix({v(-2 * N, 1), v(2 * N - 1, 1), v(2 * N, 1), v(2 * N, 3), v(-2 * N, 2),
                         v(N, 2), v(-N, 2)}));
        s.push_back(seq((N - 15) / 6, c8_case1_t5_block()));
        s.push_back(fix({v((3 * N - 5) / 2, 2), v(-(3 * N - 5) / 2, 2), v((3 * N - 7) / 2, 2),
                         v((3 * N + 5) / 2, 2), v((3 * N - 3) / 2, 2), v(-(3 * N - 3) / 2, 2),
                         v((3 * N - 1) / 2, 2)}));
        s.push_back(seq((N - 15) / 6,
                        {v(-((3 * N - 1) / 2 + 3 * I), 2), v((3 * N + 11) / 2 + 3 * I, 2),
                         v(-((3 * N + 1) / 2 + 3 * I), 2), v((3 * N + 1) / 2 + 3 * I, 2),
                         v(-((3 * N + 3) / 2 + 3 * I), 2), v((3 * N + 3) / 2 + 3 * I, 2)}));
        s.push_back(fix({v(-(2 * N - 5), 2), v(2 * N - 3, 2), v(-(2 * N - 4), 2), v(2 * N, 2),
                         v(-(2 * N - 2), 2), v(2 * N - 4, 2)}));
        break;
    case CaseTag1::C1_3:
        s.push_back(seq((N - 17) / 6, c8_case1_t3_block()));
        s.push_back(fix({v(2 * N - 3, 1), v(-(2 * N - 3), 1), v(2 * N - 2, 1), v(-(2 * N - 2), 1),
                         v(2 * N - 5, 1), v(-(2 * N - 5), 1), v(2 * N - 4, 1), v(-(2 * N - 4), 1),
                         v(-2 * N, 1), v(2 * N - 1, 1), v(2 * N, 1), v(2 * N, 3), v(-2 * N, 2),
                         v(N, 2), v(-N, 2)}));
        s.push_back(seq((N - 17) / 6, c8_case1_t5_block()));
        s.push_back(fix({v((3 * N - 7) / 2, 2), v(-(3 * N - 7) / 2, 2), v((3 * N - 9) / 2, 2),
                         v(-(3 * N - 3) / 2, 2), v((3 * N - 1) / 2, 2), v(-(3 * N - 5) / 2, 2),
                         v((3 * N - 5) / 2, 2), v((3 * N + 3) / 2, 2), v((3 * N - 3) / 2, 2),
                         v(-(3 * N + 1) / 2, 2), v((3 * N + 1) / 2, 2)}));
        s.push_back(seq((N - 17) / 6,
                        {v(-((3 * N + 3) / 2 + 3 * I), 2), v((3 * N + 7) / 2 + 3 * I, 2),
                         v(-((3 * N - 1) / 2 + 3 * I), 2), v((3 * N + 9) / 2 + 3 * I, 2),
                         v(-((3 * N + 7) / 2 + 3 * I), 2), v((3 * N + 5) / 2 + 3 * I, 2)}));
        s.push_back(fix({v(-(2 * N - 4), 2), v(2 * N - 3, 2), v(-(2 * N - 2), 2), v(2 * N - 2, 2),
                         v(-(2 * N - 6), 2), v(2 * N, 2)}));
        break;
    default:
        throw ConstructionError("c8_case1_spec", "not a k = 5 (mod 8) subcase");
    }
    return spec;
}

std::vector<SeqTerm> c8_case2_t2_block() {
    return {v(-(N + 2 + 3 * I), 1), v(N + 3 + 3 * I, 1), v(-(N + 3 + 3 * I), 1),
            v(N + 1 + 3 * I, 1), v(-(N + 1 + 3 * I), 1), v(N + 2 + 3 * I, 1)};
}

std::vector<SeqTerm> c8_case23_t8_block() {
    return {v((3 * N + 2) / 2 + 3 * I, 2), v(-((3 * N + 8) / 2 + 3 * I), 2),
            v((3 * N + 6) / 2 + 3 * I, 2), v(-((3 * N + 6) / 2 + 3 * I), 2),
            v((3 * N + 10) / 2 + 3 * I, 2), v(-((3 * N - 2) / 2 + 3 * I), 2)};
}

CycleSpec c8_case2_spec(CaseTag1 tag) {
    CycleSpec spec{true,
                   {
                       fix({v(0, 0), v(2 * N - 1, 2), v(2 * N - 1, 1)}),
                   }};
    auto& s = spec.sequences;
    switch (tag) {
    case CaseTag1::C2_1:
        s.push_back(seq((N - 12) / 6, c8_case2_t2_block()));
        s.push_back(fix({v(-(3 * N - 2) / 2, 1), v((3 * N) / 2, 1), v((3 * N - 2) / 2, 1),
                         v(-(3 * N - 4) / 2, 1), v((3 * N - 4) / 2, 1), v(-(3 * N) / 2, 1),
                         v((3 * N + 4) / 2, 1), v(-(3 * N + 2) / 2, 1), v(-(3 * N + 6) / 2, 1),
                         v((3 * N + 2) / 2, 1)}));
        s.push_back(seq((N - 18) / 6,
                        {v(-((3 * N + 8) / 2 + 3 * I), 1), v((3 * N + 8) / 2 + 3 * I, 1),
                         v(-((3 * N + 4) / 2 + 3 * I), 1), v((3 * N + 10) / 2 + 3 * I, 1),
                         v(-((3 * N + 12) / 2 + 3 * I), 1), v((3 * N + 6) / 2 + 3 * I, 1)}));
        s.push_back(fix({v(-(2 * N - 2), 1), v(2 * N - 3, 1), v(-2 * N, 1), v(2 * N - 2, 1),
                         v(-(2 * N - 4), 1), v(2 * N, 1), v(2 * N, 3), v(-2 * N, 2), v(N, 2)}));
        s.push_back(seq((N - 12) / 6,
                        {v(N + 4 + 3 * I, 2), v(-(N + 3 + 3 * I), 2), v(N + 3 + 3 * I, 2),
                         v(-(N + 2 + 3 * I), 2), v(N + 2 + 3 * I, 2), v(-(N + 1 + 3 * I), 2)}));
        s.push_back(fix({v((3 * N + 2) / 2, 2), v(-N / 2, 2), v((3 * N - 2) / 2, 2),
                         v(-(3 * N - 4) / 2, 2), v((3 * N + 8) / 2, 2), v(-(3 * N - 2) / 2, 2),
                         v((3 * N) / 2, 2)}));
        s.push_back(seq((N - 18) / 6,
                        {v(-((3 * N + 2) / 2 + 3 * I), 2), v((3 * N + 14) / 2 + 3 * I, 2),
                         v(-((3 * N + 4) / 2 + 3 * I), 2), v((3 * N + 4) / 2 + 3 * I, 2),
                         v(-((3 * N + 6) / 2 + 3 * I), 2), v((3 * N + 6) / 2 + 3 * I, 2)}));
        s.push_back(fix({v(-(2 * N - 5), 2), v(2 * N, 2), v(-(2 * N - 2), 2), v(2 * N - 4, 2),
                         v(-(2 * N - 4), 2), v(2 * N - 3, 2), v(-(2 * N - 1), 2)}));
        break;
    case CaseTag1::C2_2:
        s.push_back(seq((N - 8) / 6, c8_case2_t2_block()));
        s.push_back(fix({v(-(3 * N + 2) / 2, 1), v(-(3 * N) / 2, 1), v((3 * N + 4) / 2, 1)}));
        s.push_back(seq((N - 14) / 6,
                        {v((3 * N) / 2 + 3 * I, 1), v(-((3 * N + 8) / 2 + 3 * I), 1),
                         v((3 * N + 2) / 2 + 3 * I, 1), v(-((3 * N + 4) / 2 + 3 * I), 1),
                         v((3 * N + 10) / 2 + 3 * I, 1), v(-((3 * N + 6) / 2 + 3 * I), 1)}));
        s.push_back(fix({v(2 * N - 4, 1), v(-2 * N, 1), v(2 * N - 3, 1), v(-(2 * N - 2), 1),
                         v(2 * N, 1), v(2 * N, 3), v(-2 * N, 2), v(N, 2), v(N + 3, 2),
                         v(-(N + 2), 2), v(N + 2, 2)}));
        s.push_back(seq((N - 14) / 6,
                        {v(-(N + 1 + 3 * I), 2), v(N + 5 + 3 * I, 2), v(-(N + 5 + 3 * I), 2),
                         v(N + 6 + 3 * I, 2), v(-(N + 3 + 3 * I), 2), v(N + 4 + 3 * I, 2)}));
        s.push_back(fix({v(-(3 * N - 6) / 2, 2), v((3 * N + 4) / 2, 2), v(-N / 2, 2),
                         v((3 * N) / 2, 2), v(-(3 * N + 2) / 2, 2)}));
        s.push_back(seq((N - 20) / 6, c8_case23_t8_block()));
        s.push_back(fix({v(2 * N - 6, 2), v(-(2 * N - 4), 2), v(2 * N - 3, 2), v(-(2 * N - 8), 2),
                         v(2 * N, 2), v(-(2 * N - 5), 2), v(2 * N - 4, 2), v(-(2 * N - 2), 2),
                         v(2 * N - 2, 2), v(-(2 * N - 1), 2)}));
        break;
    case CaseTag1::C2_3:
        s.push_back(seq((N - 10) / 6, c8_case2_t2_block()));
        s.push_back(fix({v(-(3 * N) / 2, 1), v((3 * N - 2) / 2, 1), v(-(3 * N - 2) / 2, 1),
                         v((3 * N + 6) / 2, 1), v((3 * N) / 2, 1)}));
        s.push_back(seq((N - 16) / 6,
                        {v((3 * N + 2) / 2 + 3 * I, 1), v(-((3 * N + 6) / 2 + 3 * I), 1),
                         v((3 * N + 4) / 2 + 3 * I, 1), v(-((3 * N + 2) / 2 + 3 * I), 1),
                         v((3 * N + 12) / 2 + 3 * I, 1), v(-((3 * N + 4) / 2 + 3 * I), 1)}));
        s.push_back(fix({v(2 * N - 4, 1), v(-(2 * N - 3), 1), v(2 * N - 3, 1), v(-(2 * N - 2), 1),
                         v(-2 * N, 1), v(-(2 * N - 4), 1), v(2 * N, 1), v(2 * N, 3), v(-2 * N, 2),
                         v(N, 2), v(N + 3, 2), v(-(N + 3), 2), v(N + 4, 2), v(-(N + 1), 2),
                         v(N + 2, 2)}));
        s.push_back(seq((N - 16) / 6,
                        {v(-(N + 2 + 3 * I), 2), v(N + 6 + 3 * I, 2), v(-(N + 6 + 3 * I), 2),
                         v(N + 7 + 3 * I, 2), v(-(N + 4 + 3 * I), 2), v(N + 5 + 3 * I, 2)}));
        s.push_back(fix({v(-(3 * N - 6) / 2, 2), v((3 * N + 4) / 2, 2), v(-N / 2, 2),
                         v((3 * N) / 2, 2), v(-(3 * N + 2) / 2, 2)}));
        s.push_back(seq((N - 22) / 6, c8_case23_t8_block()));
        s.push_back(fix({v(2 * N - 7, 2), v(-(2 * N - 2), 2), v(2 * N - 5, 2), v(-(2 * N - 6), 2),
                         v(2 * N - 4, 2), v(-(2 * N - 9), 2), v(2 * N - 3, 2), v(-(2 * N - 5), 2),
                         v(2 * N, 2), v(-(2 * N - 4), 2), v(2 * N - 2, 2), v(-(2 * N - 1), 2)}));
        break;
    default:
        throw ConstructionError("c8_case2_spec", "not a k = 1 (mod 8) subcase");
    }
    return spec;
}

KCycle tabulated_c7(int k) {
    using detail::tabulated_cycle;
    switch (k) {
    case 13:
        return tabulated_cycle("mod1 k=13 C7", false,
                               {{1, 2}, {-5, 1}, {-5, 2}, {0, 0}, {3, 2}, {-2, 0}, {4, 2},
                                {3, 0}, {5, 2}, {1, 0}, {-3, 2}, {-1, 0}, {-2, 2}},
                               k);
    case 25:
        return tabulated_cycle(
            "mod1 k=25 C7", false,
            {{1, 2},  {-11, 1}, {-11, 2}, {0, 0},  {2, 2},   {1, 0},  {4, 2},  {5, 0},  {3, 2},
             {6, 0},  {10, 2},  {2, 0},   {7, 2},  {-5, 0},  {5, 2},  {-4, 0}, {11, 2}, {4, 0},
             {-8, 2}, {-1, 0},  {-10, 2}, {-2, 0}, {-7, 2},  {-3, 0}, {8, 2}},
            k);
    default:
        throw ConstructionError("tabulated_c7 (mod1)", "no table for k=" + std::to_string(k));
    }
}

KCycle tabulated_c8(int k) {
    using detail::tabulated_cycle;
    switch (k) {
    case 13:
        return tabulated_cycle("mod1 k=13 C8", true,
                               {{2, 0}, {-4, 2}, {-6, 1}, {5, 1}, {4, 1}, {-4, 1}, {6, 1},
                                {6, 3}, {-6, 2}, {2, 2}, {6, 2}, {-1, 2}},
                               k);
    case 25:
        return tabulated_cycle(
            "mod1 k=25 C8", true,
            {{3, 0},   {9, 2},   {7, 1},  {-7, 1}, {8, 1},  {-8, 1}, {9, 1},  {11, 1},
             {-10, 1}, {10, 1},  {-9, 1}, {-12, 1}, {12, 1}, {12, 3}, {-12, 2}, {-6, 2},
             {6, 2},   {-3, 2},  {12, 2}, {-2, 2}, {-5, 2}, {-1, 2}, {-9, 2},  {-4, 2}},
            k);
    case 21:
        return tabulated_cycle("mod1 k=21 C8", true,
                               {{5, 0},  {-6, 2}, {-6, 1}, {6, 1},   {-7, 1}, {7, 1},  {9, 1},
                                {-8, 1}, {8, 1},  {-10, 1}, {10, 1}, {10, 3}, {-10, 2}, {8, 2},
                                {-5, 2}, {7, 2},  {-8, 2}, {6, 2},   {10, 2}, {5, 2}},
                               k);
    case 29:
        return tabulated_cycle(
            "mod1 k=29 C8", true,
            {{7, 0},   {-8, 2}, {-8, 1},  {8, 1},   {-9, 1}, {9, 1},  {-10, 1}, {10, 1},
             {-14, 1}, {-12, 1}, {13, 1}, {12, 1},  {-11, 1}, {11, 1}, {14, 1},  {14, 3},
             {-14, 2}, {7, 2},  {11, 2},  {14, 2},  {8, 2},  {-7, 2}, {9, 2},   {-9, 2},
             {10, 2},  {-10, 2}, {12, 2}, {-12, 2}},
            k);
    case 17:
        return tabulated_cycle("mod1 k=17 C8", true,
                               {{0, 0}, {7, 2},  {7, 1},  {6, 1},  {-8, 1}, {-6, 1}, {5, 1},
                                {-5, 1}, {8, 1}, {8, 3},  {-8, 2}, {6, 2},  {-2, 2}, {-7, 2},
                                {4, 2},  {8, 2}},
                               k);
    case 33:
        return tabulated_cycle(
            "mod1 k=33 C8", true,
            {{0, 0},   {15, 2},  {15, 1},  {9, 1},   {-9, 1},  {10, 1}, {-10, 1}, {11, 1},
             {-11, 1}, {12, 1},  {13, 1},  {-12, 1}, {14, 1},  {-14, 1}, {-16, 1}, {-13, 1},
             {16, 1},  {16, 3},  {-16, 2}, {8, 2},   {12, 2},  {-14, 2}, {16, 2},  {-11, 2},
             {14, 2},  {-9, 2},  {10, 2},  {-10, 2}, {11, 2},  {-4, 2},  {13, 2},  {-15, 2}},
            k);
    case 41:
        return tabulated_cycle(
            "mod1 k=41 C8", true,
            {{0, 0},   {19, 2},  {19, 1},  {-12, 1}, {13, 1},  {-13, 1}, {11, 1},  {-11, 1},
             {12, 1},  {-15, 1}, {14, 1},  {-14, 1}, {18, 1},  {15, 1},  {16, 1},  {-17, 1},
             {17, 1},  {-18, 1}, {-20, 1}, {-16, 1}, {20, 1},  {20, 3},  {-20, 2}, {10, 2},
             {13, 2},  {-13, 2}, {14, 2},  {-11, 2}, {12, 2},  {-12, 2}, {17, 2},  {-5, 2},
             {16, 2},  {-19, 2}, {18, 2},  {-14, 2}, {20, 2},  {-16, 2}, {15, 2},  {-18, 2}},
            k);
    default:
        throw ConstructionError("tabulated_c8 (mod1)", "no table for k=" + std::to_string(k));
    }
}

bool has_tabulated_c7(int k) { return k == 13 || k == 25; }
bool has_tabulated_c8(int k) {
    return k == 13 || k == 17 || k == 21 || k == 25 || k == 29 || k == 33 || k == 41;
}

}  // namespace

const char* to_string(CaseTag1 tag) {
    switch (tag) {
    case CaseTag1::Hard13: return "mod1 k=13";
    case CaseTag1::Hard17: return "mod1 k=17";
    case CaseTag1::Hard21: return "mod1 k=21";
    case CaseTag1::Hard25: return "mod1 k=25";
    case CaseTag1::Hard29: return "mod1 k=29";
    case CaseTag1::Hard33: return "mod1 k=33";
    case CaseTag1::Hard41: return "mod1 k=41";
    case CaseTag1::C1_1: return "mod1 case 1.1";
    case CaseTag1::C1_2: return "mod1 case 1.2";
    case CaseTag1::C1_3: return "mod1 case 1.3";
    case CaseTag1::C2_1: return "mod1 case 2.1";
    case CaseTag1::C2_2: return "mod1 case 2.2";
    case CaseTag1::C2_3: return "mod1 case 2.3";
    }
    return "?";
}

CaseTag1 case_tag_mod1(int k) {
    if (k % 2 == 0 || k % 4 != 1 || k < 13)
        throw std::invalid_argument("case_tag_mod1: need k = 1 (mod 4), k >= 13");
    switch (k) {
    case 13: return CaseTag1::Hard13;
    case 17: return CaseTag1::Hard17;
    case 21: return CaseTag1::Hard21;
    case 25: return CaseTag1::Hard25;
    case 29: return CaseTag1::Hard29;
    case 33: return CaseTag1::Hard33;
    case 41: return CaseTag1::Hard41;
    default: break;
    }
    switch (k % 24) {
    case 5:  return CaseTag1::C1_1;  // first general order 53
    case 13: return CaseTag1::C1_2;  // first general order 37
    case 21: return CaseTag1::C1_3;  // first general order 45
    case 1:  return CaseTag1::C2_1;  // first general order 49
    case 9:  return CaseTag1::C2_2;  // first general order 57
    case 17: return CaseTag1::C2_3;  // first general order 65
    default:
        throw std::invalid_argument("case_tag_mod1: unreachable residue class");
    }
}

FamilyParams parameters_mod1(int k) {
    if (k % 2 == 0 || k % 4 != 1 || k < 13)
        throw std::invalid_argument("parameters_mod1: need k = 1 (mod 4), k >= 13");
    return FamilyParams{Vertex::point(0, 3, k), Vertex::point(0, 2, k), 2, (k - 1) / 2};
}

StarterPair build_factors_mod1(int k) {
    const FamilyParams params = parameters_mod1(k);
    const CaseTag1 tag = case_tag_mod1(k);
    const int n = (k - 1) / 4;
    const std::string where = to_string(tag);
    using detail::checked_cycle;

    KCycle c1 = checked_cycle(where + " C1", c1_spec(), k, n);
    KCycle c2 = checked_cycle(where + " C2", c2_spec(), k, n);
    KCycle c3 = checked_cycle(where + " C3", c3_spec(), k, n);
    KCycle c4 = checked_cycle(where + " C4", c4_spec(), k, n);
    KCycle c5 = checked_cycle(where + " C5", c5_spec(), k, n);
    KCycle c6 = checked_cycle(where + " C6", c6_spec(), k, n);

    KCycle c7;
    if (has_tabulated_c7(k))
        c7 = tabulated_c7(k);
    else if (k % 8 == 5)
        c7 = checked_cycle(where + " C7", c7_case1_spec(), k, n);
    else
        c7 = checked_cycle(where + " C7", c7_case2_spec(), k, n);

    KCycle c8;
    if (has_tabulated_c8(k))
        c8 = tabulated_c8(k);
    else if (k % 8 == 5)
        c8 = checked_cycle(where + " C8", c8_case1_spec(tag), k, n);
    else
        c8 = checked_cycle(where + " C8", c8_case2_spec(tag), k, n);

    Factor f1, f2;
    try {
        f1 = make_factor({c1, c2, c3, c4}, params.missing1, k);
        f2 = make_factor({c5, c6, c7, c8}, params.missing2, k);
    } catch (const std::invalid_argument& e) {
        throw ConstructionError(where, e.what());
    }
    StarterPair sp = make_starter_pair(k, std::move(f1), std::move(f2), params.d2, params.d3);
    ConditionReport rep = check_conditions(sp);
    if (!rep.pass()) {
        for (int i = 0; i < 5; ++i)
            if (!rep.ok[static_cast<std::size_t>(i)])
                throw ConstructionError(where, std::string(ConditionReport::condition_name(i)) +
                                                   ": " + rep.detail[static_cast<std::size_t>(i)]);
    }
    return sp;
}

}  // namespace arcs
