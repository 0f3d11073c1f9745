#include "arcs/family_mod3.hpp"

#include "arcs/sequence_spec.hpp"
#include "family_build.hpp"

// Construction tables for k = 4n+3.  Same conventions as the mod-1
// family; here the second missing vertex and d2 vary by case.

namespace arcs {

namespace {

constexpr SeqTerm v(SeqExpr value, int level) { return term(value, level); }

CycleSpec c1_spec() {
    return {false,
            {
                seq(N - 1, {v(N - I, 0), v(-(N - I), 1)}),
                one(v(0, 0)),
                seq(N, {v(1 + I, 1), v(-(1 + I), 0)}),
            }};
}

CycleSpec c2_spec() {
    return {false,
            {
                seq(N - 1, {v(1 + I, 2), v(-(1 + I), 3)}),
                fix({v(N + 1, 2), v(N + 1, 3)}),
                seq(N - 1, {v(-(N - I), 2), v(N - I, 3)}),
                one(v(0, 2)),
            }};
}

CycleSpec c3_spec() {
    return {false,
            {
                seq(N - 2, {v(N + 2 + I, 1), v(-(N + 2 + I), 2)}),
                seq(N - 1, {v(-(2 * N + 1 - I), 1), v(2 * N + 1 - I, 2)}),
                fix({v(-(N + 1), 1), v(-(N + 1), 2), v(-(2 * N + 1), 0), v(-(2 * N + 1), 2),
                     v(0, 1)}),
            }};
}

CycleSpec c4_spec() {
    return {true,
            {
                seq(N - 1, {v(-(2 * N + 1 - I), 3), v(2 * N + 1 - I, 3)}),
                fix({v(-(N + 1), 3), v(N + 1, 0)}),
                seq(N - 2, {v(N + 2 + I, 0), v(-(N + 2 + I), 0)}),
                fix({v(2 * N + 1, 0), v(2 * N + 1, 1)}),
            }};
}

// C5, C6 hold for every k >= 15; k = 11 is fully tabulated.
CycleSpec c5_spec() {
    return {false,
            {
                fix({v(N + 2, 1), v(-(N + 1), 3)}),
                seq(N - 1, {v(N - I, 1), v(-(N - I), 3)}),
                one(v(0, 1)),
                seq(N - 2, {v(1 + I, 3), v(-(1 + I), 1)}),
                fix({v(N, 3), v(-(N + 1), 1)}),
            }};
}

CycleSpec c6_spec() {
    return {false,
            {
                seq(N - 1, {v(-(N + 2 + I), 0), v(N + 2 + I, 3)}),
                fix({v(2 * N + 1, 0), v(0, 3), v(-1, 0), v(-(2 * N + 1), 3)}),
                seq(N - 2, {v(2 * N - I, 0), v(-(2 * N - I), 3)}),
                one(v(N + 1, 0)),
            }};
}

// ----- case 1: k = 3 (mod 8), k >= 43 -----

std::vector<SequenceSpec> c7_case1_head() {
    return {
        fix({v(1, 2), v(-(2 * N - 1), 1)}),
        seq((N - 6) / 2, {v(2 + I, 2), v(-(2 + I), 0)}),
        seq(N / 2, {v(N / 2 + I, 2), v(-((N + 2) / 2 + I), 0)}),
        fix({v(N + 3, 2), v(N, 0), v(N + 1, 2), v(N - 1, 0), v(-(N + 1), 2)}),
        seq((N - 4) / 2, {v(N - 3 - I, 0), v(-(N - I), 2)}),
        one(v(-N / 2, 0)),
    };
}

std::vector<SeqTerm> c7_case1_s6_block() {
    return {v(-((N + 2) / 2 - 3 * I), 2), v((N - 8) / 2 - 3 * I, 0), v(-(N / 2 - 3 * I), 2),
            v((N - 4) / 2 - 3 * I, 0), v(-((N - 8) / 2 - 3 * I), 2), v((N - 6) / 2 - 3 * I, 0)};
}

CycleSpec c7_case1_spec(CaseTag3 tag) {
    CycleSpec spec{false, c7_case1_head()};
    auto& s = spec.sequences;
    switch (tag) {
    case CaseTag3::C1_1:
        s.push_back(seq((N - 18) / 6, c7_case1_s6_block()));
        s.push_back(fix({v(-7, 2), v(3, 0), v(-6, 2), v(2, 0), v(-4, 2), v(0, 0), v(-3, 2),
                         v(4, 0), v(-1, 2), v(N - 2, 0), v(-2, 2)}));
        break;
    case CaseTag3::C1_2:
        s.push_back(seq((N - 14) / 6, c7_case1_s6_block()));
        s.push_back(fix({v(-5, 2), v(0, 0), v(-4, 2), v(2, 0), v(-1, 2), v(N - 2, 0), v(-2, 2)}));
        break;
    case CaseTag3::C1_3:
        s.push_back(seq((N - 16) / 6, c7_case1_s6_block()));
        s.push_back(fix({v(-6, 2), v(0, 0), v(-3, 2), v(2, 0), v(-5, 2), v(3, 0), v(-1, 2),
                         v(N - 2, 0), v(-2, 2)}));
        break;
    default:
        throw ConstructionError("c7_case1_spec", "not a k = 3 (mod 8) subcase");
    }
    return spec;
}

std::vector<SeqTerm> c8_case1_t6_block() {
    return {v(N + 2 + 3 * I, 2), v(-(N + 4 + 3 * I), 2), v(N + 4 + 3 * I, 2),
            v(-(N + 3 + 3 * I), 2), v(N + 6 + 3 * I, 2), v(-(N + 5 + 3 * I), 2)};
}

CycleSpec c8_case1_spec(CaseTag3 tag) {
    CycleSpec spec{true, {}};
    auto& s = spec.sequences;
    switch (tag) {
    case CaseTag3::C1_1:
        s.push_back(fix({v(1, 0), v(-2 * N, 2), v(2 * N + 1, 1), v(-2 * N, 1), v(-(2 * N + 1), 1),
                         v(-(2 * N - 3), 1), v(2 * N - 1, 1), v(-(2 * N - 2), 1), v(2 * N, 1)}));
        s.push_back(seq((N - 12) / 6,
                        {v(-(2 * N - 5 - 3 * I), 1), v(2 * N - 2 - 3 * I, 1),
                         v(-(2 * N - 4 - 3 * I), 1), v(2 * N - 4 - 3 * I, 1),
                         v(-(2 * N - 6 - 3 * I), 1), v(2 * N - 3 - 3 * I, 1)}));
        s.push_back(fix({v((3 * N) / 2, 1), v(-(3 * N - 2) / 2, 1), v((3 * N + 2) / 2, 1)}));
        s.push_back(seq((N - 12) / 6,
                        {v(-((3 * N - 6) / 2 - 3 * I), 1), v((3 * N - 2) / 2 - 3 * I, 1),
                         v(-((3 * N - 4) / 2 - 3 * I), 1), v((3 * N - 6) / 2 - 3 * I, 1),
                         v(-((3 * N - 8) / 2 - 3 * I), 1), v((3 * N - 4) / 2 - 3 * I, 1)}));
        s.push_back(fix({v(-N, 1), v(N + 1, 1), v(N + 1, 3)}));
        s.push_back(seq((N - 12) / 6, c8_case1_t6_block()));
        s.push_back(fix({v((3 * N - 2) / 2, 2), v(-(3 * N + 2) / 2, 2), v((3 * N + 2) / 2, 2),
                         v(-(3 * N) / 2, 2), v((3 * N + 8) / 2, 2), v(-(N - 2) / 2, 2)}));
        s.push_back(seq((N - 18) / 6,
                        {v((3 * N + 4) / 2 + 3 * I, 2), v(-((3 * N + 8) / 2 + 3 * I), 2),
                         v((3 * N + 6) / 2 + 3 * I, 2), v(-((3 * N + 4) / 2 + 3 * I), 2),
                         v((3 * N + 14) / 2 + 3 * I, 2), v(-((3 * N + 6) / 2 + 3 * I), 2)}));
        s.push_back(fix({v(2 * N - 4, 2), v(-(2 * N - 3), 2), v(2 * N - 3, 2), v(-(2 * N - 2), 2),
                         v(0, 2), v(2 * N - 1, 2), v(-(2 * N - 1), 2), v(2 * N, 2),
                         v(-(2 * N - 4), 2), v(2 * N + 1, 2), v(-(N + 2), 2)}));
        break;
    case CaseTag3::C1_2:
        s.push_back(fix({v(1, 0), v(-2 * N, 2), v(2 * N + 1, 1), v(-2 * N, 1), v(2 * N, 1),
                         v(-(2 * N - 4), 1), v(-(2 * N + 1), 1), v(-(2 * N - 3), 1),
                         v(2 * N - 3, 1), v(-(2 * N - 2), 1), v(2 * N - 1, 1)}));
        s.push_back(seq((N - 14) / 6,
                        {v(-(2 * N - 7 - 3 * I), 1), v(2 * N - 2 - 3 * I, 1),
                         v(-(2 * N - 5 - 3 * I), 1), v(2 * N - 6 - 3 * I, 1),
                         v(-(2 * N - 6 - 3 * I), 1), v(2 * N - 4 - 3 * I, 1)}));
        s.push_back(fix({v((3 * N + 4) / 2, 1), v(-(3 * N - 4) / 2, 1)}));
        s.push_back(seq((N - 14) / 6,
                        {v((3 * N) / 2 - 3 * I, 1), v(-((3 * N - 2) / 2 - 3 * I), 1),
                         v((3 * N - 4) / 2 - 3 * I, 1), v(-((3 * N - 6) / 2 - 3 * I), 1),
                         v((3 * N - 2) / 2 - 3 * I, 1), v(-((3 * N - 10) / 2 - 3 * I), 1)}));
        s.push_back(fix({v(N + 3, 1), v(-(N + 3), 1), v(N + 4, 1), v(-N, 1), v(N + 1, 1),
                         v(N + 1, 3)}));
        s.push_back(seq((N - 8) / 6, c8_case1_t6_block()));
        s.push_back(fix({v((3 * N + 2) / 2, 2), v(-(3 * N + 6) / 2, 2), v((3 * N + 6) / 2, 2),
                         v(-(3 * N + 4) / 2, 2), v((3 * N + 10) / 2, 2), v(-(N - 2) / 2, 2)}));
        s.push_back(seq((N - 20) / 6,
                        {v((3 * N + 12) / 2 + 3 * I, 2), v(-((3 * N + 10) / 2 + 3 * I), 2),
                         v((3 * N + 8) / 2 + 3 * I, 2), v(-((3 * N + 12) / 2 + 3 * I), 2),
                         v((3 * N + 16) / 2 + 3 * I, 2), v(-((3 * N + 8) / 2 + 3 * I), 2)}));
        s.push_back(fix({v(2 * N - 1, 2), v(-(2 * N - 2), 2), v(2 * N - 3, 2), v(-(2 * N - 1), 2),
                         v(2 * N, 2), v(0, 2), v(2 * N + 1, 2), v(-(2 * N - 3), 2),
                         v(-(N + 2), 2)}));
        break;
    case CaseTag3::C1_3:
        s.push_back(fix({v(1, 0), v(-2 * N, 2), v(2 * N + 1, 1), v(2 * N - 1, 1), v(-2 * N, 1),
                         v(-(2 * N + 1), 1)}));
        s.push_back(seq((N - 10) / 6,
                        {v(2 * N - 4 - 3 * I, 1), v(-(2 * N - 3 - 3 * I), 1),
                         v(2 * N - 2 - 3 * I, 1), v(-(2 * N - 4 - 3 * I), 1),
                         v(2 * N - 3 * I, 1), v(-(2 * N - 2 - 3 * I), 1)}));
        s.push_back(fix({v(-(3 * N) / 2, 1), v((3 * N + 4) / 2, 1)}));
        s.push_back(seq((N - 10) / 6,
                        {v(-((3 * N - 4) / 2 - 3 * I), 1), v((3 * N) / 2 - 3 * I, 1),
                         v(-((3 * N - 2) / 2 - 3 * I), 1), v((3 * N - 4) / 2 - 3 * I, 1),
                         v(-((3 * N - 6) / 2 - 3 * I), 1), v((3 * N - 2) / 2 - 3 * I, 1)}));
        s.push_back(fix({v(-N, 1), v(N + 1, 1), v(N + 1, 3)}));
        s.push_back(seq((N - 10) / 6, c8_case1_t6_block()));
        s.push_back(fix({v((3 * N) / 2, 2), v(-(N - 2) / 2, 2)}));
        s.push_back(seq((N - 16) / 6,
                        {v((3 * N + 8) / 2 + 3 * I, 2), v(-((3 * N + 6) / 2 + 3 * I), 2),
                         v((3 * N + 6) / 2 + 3 * I, 2), v(-((3 * N + 4) / 2 + 3 * I), 2),
                         v((3 * N + 4) / 2 + 3 * I, 2), v(-((3 * N + 2) / 2 + 3 * I), 2)}));
        s.push_back(fix({v(2 * N - 1, 2), v(-(2 * N - 2), 2), v(0, 2), v(2 * N + 1, 2),
                         v(-(2 * N - 3), 2), v(2 * N - 2, 2), v(-(2 * N - 4), 2), v(2 * N - 3, 2),
                         v(-(2 * N - 1), 2), v(2 * N, 2), v(-(N + 2), 2)}));
        break;
    default:
        throw ConstructionError("c8_case1_spec", "not a k = 3 (mod 8) subcase");
    }
    return spec;
}

// ----- case 2: k = 7 (mod 8), k >= 31 -----

std::vector<SequenceSpec> c7_case2_head() {
    return {
        fix({v(1, 2), v(-(2 * N - 1), 1)}),
        seq((N - 5) / 2, {v(2 + I, 2), v(-(2 + I), 0)}),
        seq((N - 1) / 2, {v((N + 3) / 2 + I, 2), v(-((N + 1) / 2 + I), 0)}),
        one(v(N + 3, 2)),
        seq((N - 5) / 2, {v(N - I, 0), v(-(N - 1 - I), 2)}),
        fix({v((N + 3) / 2, 0), v((N + 1) / 2, 2)}),
    };
}

std::vector<SeqTerm> c7_case2_s6_block() {
    return {v((N - 3) / 2 - 3 * I, 0), v(-((N - 5) / 2 - 3 * I), 2), v((N - 1) / 2 - 3 * I, 0),
            v(-((N - 3) / 2 - 3 * I), 2), v((N + 1) / 2 - 3 * I, 0), v(-((N - 1) / 2 - 3 * I), 2)};
}

CycleSpec c7_case2_spec(CaseTag3 tag) {
    CycleSpec spec{false, c7_case2_head()};
    auto& s = spec.sequences;
    switch (tag) {
    case CaseTag3::Hard31:
    case CaseTag3::Hard55:
    case CaseTag3::C2_1:
        s.push_back(seq((N - 13) / 6, c7_case2_s6_block()));
        s.push_back(fix({v(2, 0), v(0, 2), v(3, 0), v(-2, 2), v(4, 0), v(-3, 2), v(1, 0),
                         v(-N, 2), v(-(N + 1), 0), v(2 * N, 2)}));
        break;
    case CaseTag3::Hard39:
    case CaseTag3::C2_2:
        s.push_back(seq((N - 15) / 6, c7_case2_s6_block()));
        s.push_back(fix({v(3, 0), v(-3, 2), v(4, 0), v(-4, 2), v(5, 0), v(0, 2), v(2, 0),
                         v(-2, 2), v(1, 0), v(-N, 2), v(-(N + 1), 0), v(2 * N, 2)}));
        break;
    case CaseTag3::Hard47:
    case CaseTag3::C2_3:
        s.push_back(seq((N - 17) / 6, c7_case2_s6_block()));
        s.push_back(fix({v(4, 0), v(-3, 2), v(3, 0), v(-5, 2), v(6, 0), v(-4, 2), v(5, 0),
                         v(0, 2), v(2, 0), v(-2, 2), v(1, 0), v(-N, 2), v(-(N + 1), 0),
                         v(2 * N, 2)}));
        break;
    default:
        throw ConstructionError("c7_case2_spec", "not a k = 7 (mod 8) subcase");
    }
    return spec;
}

SequenceSpec c8_case2_t1() {
    return fix({v(0, 0), v(-(2 * N + 1), 2), v(2 * N, 1), v(-2 * N, 1), v(2 * N - 3, 1),
                v(-(2 * N + 1), 1), v(2 * N + 1, 1), v(-(2 * N - 2), 1)});
}

std::vector<SeqTerm> c8_case2_t2_block() {
    return {v(2 * N - 6 - 3 * I, 1), v(-(2 * N - 3 - 3 * I), 1), v(2 * N - 1 - 3 * I, 1),
            v(-(2 * N - 4 - 3 * I), 1), v(2 * N - 2 - 3 * I, 1), v(-(2 * N - 5 - 3 * I), 1)};
}

CycleSpec c8_case2_spec(CaseTag3 tag) {
    CycleSpec spec{true, {c8_case2_t1()}};
    auto& s = spec.sequences;
    switch (tag) {
    case CaseTag3::C2_1:
        s.push_back(seq((N - 19) / 6, c8_case2_t2_block()));
        s.push_back(fix({v((3 * N + 5) / 2, 1), v(-(3 * N + 7) / 2, 1), v((3 * N + 11) / 2, 1),
                         v(-(3 * N + 5) / 2, 1), v(-(3 * N + 1) / 2, 1), v((3 * N + 9) / 2, 1),
                         v(-(3 * N - 1) / 2, 1), v((3 * N - 1) / 2, 1), v(-(3 * N - 3) / 2, 1),
                         v((3 * N + 3) / 2, 1), v(-(3 * N + 3) / 2, 1), v((3 * N + 1) / 2, 1),
                         v(-(3 * N - 7) / 2, 1)}));
        s.push_back(seq((N - 13) / 6,
                        {v((3 * N - 7) / 2 - 3 * I, 1), v(-((3 * N - 9) / 2 - 3 * I), 1),
                         v((3 * N - 3) / 2 - 3 * I, 1), v(-((3 * N - 5) / 2 - 3 * I), 1),
                         v((3 * N - 5) / 2 - 3 * I, 1), v(-((3 * N - 13) / 2 - 3 * I), 1)}));
        s.push_back(fix({v(N + 1, 1), v(N + 1, 3)}));
        s.push_back(seq((N - 7) / 6,
                        {v(N + 2 + 3 * I, 2), v(-(N + 5 + 3 * I), 2), v(N + 4 + 3 * I, 2),
                         v(-(N + 4 + 3 * I), 2), v(N + 6 + 3 * I, 2), v(-(N + 6 + 3 * I), 2)}));
        s.push_back(fix({v((3 * N + 3) / 2, 2), v((3 * N + 13) / 2, 2), v(-(3 * N + 9) / 2, 2),
                         v((3 * N + 7) / 2, 2), v(-(3 * N + 11) / 2, 2), v((3 * N + 9) / 2, 2),
                         v(-(N + 1) / 2, 2)}));
        s.push_back(seq((N - 25) / 6,
                        {v((3 * N + 11) / 2 + 3 * I, 2), v(-((3 * N + 17) / 2 + 3 * I), 2),
                         v((3 * N + 15) / 2 + 3 * I, 2), v(-((3 * N + 15) / 2 + 3 * I), 2),
                         v((3 * N + 19) / 2 + 3 * I, 2), v(-((3 * N + 7) / 2 + 3 * I), 2)}));
        s.push_back(fix({v(2 * N - 4, 2), v(-(2 * N - 2), 2), v(2 * N - 2, 2), v(-(2 * N - 3), 2),
                         v(-(N + 1), 2), v(-(N + 3), 2), v(-2 * N, 2), v(-(2 * N - 6), 2),
                         v(2 * N - 1, 2), v(-1, 2), v(2 * N + 1, 2), v(-(2 * N - 1), 2)}));
        break;
    case CaseTag3::C2_2:
        s.push_back(seq((N - 15) / 6, c8_case2_t2_block()));
        s.push_back(fix({v(-(3 * N + 1) / 2, 1), v((3 * N + 5) / 2, 1), v(-(3 * N + 3) / 2, 1),
                         v((3 * N + 7) / 2, 1), v(-(3 * N - 3) / 2, 1)}));
        s.push_back(seq((N - 9) / 6,
                        {v((3 * N - 3) / 2 - 3 * I, 1), v(-((3 * N - 5) / 2 - 3 * I), 1),
                         v((3 * N + 1) / 2 - 3 * I, 1), v(-((3 * N - 1) / 2 - 3 * I), 1),
                         v((3 * N - 1) / 2 - 3 * I, 1), v(-((3 * N - 9) / 2 - 3 * I), 1)}));
        s.push_back(fix({v(N + 1, 1), v(N + 1, 3)}));
        s.push_back(seq((N - 9) / 6,
                        {v(N + 2 + 3 * I, 2), v(-(N + 5 + 3 * I), 2), v(N + 4 + 3 * I, 2),
                         v(-(N + 4 + 3 * I), 2), v(N + 6 + 3 * I, 2), v(-(N + 6 + 3 * I), 2)}));
        s.push_back(fix({v((3 * N + 1) / 2, 2), v(-(N + 1) / 2, 2), v((3 * N + 11) / 2, 2),
                         v((3 * N + 5) / 2, 2)}));
        s.push_back(seq((N - 21) / 6,
                        {v(-((3 * N + 7) / 2 + 3 * I), 2), v((3 * N + 17) / 2 + 3 * I, 2),
                         v(-((3 * N + 5) / 2 + 3 * I), 2), v((3 * N + 9) / 2 + 3 * I, 2),
                         v(-((3 * N + 9) / 2 + 3 * I), 2), v((3 * N + 7) / 2 + 3 * I, 2)}));
        s.push_back(fix({v(-(2 * N - 4), 2), v(2 * N - 4, 2), v(-(2 * N - 3), 2), v(2 * N - 3, 2),
                         v(-(2 * N - 2), 2), v(2 * N - 1, 2), v(-1, 2), v(-(2 * N - 1), 2),
                         v(-(N + 1), 2), v(-(N + 3), 2), v(2 * N + 1, 2), v(-(2 * N - 5), 2),
                         v(-2 * N, 2)}));
        break;
    case CaseTag3::C2_3:
        s.push_back(seq((N - 17) / 6, c8_case2_t2_block()));
        s.push_back(fix({v((3 * N + 7) / 2, 1), v(-(3 * N + 5) / 2, 1), v(-(3 * N + 1) / 2, 1),
                         v((3 * N + 9) / 2, 1), v(-(3 * N - 1) / 2, 1), v((3 * N + 1) / 2, 1),
                         v(-(3 * N + 3) / 2, 1), v((3 * N + 3) / 2, 1), v(-(3 * N - 5) / 2, 1)}));
        s.push_back(seq((N - 11) / 6,
                        {v((3 * N - 5) / 2 - 3 * I, 1), v(-((3 * N - 7) / 2 - 3 * I), 1),
                         v((3 * N - 1) / 2 - 3 * I, 1), v(-((3 * N - 3) / 2 - 3 * I), 1),
                         v((3 * N - 3) / 2 - 3 * I, 1), v(-((3 * N - 11) / 2 - 3 * I), 1)}));
        s.push_back(fix({v(N + 1, 1), v(N + 1, 3)}));
        s.push_back(seq((N - 11) / 6,
                        {v(N + 2 + 3 * I, 2), v(-(N + 5 + 3 * I), 2), v(N + 7 + 3 * I, 2),
                         v(-(N + 4 + 3 * I), 2), v(N + 6 + 3 * I, 2), v(-(N + 3 + 3 * I), 2)}));
        s.push_back(fix({v((3 * N - 1) / 2, 2), v((3 * N + 5) / 2, 2), v(-(N + 1) / 2, 2),
                         v(-(3 * N + 1) / 2, 2), v((3 * N + 7) / 2, 2), v(-(3 * N + 5) / 2, 2),
                         v((3 * N + 11) / 2, 2), v(-(3 * N + 3) / 2, 2)}));
        s.push_back(seq((N - 23) / 6,
                        {v(-((3 * N + 11) / 2 + 3 * I), 2), v((3 * N + 17) / 2 + 3 * I, 2),
                         v(-((3 * N + 7) / 2 + 3 * I), 2), v((3 * N + 13) / 2 + 3 * I, 2),
                         v(-((3 * N + 9) / 2 + 3 * I), 2), v((3 * N + 9) / 2 + 3 * I, 2)}));
        s.push_back(fix({v(-(2 * N - 3), 2), v(2 * N - 2, 2), v(-(2 * N - 5), 2), v(2 * N - 1, 2),
                         v(-(2 * N - 1), 2), v(-1, 2), v(2 * N + 1, 2), v(-(2 * N - 4), 2),
                         v(2 * N - 4, 2), v(-2 * N, 2), v(-(N + 2), 2), v(N + 4, 2),
                         v(-(2 * N - 2), 2)}));
        break;
    default:
        throw ConstructionError("c8_case2_spec", "not a k = 7 (mod 8) general subcase");
    }
    return spec;
}

// ----- tabulated small orders -----

KCycle tab_c5_11(int k) {
    return detail::tabulated_cycle("mod3 k=11 C5", false,
                                   {{0, 1}, {0, 3}, {1, 1}, {2, 3}, {4, 1}, {1, 3}, {5, 1},
                                    {-4, 3}, {2, 1}, {5, 3}, {-1, 1}},
                                   k);
}
KCycle tab_c6_11(int k) {
    return detail::tabulated_cycle("mod3 k=11 C6", false,
                                   {{0, 0}, {3, 3}, {1, 0}, {-2, 3}, {3, 0}, {4, 3}, {4, 0},
                                    {-3, 3}, {-1, 0}, {-5, 3}, {-4, 0}},
                                   k);
}

KCycle tabulated_c7(int k) {
    using detail::tabulated_cycle;
    switch (k) {
    case 11:
        return tabulated_cycle("mod3 k=11 C7", false,
                               {{2, 2}, {-3, 1}, {1, 2}, {-5, 0}, {4, 2}, {-3, 0}, {5, 2},
                                {2, 0}, {3, 2}, {-2, 0}, {-3, 2}},
                               k);
    case 15:
        return tabulated_cycle("mod3 k=15 C7", false,
                               {{0, 2}, {-7, 1}, {-1, 2}, {0, 0}, {1, 2}, {3, 0}, {7, 2},
                                {1, 0}, {-2, 2}, {-4, 0}, {3, 2}, {-2, 0}, {6, 2}, {-3, 0},
                                {-7, 2}},
                               k);
    case 19:
        return tabulated_cycle("mod3 k=19 C7", false,
                               {{0, 2},  {-9, 1}, {-7, 2}, {0, 0},  {1, 2},  {2, 0}, {4, 2},
                                {1, 0},  {7, 2},  {-4, 0}, {-8, 2}, {3, 0},  {-2, 2}, {4, 0},
                                {-6, 2}, {-3, 0}, {2, 2},  {-5, 0}, {5, 2}},
                               k);
    case 23:
        return tabulated_cycle("mod3 k=23 C7", false,
                               {{1, 2},  {-9, 1}, {2, 2},  {-2, 0}, {4, 2},  {-3, 0}, {5, 2},
                                {-4, 0}, {6, 2},  {-5, 0}, {8, 2},  {5, 0},  {-4, 2}, {4, 0},
                                {3, 2},  {1, 0},  {-1, 2}, {3, 0},  {-3, 2}, {0, 0},  {-5, 2},
                                {-6, 0}, {10, 2}},
                               k);
    case 27:
        return tabulated_cycle("mod3 k=27 C7", false,
                               {{0, 2},  {-13, 1}, {-11, 2}, {0, 0},  {1, 2},  {2, 0},  {4, 2},
                                {1, 0},  {5, 2},   {-7, 0},  {2, 2},  {4, 0},  {9, 2},  {-6, 0},
                                {7, 2},  {-4, 0},  {3, 2},   {-5, 0}, {13, 2}, {3, 0},  {-5, 2},
                                {-2, 0}, {-8, 2},  {-3, 0},  {-7, 2}, {6, 0},  {-4, 2}},
                               k);
    case 35:
        return tabulated_cycle(
            "mod3 k=35 C7", false,
            {{1, 2},  {-15, 1}, {2, 2},  {-2, 0}, {3, 2},  {-3, 0}, {4, 2},  {-5, 0}, {5, 2},
             {-6, 0}, {6, 2},   {-7, 0}, {7, 2},  {-8, 0}, {8, 2},  {-9, 0}, {11, 2}, {8, 0},
             {9, 2},  {7, 0},   {-9, 2}, {5, 0},  {-8, 2}, {4, 0},  {-7, 2}, {3, 0},  {-6, 2},
             {-4, 0}, {-5, 2},  {0, 0},  {-4, 2}, {2, 0},  {-1, 2}, {6, 0},  {-2, 2}},
            k);
    default:
        throw ConstructionError("tabulated_c7 (mod3)", "no table for k=" + std::to_string(k));
    }
}

KCycle tabulated_c8(int k) {
    using detail::tabulated_cycle;
    switch (k) {
    case 11:
        return tabulated_cycle("mod3 k=11 C8", true,
                               {{5, 0}, {-2, 2}, {-4, 1}, {-2, 1}, {3, 1}, {-5, 1}, {-1, 3},
                                {0, 2}, {-4, 2}, {-1, 2}},
                               k);
    case 15:
        return tabulated_cycle("mod3 k=15 C8", true,
                               {{2, 0}, {-3, 2}, {-5, 1}, {6, 1}, {7, 1}, {-6, 1}, {-3, 1},
                                {4, 1}, {4, 3}, {5, 2}, {2, 2}, {-4, 2}, {-6, 2}, {4, 2}},
                               k);
    case 19:
        return tabulated_cycle("mod3 k=19 C8", true,
                               {{-2, 0}, {-4, 2}, {7, 1}, {-8, 1}, {9, 1},  {-7, 1}, {-6, 1},
                                {8, 1},  {-4, 1}, {5, 1}, {5, 3},  {6, 2},  {3, 2},  {9, 2},
                                {-3, 2}, {8, 2},  {-1, 2}, {-5, 2}},
                               k);
    case 23:
        return tabulated_cycle("mod3 k=23 C8", true,
                               {{2, 0},   {-9, 2}, {-11, 1}, {8, 1},  {-7, 1},  {11, 1},
                                {10, 1},  {-10, 1}, {-8, 1}, {9, 1},  {-5, 1},  {6, 1},
                                {6, 3},   {7, 2},  {0, 2},   {-11, 2}, {-8, 2}, {9, 2},
                                {-10, 2}, {-2, 2}, {11, 2},  {-7, 2}},
                               k);
    case 27:
        return tabulated_cycle("mod3 k=27 C8", true,
                               {{5, 0},   {-2, 2},  {13, 1},  {11, 1}, {-12, 1}, {-11, 1},
                                {-8, 1},  {9, 1},   {-9, 1},  {12, 1}, {-10, 1}, {10, 1},
                                {-6, 1},  {7, 1},   {7, 3},   {8, 2},  {11, 2},  {-6, 2},
                                {6, 2},   {12, 2},  {-10, 2}, {10, 2}, {-3, 2},  {-12, 2},
                                {-1, 2},  {-9, 2}},
                               k);
    case 35:
        return tabulated_cycle(
            "mod3 k=35 C8", true,
            {{1, 0},   {-16, 2}, {17, 1},  {-16, 1}, {16, 1},  {-12, 1}, {-17, 1}, {-13, 1},
             {13, 1},  {-14, 1}, {15, 1},  {14, 1},  {-10, 1}, {11, 1},  {-11, 1}, {12, 1},
             {-8, 1},  {9, 1},   {9, 3},   {10, 2},  {-12, 2}, {12, 2},  {-11, 2}, {14, 2},
             {-13, 2}, {16, 2},  {-10, 2}, {-15, 2}, {13, 2},  {-3, 2},  {15, 2},  {0, 2},
             {-14, 2}, {17, 2}},
            k);
    case 31:
        return tabulated_cycle(
            "mod3 k=31 C8", true,
            {{0, 0},   {-15, 2}, {14, 1},  {12, 1},  {-14, 1}, {-15, 1}, {-12, 1}, {15, 1},
             {-10, 1}, {13, 1},  {-11, 1}, {10, 1},  {-9, 1},  {11, 1},  {-7, 1},  {8, 1},
             {8, 3},   {9, 2},   {11, 2},  {-11, 2}, {15, 2},  {-1, 2},  {-13, 2}, {-10, 2},
             {13, 2},  {-4, 2},  {-14, 2}, {-8, 2},  {12, 2},  {-12, 2}},
            k);
    case 55:
        return tabulated_cycle(
            "mod3 k=55 C8", true,
            {{0, 0},   {-27, 2}, {26, 1},  {-26, 1}, {23, 1},  {-27, 1}, {27, 1},  {-24, 1},
             {22, 1},  {-23, 1}, {25, 1},  {-22, 1}, {-20, 1}, {24, 1},  {-19, 1}, {19, 1},
             {-18, 1}, {21, 1},  {-21, 1}, {20, 1},  {-16, 1}, {16, 1},  {-15, 1}, {18, 1},
             {-17, 1}, {17, 1},  {-13, 1}, {14, 1},  {14, 3},  {15, 2},  {-18, 2}, {17, 2},
             {-17, 2}, {19, 2},  {-19, 2}, {18, 2},  {-21, 2}, {20, 2},  {-20, 2}, {22, 2},
             {-22, 2}, {21, 2},  {-25, 2}, {27, 2},  {-1, 2},  {25, 2},  {-7, 2},  {24, 2},
             {-26, 2}, {23, 2},  {-24, 2}, {-14, 2}, {-16, 2}, {-23, 2}},
            k);
    case 39:
        return tabulated_cycle(
            "mod3 k=39 C8", true,
            {{0, 0},   {-19, 2}, {18, 1},  {-18, 1}, {15, 1},  {-19, 1}, {19, 1},  {-16, 1},
             {-14, 1}, {16, 1},  {-15, 1}, {17, 1},  {-12, 1}, {12, 1},  {-11, 1}, {14, 1},
             {-13, 1}, {13, 1},  {-9, 1},  {10, 1},  {10, 3},  {11, 2},  {-14, 2}, {13, 2},
             {-13, 2}, {15, 2},  {-15, 2}, {14, 2},  {-5, 2},  {19, 2},  {16, 2},  {-16, 2},
             {17, 2},  {-1, 2},  {-17, 2}, {-12, 2}, {-10, 2}, {-18, 2}},
            k);
    case 47:
        return tabulated_cycle(
            "mod3 k=47 C8", true,
            {{0, 0},   {-23, 2}, {22, 1},  {-22, 1}, {19, 1},  {-23, 1}, {23, 1},  {-20, 1},
             {20, 1},  {-19, 1}, {-17, 1}, {21, 1},  {-16, 1}, {17, 1},  {-18, 1}, {18, 1},
             {-14, 1}, {14, 1},  {-13, 1}, {16, 1},  {-15, 1}, {15, 1},  {-11, 1}, {12, 1},
             {12, 3},  {13, 2},  {-16, 2}, {18, 2},  {-15, 2}, {17, 2},  {-14, 2}, {16, 2},
             {19, 2},  {-6, 2},  {21, 2},  {-21, 2}, {15, 2},  {-20, 2}, {-1, 2},  {23, 2},
             {-17, 2}, {20, 2},  {-19, 2}, {-13, 2}, {-22, 2}, {-18, 2}},
            k);
    default:
        throw ConstructionError("tabulated_c8 (mod3)", "no table for k=" + std::to_string(k));
    }
}

bool has_tabulated_c7(int k) {
    return k == 11 || k == 15 || k == 19 || k == 23 || k == 27 || k == 35;
}
bool has_tabulated_c8(int k) {
    return k == 11 || k == 15 || k == 19 || k == 23 || k == 27 || k == 31 || k == 35 ||
           k == 39 || k == 47 || k == 55;
}

}  // namespace

const char* to_string(CaseTag3 tag) {
    switch (tag) {
    case CaseTag3::Hard11: return "mod3 k=11";
    case CaseTag3::Hard15: return "mod3 k=15";
    case CaseTag3::Hard19: return "mod3 k=19";
    case CaseTag3::Hard23: return "mod3 k=23";
    case CaseTag3::Hard27: return "mod3 k=27";
    case CaseTag3::Hard31: return "mod3 k=31";
    case CaseTag3::Hard35: return "mod3 k=35";
    case CaseTag3::Hard39: return "mod3 k=39";
    case CaseTag3::Hard47: return "mod3 k=47";
    case CaseTag3::Hard55: return "mod3 k=55";
    case CaseTag3::C1_1: return "mod3 case 1.1";
    case CaseTag3::C1_2: return "mod3 case 1.2";
    case CaseTag3::C1_3: return "mod3 case 1.3";
    case CaseTag3::C2_1: return "mod3 case 2.1";
    case CaseTag3::C2_2: return "mod3 case 2.2";
    case CaseTag3::C2_3: return "mod3 case 2.3";
    }
    return "?";
}

CaseTag3 case_tag_mod3(int k) {
    if (k % 2 == 0 || k % 4 != 3 || k < 11)
        throw std::invalid_argument("case_tag_mod3: need k = 3 (mod 4), k >= 11");
    switch (k) {
    case 11: return CaseTag3::Hard11;
    case 15: return CaseTag3::Hard15;
    case 19: return CaseTag3::Hard19;
    case 23: return CaseTag3::Hard23;
    case 27: return CaseTag3::Hard27;
    case 31: return CaseTag3::Hard31;
    case 35: return CaseTag3::Hard35;
    case 39: return CaseTag3::Hard39;
    case 47: return CaseTag3::Hard47;
    case 55: return CaseTag3::Hard55;
    default: break;
    }
    switch (k % 24) {
    case 3:  return CaseTag3::C1_1;  // first general order 51
    case 11: return CaseTag3::C1_2;  // first general order 59
    case 19: return CaseTag3::C1_3;  // first general order 43
    case 7:  return CaseTag3::C2_1;  // first general order 79
    case 15: return CaseTag3::C2_2;  // first general order 63
    case 23: return CaseTag3::C2_3;  // first general order 71
    default:
        throw std::invalid_argument("case_tag_mod3: unreachable residue class");
    }
}

FamilyParams parameters_mod3(int k) {
    const CaseTag3 tag = case_tag_mod3(k);
    FamilyParams p;
    p.missing1 = Vertex::point(0, 3, k);
    p.d3 = (k - 1) / 2;
    switch (tag) {
    case CaseTag3::Hard11:
    case CaseTag3::Hard19:
    case CaseTag3::Hard27:
    case CaseTag3::Hard35:
    case CaseTag3::C1_1:
    case CaseTag3::C1_2:
    case CaseTag3::C1_3:
        p.missing2 = Vertex::point((k + 1) / 2, 2, k);
        p.d2 = 2;
        break;
    case CaseTag3::Hard15:
    case CaseTag3::Hard31:
    case CaseTag3::Hard39:
    case CaseTag3::Hard55:
    case CaseTag3::C2_1:
    case CaseTag3::C2_2:
        p.missing2 = Vertex::point((3 * k - 5) / 4, 2, k);
        p.d2 = 4;
        break;
    case CaseTag3::Hard23:
    case CaseTag3::Hard47:
    case CaseTag3::C2_3:
        p.missing2 = Vertex::point((3 * k - 1) / 4, 2, k);
        p.d2 = 2;
        break;
    }
    return p;
}

StarterPair build_factors_mod3(int k) {
    const FamilyParams params = parameters_mod3(k);
    const CaseTag3 tag = case_tag_mod3(k);
    const int n = (k - 3) / 4;
    const std::string where = to_string(tag);
    using detail::checked_cycle;

    KCycle c1 = checked_cycle(where + " C1", c1_spec(), k, n);
    KCycle c2 = checked_cycle(where + " C2", c2_spec(), k, n);
    KCycle c3 = checked_cycle(where + " C3", c3_spec(), k, n);
    KCycle c4 = checked_cycle(where + " C4", c4_spec(), k, n);

    KCycle c5 = k == 11 ? tab_c5_11(k) : checked_cycle(where + " C5", c5_spec(), k, n);
    KCycle c6 = k == 11 ? tab_c6_11(k) : checked_cycle(where + " C6", c6_spec(), k, n);

    KCycle c7;
    if (has_tabulated_c7(k))
        c7 = tabulated_c7(k);
    else if (k % 8 == 3)
        c7 = checked_cycle(where + " C7", c7_case1_spec(tag), k, n);
    else
        c7 = checked_cycle(where + " C7", c7_case2_spec(tag), k, n);

    KCycle c8;
    if (has_tabulated_c8(k))
        c8 = tabulated_c8(k);
    else if (k % 8 == 3)
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
