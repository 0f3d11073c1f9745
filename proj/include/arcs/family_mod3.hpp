#pragma once

#include "arcs/family_mod1.hpp"

namespace arcs {

// Dispatch classes for k = 3 (mod 4), k >= 11.  The HardXX orders carry
// tabulated cycles (k=11 all of C5..C8; 15/19/23/27/35 C7 and C8;
// 31/55/39/47 C8 only, C7 from the matching general formula).
enum class CaseTag3 {
    Hard11, Hard15, Hard19, Hard23, Hard27, Hard31, Hard35, Hard39, Hard47, Hard55,
    C1_1,  // k =  3 (mod 24), k >= 51
    C1_2,  // k = 11 (mod 24), k >= 59
    C1_3,  // k = 19 (mod 24), k >= 43
    C2_1,  // k =  7 (mod 24), k >= 79
    C2_2,  // k = 15 (mod 24), k >= 63
    C2_3,  // k = 23 (mod 24), k >= 71
};

const char* to_string(CaseTag3 tag);

// Total and unambiguous on {k odd, k = 3 (mod 4), k >= 11}; throws
// std::invalid_argument outside that set.
CaseTag3 case_tag_mod3(int k);

// (0,3) and d3 = (k-1)/2 always; the second missing vertex and d2 are
// case-dependent: ((k+1)/2, 2), d2=2 for the k = 3 (mod 8) families and
// k in {11,19,27,35}; ((3k-5)/4, 2), d2=4 for k=15 and the 7/15 (mod 24)
// families; ((3k-1)/4, 2), d2=2 for k=23 and the 23 (mod 24) family.
FamilyParams parameters_mod3(int k);

// Builds the full starter pair for k = 3 (mod 4), k >= 11 and asserts
// the starter conditions hold.
StarterPair build_factors_mod3(int k);

}  // namespace arcs
