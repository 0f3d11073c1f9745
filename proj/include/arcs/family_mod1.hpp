#pragma once

#include <stdexcept>
#include <string>

#include "arcs/starter.hpp"

namespace arcs {

// Raised when a construction table produces a structurally invalid
// cycle; always a table bug, never a valid runtime outcome.
class ConstructionError : public std::logic_error {
public:
    ConstructionError(const std::string& where, const std::string& what)
        : std::logic_error(where + ": " + what) {}
};

// Dispatch classes for k = 1 (mod 4), k >= 13.  HardXX orders carry
// tabulated cycles; the CN_M tags select the general-formula subcase by
// k mod 24.
enum class CaseTag1 {
    Hard13, Hard17, Hard21, Hard25, Hard29, Hard33, Hard41,
    C1_1,  // k =  5 (mod 24), k >= 53
    C1_2,  // k = 13 (mod 24), k >= 37
    C1_3,  // k = 21 (mod 24), k >= 45
    C2_1,  // k =  1 (mod 24), k >= 49
    C2_2,  // k =  9 (mod 24), k >= 57
    C2_3,  // k = 17 (mod 24), k >= 65
};

const char* to_string(CaseTag1 tag);

// Total and unambiguous on {k odd, k = 1 (mod 4), k >= 13}; throws
// std::invalid_argument outside that set.
CaseTag1 case_tag_mod1(int k);

struct FamilyParams {
    Vertex missing1, missing2;
    int d2 = 0, d3 = 0;
};

// (0,3), (0,2), d2 = 2, d3 = (k-1)/2.
FamilyParams parameters_mod1(int k);

// Builds the full starter pair for k = 1 (mod 4), k >= 13 and asserts
// the starter conditions hold; a failure names the offending cycle.
StarterPair build_factors_mod1(int k);

}  // namespace arcs
