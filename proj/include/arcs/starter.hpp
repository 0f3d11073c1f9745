#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "arcs/design_core.hpp"

namespace arcs {

// The starter configuration developed into a full system: two factors
// F1, F2 over (Z_k x Z_4) u {inf} together with the half-class steps
// d2, d3 (both coprime to k).  f1/f2 carry their own missing vertices.
struct StarterPair {
    int k = 0;
    Factor f1, f2;
    int d2 = 0, d3 = 0;
};

// Validates the structural invariants (gcd(d_q, k) = 1); factor-level
// invariants are enforced by make_factor.
StarterPair make_starter_pair(int k, Factor f1, Factor f2, int d2, int d3);

// Outcome of the five starter conditions.  Failures are data, not
// errors: each failing condition carries a deterministic description of
// the offending vertices or differences.
struct ConditionReport {
    int k = 0;
    std::array<bool, 5> ok{};          // conditions 1..5
    std::array<std::string, 5> detail{};
    DifferenceProfile profile;         // observed differences over the 8 starter cycles

    bool pass() const;
    static const char* condition_name(int idx);  // idx in [0,5)

    // Residues absent from the same-level difference multiset at `level`.
    // For a passing starter these are {0} at levels 0,1 and {0, d, k-d}
    // at levels 2,3.
    std::vector<int> absent_differences(int level) const;
};

// Evaluates the five conditions literally:
//   1. each factor covers everything except its declared missing vertex;
//   2. the neighbors of inf across F1 u F2 occupy all four levels;
//   3. same-level differences at levels 0,1 hit each nonzero residue
//      exactly once;
//   4. same-level differences at levels 2,3 hit each residue outside
//      {0, d_q, k-d_q} exactly once;
//   5. mixed-level differences hit every residue exactly once, for every
//      ordered level pair (r,s), r != s.
ConditionReport check_conditions(const StarterPair& in);

// The two step-d_q orbit cycles on levels 2 and 3.  Throws
// std::invalid_argument unless gcd(d_q, k) = 1.
CycleClass half_parallel_class(int k, int d2, int d3);

// A finished k-ARCS(4k+1): 2k almost parallel classes plus the
// distinguished half-parallel class.
struct ArcsSystem {
    int k = 0;
    int v = 0;  // 4k+1
    std::vector<CycleClass> almost_parallel_classes;
    CycleClass half_parallel_class;
};

// Raised when assembly is refused; names the failing condition.
class ConditionFailure : public std::runtime_error {
public:
    ConditionFailure(std::string condition, const std::string& detail);
    const std::string& condition() const { return condition_; }

private:
    std::string condition_;
};

// Re-checks the conditions, then develops F1 and F2 through all k
// translates and attaches the half-parallel class.  Class order is
// F1+(0..k-1,0) then F2+(0..k-1,0).
ArcsSystem assemble(const StarterPair& in);

}  // namespace arcs
