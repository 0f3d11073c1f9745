#include "arcs/generate.hpp"

#include "arcs/family_mod1.hpp"
#include "arcs/family_mod3.hpp"

namespace arcs {

bool supported_order(int k) {
    if (k % 2 == 0 || k < 11) return false;
    if (k % 4 == 1 && k < 13) return false;
    return true;
}

std::string supported_range_message() {
    return "supported orders: odd k >= 11 (k >= 13 when k = 1 mod 4)";
}

StarterPair starter_for(int k) {
    if (!supported_order(k))
        throw std::invalid_argument("unsupported k=" + std::to_string(k) + "; " +
                                    supported_range_message());
    return k % 4 == 1 ? build_factors_mod1(k) : build_factors_mod3(k);
}

ArcsSystem generate_system(int k) { return assemble(starter_for(k)); }

}  // namespace arcs
