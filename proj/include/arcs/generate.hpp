#pragma once

#include <string>

#include "arcs/starter.hpp"

namespace arcs {

// Orders this builder covers: odd k >= 11 (equivalently, k >= 13 when
// k = 1 (mod 4), k >= 11 when k = 3 (mod 4)).
bool supported_order(int k);
std::string supported_range_message();

// Starter pair for a supported k, dispatched on k mod 4.  Throws
// std::invalid_argument for unsupported k.
StarterPair starter_for(int k);

// Full pipeline: build the starter and develop it into the system.
ArcsSystem generate_system(int k);

}  // namespace arcs
