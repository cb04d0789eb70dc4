#pragma once

// Worked examples as executable data: the SL(3) X_nil pair, the 2x2 quadric
// pair, an inaccessible boundary point, and the GKZ polytopes for small d.

#include "sspairs/json_io.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace sspairs::fixtures {

/// C^3 (x) Wedge^2 C^3 (x) C^3 for SL(3); E_ij (x) e_k is realized as
/// e_i (x) e_j^* (x) e_k with e_1^* = e2^e3, e_2^* = -e1^e3, e_3^* = e1^e2.
ModuleDescriptor xnil_module();
/// E_ij (x) e_k for 1-based i, j, k.
WeightedVector xnil_element(int i, int j, int k);
WeightedVector xnil_xi310();     // E13 (x) e1
WeightedVector xnil_xi220();     // E23 (x) e1 - E13 (x) e2
WeightedVector xnil_e21_xi310(); // E23 (x) e1 + E13 (x) e2
WeightedVector xnil_base();      // E23 (x) e1
RMatrix xnil_sigma();            // exp(E12)
/// (xi220, E21 . xi310)
Pair xnil_pair();

/// (1, e1 e2) over SL(2).
Pair quadric_pair();

/// Example names accepted by run_example.
std::vector<std::string> example_names();
json run_example(const std::string& name, std::size_t samples, std::uint64_t seed);

}  // namespace sspairs::fixtures
