#pragma once

#include "qtilt/module.hpp"

namespace qtilt {

// Quiver with relations for End(M_1 + ... + M_m)^op. Vertex k stands for M_k, an arrow
// i -> j for an irreducible map M_i -> M_j, and a path for the composite of its maps.
struct EndomorphismPresentation {
    AlgebraPtr alg;
    std::vector<Morphism> arrow_maps; // arrow_maps[a] is the irreducible map behind arrow a
    bool length_two = false;                        // relations generated in length two
};

// Throws std::invalid_argument on decomposable or isomorphic inputs and when some
// End(M_k)/rad is not the ground field.
EndomorphismPresentation endomorphism_presentation(const std::vector<Module>& mods);

} // namespace qtilt
