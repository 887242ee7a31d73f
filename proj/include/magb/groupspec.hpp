#pragma once

// The group-spec mini-language shared by the CLI and tests:
//   cyclic:N | dihedral:N | quaternion:8 | product(S1,S2)
//   | semidirect(S1,S2,perm=[...]) | pullback(S,PHI,N) | table:@FILE
// phi-specs: trivial | mod2 | id | proj2 | values:[b0,...]

#include <string>

#include "magb/group.hpp"

namespace magb {

struct ParsedGroup {
    FiniteGroup group;
    enum class Shape { leaf, product, semidirect, pullback, table } shape = Shape::leaf;
    bool is_cyclic = false;
    int second_order = 0;  // |S2| for product/semidirect shapes
};

ParsedGroup parse_group_spec(const std::string& spec);

MagneticGroup apply_phi_spec(const ParsedGroup& g, const std::string& phispec);

MagneticGroup parse_magnetic_group(const std::string& groupspec, const std::string& phispec);

}  // namespace magb
