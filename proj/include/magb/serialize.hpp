#pragma once

// JSON forms of the public objects: groups, cochains, cohomology payloads,
// Brauer elements/structures, graded algebras, representations, Hamiltonians.

#include <json.hpp>

#include "magb/brauer.hpp"
#include "magb/cohomology.hpp"
#include "magb/magrep.hpp"
#include "magb/tenfold.hpp"

namespace magb {

using json = nlohmann::json;

json group_to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const json& j);

json cochain_to_json(const MagneticGroup& m, const Cochain& c);
Cochain cochain_from_json(const MagneticGroup& m, const json& j);

json brauer_element_to_json(const BrauerElement& e);
BrauerElement brauer_element_from_json(const BrauerContext& ctx, const json& j);

json brauer_structure_to_json(const BrauerGroupStructure& s);
json riehm_structure_to_json(const RiehmGroupStructure& s);

json cohomology_group_to_json(const CohomologyGroup& h);  // full cache payload
CohomologyGroup cohomology_group_from_json(const json& j);

GradedAlgebra graded_algebra_from_json(const json& j);
json graded_algebra_to_json(const GradedAlgebra& a);

// {"N":, "dim":, "matrices": {"g": [[entry]]}, "phi": [...], "psi": [...]?, "even_dim":?}
MagneticRep rep_from_json(const MagneticGroup& base, const json& j);

// matrix of complex pairs [re, im] or exact strings "a/b+c/d i"
ComplexMatrix complex_matrix_from_json(const json& j);
CycMat exact_matrix_from_json(const json& j);  // entries over Q(i)
bool json_matrix_is_exact(const json& j);

std::string invariant_factor_string(const std::vector<Int>& d);  // "Z/2 x Z/4"

}  // namespace magb
