#pragma once

// Magnetic (phi-twisted) representations: verification, scalar 2-cocycle
// extraction, finite extension groups, tensor products, intertwiners and
// commutant computation with Wigner/Dyson classification.

#include <optional>

#include "magb/cochain.hpp"
#include "magb/cycmat.hpp"
#include "magb/group.hpp"
#include "magb/tenfold.hpp"

namespace magb {

struct MagneticRep {
    MagneticGroup base;
    int conductor = 4;
    int dim = 0;
    std::vector<CycMat> mats;  // indexed by group element
    std::optional<std::vector<std::uint8_t>> psi;  // grading homomorphism
    int even_dim = 0;                              // block splitting when psi is set

    // invertibility, Lambda_e = I, and the psi block constraint
    void validate_shape() const;
};

struct TwistedHomReport {
    bool ok = true;
    int g = -1, h = -1;  // first violating pair when !ok
};

TwistedHomReport verify_twisted_hom(const MagneticRep& r);

struct ScalarCocycle {
    int order = 1;            // values lie in mu_order
    int group_order = 0;
    std::vector<Rat> angle;   // tau(g,h) = e^{2 pi i angle[g*n+h]}, in [0,1)

    const Rat& at(int g, int h) const { return angle[(std::size_t)g * group_order + h]; }
    bool identity_holds(const MagneticGroup& m) const;  // twisted 2-cocycle equation
    Cochain to_cochain(const MagneticGroup& m) const;   // QmodZ-twisted 2-cocycle
    static ScalarCocycle from_cochain(const MagneticGroup& m, const Cochain& c);
    static ScalarCocycle trivial(const MagneticGroup& m);
};

// discrepancy tau with Lambda_g conj^{phi(g)}(Lambda_h) = tau(g,h) Lambda_{gh}
ScalarCocycle extract_cocycle(const MagneticRep& r);

struct ExtensionGroup {
    FiniteGroup group;        // order m * |G|, element (j, g) at index j*|G| + g
    int m = 1;
    std::vector<int> mu_elements;  // the mu_m fiber over the identity
};

ExtensionGroup cocycle_to_extension(const ScalarCocycle& tau, const MagneticGroup& base);

MagneticRep tensor(const MagneticRep& a, const MagneticRep& b);

// intertwiner M with Lambda'_g conj^{phi(g)}(M) = M Lambda_g, invertible;
// deterministic search over integer combinations in [-box, box]
std::optional<CycMat> equival_reps(const MagneticRep& r1, const MagneticRep& r2, int box = 3,
                                   long budget = 20000);

struct CommutantReport {
    int real_dimension = 0;
    std::vector<CycMat> basis;
    char wigner_type = '?';  // 'R', 'C', 'H' for dimensions 1, 2, 4
    std::optional<TenfoldClass> dyson;  // graded classification when psi is set
};

CommutantReport commutant(const MagneticRep& r);

}  // namespace magb
