#pragma once

// Magnetic equivariant central simple graded algebras in inner form: a graded
// algebra together with homogeneous implementing elements X(g), the action
// being tau(g) = Ad_{X(g) K^{phi(g)}}.

#include "magb/gradedalg.hpp"
#include "magb/magrep.hpp"

namespace magb {

struct MECSGA {
    GradedAlgebra alg;
    MagneticGroup base;
    std::vector<GradedAlgebra::Vec> X;  // one implementing element per group element

    // homogeneity, invertibility, conjugation-stable structure constants when
    // antilinear elements exist, and the scalar-discrepancy law
    void validate() const;

    int psi_of(int g) const;  // degree of X(g)

    // tau with X(g) conj^{phi(g)}(X(h)) = tau(g,h) X(gh)
    ScalarCocycle discrepancy() const;
};

MECSGA trivial_mecsga(const MagneticGroup& base);  // C with g acting by K^{phi(g)}

}  // namespace magb
