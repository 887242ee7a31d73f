#include "magb/mecsga.hpp"

namespace magb {

int MECSGA::psi_of(int g) const {
    auto d = alg.degree_of(X[g]);
    if (!d) throw invalid_action("implementing element is not homogeneous");
    return *d;
}

void MECSGA::validate() const {
    if ((int)X.size() != base.order()) throw invalid_action("need one implementing element per group element");
    bool any_antilinear = false;
    for (int g = 0; g < base.order(); ++g)
        if (base.antilinear(g)) any_antilinear = true;
    if (any_antilinear && !alg.structure_constants_real())
        throw invalid_action("antilinear action needs conjugation-stable structure constants");
    for (int g = 0; g < base.order(); ++g) {
        if (!alg.degree_of(X[g]).has_value())
            throw invalid_action("implementing element X(" + std::to_string(g) + ") is not homogeneous");
        if (!alg.inverse(X[g]).has_value())
            throw invalid_action("implementing element X(" + std::to_string(g) + ") is not invertible");
    }
    discrepancy();  // throws when the scalar law fails
}

ScalarCocycle MECSGA::discrepancy() const {
    int n = base.order();
    ScalarCocycle tau;
    tau.group_order = n;
    tau.angle.assign((std::size_t)n * n, Rat(0));
    Int ord = 1;
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h) {
            GradedAlgebra::Vec rhs = base.antilinear(g) ? alg.conj_vec(X[h]) : X[h];
            GradedAlgebra::Vec lhs = alg.mul(X[g], rhs);
            auto inv = alg.inverse(X[base.group.mul(g, h)]);
            if (!inv) throw invalid_action("implementing element is not invertible");
            GradedAlgebra::Vec d = alg.mul(lhs, *inv);
            auto s = alg.scalar_of(d);
            if (!s)
                throw invalid_action("action discrepancy at (" + std::to_string(g) + "," +
                                     std::to_string(h) + ") is not scalar");
            auto ang = s->angle();
            if (!ang) throw unsupported_scalar("discrepancy scalar is not a root of unity");
            tau.angle[(std::size_t)g * n + h] = *ang;
            ord = lcm_int(ord, ang->get_den());
        }
    tau.order = (int)ord.get_si();
    return tau;
}

MECSGA trivial_mecsga(const MagneticGroup& base) {
    MECSGA a;
    a.alg = ground_field(4);
    a.base = base;
    for (int g = 0; g < base.order(); ++g) a.X.push_back(a.alg.unit);
    return a;
}

}  // namespace magb
