#pragma once

// H^n(G, M) on the normalized bar complex for M in {Z_phi, Z, Z/m_phi, Z/m},
// plus the units presentation H^2(G, C^*_phi) realized through the connecting
// isomorphism with H^3(G, Z_phi) (rational twisted cohomology vanishes in
// positive degrees, so the Bockstein lift always solves).

#include <memory>
#include <optional>

#include "magb/cochain.hpp"

namespace magb {

struct Budget {
    long long max_cells = 100'000'000;  // dense cells allowed per elimination
};

class CohomologyGroup {
  public:
    MagneticGroup base;
    CoefficientModel model;  // presentation model
    int degree = 0;          // presentation degree
    std::vector<Int> invariant_factors;   // d_1 | d_2 | ..., each > 1
    std::vector<Cochain> generators;      // presentation-model cocycles
    std::vector<Cochain> order_witnesses; // delta(w_i) = d_i * gen_i
    bool bockstein = false;  // presentation is H^2(Q/Z_phi) over integer H^3 data

    // coordinates of a cocycle in the invariant-factor presentation, reduced
    std::vector<Int> coords_of(const Cochain& c) const;
    // sum of coords * generators, values normalized
    Cochain combine(const std::vector<Int>& coords) const;

    Int group_size() const;  // product of invariant factors

    CohomologyGroup() = default;
    CohomologyGroup(CohomologyGroup&&) = default;
    CohomologyGroup& operator=(CohomologyGroup&&) = default;

  private:
    // integer-side data: kernel lattice basis, SNF transform, relation solver
    IntMatrix K_;
    IntMatrix U_;
    std::vector<Int> diag_;
    std::vector<int> live_;
    std::unique_ptr<ColEchelon> ksolver_;
    std::unique_ptr<ColEchelon> relsolver_;
    long rel_prim_cols_ = 0;  // columns of delta_{n-1} before the m*I block

    std::vector<Int> integer_coords(const std::vector<Int>& z) const;
    std::vector<Int> cocycle_vector(const Cochain& c) const;  // integer side vector

    friend CohomologyGroup cohomology(const MagneticGroup&, CoefficientModel, int, const Budget&);
    friend CohomologyGroup h2_units(const MagneticGroup&, const Budget&);
    friend std::optional<Cochain> trivialize(const CohomologyGroup&, const Cochain&,
                                             std::vector<Int>*);
    friend struct CohomologySerde;
};

CohomologyGroup cohomology(const MagneticGroup& m, CoefficientModel model, int degree,
                           const Budget& budget = {});

// H^2(G, C^*_phi) presented by Q/Z-valued 2-cocycles with integer coordinates
CohomologyGroup h2_units(const MagneticGroup& m, const Budget& budget = {});

struct CocycleClass {
    std::vector<Int> coords;
    bool trivial() const {
        for (const auto& c : coords)
            if (!is_zero(c)) return false;
        return true;
    }
    bool operator==(const CocycleClass& o) const { return coords == o.coords; }
};

// locate a Q/Z_phi 2-cocycle in the units presentation (Bockstein bridge)
CocycleClass class_of(const CohomologyGroup& units, const Cochain& c);

// 1-cochain alpha with delta(alpha) = c when the class vanishes, else nullopt;
// on nullopt *coords_out (if given) receives the nonzero coordinates
std::optional<Cochain> trivialize(const CohomologyGroup& units, const Cochain& c,
                                  std::vector<Int>* coords_out = nullptr);

}  // namespace magb
