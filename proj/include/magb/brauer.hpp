#pragma once

// The magnetic equivariant graded Brauer group in (lambda, psi, a) coordinates
// with the twisted product
//   (l0,p0,a0)(l1,p1,a1) =
//     ((-1)^{p0 u p1 + p0 u phi^{a0 a1} + p1 u phi^{a0 a1}} l0 l1,
//      p0 + p1 + phi^{a0 a1}, a0 + a1),
// plus the comparison groups, representative algebras and their decomposition.

#include <map>
#include <memory>

#include "magb/cohomology.hpp"
#include "magb/mecsga.hpp"

namespace magb {

struct BrauerElement {
    std::vector<Int> lam;            // coordinates in the H^2 presentation
    std::vector<std::uint8_t> psi;   // value table on G
    std::uint8_t a = 0;

    bool operator==(const BrauerElement& o) const {
        return lam == o.lam && psi == o.psi && a == o.a;
    }
    bool operator<(const BrauerElement& o) const {
        if (lam != o.lam) return lam < o.lam;
        if (psi != o.psi) return psi < o.psi;
        return a < o.a;
    }
};

struct NamedGenerator {
    std::string name;
    BrauerElement element;
    Int order;
};

struct BrauerGroupStructure {
    Int order = 1;
    std::vector<Int> invariant_factors;
    std::vector<NamedGenerator> generators;
};

class BrauerContext {
  public:
    explicit BrauerContext(MagneticGroup m, const Budget& budget = {});
    // reuse an already computed (e.g. cached) units presentation
    BrauerContext(MagneticGroup m, CohomologyGroup h2);

    const MagneticGroup& group() const { return m_; }
    const CohomologyGroup& h2() const { return h2_; }
    const std::vector<std::vector<std::uint8_t>>& homs() const { return homs_; }

    BrauerElement identity() const;
    BrauerElement make(std::vector<Int> lam, std::vector<std::uint8_t> psi, int a) const;
    BrauerElement mul(const BrauerElement& x, const BrauerElement& y) const;
    BrauerElement inv(const BrauerElement& x) const;
    Int order_of(const BrauerElement& x) const;
    std::vector<BrauerElement> elements() const;          // all |H2| * |Hom| * 2
    std::vector<BrauerElement> elements_prime() const;    // a = 0

    BrauerGroupStructure structure(int jobs = 1) const;         // GrBr
    BrauerGroupStructure structure_prime() const;               // GrBr'
    BrauerGroupStructure structure_doubleprime() const;         // GrBr'' = H^2

  private:
    std::vector<Int> sign_class(const std::vector<std::uint8_t>& p0,
                                const std::vector<std::uint8_t>& p1, bool with_phi) const;
    std::vector<Int> reduce_lam(std::vector<Int> lam) const;
    BrauerGroupStructure census(const std::vector<BrauerElement>& elems, int jobs) const;

    MagneticGroup m_;
    CohomologyGroup h2_;
    std::vector<std::vector<std::uint8_t>> homs_;
    std::map<std::pair<std::pair<int, int>, bool>, std::vector<Int>> sign_cache_;
    std::map<std::vector<std::uint8_t>, int> hom_index_;
};

// Riehm's equivariant graded Brauer group of a plain group over k = R or C
struct RiehmGroupStructure {
    char field = 'R';
    Int order = 1;
    std::vector<Int> invariant_factors;
};

RiehmGroupStructure riehm_grbr(const FiniteGroup& g, char field, const Budget& budget = {});

// restriction GrBr_{(G,phi)}(C) -> GrBr_{G0}(C); the result lives in the
// plain-core context supplied by the caller
BrauerElement restrict_to_core(const BrauerContext& ctx, const BrauerElement& x,
                               const BrauerContext& core_ctx);
// convenience: a plain context on ker(phi)
BrauerContext core_context(const MagneticGroup& m, const Budget& budget = {});

// [phi^* sigma] = 1 with sigma(a,b) = e^{pi i a b}
bool four_periodic(const MagneticGroup& m, const Budget& budget = {});

MECSGA representative_algebra(const BrauerContext& ctx, const BrauerElement& x);
BrauerElement decompose_algebra(const BrauerContext& ctx, const MECSGA& a);

}  // namespace magb
