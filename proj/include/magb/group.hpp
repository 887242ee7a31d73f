#pragma once

// Finite groups as dense Cayley tables, magnetic structures phi, and the
// constructors used throughout: cyclic, dihedral, quaternion, products,
// semidirect products and the pullback extensions phi^*(Z/2n).

#include <cstdint>
#include <string>
#include <vector>

#include "magb/numeric.hpp"

namespace magb {

struct FiniteGroup {
    int order = 0;
    std::vector<int> table;  // table[g * order + h] = g . h
    int identity = 0;
    std::vector<int> inverses;
    std::vector<std::string> labels;

    int mul(int g, int h) const { return table[(std::size_t)g * order + h]; }
    int inv(int g) const { return inverses[g]; }

    // checks the full invariant suite (identity, inverses, associativity,
    // latin-square rows/columns); throws invalid_parameter on violation
    void validate() const;

    static FiniteGroup from_table(const std::vector<std::vector<int>>& rows);

    Int element_order(int g) const;
    std::vector<Int> order_census() const;  // order of every element
    bool is_abelian() const;
    std::string canonical_key() const;  // serialization used for cache keys
};

FiniteGroup cyclic(int n);
FiniteGroup dihedral(int n);     // order 2n, n >= 1
FiniteGroup quaternion8();
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
// action[b][x] = automorphism of `a` attached to the b-element, as a permutation
FiniteGroup semidirect(const FiniteGroup& a, const FiniteGroup& b,
                       const std::vector<std::vector<int>>& action);

enum class MagneticMode { magnetic, plain };

struct MagneticGroup {
    FiniteGroup group;
    std::vector<std::uint8_t> phi;  // one bit per element
    MagneticMode mode = MagneticMode::magnetic;

    MagneticGroup() = default;
    MagneticGroup(FiniteGroup g, std::vector<std::uint8_t> phi_bits, MagneticMode m);

    int order() const { return group.order; }
    bool antilinear(int g) const { return phi[g] != 0; }
    std::string canonical_key() const;
};

MagneticGroup plain_group(FiniteGroup g);

struct Subgroup {
    FiniteGroup parent;
    std::vector<int> members;    // sorted parent indices
    // members doubles as the embedding: position -> parent index
    FiniteGroup as_group() const;  // Cayley table on positions
};

// {(g, k) in G x Z/n : phi(g) = k mod 2}; n must be even
FiniteGroup pullback_z2n(const MagneticGroup& m, int n);

Subgroup core(const MagneticGroup& m);  // kernel of phi

// greedy generating set: repeatedly add the smallest element outside the
// generated subgroup
std::vector<int> generators(const FiniteGroup& g);
std::vector<int> subgroup_closure(const FiniteGroup& g, std::vector<int> seed);

}  // namespace magb
