#pragma once

// Normalized bar-complex cochains with twisted coefficients. Tuples never
// contain the identity; a cochain value on such a tuple is 0 by convention.

#include <cstdint>
#include <string>
#include <vector>

#include "magb/group.hpp"
#include "magb/intmat.hpp"

namespace magb {

enum class CoeffKind { Z, Zmod, QmodZ };

struct CoefficientModel {
    CoeffKind kind = CoeffKind::Z;
    int m = 0;           // modulus, Zmod only
    bool twisted = false;  // g acts by (-1)^{phi(g)}

    std::string name() const;
    static CoefficientModel parse(const std::string& s);
    bool operator==(const CoefficientModel& o) const {
        return kind == o.kind && m == o.m && twisted == o.twisted;
    }
};

inline CoefficientModel model_Z(bool twisted) { return {CoeffKind::Z, 0, twisted}; }
inline CoefficientModel model_Zmod(int m, bool twisted) { return {CoeffKind::Zmod, m, twisted}; }
inline CoefficientModel model_QmodZ() { return {CoeffKind::QmodZ, 0, true}; }

// tuple indexing over the non-identity elements
struct TupleSpace {
    int order = 0;
    std::vector<int> elems;  // non-identity elements, ascending
    std::vector<int> pos;    // element -> position, identity -> -1

    explicit TupleSpace(const FiniteGroup& g);
    long count(int degree) const;
    void decode(long idx, int degree, int* out) const;      // out[0..degree)
    long encode(const int* tuple, int degree) const;        // -1 if identity present
};

struct Cochain {
    int degree = 0;
    CoefficientModel model;
    int group_order = 0;
    std::vector<Rat> values;  // dense over tuple ranks

    static Cochain zero(const MagneticGroup& m, CoefficientModel model, int degree);
    bool is_zero() const;
};

// canonical representative per model: Z -> as-is (must be integer),
// Zmod -> [0, m), QmodZ -> [0, 1)
Rat normalize_value(const CoefficientModel& model, const Rat& v);
void normalize_cochain(Cochain& c);

Cochain coboundary(const MagneticGroup& m, const Cochain& f);

// matrix of delta: C^degree -> C^{degree+1} over Z (twist folded into signs)
std::vector<Triplet> delta_matrix(const MagneticGroup& m, bool twisted, int degree);

// true iff delta(c) = 0 in the model; on failure *witness = violating tuple
bool is_cocycle(const MagneticGroup& m, const Cochain& c, std::vector<int>* witness = nullptr);

// all homomorphisms G -> Z/2 as value tables over the whole group, sorted
std::vector<std::vector<std::uint8_t>> hom_to_z2(const MagneticGroup& m);
bool is_hom_to_z2(const FiniteGroup& g, const std::vector<std::uint8_t>& psi);

// (psi0 cup psi1)(g,h) = psi0(g) psi1(h), a Zmod(2)-trivial 2-cocycle
Cochain cup_z2(const MagneticGroup& m, const std::vector<std::uint8_t>& psi0,
               const std::vector<std::uint8_t>& psi1);

// coefficient map Z/2 -> C^*_phi (values c/2 in Q/Z)
Cochain iota(const MagneticGroup& m, const Cochain& z2_cocycle);

}  // namespace magb
