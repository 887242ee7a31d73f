#pragma once

// Exact finite-dimensional Z/2-graded algebras over Q, Q(i) or Q(zeta_N):
// Clifford and graded matrix constructors, graded tensor product, opposite,
// graded center and the central-simplicity test via A (x) A^op -> End(A).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "magb/cyclotomic.hpp"

namespace magb {

struct GradedAlgebra {
    int conductor = 1;  // 1 = Q, 4 = Q(i), general N = Q(zeta_N)
    int dim = 0;
    std::vector<std::uint8_t> degrees;
    // prod[i * dim + j] = expansion of b_i * b_j as (basis index, coefficient)
    std::vector<std::vector<std::pair<int, Cyclotomic>>> prod;
    std::vector<Cyclotomic> unit;
    std::vector<std::string> names;

    using Vec = std::vector<Cyclotomic>;

    const std::vector<std::pair<int, Cyclotomic>>& table(int i, int j) const {
        return prod[(std::size_t)i * dim + j];
    }

    Vec zero_vec() const { return Vec(dim, Cyclotomic(Rat(0), conductor)); }
    Vec basis_vec(int i) const;
    Vec mul(const Vec& a, const Vec& b) const;
    Vec add(const Vec& a, const Vec& b) const;
    Vec scale(const Cyclotomic& s, const Vec& a) const;
    Vec conj_vec(const Vec& a) const;  // entrywise complex conjugation
    bool vec_is_zero(const Vec& a) const;
    bool vec_eq(const Vec& a, const Vec& b) const;

    // degree when homogeneous (0/1), nullopt for mixed nonzero, 0 for zero
    std::optional<int> degree_of(const Vec& a) const;
    std::optional<Vec> inverse(const Vec& a) const;
    std::optional<Cyclotomic> scalar_of(const Vec& a) const;  // a = s * unit

    bool structure_constants_real() const;  // stable under conjugation
    void validate() const;  // associativity, unit, grading consistency
};

GradedAlgebra ground_field(int conductor);
GradedAlgebra clifford_real(int p, int q);      // over Q; p+q <= 12
// Clifford algebra with the given generator squares (+1/-1) in order
GradedAlgebra clifford_with_squares(const std::vector<int>& squares);
GradedAlgebra clifford_complex(int n);          // over Q(i)
GradedAlgebra matrix_algebra(int p, int q, int conductor);  // M_{p|q}
GradedAlgebra graded_tensor(const GradedAlgebra& a, const GradedAlgebra& b);
GradedAlgebra opposite(const GradedAlgebra& a);
GradedAlgebra complexify(const GradedAlgebra& a);  // promote scalars to Q(i)

// bases of centers as coordinate vectors
std::vector<GradedAlgebra::Vec> graded_center(const GradedAlgebra& a);
std::vector<GradedAlgebra::Vec> ungraded_center(const GradedAlgebra& a);

bool is_central_simple(const GradedAlgebra& a);

// rank of the canonical map A (x) A^op -> End(A); equals dim^2 iff bijective
long canonical_map_rank(const GradedAlgebra& a);

}  // namespace magb
