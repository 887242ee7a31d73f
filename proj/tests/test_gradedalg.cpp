#include <doctest.h>

#include "helpers.hpp"
#include "magb/gradedalg.hpp"
#include "magb/tenfold.hpp"

using namespace magb;

namespace {

// tensor of Cliffords equals the Clifford on the concatenated generator
// squares under the subset bijection (S, T) -> S | (T << (p+q)); reordering
// the generators then identifies that algebra with C^{p+r,q+s}
void check_clifford_tensor(int p, int q, int r, int s) {
    GradedAlgebra a = clifford_real(p, q), b = clifford_real(r, s);
    GradedAlgebra t = graded_tensor(a, b);
    std::vector<int> squares;
    for (int i = 0; i < p; ++i) squares.push_back(1);
    for (int i = 0; i < q; ++i) squares.push_back(-1);
    for (int i = 0; i < r; ++i) squares.push_back(1);
    for (int i = 0; i < s; ++i) squares.push_back(-1);
    GradedAlgebra full = clifford_with_squares(squares);
    REQUIRE(t.dim == full.dim);
    auto reindex = [&](int i, int j) { return i | (j << (p + q)); };
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < b.dim; ++j) {
            CHECK((int)t.degrees[i * b.dim + j] == (int)full.degrees[reindex(i, j)]);
            for (int k = 0; k < a.dim; ++k)
                for (int l = 0; l < b.dim; ++l) {
                    const auto& cell = t.table(i * b.dim + j, k * b.dim + l);
                    const auto& ref = full.table(reindex(i, j), reindex(k, l));
                    REQUIRE(cell.size() == 1);
                    REQUIRE(ref.size() == 1);
                    CHECK(reindex(cell[0].first / b.dim, cell[0].first % b.dim) == ref[0].first);
                    CHECK(cell[0].second == ref[0].second);
                }
        }
}

GradedAlgebra quaternions_even() {
    // 1, i, j, k in degree 0
    GradedAlgebra h;
    h.conductor = 1;
    h.dim = 4;
    h.degrees = {0, 0, 0, 0};
    h.names = {"1", "i", "j", "k"};
    h.prod.resize(16);
    auto set = [&](int a, int b, int c, long sgn) {
        h.prod[a * 4 + b] = {{c, Cyclotomic(Rat(sgn))}};
    };
    set(0, 0, 0, 1); set(0, 1, 1, 1); set(0, 2, 2, 1); set(0, 3, 3, 1);
    set(1, 0, 1, 1); set(1, 1, 0, -1); set(1, 2, 3, 1); set(1, 3, 2, -1);
    set(2, 0, 2, 1); set(2, 1, 3, -1); set(2, 2, 0, -1); set(2, 3, 1, 1);
    set(3, 0, 3, 1); set(3, 1, 2, 1); set(3, 2, 1, -1); set(3, 3, 0, -1);
    h.unit = h.basis_vec(0);
    h.validate();
    return h;
}

}  // namespace

TEST_CASE("clifford constructors") {
    CHECK(clifford_real(0, 0).dim == 1);
    for (int p = 0; p <= 3; ++p)
        for (int q = 0; p + q <= 6 && q <= 3; ++q)
            CHECK(clifford_real(p, q).dim == (1 << (p + q)));

    GradedAlgebra c11 = clifford_real(1, 1);
    c11.validate();
    // (e1 e2)^2 = -e1^2 e2^2 = +1
    auto e12 = c11.basis_vec(3);
    CHECK(c11.vec_eq(c11.mul(e12, e12), c11.unit));

    CHECK_THROWS_AS(clifford_real(7, 6), resource_limit);
}

TEST_CASE("clifford squares carry the signature") {
    GradedAlgebra c = clifford_real(2, 1);
    c.validate();
    auto sq = [&](int gen) {
        auto v = c.basis_vec(1 << gen);
        return *c.scalar_of(c.mul(v, v));
    };
    CHECK(sq(0).rational_value() == 1);
    CHECK(sq(1).rational_value() == 1);
    CHECK(sq(2).rational_value() == -1);
}

TEST_CASE("graded tensor against the combined clifford") {
    check_clifford_tensor(1, 0, 0, 1);
    check_clifford_tensor(2, 0, 0, 2);
    check_clifford_tensor(1, 1, 1, 0);
    // associativity on a triple product via the exhaustive validator
    graded_tensor(graded_tensor(clifford_real(1, 0), clifford_real(0, 1)), clifford_real(1, 0))
        .validate();
}

TEST_CASE("tensor with the ground field is the identity") {
    GradedAlgebra a = clifford_real(1, 1);
    GradedAlgebra t = graded_tensor(a, ground_field(1));
    REQUIRE(t.dim == a.dim);
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j) {
            const auto& x = t.table(i, j);
            const auto& y = a.table(i, j);
            REQUIRE(x.size() == y.size());
            for (std::size_t k = 0; k < x.size(); ++k) {
                CHECK(x[k].first == y[k].first);
                CHECK(x[k].second == y[k].second);
            }
        }
}

TEST_CASE("graded commutativity braiding intertwines products") {
    GradedAlgebra a = clifford_real(1, 0), b = clifford_real(0, 1);
    GradedAlgebra ab = graded_tensor(a, b), ba = graded_tensor(b, a);
    // swap(x (x) y) = (-1)^{deg x deg y} y (x) x on basis vectors
    auto swap_vec = [&](int i, int j) {
        GradedAlgebra::Vec v = ba.zero_vec();
        int sign = (a.degrees[i] & b.degrees[j]) ? -1 : 1;
        v[j * a.dim + i] = Cyclotomic(Rat(sign));
        return v;
    };
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < b.dim; ++j)
            for (int k = 0; k < a.dim; ++k)
                for (int l = 0; l < b.dim; ++l) {
                    // image of (b_i (x) c_j)(b_k (x) c_l) under the braiding
                    GradedAlgebra::Vec prod = ab.mul(ab.basis_vec(i * b.dim + j),
                                                     ab.basis_vec(k * b.dim + l));
                    GradedAlgebra::Vec lhs = ba.zero_vec();
                    for (int u = 0; u < a.dim; ++u)
                        for (int v = 0; v < b.dim; ++v) {
                            if (prod[u * b.dim + v].is_zero()) continue;
                            int sign = (a.degrees[u] & b.degrees[v]) ? -1 : 1;
                            Cyclotomic c = prod[u * b.dim + v];
                            lhs[v * a.dim + u] += sign < 0 ? -c : c;
                        }
                    GradedAlgebra::Vec rhs = ba.mul(swap_vec(i, j), swap_vec(k, l));
                    CHECK(ba.vec_eq(lhs, rhs));
                }
}

TEST_CASE("opposite algebra") {
    GradedAlgebra c10 = clifford_real(1, 0);
    GradedAlgebra op = opposite(c10);
    op.validate();
    // e^op squares to -1, so the opposite classifies as R7 (the inverse class)
    auto e = op.basis_vec(1);
    CHECK(op.scalar_of(op.mul(e, e))->rational_value() == -1);
    CHECK(tenfold_classify(op).tag == Tenfold::R7);
    // involution
    GradedAlgebra opop = opposite(op);
    for (int i = 0; i < c10.dim; ++i)
        for (int j = 0; j < c10.dim; ++j) {
            const auto& x = opop.table(i, j);
            const auto& y = c10.table(i, j);
            REQUIRE(x.size() == y.size());
            for (std::size_t k = 0; k < x.size(); ++k) CHECK(x[k].second == y[k].second);
        }
    // a commutative even algebra is its own opposite
    GradedAlgebra cplx;
    cplx.conductor = 1;
    cplx.dim = 2;
    cplx.degrees = {0, 0};
    cplx.names = {"1", "u"};
    cplx.prod = {{{0, Cyclotomic(Rat(1))}},
                 {{1, Cyclotomic(Rat(1))}},
                 {{1, Cyclotomic(Rat(1))}},
                 {{0, Cyclotomic(Rat(-1))}}};
    cplx.unit = cplx.basis_vec(0);
    GradedAlgebra cop = opposite(cplx);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            REQUIRE(cop.table(i, j).size() == cplx.table(i, j).size());
            CHECK(cop.table(i, j)[0].first == cplx.table(i, j)[0].first);
            CHECK(cop.table(i, j)[0].second == cplx.table(i, j)[0].second);
        }
    // the quaternions are noncommutative, so the opposite transposes the table
    GradedAlgebra q = quaternions_even();
    GradedAlgebra qop = opposite(q);
    bool same = true;
    for (int i = 0; i < 4 && same; ++i)
        for (int j = 0; j < 4 && same; ++j)
            same = qop.table(i, j)[0].second == q.table(j, i)[0].second;
    CHECK(same);
}

TEST_CASE("graded center and central simplicity") {
    CHECK(is_central_simple(clifford_real(1, 0)));
    CHECK(is_central_simple(clifford_real(1, 1)));  // End(R|R), dim 4
    CHECK(is_central_simple(matrix_algebra(1, 1, 4)));
    for (int p = 0; p <= 2; ++p)
        for (int q = 0; q <= 2; ++q) CHECK(is_central_simple(clifford_real(p, q)));

    // C as an R-algebra in degree 0 is not central
    GradedAlgebra cplx;
    cplx.conductor = 1;
    cplx.dim = 2;
    cplx.degrees = {0, 0};
    cplx.names = {"1", "u"};
    cplx.prod.resize(4);
    cplx.prod[0] = {{0, Cyclotomic(Rat(1))}};
    cplx.prod[1] = {{1, Cyclotomic(Rat(1))}};
    cplx.prod[2] = {{1, Cyclotomic(Rat(1))}};
    cplx.prod[3] = {{0, Cyclotomic(Rat(-1))}};
    cplx.unit = cplx.basis_vec(0);
    cplx.validate();
    CHECK(graded_center(cplx).size() == 2);
    CHECK(!is_central_simple(cplx));

    // the canonical map A (x) A^op -> End(A) is bijective exactly for CSGAs
    CHECK(canonical_map_rank(clifford_real(2, 1)) == 64);
    CHECK(canonical_map_rank(cplx) == 2);
}

TEST_CASE("ungraded center sees odd-type algebras") {
    // C^1_C = C[e] has the odd central element e
    GradedAlgebra c1 = clifford_complex(1);
    auto z = ungraded_center(c1);
    bool has_odd = false;
    for (const auto& v : z)
        for (int i = 0; i < c1.dim; ++i)
            if (c1.degrees[i] && !v[i].is_zero()) has_odd = true;
    CHECK(has_odd);
    // M_{1|1} has scalar center only
    auto zm = ungraded_center(matrix_algebra(1, 1, 4));
    CHECK(zm.size() == 1);
}

TEST_CASE("quaternions validate and classify as even AII") {
    GradedAlgebra h = quaternions_even();
    CHECK(tenfold_classify(h).tag == Tenfold::R4);
    CHECK(tenfold_classify(h).az_label == "AII");
}
