#include <doctest.h>

#include "helpers.hpp"
#include "magb/intmat.hpp"

using namespace magb;
using magbtest::Rng;

namespace {

IntMatrix diag_of(const std::vector<Int>& d, int rows, int cols) {
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < d.size(); ++i) m.at((int)i, (int)i) = d[i];
    return m;
}

// cofactor determinant, fine for the small matrices in these tests
Int det(const IntMatrix& m) {
    if (m.rows == 1) return m.at(0, 0);
    Int acc = 0;
    for (int c = 0; c < m.cols; ++c) {
        if (is_zero(m.at(0, c))) continue;
        IntMatrix sub(m.rows - 1, m.cols - 1);
        for (int i = 1; i < m.rows; ++i) {
            int jj = 0;
            for (int j = 0; j < m.cols; ++j) {
                if (j == c) continue;
                sub.at(i - 1, jj++) = m.at(i, j);
            }
        }
        Int term = m.at(0, c) * det(sub);
        acc += (c % 2) ? -term : term;
    }
    return acc;
}

void check_snf(const IntMatrix& a) {
    SmithDecomposition s = smith_normal_form(a);
    CHECK(mat_mul(mat_mul(s.U, a), s.V) == diag_of(s.d, a.rows, a.cols));
    for (std::size_t i = 0; i + 1 < s.d.size(); ++i) CHECK(divides(s.d[i], s.d[i + 1]));
    for (const auto& x : s.d) CHECK(x > 0);
    Int du = det(s.U), dv = det(s.V);
    CHECK((du == 1 || du == -1));
    CHECK((dv == 1 || dv == -1));
}

}  // namespace

TEST_CASE("smith normal form basics") {
    check_snf(IntMatrix::identity(3));
    CHECK(smith_normal_form(IntMatrix::identity(3)).d == magbtest::ints({1, 1, 1}));
    CHECK(smith_normal_form(IntMatrix(2, 3)).d.empty());

    IntMatrix a = IntMatrix::from_rows({{2, 4}, {6, 8}});
    SmithDecomposition s = smith_normal_form(a);
    CHECK(s.d == magbtest::ints({2, 4}));
    check_snf(a);
    CHECK(s.d[0] * s.d[1] == 8);  // |det| = 8
}

TEST_CASE("smith normal form on random matrices") {
    Rng rng(42);
    for (int trial = 0; trial < 40; ++trial) {
        int r = 1 + (int)rng.below(4), c = 1 + (int)rng.below(4);
        IntMatrix a(r, c);
        for (auto& x : a.a) x = (long)(rng.below(21) - 10);
        check_snf(a);
    }
}

TEST_CASE("huge entries take the bignum path") {
    IntMatrix a(2, 2);
    Int big("123456789012345678901234567890");
    a.at(0, 0) = big;
    a.at(0, 1) = big + 1;
    a.at(1, 0) = 3;
    a.at(1, 1) = 7;
    check_snf(a);
}

TEST_CASE("integer kernel") {
    CHECK(integer_kernel(IntMatrix::identity(3)).cols == 0);

    IntMatrix a = IntMatrix::from_rows({{1, 1}});
    IntMatrix k = integer_kernel(a);
    REQUIRE(k.cols == 1);
    CHECK(k.at(0, 0) == -k.at(1, 0));
    CHECK((k.at(0, 0) == 1 || k.at(0, 0) == -1));

    CHECK(integer_kernel(IntMatrix::from_rows({{2, 4}, {6, 8}})).cols == 0);
}

TEST_CASE("kernel bases annihilate and have full corank") {
    Rng rng(7);
    for (int trial = 0; trial < 25; ++trial) {
        int r = 1 + (int)rng.below(3), c = 2 + (int)rng.below(3);
        IntMatrix a(r, c);
        for (auto& x : a.a) x = (long)(rng.below(7) - 3);
        IntMatrix k = integer_kernel(a);
        for (int j = 0; j < k.cols; ++j) {
            auto col = mat_vec(a, k.col(j));
            for (const auto& v : col) CHECK(is_zero(v));
        }
        CHECK(ColEchelon(a).rank() + k.cols == c);
    }
}

TEST_CASE("integer solving") {
    IntMatrix id = IntMatrix::identity(3);
    std::vector<Int> b = magbtest::ints({3, -1, 5});
    auto x = solve_integer(id, b);
    REQUIRE(x.has_value());
    CHECK(*x == b);

    CHECK(!solve_integer(IntMatrix::from_rows({{2}}), magbtest::ints({3})).has_value());

    IntMatrix a = IntMatrix::from_rows({{2, 3}});
    auto y = solve_integer(a, magbtest::ints({1}));
    REQUIRE(y.has_value());
    CHECK(2 * (*y)[0] + 3 * (*y)[1] == 1);

    CHECK_THROWS_AS((void)solve_integer(a, magbtest::ints({1, 2})), invalid_parameter);
}

TEST_CASE("random consistency of solve") {
    Rng rng(99);
    for (int trial = 0; trial < 30; ++trial) {
        int r = 1 + (int)rng.below(4), c = 1 + (int)rng.below(4);
        IntMatrix a(r, c);
        for (auto& x : a.a) x = (long)(rng.below(9) - 4);
        std::vector<Int> x0(c);
        for (auto& v : x0) v = (long)(rng.below(9) - 4);
        std::vector<Int> b = mat_vec(a, x0);
        auto x = solve_integer(a, b);
        REQUIRE(x.has_value());
        CHECK(mat_vec(a, *x) == b);
    }
}

TEST_CASE("sparse and dense smith invariants agree") {
    Rng rng(1234);
    for (int trial = 0; trial < 30; ++trial) {
        int r = 1 + (int)rng.below(6), c = 1 + (int)rng.below(6);
        SparseIntMatrix sp;
        sp.rows = r;
        sp.cols = c;
        IntMatrix dense(r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) {
                long v = rng.below(3) - 1;  // 0 / +-1
                if (v) {
                    sp.t.push_back({i, j, v});
                    dense.at(i, j) = v;
                }
            }
        CHECK(sparse_smith_invariants(sp) == smith_normal_form(dense).d);
    }
}

TEST_CASE("invariant factors from order census") {
    CHECK(invariant_factors_from_orders(magbtest::ints({1, 2, 2, 2, 4, 4, 4, 4})) ==
          magbtest::ints({2, 4}));  // Z/2 x Z/4
    CHECK(invariant_factors_from_orders(magbtest::ints({1, 2, 4, 4, 8, 8, 8, 8})) ==
          magbtest::ints({8}));  // Z/8
    CHECK(invariant_factors_from_orders(magbtest::ints({1, 2, 2, 2})) == magbtest::ints({2, 2}));
    CHECK(invariant_factors_from_orders(magbtest::ints({1, 2, 3, 3, 6, 6})) == magbtest::ints({6}));
    CHECK(invariant_factors_from_orders(magbtest::ints({1})).empty());
}
