#pragma once

// Exact integer linear algebra: column echelon forms, Smith normal form with
// transformation matrices, kernel lattices and integer solving. Everything is
// templated over the scalar so the same elimination runs on checked int64
// first and on GMP integers when the fast path overflows.

#include <algorithm>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "magb/numeric.hpp"

namespace magb {

struct Triplet {
    int r = 0, c = 0;
    long v = 0;
};

namespace detail {

template <class Z>
struct MatT {
    int rows = 0, cols = 0;
    std::vector<Z> a;  // column-major: a[c * rows + r]

    MatT() = default;
    MatT(int r, int c) : rows(r), cols(c), a((std::size_t)r * c, Z(0)) {}

    Z& at(int r, int c) { return a[(std::size_t)c * rows + r]; }
    const Z& at(int r, int c) const { return a[(std::size_t)c * rows + r]; }

    static MatT identity(int n) {
        MatT m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = Z(1);
        return m;
    }

    void col_axpy(int dst, int src, const Z& q) {  // col_dst -= q * col_src
        Z* d = &a[(std::size_t)dst * rows];
        const Z* s = &a[(std::size_t)src * rows];
        for (int i = 0; i < rows; ++i)
            if (!is_zero(s[i])) d[i] -= q * s[i];
    }
    void row_axpy(int dst, int src, const Z& q) {  // row_dst -= q * row_src
        for (int j = 0; j < cols; ++j) {
            const Z& s = at(src, j);
            if (!is_zero(s)) at(dst, j) -= q * s;
        }
    }
    void swap_cols(int i, int j) {
        if (i == j) return;
        for (int r = 0; r < rows; ++r) std::swap(at(r, i), at(r, j));
    }
    void swap_rows(int i, int j) {
        if (i == j) return;
        for (int c = 0; c < cols; ++c) std::swap(at(i, c), at(j, c));
    }
    void negate_row(int r) {
        for (int c = 0; c < cols; ++c)
            if (!is_zero(at(r, c))) at(r, c) = -at(r, c);
    }
};

// Column staircase reduction: applies unimodular column operations to A
// (mirrored in V) so that each processed row leaves at most one "fresh"
// nonzero column, which becomes a pivot. Pivot choice: smallest absolute
// value, then lowest column index.
template <class Z>
void col_echelon_core(MatT<Z>& A, MatT<Z>& V, std::vector<std::pair<int, int>>& pivots,
                      std::vector<int>& kernel_cols) {
    std::vector<int> active(A.cols);
    for (int j = 0; j < A.cols; ++j) active[j] = j;
    std::vector<int> js;
    for (int r = 0; r < A.rows && !active.empty(); ++r) {
        for (;;) {
            js.clear();
            for (int j : active)
                if (!is_zero(A.at(r, j))) js.push_back(j);
            if (js.empty()) break;
            if (js.size() == 1) {
                pivots.emplace_back(r, js[0]);
                active.erase(std::find(active.begin(), active.end(), js[0]));
                break;
            }
            int j0 = js[0];
            for (std::size_t k = 1; k < js.size(); ++k)
                if (abs_less(A.at(r, js[k]), A.at(r, j0))) j0 = js[k];
            for (int j : js) {
                if (j == j0) continue;
                Z q = div_round(A.at(r, j), A.at(r, j0));
                if (!is_zero(q)) {
                    A.col_axpy(j, j0, q);
                    V.col_axpy(j, j0, q);
                }
            }
            // remainders may survive; loop until the row is clean
        }
    }
    kernel_cols = active;
    std::sort(kernel_cols.begin(), kernel_cols.end());
}

// Full Smith normal form with both transforms: U * A_in * V = diag(d).
template <class Z>
void snf_core(MatT<Z>& A, MatT<Z>& U, MatT<Z>& V) {
    int mn = std::min(A.rows, A.cols);
    for (int t = 0; t < mn; ++t) {
        // locate pivot: min |a| nonzero in the trailing block, lowest (col,row)
        int pr = -1, pc = -1;
        for (int j = t; j < A.cols; ++j)
            for (int i = t; i < A.rows; ++i) {
                const Z& x = A.at(i, j);
                if (is_zero(x)) continue;
                if (pr < 0 || abs_less(x, A.at(pr, pc))) {
                    pr = i;
                    pc = j;
                }
            }
        if (pr < 0) break;
        A.swap_rows(t, pr);
        U.swap_rows(t, pr);
        A.swap_cols(t, pc);
        V.swap_cols(t, pc);
        for (;;) {
            bool again = false;
            for (int i = t + 1; i < A.rows; ++i) {
                if (is_zero(A.at(i, t))) continue;
                Z q = div_round(A.at(i, t), A.at(t, t));
                if (!is_zero(q)) {
                    A.row_axpy(i, t, q);
                    U.row_axpy(i, t, q);
                }
                if (!is_zero(A.at(i, t))) {  // remainder strictly smaller: promote
                    A.swap_rows(t, i);
                    U.swap_rows(t, i);
                    again = true;
                    break;
                }
            }
            if (again) continue;
            for (int j = t + 1; j < A.cols; ++j) {
                if (is_zero(A.at(t, j))) continue;
                Z q = div_round(A.at(t, j), A.at(t, t));
                if (!is_zero(q)) {
                    A.col_axpy(j, t, q);
                    V.col_axpy(j, t, q);
                }
                if (!is_zero(A.at(t, j))) {
                    A.swap_cols(t, j);
                    V.swap_cols(t, j);
                    again = true;
                    break;
                }
            }
            if (again) continue;
            // enforce d_t | trailing block
            bool fixed = false;
            for (int j = t + 1; j < A.cols && !fixed; ++j)
                for (int i = t + 1; i < A.rows && !fixed; ++i)
                    if (!is_zero(A.at(i, j)) && !divides(A.at(t, t), A.at(i, j))) {
                        Z one(1);
                        A.row_axpy(t, i, -one);
                        U.row_axpy(t, i, -one);
                        fixed = true;
                    }
            if (!fixed) break;
        }
        if (sign_of(A.at(t, t)) < 0) {
            A.negate_row(t);
            U.negate_row(t);
        }
    }
}

}  // namespace detail

struct IntMatrix {
    int rows = 0, cols = 0;
    std::vector<Int> a;  // column-major

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), a((std::size_t)r * c, Int(0)) {}

    Int& at(int r, int c) { return a[(std::size_t)c * rows + r]; }
    const Int& at(int r, int c) const { return a[(std::size_t)c * rows + r]; }

    static IntMatrix identity(int n) {
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }
    static IntMatrix from_triplets(int r, int c, const std::vector<Triplet>& t) {
        IntMatrix m(r, c);
        for (const auto& x : t) m.at(x.r, x.c) += x.v;
        return m;
    }
    static IntMatrix from_rows(const std::vector<std::vector<long>>& rows_in) {
        int r = (int)rows_in.size();
        int c = r ? (int)rows_in[0].size() : 0;
        IntMatrix m(r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) m.at(i, j) = rows_in[i][j];
        return m;
    }
    std::vector<Int> col(int j) const {
        return std::vector<Int>(a.begin() + (std::size_t)j * rows, a.begin() + (std::size_t)(j + 1) * rows);
    }
    void swap_cols(int i, int j) {
        if (i == j) return;
        for (int r = 0; r < rows; ++r) std::swap(at(r, i), at(r, j));
    }
    bool operator==(const IntMatrix& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

IntMatrix mat_mul(const IntMatrix& A, const IntMatrix& B);
std::vector<Int> mat_vec(const IntMatrix& A, const std::vector<Int>& x);

struct SparseIntMatrix {
    int rows = 0, cols = 0;
    std::vector<Triplet> t;
};

struct SmithDecomposition {
    std::vector<Int> d;  // nonzero invariants, d_i | d_{i+1}
    IntMatrix U, V;      // U * A * V = diag(d, 0, ...)
};

SmithDecomposition smith_normal_form(const IntMatrix& A);

// Column echelon factorization A * V = H, reusable for kernel bases and for
// repeated integer solves against the same matrix.
class ColEchelon {
  public:
    explicit ColEchelon(const IntMatrix& A);
    ColEchelon(int rows, int cols, const std::vector<Triplet>& t);

    int rank() const { return (int)pivots_.size(); }
    // saturated lattice basis of {x : A x = 0}, one column per basis vector
    IntMatrix kernel() const;
    // some x with A x = b over the integers, or nullopt
    std::optional<std::vector<Int>> solve(const std::vector<Int>& b) const;

  private:
    void build_int(const IntMatrix& A);
    template <class Z>
    bool try_build(int rows, int cols, const std::vector<Triplet>& t);

    int rows_ = 0, cols_ = 0;
    IntMatrix H_, V_;
    std::vector<std::pair<int, int>> pivots_;  // (row, col), rows ascending
    std::vector<int> kernel_cols_;
};

IntMatrix integer_kernel(const IntMatrix& A);
std::optional<std::vector<Int>> solve_integer(const IntMatrix& A, const std::vector<Int>& b);

// Invariant factors (no transforms) via sparse Markowitz elimination.
std::vector<Int> sparse_smith_invariants(const SparseIntMatrix& A);

// Invariant factors of the abelian group with the given element orders
// (order census method: the multiset {d_i} is determined by the counts
// #{x : x^d = e} for d | exponent).
std::vector<Int> invariant_factors_from_orders(const std::vector<Int>& orders);

}  // namespace magb
