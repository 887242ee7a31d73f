#pragma once

// Small dense matrices over Q(zeta_N), enough for representation work:
// products, inverses, Kronecker products and exact conjugation.

#include <optional>
#include <vector>

#include "magb/cyclotomic.hpp"

namespace magb {

struct CycMat {
    int n = 0;
    std::vector<Cyclotomic> e;  // row-major

    CycMat() = default;
    explicit CycMat(int n_) : n(n_), e((std::size_t)n_ * n_, Cyclotomic()) {}

    Cyclotomic& at(int r, int c) { return e[(std::size_t)r * n + c]; }
    const Cyclotomic& at(int r, int c) const { return e[(std::size_t)r * n + c]; }

    static CycMat identity(int n);
    static CycMat scalar(int n, const Cyclotomic& s);

    CycMat mul(const CycMat& o) const;
    CycMat addm(const CycMat& o) const;
    CycMat subm(const CycMat& o) const;
    CycMat conj() const;
    CycMat transpose() const;
    CycMat dagger() const { return conj().transpose(); }
    CycMat neg() const;
    CycMat kron(const CycMat& o) const;
    std::optional<CycMat> inverse() const;
    bool is_zero() const;
    bool eq(const CycMat& o) const;
    // s with M = s * I
    std::optional<Cyclotomic> scalar_of() const;
};

}  // namespace magb
