#include "magb/cycmat.hpp"

namespace magb {

CycMat CycMat::identity(int n) {
    CycMat m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Cyclotomic(Rat(1));
    return m;
}

CycMat CycMat::scalar(int n, const Cyclotomic& s) {
    CycMat m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = s;
    return m;
}

CycMat CycMat::mul(const CycMat& o) const {
    CycMat r(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            if (at(i, k).is_zero()) continue;
            for (int j = 0; j < n; ++j) {
                if (o.at(k, j).is_zero()) continue;
                r.at(i, j) += at(i, k) * o.at(k, j);
            }
        }
    return r;
}

CycMat CycMat::addm(const CycMat& o) const {
    CycMat r = *this;
    for (std::size_t i = 0; i < e.size(); ++i) r.e[i] += o.e[i];
    return r;
}

CycMat CycMat::subm(const CycMat& o) const {
    CycMat r = *this;
    for (std::size_t i = 0; i < e.size(); ++i) r.e[i] -= o.e[i];
    return r;
}

CycMat CycMat::conj() const {
    CycMat r = *this;
    for (auto& x : r.e) x = x.conj();
    return r;
}

CycMat CycMat::transpose() const {
    CycMat r(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r.at(j, i) = at(i, j);
    return r;
}

CycMat CycMat::neg() const {
    CycMat r = *this;
    for (auto& x : r.e) x = -x;
    return r;
}

CycMat CycMat::kron(const CycMat& o) const {
    CycMat r(n * o.n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (at(i, j).is_zero()) continue;
            for (int k = 0; k < o.n; ++k)
                for (int l = 0; l < o.n; ++l)
                    r.at(i * o.n + k, j * o.n + l) = at(i, j) * o.at(k, l);
        }
    return r;
}

std::optional<CycMat> CycMat::inverse() const {
    CycMat A = *this;
    CycMat B = identity(n);
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r)
            if (!A.at(r, c).is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) return std::nullopt;
        for (int j = 0; j < n; ++j) {
            std::swap(A.at(piv, j), A.at(c, j));
            std::swap(B.at(piv, j), B.at(c, j));
        }
        Cyclotomic inv = A.at(c, c).inverse();
        for (int j = 0; j < n; ++j) {
            A.at(c, j) = inv * A.at(c, j);
            B.at(c, j) = inv * B.at(c, j);
        }
        for (int r = 0; r < n; ++r) {
            if (r == c || A.at(r, c).is_zero()) continue;
            Cyclotomic f = A.at(r, c);
            for (int j = 0; j < n; ++j) {
                A.at(r, j) -= f * A.at(c, j);
                B.at(r, j) -= f * B.at(c, j);
            }
        }
    }
    return B;
}

bool CycMat::is_zero() const {
    for (const auto& x : e)
        if (!x.is_zero()) return false;
    return true;
}

bool CycMat::eq(const CycMat& o) const {
    if (n != o.n) return false;
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] != o.e[i]) return false;
    return true;
}

std::optional<Cyclotomic> CycMat::scalar_of() const {
    Cyclotomic s = at(0, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j && at(i, j) != s) return std::nullopt;
            if (i != j && !at(i, j).is_zero()) return std::nullopt;
        }
    return s;
}

}  // namespace magb
