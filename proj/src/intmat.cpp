#include "magb/intmat.hpp"

#include <cmath>
#include <set>

namespace magb {

Rat parse_rat(const std::string& s_in) {
    std::string s = s_in;
    if (!s.empty() && s[0] == '+') s = s.substr(1);
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw invalid_parameter("rational with zero denominator: " + s);
        Rat r(num, den);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw invalid_parameter("malformed rational: " + s_in);
    }
}

std::string rat_string(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

IntMatrix mat_mul(const IntMatrix& A, const IntMatrix& B) {
    IntMatrix C(A.rows, B.cols);
    for (int j = 0; j < B.cols; ++j)
        for (int k = 0; k < A.cols; ++k) {
            const Int& b = B.at(k, j);
            if (is_zero(b)) continue;
            for (int i = 0; i < A.rows; ++i)
                if (!is_zero(A.at(i, k))) C.at(i, j) += A.at(i, k) * b;
        }
    return C;
}

std::vector<Int> mat_vec(const IntMatrix& A, const std::vector<Int>& x) {
    std::vector<Int> y(A.rows, Int(0));
    for (int j = 0; j < A.cols; ++j) {
        if (is_zero(x[j])) continue;
        for (int i = 0; i < A.rows; ++i)
            if (!is_zero(A.at(i, j))) y[i] += A.at(i, j) * x[j];
    }
    return y;
}

namespace {

bool fits_i64(const Int& x) { return x.fits_slong_p(); }

template <class Z>
detail::MatT<Z> to_matt(const IntMatrix& A);

template <>
detail::MatT<Int> to_matt<Int>(const IntMatrix& A) {
    detail::MatT<Int> m(A.rows, A.cols);
    m.a = A.a;
    return m;
}
template <>
detail::MatT<I64> to_matt<I64>(const IntMatrix& A) {
    detail::MatT<I64> m(A.rows, A.cols);
    for (std::size_t i = 0; i < A.a.size(); ++i) m.a[i] = I64{A.a[i].get_si()};
    return m;
}

IntMatrix from_matt(const detail::MatT<Int>& m) {
    IntMatrix r(m.rows, m.cols);
    r.a = m.a;
    return r;
}
IntMatrix from_matt(const detail::MatT<I64>& m) {
    IntMatrix r(m.rows, m.cols);
    for (std::size_t i = 0; i < m.a.size(); ++i) r.a[i] = (long)m.a[i].v;
    return r;
}

template <class Z>
bool try_snf(const IntMatrix& A, SmithDecomposition& out) {
    detail::MatT<Z> M = to_matt<Z>(A);
    detail::MatT<Z> U = detail::MatT<Z>::identity(A.rows);
    detail::MatT<Z> V = detail::MatT<Z>::identity(A.cols);
    try {
        detail::snf_core(M, U, V);
    } catch (const int64_overflow&) {
        return false;
    }
    out.d.clear();
    int mn = std::min(A.rows, A.cols);
    for (int i = 0; i < mn; ++i) {
        Int di = to_int(M.at(i, i));
        if (is_zero(di)) break;
        out.d.push_back(di);
    }
    out.U = from_matt(U);
    out.V = from_matt(V);
    return true;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& A) {
    SmithDecomposition out;
    bool small = true;
    for (const auto& x : A.a)
        if (!fits_i64(x)) {
            small = false;
            break;
        }
    if (!(small && try_snf<I64>(A, out))) try_snf<Int>(A, out);
    for (std::size_t i = 0; i + 1 < out.d.size(); ++i)
        if (!divides(out.d[i], out.d[i + 1]))
            throw domain_error("internal: SNF divisibility chain violated");
#ifndef NDEBUG
    {
        IntMatrix check = mat_mul(mat_mul(out.U, A), out.V);
        for (int i = 0; i < check.rows; ++i)
            for (int j = 0; j < check.cols; ++j) {
                Int want = (i == j && i < (int)out.d.size()) ? out.d[i] : Int(0);
                if (check.at(i, j) != want)
                    throw domain_error("internal: U*A*V does not reproduce diag(d)");
            }
    }
#endif
    return out;
}

template <class Z>
bool ColEchelon::try_build(int rows, int cols, const std::vector<Triplet>& t) {
    detail::MatT<Z> A(rows, cols);
    for (const auto& x : t) A.at(x.r, x.c) += Z(x.v);
    detail::MatT<Z> V = detail::MatT<Z>::identity(cols);
    try {
        detail::col_echelon_core(A, V, pivots_, kernel_cols_);
    } catch (const int64_overflow&) {
        pivots_.clear();
        kernel_cols_.clear();
        return false;
    }
    H_ = from_matt(A);
    V_ = from_matt(V);
    return true;
}

ColEchelon::ColEchelon(int rows, int cols, const std::vector<Triplet>& t) : rows_(rows), cols_(cols) {
    if (!try_build<I64>(rows, cols, t)) try_build<Int>(rows, cols, t);
}

void ColEchelon::build_int(const IntMatrix& A) {
    detail::MatT<Int> M = to_matt<Int>(A);
    detail::MatT<Int> V = detail::MatT<Int>::identity(A.cols);
    detail::col_echelon_core(M, V, pivots_, kernel_cols_);
    H_ = from_matt(M);
    V_ = from_matt(V);
}

ColEchelon::ColEchelon(const IntMatrix& A) : rows_(A.rows), cols_(A.cols) {
    bool small = true;
    for (const auto& x : A.a)
        if (!fits_i64(x)) {
            small = false;
            break;
        }
    if (small) {
        std::vector<Triplet> t;
        for (int j = 0; j < A.cols; ++j)
            for (int i = 0; i < A.rows; ++i)
                if (!is_zero(A.at(i, j))) t.push_back({i, j, A.at(i, j).get_si()});
        if (try_build<I64>(A.rows, A.cols, t)) return;
        pivots_.clear();
        kernel_cols_.clear();
    }
    build_int(A);
}

IntMatrix ColEchelon::kernel() const {
    IntMatrix K(cols_, (int)kernel_cols_.size());
    for (std::size_t k = 0; k < kernel_cols_.size(); ++k)
        for (int i = 0; i < cols_; ++i) K.at(i, (int)k) = V_.at(i, kernel_cols_[k]);
    return K;
}

std::optional<std::vector<Int>> ColEchelon::solve(const std::vector<Int>& b) const {
    if ((int)b.size() != rows_) throw invalid_parameter("solve: dimension mismatch");
    std::vector<Int> residual = b;
    std::vector<Int> xh(cols_, Int(0));
    for (const auto& [r, j] : pivots_) {
        if (is_zero(residual[r])) continue;
        if (!divides(H_.at(r, j), residual[r])) return std::nullopt;
        Int t = div_exact(residual[r], H_.at(r, j));
        xh[j] = t;
        for (int i = r; i < rows_; ++i)
            if (!is_zero(H_.at(i, j))) residual[i] -= t * H_.at(i, j);
    }
    for (const auto& x : residual)
        if (!is_zero(x)) return std::nullopt;
    std::vector<Int> out(cols_, Int(0));
    for (int j = 0; j < cols_; ++j) {
        if (is_zero(xh[j])) continue;
        for (int i = 0; i < cols_; ++i)
            if (!is_zero(V_.at(i, j))) out[i] += V_.at(i, j) * xh[j];
    }
    return out;
}

IntMatrix integer_kernel(const IntMatrix& A) { return ColEchelon(A).kernel(); }

std::optional<std::vector<Int>> solve_integer(const IntMatrix& A, const std::vector<Int>& b) {
    if ((int)b.size() != A.rows) throw invalid_parameter("solve_integer: dimension mismatch");
    return ColEchelon(A).solve(b);
}

namespace {

// gcd/lcm normalization of a diagonal multiset into an invariant-factor chain
std::vector<Int> chain_from_diagonal(std::vector<Int> d) {
    for (auto& x : d) x = abs(x);
    d.erase(std::remove_if(d.begin(), d.end(), [](const Int& x) { return is_zero(x); }), d.end());
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < d.size(); ++i)
            for (std::size_t j = i + 1; j < d.size(); ++j) {
                if (divides(d[i], d[j])) continue;
                Int g = gcd_int(d[i], d[j]);
                Int l = div_exact(d[i] * d[j], g);
                d[i] = g;
                d[j] = l;
                changed = true;
            }
    }
    std::sort(d.begin(), d.end());
    return d;
}

}  // namespace

std::vector<Int> sparse_smith_invariants(const SparseIntMatrix& A) {
    std::vector<std::map<int, Int>> row(A.rows);
    std::vector<std::set<int>> colrows(A.cols);
    for (const auto& t : A.t) row[t.r][t.c] += t.v;
    for (int r = 0; r < A.rows; ++r)
        for (auto it = row[r].begin(); it != row[r].end();) {
            if (is_zero(it->second))
                it = row[r].erase(it);
            else {
                colrows[it->first].insert(r);
                ++it;
            }
        }
    auto row_sub = [&](int dst, int src, const Int& q) {  // row_dst -= q * row_src
        for (const auto& [c, v] : row[src]) {
            auto it = row[dst].find(c);
            if (it == row[dst].end()) {
                row[dst][c] = -q * v;
                colrows[c].insert(dst);
            } else {
                it->second -= q * v;
                if (is_zero(it->second)) {
                    row[dst].erase(it);
                    colrows[c].erase(dst);
                }
            }
        }
    };
    std::vector<Int> diag;
    for (;;) {
        // pivot: minimize (|v|, Markowitz fill), then (r, c)
        int pr = -1, pc = -1;
        Int pv;
        long pfill = 0;
        for (int r = 0; r < A.rows; ++r)
            for (const auto& [c, v] : row[r]) {
                long fill = (long)(row[r].size() - 1) * (long)(colrows[c].size() - 1);
                if (pr < 0 || abs_less(v, pv) || (!abs_less(pv, v) && fill < pfill)) {
                    pr = r;
                    pc = c;
                    pv = v;
                    pfill = fill;
                }
            }
        if (pr < 0) break;
        // alternate clearing pivot column (row ops) and pivot row (column ops on
        // a singleton column, i.e. in-place reduction of row pr) until isolated
        for (;;) {
            while (colrows[pc].size() > 1) {
                int best = -1;
                for (int r : colrows[pc])
                    if (best < 0 || abs_less(row[r][pc], row[best][pc])) best = r;
                pr = best;
                for (int r : std::vector<int>(colrows[pc].begin(), colrows[pc].end())) {
                    if (r == pr) continue;
                    Int q = div_round(row[r][pc], row[pr][pc]);
                    if (!is_zero(q)) row_sub(r, pr, q);
                }
            }
            if (row[pr].size() == 1) break;
            // column pc holds only (pr,pc); reduce the rest of row pr mod the
            // pivot (column ops that touch row pr alone)
            for (auto& [c, v] : row[pr]) {
                if (c == pc) continue;
                Int q = div_round(v, row[pr][pc]);
                if (!is_zero(q)) v -= q * row[pr][pc];
            }
            for (auto it = row[pr].begin(); it != row[pr].end();) {
                if (it->first != pc && is_zero(it->second)) {
                    colrows[it->first].erase(pr);
                    it = row[pr].erase(it);
                } else
                    ++it;
            }
            if (row[pr].size() == 1) break;
            // a nonzero remainder is strictly smaller; it takes over as pivot
            for (const auto& [c, v] : row[pr])
                if (c != pc && abs_less(v, row[pr][pc])) {
                    pc = c;
                    break;
                }
        }
        diag.push_back(row[pr][pc]);
        colrows[pc].erase(pr);
        row[pr].clear();
    }
    return chain_from_diagonal(diag);
}

std::vector<Int> invariant_factors_from_orders(const std::vector<Int>& orders) {
    Int n = (long)orders.size();
    if (n == 0) return {};
    Int exponent = 1;
    for (const auto& o : orders) exponent = lcm_int(exponent, o);
    // factor the exponent by trial division (desk scale)
    std::vector<std::pair<Int, int>> primes;
    Int e = exponent;
    for (Int p = 2; p * p <= e; ++p) {
        if (!divides(p, e)) continue;
        int k = 0;
        while (divides(p, e)) {
            e = div_exact(e, p);
            ++k;
        }
        primes.push_back({p, k});
    }
    if (e > 1) primes.push_back({e, 1});
    // per prime: lambda_k := log_p #{x : ord(x) | p^k} - log_p #{x : ord(x) | p^{k-1}}
    // equals the number of invariant factors with p-exponent >= k, so the slot
    // exponents (largest factor first) are the conjugate partition of lambda.
    std::vector<std::vector<int>> pexps;
    std::size_t max_slots = 0;
    for (const auto& [p, kmax] : primes) {
        std::vector<int> lambda;
        Int prev = 1;
        Int pk = 1;
        for (int k = 1; k <= kmax; ++k) {
            pk *= p;
            Int cnt = 0;
            for (const auto& o : orders)
                if (divides(o, pk)) cnt += 1;
            Int ratio = div_exact(cnt, prev);
            int lg = 0;
            while (ratio > 1) {
                ratio = div_exact(ratio, p);
                ++lg;
            }
            lambda.push_back(lg);
            prev = cnt;
        }
        std::vector<int> exps;
        for (int j = 0;; ++j) {
            int cnt = 0;
            for (int lk : lambda)
                if (lk > j) ++cnt;
            if (cnt == 0) break;
            exps.push_back(cnt);
        }
        pexps.push_back(exps);
        max_slots = std::max(max_slots, exps.size());
    }
    std::vector<Int> factors(max_slots, Int(1));  // factors[0] = largest
    for (std::size_t pi = 0; pi < primes.size(); ++pi)
        for (std::size_t s = 0; s < pexps[pi].size(); ++s) {
            Int pe = 1;
            for (int k = 0; k < pexps[pi][s]; ++k) pe *= primes[pi].first;
            factors[s] *= pe;
        }
    std::sort(factors.begin(), factors.end());
    factors.erase(std::remove(factors.begin(), factors.end(), Int(1)), factors.end());
    return factors;
}

}  // namespace magb
