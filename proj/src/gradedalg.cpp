#include "magb/gradedalg.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace magb {

GradedAlgebra::Vec GradedAlgebra::basis_vec(int i) const {
    Vec v = zero_vec();
    v[i] = Cyclotomic(Rat(1), conductor);
    return v;
}

GradedAlgebra::Vec GradedAlgebra::mul(const Vec& a, const Vec& b) const {
    Vec out = zero_vec();
    for (int i = 0; i < dim; ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; j < dim; ++j) {
            if (b[j].is_zero()) continue;
            Cyclotomic c = a[i] * b[j];
            for (const auto& [k, coef] : table(i, j)) out[k] += c * coef;
        }
    }
    return out;
}

GradedAlgebra::Vec GradedAlgebra::add(const Vec& a, const Vec& b) const {
    Vec out = a;
    for (int i = 0; i < dim; ++i) out[i] += b[i];
    return out;
}

GradedAlgebra::Vec GradedAlgebra::scale(const Cyclotomic& s, const Vec& a) const {
    Vec out = a;
    for (auto& x : out) x = s * x;
    return out;
}

GradedAlgebra::Vec GradedAlgebra::conj_vec(const Vec& a) const {
    Vec out = a;
    for (auto& x : out) x = x.conj();
    return out;
}

bool GradedAlgebra::vec_is_zero(const Vec& a) const {
    for (const auto& x : a)
        if (!x.is_zero()) return false;
    return true;
}

bool GradedAlgebra::vec_eq(const Vec& a, const Vec& b) const {
    for (int i = 0; i < dim; ++i)
        if (a[i] != b[i]) return false;
    return true;
}

std::optional<int> GradedAlgebra::degree_of(const Vec& a) const {
    bool even = false, odd = false;
    for (int i = 0; i < dim; ++i) {
        if (a[i].is_zero()) continue;
        (degrees[i] ? odd : even) = true;
    }
    if (even && odd) return std::nullopt;
    return odd ? 1 : 0;
}

std::optional<GradedAlgebra::Vec> GradedAlgebra::inverse(const Vec& a) const {
    // fast path: generalized-permutation elements (every product a * b_k is a
    // scalar times a single basis element, each target hit once)
    {
        std::vector<int> target(dim, -1);
        std::vector<Cyclotomic> coef(dim);
        bool monomial = true;
        std::vector<bool> hit(dim, false);
        for (int k = 0; k < dim && monomial; ++k) {
            int tgt = -1;
            Cyclotomic c;
            for (int i = 0; i < dim && monomial; ++i) {
                if (a[i].is_zero()) continue;
                for (const auto& [row, f] : table(i, k)) {
                    Cyclotomic term = a[i] * f;
                    if (term.is_zero()) continue;
                    if (tgt == -1) {
                        tgt = row;
                        c = term;
                    } else if (tgt == row) {
                        c += term;
                    } else {
                        monomial = false;
                        break;
                    }
                }
            }
            if (!monomial) break;
            if (tgt < 0 || c.is_zero() || hit[tgt]) return std::nullopt;  // zero divisor
            hit[tgt] = true;
            target[k] = tgt;
            coef[k] = c;
        }
        if (monomial) {
            // solve a * x = unit coordinatewise: x_k = unit_{target[k]} / coef[k]
            Vec x = zero_vec();
            for (int k = 0; k < dim; ++k) x[k] = unit[target[k]] * coef[k].inverse();
            if (vec_eq(mul(a, x), unit) && vec_eq(mul(x, a), unit)) return x;
            return std::nullopt;
        }
    }
    // general path: solve (left regular representation of a) * x = unit
    int n = dim;
    std::vector<Cyclotomic> M((std::size_t)n * (n + 1), Cyclotomic(Rat(0), conductor));
    auto at = [&](int r, int c) -> Cyclotomic& { return M[(std::size_t)r * (n + 1) + c]; };
    for (int j = 0; j < n; ++j) {
        if (a[j].is_zero()) continue;
        for (int k = 0; k < n; ++k)
            for (const auto& [row, coef] : table(j, k)) at(row, k) += a[j] * coef;
    }
    for (int r = 0; r < n; ++r) at(r, n) = unit[r];
    // Gaussian elimination
    int rank = 0;
    for (int c = 0; c < n && rank < n; ++c) {
        int piv = -1;
        for (int r = rank; r < n; ++r)
            if (!at(r, c).is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        for (int cc = 0; cc <= n; ++cc) std::swap(at(piv, cc), at(rank, cc));
        Cyclotomic inv = at(rank, c).inverse();
        for (int cc = c; cc <= n; ++cc) at(rank, cc) = inv * at(rank, cc);
        for (int r = 0; r < n; ++r) {
            if (r == rank || at(r, c).is_zero()) continue;
            Cyclotomic f = at(r, c);
            for (int cc = c; cc <= n; ++cc) at(r, cc) -= f * at(rank, cc);
        }
        ++rank;
    }
    if (rank < n) {
        // singular left multiplication: solvable only if rhs consistent
        return std::nullopt;
    }
    Vec x = zero_vec();
    for (int r = 0; r < n; ++r) {
        int lead = -1;
        for (int c = 0; c < n; ++c)
            if (!at(r, c).is_zero()) {
                lead = c;
                break;
            }
        if (lead >= 0) x[lead] = at(r, n);
    }
    // verify two-sided
    if (!vec_eq(mul(a, x), unit) || !vec_eq(mul(x, a), unit)) return std::nullopt;
    return x;
}

std::optional<Cyclotomic> GradedAlgebra::scalar_of(const Vec& a) const {
    // find s with a = s * unit; unit may have several nonzero coordinates
    int ref = -1;
    for (int i = 0; i < dim; ++i)
        if (!unit[i].is_zero()) {
            ref = i;
            break;
        }
    Cyclotomic s = a[ref] * unit[ref].inverse();
    for (int i = 0; i < dim; ++i)
        if (a[i] != s * unit[i]) return std::nullopt;
    return s;
}

bool GradedAlgebra::structure_constants_real() const {
    for (const auto& list : prod)
        for (const auto& [k, c] : list)
            if (c != c.conj()) return false;
    return true;
}

void GradedAlgebra::validate() const {
    if ((int)degrees.size() != dim || (int)prod.size() != dim * dim)
        throw invalid_parameter("graded algebra shape inconsistent");
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            for (const auto& [k, c] : table(i, j)) {
                if (c.is_zero()) continue;
                if (degrees[k] != (degrees[i] ^ degrees[j]))
                    throw invalid_parameter("structure constants violate the grading");
            }
    for (int i = 0; i < dim; ++i) {
        if (!vec_eq(mul(unit, basis_vec(i)), basis_vec(i)) ||
            !vec_eq(mul(basis_vec(i), unit), basis_vec(i)))
            throw invalid_parameter("unit is not two-sided");
    }
    // associativity through the sparse tables: (b_i b_j) b_k == b_i (b_j b_k)
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            for (int k = 0; k < dim; ++k) {
                std::map<int, Cyclotomic> lhs, rhs;
                for (const auto& [m1, c1] : table(i, j))
                    for (const auto& [l, c2] : table(m1, k)) lhs[l] += c1 * c2;
                for (const auto& [m2, c1] : table(j, k))
                    for (const auto& [l, c2] : table(i, m2)) rhs[l] += c1 * c2;
                for (const auto& [l, c] : lhs)
                    if (c != rhs[l]) throw invalid_parameter("associativity fails");
                for (const auto& [l, c] : rhs)
                    if (c != lhs[l]) throw invalid_parameter("associativity fails");
            }
}

GradedAlgebra ground_field(int conductor) {
    GradedAlgebra a;
    a.conductor = conductor;
    a.dim = 1;
    a.degrees = {0};
    a.prod.resize(1);
    a.prod[0] = {{0, Cyclotomic(Rat(1), conductor)}};
    a.unit = {Cyclotomic(Rat(1), conductor)};
    a.names = {"1"};
    return a;
}

namespace {

// product of Clifford monomials indexed by bitmasks; squares[j] = e_j^2
std::pair<int, int> clifford_mul(unsigned S, unsigned T, const std::vector<int>& squares) {
    int sign = 1;
    // count transpositions: for each t in T, generators of S above t
    for (unsigned t = 0; t < squares.size(); ++t) {
        if (!(T & (1u << t))) continue;
        unsigned above = S >> (t + 1);
        sign *= (__builtin_popcount(above) % 2) ? -1 : 1;
    }
    unsigned common = S & T;
    for (unsigned j = 0; j < squares.size(); ++j)
        if (common & (1u << j)) sign *= squares[j];
    return {(int)(S ^ T), sign};
}

GradedAlgebra clifford_from_squares(const std::vector<int>& squares, int conductor) {
    int n = (int)squares.size();
    if (n > 12) throw resource_limit("Clifford dimension budget exceeded (p+q <= 12)");
    GradedAlgebra a;
    a.conductor = conductor;
    a.dim = 1 << n;
    a.degrees.resize(a.dim);
    a.names.resize(a.dim);
    for (int S = 0; S < a.dim; ++S) {
        a.degrees[S] = __builtin_popcount((unsigned)S) % 2;
        std::string nm;
        for (int j = 0; j < n; ++j)
            if (S & (1 << j)) nm += "e" + std::to_string(j + 1);
        a.names[S] = nm.empty() ? "1" : nm;
    }
    a.prod.resize((std::size_t)a.dim * a.dim);
    for (int S = 0; S < a.dim; ++S)
        for (int T = 0; T < a.dim; ++T) {
            auto [U, sign] = clifford_mul((unsigned)S, (unsigned)T, squares);
            a.prod[(std::size_t)S * a.dim + T] = {{U, Cyclotomic(Rat(sign), conductor)}};
        }
    a.unit = a.basis_vec(0);
    return a;
}

}  // namespace

GradedAlgebra clifford_real(int p, int q) {
    if (p < 0 || q < 0) throw invalid_parameter("clifford signature must be non-negative");
    std::vector<int> squares;
    for (int i = 0; i < p; ++i) squares.push_back(1);
    for (int i = 0; i < q; ++i) squares.push_back(-1);
    return clifford_from_squares(squares, 1);
}

GradedAlgebra clifford_with_squares(const std::vector<int>& squares) {
    for (int s : squares)
        if (s != 1 && s != -1) throw invalid_parameter("generator squares must be +1 or -1");
    return clifford_from_squares(squares, 1);
}

GradedAlgebra clifford_complex(int n) {
    if (n < 0) throw invalid_parameter("clifford generator count must be non-negative");
    return clifford_from_squares(std::vector<int>(n, 1), 4);
}

GradedAlgebra matrix_algebra(int p, int q, int conductor) {
    int n = p + q;
    GradedAlgebra a;
    a.conductor = conductor;
    a.dim = n * n;
    a.degrees.resize(a.dim);
    a.names.resize(a.dim);
    auto idx = [n](int r, int c) { return r * n + c; };
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            a.degrees[idx(r, c)] = ((r < p) != (c < p)) ? 1 : 0;
            a.names[idx(r, c)] = "E" + std::to_string(r) + std::to_string(c);
        }
    a.prod.resize((std::size_t)a.dim * a.dim);
    Cyclotomic one(Rat(1), conductor);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            for (int s = 0; s < n; ++s)
                for (int t = 0; t < n; ++t) {
                    auto& cell = a.prod[(std::size_t)idx(r, c) * a.dim + idx(s, t)];
                    if (c == s) cell = {{idx(r, t), one}};
                }
    a.unit = a.zero_vec();
    for (int r = 0; r < n; ++r) a.unit[idx(r, r)] = one;
    return a;
}

GradedAlgebra graded_tensor(const GradedAlgebra& a, const GradedAlgebra& b) {
    int m = std::lcm(a.conductor, b.conductor);
    GradedAlgebra t;
    t.conductor = m;
    t.dim = a.dim * b.dim;
    t.degrees.resize(t.dim);
    t.names.resize(t.dim);
    auto idx = [&](int i, int j) { return i * b.dim + j; };
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < b.dim; ++j) {
            t.degrees[idx(i, j)] = a.degrees[i] ^ b.degrees[j];
            t.names[idx(i, j)] = a.names[i] + "(x)" + b.names[j];
        }
    t.prod.resize((std::size_t)t.dim * t.dim);
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < b.dim; ++j)
            for (int k = 0; k < a.dim; ++k)
                for (int l = 0; l < b.dim; ++l) {
                    // (b_i (x) c_j)(b_k (x) c_l) = (-1)^{deg(b_k) deg(c_j)} b_i b_k (x) c_j c_l
                    int sign = (a.degrees[k] & b.degrees[j]) ? -1 : 1;
                    auto& cell = t.prod[(std::size_t)idx(i, j) * t.dim + idx(k, l)];
                    for (const auto& [u, ca] : a.table(i, k))
                        for (const auto& [v, cb] : b.table(j, l)) {
                            Cyclotomic coef = ca * cb;
                            if (sign < 0) coef = -coef;
                            if (!coef.is_zero()) cell.push_back({idx(u, v), coef});
                        }
                }
    t.unit = t.zero_vec();
    for (int i = 0; i < a.dim; ++i) {
        if (a.unit[i].is_zero()) continue;
        for (int j = 0; j < b.dim; ++j) {
            if (b.unit[j].is_zero()) continue;
            t.unit[idx(i, j)] = a.unit[i] * b.unit[j];
        }
    }
    return t;
}

GradedAlgebra opposite(const GradedAlgebra& a) {
    GradedAlgebra o = a;
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j) {
            auto cell = a.table(j, i);
            if (a.degrees[i] & a.degrees[j])
                for (auto& [k, c] : cell) c = -c;
            o.prod[(std::size_t)i * a.dim + j] = cell;
        }
    return o;
}

GradedAlgebra complexify(const GradedAlgebra& a) {
    GradedAlgebra c = a;
    c.conductor = std::lcm(a.conductor, 4);
    for (auto& list : c.prod)
        for (auto& [k, coef] : list) coef = coef.promoted(c.conductor);
    for (auto& u : c.unit) u = u.promoted(c.conductor);
    return c;
}

namespace {

// kernel of a sparse row system over the cyclotomic field; ncols unknowns
std::vector<std::vector<Cyclotomic>> field_kernel(
    std::vector<std::vector<std::pair<int, Cyclotomic>>> rows, int ncols, int conductor) {
    // Gaussian elimination keeping reduced pivot rows
    std::vector<std::vector<std::pair<int, Cyclotomic>>> pivrows;
    std::vector<int> pivcols;
    auto reduce_row = [&](std::vector<std::pair<int, Cyclotomic>>& row) {
        for (std::size_t p = 0; p < pivrows.size(); ++p) {
            Cyclotomic f(Rat(0), conductor);
            bool hit = false;
            for (const auto& [c, v] : row)
                if (c == pivcols[p]) {
                    f = v;
                    hit = true;
                    break;
                }
            if (!hit) continue;
            // row -= f * pivrow (pivrow leading coefficient is 1)
            std::map<int, Cyclotomic> acc;
            for (const auto& [c, v] : row) acc[c] = v;
            for (const auto& [c, v] : pivrows[p]) {
                auto it = acc.find(c);
                if (it == acc.end())
                    acc[c] = -(f * v);
                else
                    it->second -= f * v;
            }
            row.clear();
            for (auto& [c, v] : acc)
                if (!v.is_zero()) row.push_back({c, v});
        }
    };
    for (auto& row : rows) {
        std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        reduce_row(row);
        if (row.empty()) continue;
        Cyclotomic lead = row.front().second;
        Cyclotomic inv = lead.inverse();
        for (auto& [c, v] : row) v = inv * v;
        // reduce existing pivot rows against the new one
        for (std::size_t p = 0; p < pivrows.size(); ++p) {
            Cyclotomic f(Rat(0), conductor);
            bool hit = false;
            for (const auto& [c, v] : pivrows[p])
                if (c == row.front().first) {
                    f = v;
                    hit = true;
                    break;
                }
            if (!hit) continue;
            std::map<int, Cyclotomic> acc;
            for (const auto& [c, v] : pivrows[p]) acc[c] = v;
            for (const auto& [c, v] : row) {
                auto it = acc.find(c);
                if (it == acc.end())
                    acc[c] = -(f * v);
                else
                    it->second -= f * v;
            }
            pivrows[p].clear();
            for (auto& [c, v] : acc)
                if (!v.is_zero()) pivrows[p].push_back({c, v});
        }
        pivcols.push_back(row.front().first);
        pivrows.push_back(std::move(row));
    }
    std::vector<bool> is_pivot(ncols, false);
    for (int c : pivcols) is_pivot[c] = true;
    std::vector<std::vector<Cyclotomic>> basis;
    for (int fc = 0; fc < ncols; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<Cyclotomic> sol(ncols, Cyclotomic(Rat(0), conductor));
        sol[fc] = Cyclotomic(Rat(1), conductor);
        for (std::size_t p = 0; p < pivrows.size(); ++p)
            for (const auto& [c, v] : pivrows[p])
                if (c == fc) sol[pivcols[p]] = -v;
        basis.push_back(std::move(sol));
    }
    return basis;
}

std::vector<GradedAlgebra::Vec> center_impl(const GradedAlgebra& a, bool graded) {
    // unknown z = sum z_i b_i; condition per basis j: z b_j -+ b_j z = 0.
    // In the graded case homogeneous z of degree d satisfies
    // z b_j = (-1)^{d deg(b_j)} b_j z; solve per degree and merge.
    std::vector<GradedAlgebra::Vec> out;
    for (int d = 0; d < (graded ? 2 : 1); ++d) {
        std::vector<std::vector<std::pair<int, Cyclotomic>>> rows;
        for (int j = 0; j < a.dim; ++j) {
            // all conditions for commuting with b_j, rows indexed by output basis k
            std::map<std::pair<int, int>, Cyclotomic> entries;  // (k, unknown i) -> coef
            for (int i = 0; i < a.dim; ++i) {
                if (graded && (int)a.degrees[i] != d) continue;
                int sign = (graded && (d & a.degrees[j])) ? -1 : 1;
                for (const auto& [k, c] : a.table(i, j)) entries[{k, i}] += c;
                for (const auto& [k, c] : a.table(j, i))
                    entries[{k, i}] -= sign < 0 ? -c : c;
            }
            std::map<int, std::vector<std::pair<int, Cyclotomic>>> byk;
            for (auto& [kc, v] : entries)
                if (!v.is_zero()) byk[kc.first].push_back({kc.second, v});
            for (auto& [k, row] : byk) rows.push_back(std::move(row));
        }
        auto sols = field_kernel(std::move(rows), a.dim, a.conductor);
        for (auto& s : sols) {
            if (graded) {
                bool support_ok = true;
                for (int i = 0; i < a.dim; ++i)
                    if (!s[i].is_zero() && (int)a.degrees[i] != d) support_ok = false;
                if (!support_ok) continue;
            }
            out.push_back(std::move(s));
        }
    }
    return out;
}

}  // namespace

std::vector<GradedAlgebra::Vec> graded_center(const GradedAlgebra& a) { return center_impl(a, true); }

std::vector<GradedAlgebra::Vec> ungraded_center(const GradedAlgebra& a) {
    return center_impl(a, false);
}

long canonical_map_rank(const GradedAlgebra& a) {
    // columns indexed by (i, j) = b_i (x) b_j^op acting as x -> (-1)^{deg b_j deg x} b_i x b_j;
    // rows indexed by cells (k, l): coefficient of b_k in the image of b_l
    // eliminate with rows as the sparse dimension (transpose trick: rank is symmetric)
    std::vector<std::vector<std::pair<int, Cyclotomic>>> cols((std::size_t)a.dim * a.dim);
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j) {
            auto& col = cols[(std::size_t)i * a.dim + j];
            for (int l = 0; l < a.dim; ++l) {
                int sign = (a.degrees[j] & a.degrees[l]) ? -1 : 1;
                // b_i * b_l * b_j
                for (const auto& [m1, c1] : a.table(i, l))
                    for (const auto& [k, c2] : a.table(m1, j)) {
                        Cyclotomic c = c1 * c2;
                        if (sign < 0) c = -c;
                        if (!c.is_zero()) col.push_back({k * a.dim + l, c});
                    }
            }
        }
    // rank via field elimination treating columns as rows of the transpose
    auto basis = field_kernel(std::move(cols), a.dim * a.dim, a.conductor);
    // kernel of the transpose has dim^2 - rank elements
    return (long)a.dim * a.dim - (long)basis.size();
}

bool is_central_simple(const GradedAlgebra& a) {
    auto z = graded_center(a);
    if (z.size() != 1) return false;
    if (!a.scalar_of(z[0]).has_value()) return false;
    return canonical_map_rank(a) == (long)a.dim * a.dim;
}

}  // namespace magb
