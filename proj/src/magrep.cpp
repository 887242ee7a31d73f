#include "magb/magrep.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "magb/ratlin.hpp"

namespace magb {

void MagneticRep::validate_shape() const {
    if ((int)mats.size() != base.order()) throw invalid_parameter("one matrix per group element required");
    for (const auto& m : mats)
        if (m.n != dim) throw invalid_parameter("matrix dimension mismatch");
    if (!mats[base.group.identity].eq(CycMat::identity(dim)))
        throw invalid_parameter("identity element must act as the identity matrix");
    for (int g = 0; g < base.order(); ++g)
        if (!mats[g].inverse().has_value())
            throw invalid_parameter("representation matrix is singular at element " + std::to_string(g));
    if (psi) {
        if ((int)psi->size() != base.order() || !is_hom_to_z2(base.group, *psi))
            throw invalid_parameter("psi must be a homomorphism G -> Z/2");
        if (even_dim <= 0 || even_dim >= dim)
            throw invalid_parameter("graded representation needs a proper splitting");
        for (int g = 0; g < base.order(); ++g)
            for (int r = 0; r < dim; ++r)
                for (int c = 0; c < dim; ++c) {
                    bool cross = (r < even_dim) != (c < even_dim);
                    bool allowed = ((*psi)[g] != 0) == cross;
                    if (!allowed && !mats[g].at(r, c).is_zero())
                        throw invalid_parameter("matrix violates the psi block structure");
                }
    }
}

namespace {

CycMat twisted_mat(const MagneticRep& r, int g) {
    return r.base.antilinear(g) ? r.mats[g].conj() : r.mats[g];
}

}  // namespace

TwistedHomReport verify_twisted_hom(const MagneticRep& r) {
    r.validate_shape();
    int n = r.base.order();
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h) {
            CycMat lhs = r.mats[g].mul(r.base.antilinear(g) ? r.mats[h].conj() : r.mats[h]);
            if (!lhs.eq(r.mats[r.base.group.mul(g, h)])) return {false, g, h};
        }
    return {};
}

bool ScalarCocycle::identity_holds(const MagneticGroup& m) const {
    int n = m.order();
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            for (int k = 0; k < n; ++k) {
                Rat lhs = (m.antilinear(g) ? -at(h, k) : at(h, k)) + at(g, m.group.mul(h, k));
                Rat rhs = at(m.group.mul(g, h), k) + at(g, h);
                if (mod1(lhs - rhs) != 0) return false;
            }
    return true;
}

Cochain ScalarCocycle::to_cochain(const MagneticGroup& m) const {
    Cochain c = Cochain::zero(m, model_QmodZ(), 2);
    TupleSpace ts(m.group);
    int n = m.order();
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h) {
            int pair[2] = {g, h};
            long idx = ts.encode(pair, 2);
            if (idx < 0) {
                if (mod1(at(g, h)) != 0)
                    throw invalid_cocycle("cocycle is not normalized on identity tuples");
                continue;
            }
            c.values[idx] = mod1(at(g, h));
        }
    return c;
}

ScalarCocycle ScalarCocycle::from_cochain(const MagneticGroup& m, const Cochain& c) {
    if (c.degree != 2) throw invalid_parameter("expected a 2-cochain");
    ScalarCocycle tau;
    tau.group_order = m.order();
    tau.angle.assign((std::size_t)tau.group_order * tau.group_order, Rat(0));
    TupleSpace ts(m.group);
    Int ord = 1;
    for (int g = 0; g < tau.group_order; ++g)
        for (int h = 0; h < tau.group_order; ++h) {
            int pair[2] = {g, h};
            long idx = ts.encode(pair, 2);
            if (idx < 0) continue;
            Rat v = mod1(c.values[idx]);
            tau.angle[(std::size_t)g * tau.group_order + h] = v;
            ord = lcm_int(ord, v.get_den());
        }
    tau.order = (int)ord.get_si();
    return tau;
}

ScalarCocycle ScalarCocycle::trivial(const MagneticGroup& m) {
    ScalarCocycle tau;
    tau.group_order = m.order();
    tau.order = 1;
    tau.angle.assign((std::size_t)m.order() * m.order(), Rat(0));
    return tau;
}

ScalarCocycle extract_cocycle(const MagneticRep& r) {
    r.validate_shape();
    int n = r.base.order();
    ScalarCocycle tau;
    tau.group_order = n;
    tau.angle.assign((std::size_t)n * n, Rat(0));
    Int ord = 1;
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h) {
            CycMat lhs = r.mats[g].mul(r.base.antilinear(g) ? r.mats[h].conj() : r.mats[h]);
            CycMat target = r.mats[r.base.group.mul(g, h)];
            auto tinv = target.inverse();
            CycMat d = lhs.mul(*tinv);
            auto s = d.scalar_of();
            if (!s)
                throw not_projective("discrepancy at pair (" + std::to_string(g) + "," +
                                     std::to_string(h) + ") is not scalar");
            auto ang = s->angle();
            if (!ang)
                throw unsupported_scalar("discrepancy scalar at (" + std::to_string(g) + "," +
                                         std::to_string(h) + ") is not a root of unity");
            // bounded-order policy: the order must divide 2 N |G|
            Int bound = Int(2) * r.conductor * n;
            if (!divides(Int(ang->get_den()), bound))
                throw unsupported_scalar("scalar order exceeds the 2 N |G| bound");
            tau.angle[(std::size_t)g * n + h] = *ang;
            ord = lcm_int(ord, ang->get_den());
        }
    tau.order = (int)ord.get_si();
    if (!tau.identity_holds(r.base)) throw invalid_cocycle("extracted discrepancy fails the cocycle law");
    return tau;
}

ExtensionGroup cocycle_to_extension(const ScalarCocycle& tau, const MagneticGroup& base) {
    if (!tau.identity_holds(base)) throw invalid_cocycle("cocycle identity fails");
    int n = base.order();
    int m = tau.order;
    // integer values t(g,h) with tau = zeta_m^t
    std::vector<int> t((std::size_t)n * n);
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h) {
            Rat v = tau.at(g, h) * m;
            if (!is_integer(v)) throw invalid_cocycle("cocycle values do not lie in mu_m");
            t[(std::size_t)g * n + h] = (int)(v.get_num().get_si() % m);
        }
    int N = m * n;
    FiniteGroup e;
    e.order = N;
    e.table.resize((std::size_t)N * N);
    auto idx = [&](int j, int g) { return j * n + g; };
    for (int j0 = 0; j0 < m; ++j0)
        for (int g0 = 0; g0 < n; ++g0)
            for (int j1 = 0; j1 < m; ++j1)
                for (int g1 = 0; g1 < n; ++g1) {
                    int j = base.antilinear(g0) ? (j0 - j1) : (j0 + j1);
                    j = ((j + t[(std::size_t)g0 * n + g1]) % m + m) % m;
                    e.table[(std::size_t)idx(j0, g0) * N + idx(j1, g1)] =
                        idx(j, base.group.mul(g0, g1));
                }
    e.labels.resize(N);
    for (int j = 0; j < m; ++j)
        for (int g = 0; g < n; ++g) e.labels[idx(j, g)] = "(w^" + std::to_string(j) + "," + std::to_string(g) + ")";
    // finish: identity, inverses, validation
    std::vector<std::vector<int>> rows(N, std::vector<int>(N));
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) rows[i][j] = e.table[(std::size_t)i * N + j];
    ExtensionGroup out;
    out.group = FiniteGroup::from_table(rows);
    out.group.labels = e.labels;
    out.m = m;
    for (int j = 0; j < m; ++j) out.mu_elements.push_back(idx(j, base.group.identity));
    return out;
}

MagneticRep tensor(const MagneticRep& a, const MagneticRep& b) {
    if (a.base.canonical_key() != b.base.canonical_key())
        throw invalid_parameter("tensor requires a common base magnetic group");
    MagneticRep t;
    t.base = a.base;
    t.conductor = std::lcm(a.conductor, b.conductor);
    t.dim = a.dim * b.dim;
    for (int g = 0; g < a.base.order(); ++g) t.mats.push_back(a.mats[g].kron(b.mats[g]));
    return t;
}

namespace {

// rational coordinates of a matrix entry grid: each entry contributes phi(N)
// rational coordinates
std::vector<Rat> vectorize(const CycMat& m, int conductor) {
    int deg = euler_phi(conductor);
    std::vector<Rat> out;
    out.reserve((std::size_t)m.n * m.n * deg);
    for (const auto& x : m.e) {
        Cyclotomic p = x.promoted(conductor);
        for (int i = 0; i < deg; ++i) out.push_back(p.coeffs()[i]);
    }
    return out;
}

// basis of {X : constraints}, where applying `op` to a unit unknown yields the
// residual matrix that must vanish
std::vector<CycMat> solve_matrix_space(
    int dim, int conductor, const std::vector<int>& allowed_cells,
    const std::function<std::vector<CycMat>(const CycMat&)>& residuals) {
    int deg = euler_phi(conductor);
    int unknowns = (int)allowed_cells.size() * deg;
    std::vector<std::vector<Rat>> rows;
    std::vector<std::vector<Rat>> residual_cols;  // per unknown, stacked residual coords
    for (std::size_t u = 0; u < allowed_cells.size(); ++u)
        for (int tpow = 0; tpow < deg; ++tpow) {
            CycMat unit(dim);
            std::vector<Rat> cz(deg, Rat(0));
            cz[tpow] = 1;
            unit.e[allowed_cells[u]] = Cyclotomic(conductor, cz);
            std::vector<Rat> col;
            for (const CycMat& res : residuals(unit)) {
                auto v = vectorize(res, conductor);
                col.insert(col.end(), v.begin(), v.end());
            }
            residual_cols.push_back(std::move(col));
        }
    if (residual_cols.empty()) return {};
    std::size_t nrows = residual_cols[0].size();
    rows.assign(nrows, std::vector<Rat>(unknowns, Rat(0)));
    for (int u = 0; u < unknowns; ++u)
        for (std::size_t r = 0; r < nrows; ++r) rows[r][u] = residual_cols[u][r];
    auto kernel = rat_kernel(std::move(rows), unknowns);
    std::vector<CycMat> basis;
    for (const auto& sol : kernel) {
        CycMat m(dim);
        for (std::size_t u = 0; u < allowed_cells.size(); ++u) {
            std::vector<Rat> cz(deg, Rat(0));
            for (int tpow = 0; tpow < deg; ++tpow) cz[tpow] = sol[u * deg + tpow];
            m.e[allowed_cells[u]] = Cyclotomic(conductor, cz);
        }
        basis.push_back(std::move(m));
    }
    return basis;
}

std::vector<int> all_cells(int dim) {
    std::vector<int> cells(dim * dim);
    std::iota(cells.begin(), cells.end(), 0);
    return cells;
}

}  // namespace

std::optional<CycMat> equival_reps(const MagneticRep& r1, const MagneticRep& r2, int box,
                                   long budget) {
    if (r1.dim != r2.dim) return std::nullopt;
    TwistedHomReport h1 = verify_twisted_hom(r1), h2 = verify_twisted_hom(r2);
    if (!h1.ok || !h2.ok) throw invalid_parameter("equival_reps expects strict representations");
    int conductor = std::lcm(r1.conductor, r2.conductor);
    int n = r1.base.order();
    auto residuals = [&](const CycMat& M) {
        std::vector<CycMat> out;
        for (int g = 0; g < n; ++g) {
            CycMat lhs = r2.mats[g].mul(r1.base.antilinear(g) ? M.conj() : M);
            out.push_back(lhs.subm(M.mul(r1.mats[g])));
        }
        return out;
    };
    auto basis = solve_matrix_space(r1.dim, conductor, all_cells(r1.dim), residuals);
    if (basis.empty()) return std::nullopt;
    // deterministic odometer over coefficient boxes of increasing radius
    int k = (int)basis.size();
    long tested = 0;
    for (int radius = 1; radius <= box; ++radius) {
        std::vector<int> c(k, -radius);
        for (;;) {
            bool max_norm_hit = false;
            for (int i = 0; i < k; ++i)
                if (c[i] == radius || c[i] == -radius) max_norm_hit = true;
            bool all_zero = std::all_of(c.begin(), c.end(), [](int x) { return x == 0; });
            if (max_norm_hit && !all_zero) {
                CycMat M(r1.dim);
                for (int i = 0; i < k; ++i) {
                    if (c[i] == 0) continue;
                    for (std::size_t e = 0; e < M.e.size(); ++e)
                        M.e[e] += Rat(c[i]) * basis[i].e[e];
                }
                if (M.inverse().has_value()) return M;
                if (++tested >= budget) return std::nullopt;
            }
            int pos = 0;
            while (pos < k && c[pos] == radius) c[pos++] = -radius;
            if (pos == k) break;
            ++c[pos];
        }
    }
    return std::nullopt;
}

CommutantReport commutant(const MagneticRep& r) {
    TwistedHomReport rep = verify_twisted_hom(r);
    if (!rep.ok) throw invalid_parameter("commutant expects a strict representation");
    int n = r.base.order();
    auto residuals = [&](const CycMat& X) {
        std::vector<CycMat> out;
        for (int g = 0; g < n; ++g) {
            if (g == r.base.group.identity) continue;
            CycMat lhs = r.mats[g].mul(r.base.antilinear(g) ? X.conj() : X);
            out.push_back(lhs.subm(X.mul(r.mats[g])));
        }
        return out;
    };
    CommutantReport out;
    if (!r.psi) {
        out.basis = solve_matrix_space(r.dim, r.conductor, all_cells(r.dim), residuals);
        out.real_dimension = (int)out.basis.size();
        if (out.real_dimension == 1) out.wigner_type = 'R';
        if (out.real_dimension == 2) out.wigner_type = 'C';
        if (out.real_dimension == 4) out.wigner_type = 'H';
        return out;
    }
    // graded case: solve the even (block-diagonal) and odd (block-antidiagonal)
    // parts separately and classify the resulting graded algebra over Q
    std::vector<int> even_cells, odd_cells;
    for (int a = 0; a < r.dim; ++a)
        for (int b = 0; b < r.dim; ++b) {
            bool cross = (a < r.even_dim) != (b < r.even_dim);
            (cross ? odd_cells : even_cells).push_back(a * r.dim + b);
        }
    auto even_basis = solve_matrix_space(r.dim, r.conductor, even_cells, residuals);
    auto odd_basis = solve_matrix_space(r.dim, r.conductor, odd_cells, residuals);
    out.basis = even_basis;
    out.basis.insert(out.basis.end(), odd_basis.begin(), odd_basis.end());
    out.real_dimension = (int)out.basis.size();
    // graded inputs are classified by the tenfold class below, not a letter

    // structure constants over Q via coordinates in the solved basis
    int deg = euler_phi(r.conductor);
    std::vector<std::vector<Rat>> bmat;  // columns = basis coordinates
    for (const auto& b : out.basis) bmat.push_back(vectorize(b, r.conductor));
    auto coords_in_basis = [&](const CycMat& m) {
        std::vector<Rat> rhs = vectorize(m, r.conductor);
        std::vector<std::vector<Rat>> rows(rhs.size(), std::vector<Rat>(out.basis.size(), Rat(0)));
        for (std::size_t j = 0; j < bmat.size(); ++j)
            for (std::size_t i = 0; i < rhs.size(); ++i) rows[i][j] = bmat[j][i];
        auto x = rat_solve(std::move(rows), std::move(rhs));
        if (!x) throw domain_error("internal: commutant is not closed under multiplication");
        return *x;
    };
    (void)deg;
    GradedAlgebra alg;
    alg.conductor = 1;
    alg.dim = out.real_dimension;
    alg.degrees.resize(alg.dim);
    alg.names.resize(alg.dim);
    for (int i = 0; i < alg.dim; ++i) {
        alg.degrees[i] = i < (int)even_basis.size() ? 0 : 1;
        alg.names[i] = "c" + std::to_string(i);
    }
    alg.prod.resize((std::size_t)alg.dim * alg.dim);
    for (int i = 0; i < alg.dim; ++i)
        for (int j = 0; j < alg.dim; ++j) {
            auto coords = coords_in_basis(out.basis[i].mul(out.basis[j]));
            for (int k = 0; k < alg.dim; ++k)
                if (coords[k] != 0)
                    alg.prod[(std::size_t)i * alg.dim + j].push_back({k, Cyclotomic(coords[k])});
        }
    auto unit_coords = coords_in_basis(CycMat::identity(r.dim));
    alg.unit.assign(alg.dim, Cyclotomic());
    for (int k = 0; k < alg.dim; ++k) alg.unit[k] = Cyclotomic(unit_coords[k]);
    out.dyson = tenfold_classify(alg, true);
    return out;
}

}  // namespace magb
