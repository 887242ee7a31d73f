#include "magb/tenfold.hpp"

#include <cmath>

#include "magb/ratlin.hpp"

namespace magb {

const std::vector<TenfoldClass>& tenfold_table() {
    static const std::vector<TenfoldClass> table = {
        {Tenfold::R0, "AI", 1, 0, 0},   {Tenfold::R1, "BDI", 1, 1, 1},
        {Tenfold::R2, "D", 0, 1, 0},    {Tenfold::R3, "DIII", -1, 1, 1},
        {Tenfold::R4, "AII", -1, 0, 0}, {Tenfold::R5, "CII", -1, -1, 0},
        {Tenfold::R6, "C", 0, -1, 0},   {Tenfold::R7, "CI", 1, -1, 1},
        {Tenfold::C0, "A", 0, 0, 0},    {Tenfold::C1, "AIII", 0, 0, 1},
    };
    return table;
}

TenfoldClass tenfold_by_tag(Tenfold t) {
    for (const auto& row : tenfold_table())
        if (row.tag == t) return row;
    throw invalid_parameter("unknown tenfold tag");
}

std::string tenfold_tag_name(Tenfold t) {
    switch (t) {
        case Tenfold::R0: return "R0";
        case Tenfold::R1: return "R1";
        case Tenfold::R2: return "R2";
        case Tenfold::R3: return "R3";
        case Tenfold::R4: return "R4";
        case Tenfold::R5: return "R5";
        case Tenfold::R6: return "R6";
        case Tenfold::R7: return "R7";
        case Tenfold::C0: return "C0";
        case Tenfold::C1: return "C1";
    }
    return "?";
}

int clifford_class(int p, int q) { return ((p - q) % 8 + 8) % 8; }

TenfoldClass az_lookup(int t, int c, int s) {
    for (const auto& row : tenfold_table())
        if (row.trs == t && row.phs == c && row.chiral == s) return row;
    throw invalid_symmetry_data("no AZ class with T=" + std::to_string(t) +
                                ", C=" + std::to_string(c) + ", S=" + std::to_string(s));
}

void az_row(const TenfoldClass& cls, int& t, int& c, int& s) {
    t = cls.trs;
    c = cls.phs;
    s = cls.chiral;
}

namespace {

struct QAlgebraView {
    // rational coordinates of the algebra restricted over Q
    const GradedAlgebra* a;
    std::vector<int> even, odd;  // basis indices by degree

    explicit QAlgebraView(const GradedAlgebra& alg) : a(&alg) {
        for (int i = 0; i < alg.dim; ++i) (alg.degrees[i] ? odd : even).push_back(i);
    }
};

Rat rational_coeff(const Cyclotomic& c) {
    if (!c.is_rational()) throw invalid_parameter("tenfold classifier expects an algebra over Q");
    return c.rational_value();
}

// express v inside span{basis vectors} over Q; nullopt when outside
std::optional<std::vector<Rat>> in_span(const GradedAlgebra& a,
                                        const std::vector<GradedAlgebra::Vec>& basis,
                                        const GradedAlgebra::Vec& v) {
    std::vector<std::vector<Rat>> rows(a.dim, std::vector<Rat>(basis.size(), Rat(0)));
    std::vector<Rat> rhs(a.dim, Rat(0));
    for (int r = 0; r < a.dim; ++r) {
        for (std::size_t j = 0; j < basis.size(); ++j) rows[r][j] = rational_coeff(basis[j][r]);
        rhs[r] = rational_coeff(v[r]);
    }
    auto x = rat_solve(std::move(rows), std::move(rhs));
    if (!x) return std::nullopt;
    // verify (rat_solve returns some vector even for inconsistent systems only
    // when rows vanish; double check exactly)
    GradedAlgebra::Vec acc = a.zero_vec();
    for (std::size_t j = 0; j < basis.size(); ++j)
        acc = a.add(acc, a.scale(Cyclotomic((*x)[j]), basis[j]));
    if (!a.vec_eq(acc, v)) return std::nullopt;
    return x;
}

Rat scalar_or_throw(const GradedAlgebra& a, const GradedAlgebra::Vec& v, const char* what) {
    auto s = a.scalar_of(v);
    if (!s) throw not_division_algebra(std::string(what) + " is not a scalar multiple of 1");
    return rational_coeff(*s);
}

enum class EvenType { R, C, H };

}  // namespace

TenfoldClass tenfold_classify(const GradedAlgebra& a, bool assume_division) {
    (void)assume_division;
    QAlgebraView view(a);
    const int d0 = (int)view.even.size();
    const int d1 = (int)view.odd.size();
    if (!(d0 == 1 || d0 == 2 || d0 == 4))
        throw not_division_algebra("even part has dimension " + std::to_string(d0) +
                                   ", expected 1, 2 or 4");
    if (!(d1 == 0 || d1 == d0))
        throw not_division_algebra("odd part has dimension " + std::to_string(d1) +
                                   ", expected 0 or dim A0");
    for (int i : view.even)
        if (!a.inverse(a.basis_vec(i)).has_value())
            throw not_division_algebra("even basis element '" + a.names[i] + "' is not invertible");

    EvenType etype = EvenType::R;
    GradedAlgebra::Vec imag = a.zero_vec();  // for the C branch: w with w^2 < 0 scalar
    if (d0 == 1) {
        etype = EvenType::R;
    } else if (d0 == 2) {
        // u: even element independent from 1; minimal polynomial u^2 = x + y u
        GradedAlgebra::Vec u = a.basis_vec(view.even[0]);
        if (in_span(a, {a.unit}, u).has_value()) u = a.basis_vec(view.even[1]);
        std::vector<GradedAlgebra::Vec> base{a.unit, u};
        auto coords = in_span(a, base, a.mul(u, u));
        if (!coords) throw not_division_algebra("even part is not 2-dimensional commutative");
        Rat x = (*coords)[0], y = (*coords)[1];
        Rat disc = y * y + 4 * x;
        if (disc >= 0)
            throw not_division_algebra("even part splits over R (discriminant >= 0)");
        // w = 2u - y with w^2 = disc < 0
        imag = a.add(a.scale(Cyclotomic(Rat(2)), u), a.scale(Cyclotomic(-y), a.unit));
        etype = EvenType::C;
    } else {
        // d0 == 4: quaternion check via the trace-zero subspace
        // left-multiplication trace on the even subalgebra
        auto even_vec = [&](int k) { return a.basis_vec(view.even[k]); };
        std::vector<GradedAlgebra::Vec> ebasis;
        for (int k = 0; k < 4; ++k) ebasis.push_back(even_vec(k));
        auto ltrace = [&](const GradedAlgebra::Vec& x) {
            Rat tr(0);
            for (int k = 0; k < 4; ++k) {
                auto c = in_span(a, ebasis, a.mul(x, ebasis[k]));
                if (!c) throw not_division_algebra("even part is not closed under products");
                tr += (*c)[k];
            }
            return tr;
        };
        std::vector<std::vector<Rat>> rows(1, std::vector<Rat>(4, Rat(0)));
        for (int k = 0; k < 4; ++k) rows[0][k] = ltrace(ebasis[k]);
        auto tz = rat_kernel(rows, 4);
        if (tz.size() != 3) throw not_division_algebra("trace-zero subspace has wrong dimension");
        std::vector<GradedAlgebra::Vec> V;
        for (const auto& sol : tz) {
            GradedAlgebra::Vec v = a.zero_vec();
            for (int k = 0; k < 4; ++k) v = a.add(v, a.scale(Cyclotomic(sol[k]), ebasis[k]));
            V.push_back(v);
        }
        // Clifford relations v_i v_j + v_j v_i = scalar and positive definiteness
        std::vector<std::vector<Rat>> gram(3, std::vector<Rat>(3, Rat(0)));
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                GradedAlgebra::Vec s = a.add(a.mul(V[i], V[j]), a.mul(V[j], V[i]));
                gram[i][j] = -scalar_or_throw(a, s, "anticommutator of trace-zero elements") / 2;
            }
        // leading principal minors > 0
        Rat m1 = gram[0][0];
        Rat m2 = gram[0][0] * gram[1][1] - gram[0][1] * gram[1][0];
        Rat m3(0);
        for (int c = 0; c < 3; ++c) {
            Rat term = gram[0][c] * (gram[1][(c + 1) % 3] * gram[2][(c + 2) % 3] -
                                     gram[1][(c + 2) % 3] * gram[2][(c + 1) % 3]);
            m3 += term;
        }
        if (!(m1 > 0 && m2 > 0 && m3 > 0))
            throw not_division_algebra("even norm form is not positive definite (not H)");
        etype = EvenType::H;
    }

    if (d1 == 0) {
        switch (etype) {
            case EvenType::R: return tenfold_by_tag(Tenfold::R0);
            case EvenType::C: return tenfold_by_tag(Tenfold::C0);
            case EvenType::H: return tenfold_by_tag(Tenfold::R4);
        }
    }

    GradedAlgebra::Vec e = a.basis_vec(view.odd[0]);
    auto einv = a.inverse(e);
    if (!einv)
        throw not_division_algebra("odd basis element '" + a.names[view.odd[0]] +
                                   "' is not invertible");

    if (etype == EvenType::R) {
        Rat sq = scalar_or_throw(a, a.mul(e, e), "e^2");
        if (sq == 0) throw not_division_algebra("odd element squares to zero");
        return tenfold_by_tag(sq > 0 ? Tenfold::R1 : Tenfold::R7);
    }
    if (etype == EvenType::C) {
        // conjugation action of e on the even field: e w e^{-1} = +-w
        GradedAlgebra::Vec conj_w = a.mul(a.mul(e, imag), *einv);
        if (a.vec_eq(conj_w, imag)) return tenfold_by_tag(Tenfold::C1);
        GradedAlgebra::Vec negw = a.scale(Cyclotomic(Rat(-1)), imag);
        if (!a.vec_eq(conj_w, negw))
            throw not_division_algebra("odd conjugation is not an automorphism of the even field");
        Rat sq = scalar_or_throw(a, a.mul(e, e), "e^2");
        if (sq == 0) throw not_division_algebra("odd element squares to zero");
        return tenfold_by_tag(sq > 0 ? Tenfold::R2 : Tenfold::R6);
    }
    // H branch: replace e by an odd element commuting with the even part
    {
        std::vector<std::vector<Rat>> rows;
        for (int k : view.even) {
            // condition: y b_k - b_k y = 0, y supported on odd basis
            for (int out = 0; out < a.dim; ++out) {
                std::vector<Rat> row(view.odd.size(), Rat(0));
                bool nonzero = false;
                for (std::size_t yi = 0; yi < view.odd.size(); ++yi) {
                    Rat coef(0);
                    for (const auto& [m, c] : a.table(view.odd[yi], k))
                        if (m == out) coef += rational_coeff(c);
                    for (const auto& [m, c] : a.table(k, view.odd[yi]))
                        if (m == out) coef -= rational_coeff(c);
                    if (coef != 0) nonzero = true;
                    row[yi] = coef;
                }
                if (nonzero) rows.push_back(std::move(row));
            }
        }
        auto sols = rat_kernel(std::move(rows), (int)view.odd.size());
        if (sols.empty())
            throw not_division_algebra("no odd element commutes with the even quaternions");
        GradedAlgebra::Vec y = a.zero_vec();
        for (std::size_t yi = 0; yi < view.odd.size(); ++yi)
            y = a.add(y, a.scale(Cyclotomic(sols[0][yi]), a.basis_vec(view.odd[yi])));
        if (!a.inverse(y).has_value())
            throw not_division_algebra("commuting odd element is not invertible");
        Rat sq = scalar_or_throw(a, a.mul(y, y), "central odd square");
        if (sq == 0) throw not_division_algebra("commuting odd element squares to zero");
        return tenfold_by_tag(sq > 0 ? Tenfold::R5 : Tenfold::R3);
    }
}

namespace {

double matnorm(const ComplexMatrix& m) {
    double best = 0;
    for (int r = 0; r < m.n; ++r) {
        double s = 0;
        for (int c = 0; c < m.n; ++c) s += std::abs(m.at(r, c));
        best = std::max(best, s);
    }
    return best;
}

ComplexMatrix cmul(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix r;
    r.n = a.n;
    r.e.assign((std::size_t)a.n * a.n, {0, 0});
    for (int i = 0; i < a.n; ++i)
        for (int k = 0; k < a.n; ++k) {
            auto v = a.at(i, k);
            if (v == std::complex<double>(0, 0)) continue;
            for (int j = 0; j < a.n; ++j) r.at(i, j) += v * b.at(k, j);
        }
    return r;
}

ComplexMatrix cconj(const ComplexMatrix& a) {
    ComplexMatrix r = a;
    for (auto& x : r.e) x = std::conj(x);
    return r;
}

ComplexMatrix cdagger(const ComplexMatrix& a) {
    ComplexMatrix r;
    r.n = a.n;
    r.e.assign(a.e.size(), {0, 0});
    for (int i = 0; i < a.n; ++i)
        for (int j = 0; j < a.n; ++j) r.at(i, j) = std::conj(a.at(j, i));
    return r;
}

double cdiff(const ComplexMatrix& a, const ComplexMatrix& b) {
    double d = 0;
    for (std::size_t i = 0; i < a.e.size(); ++i) d = std::max(d, std::abs(a.e[i] - b.e[i]));
    return d;
}

ComplexMatrix cidentity(int n) {
    ComplexMatrix r;
    r.n = n;
    r.e.assign((std::size_t)n * n, {0, 0});
    for (int i = 0; i < n; ++i) r.at(i, i) = 1.0;
    return r;
}

ComplexMatrix cneg(const ComplexMatrix& a) {
    ComplexMatrix r = a;
    for (auto& x : r.e) x = -x;
    return r;
}

// sign of U * conj(U) = +-I, or 0 when neither
int antiunitary_square(const ComplexMatrix& u, double tol) {
    ComplexMatrix sq = cmul(u, cconj(u));
    if (cdiff(sq, cidentity(u.n)) <= tol) return 1;
    if (cdiff(sq, cneg(cidentity(u.n))) <= tol) return -1;
    return 0;
}

}  // namespace

TenfoldClass az_detect(const ComplexMatrix& h, const std::optional<ComplexMatrix>& u_t,
                       const std::optional<ComplexMatrix>& u_c, double tol) {
    if (tol < 0) tol = 1e-9 * std::max(1.0, matnorm(h));
    if (cdiff(h, cdagger(h)) > tol) throw invalid_symmetry_data("hamiltonian is not hermitian");
    int t = 0, c = 0;
    if (u_t) {
        if (cdiff(cmul(*u_t, cdagger(*u_t)), cidentity(h.n)) > tol)
            throw invalid_symmetry_data("T operator is not unitary");
        if (cdiff(cmul(cmul(*u_t, cconj(h)), cdagger(*u_t)), h) > tol)
            throw invalid_symmetry_data("time reversal relation T H T^-1 = H fails");
        t = antiunitary_square(*u_t, tol);
        if (t == 0) throw invalid_antiunitary("T^2 is neither +1 nor -1");
    }
    if (u_c) {
        if (cdiff(cmul(*u_c, cdagger(*u_c)), cidentity(h.n)) > tol)
            throw invalid_symmetry_data("C operator is not unitary");
        if (cdiff(cmul(cmul(*u_c, cconj(h)), cdagger(*u_c)), cneg(h)) > tol)
            throw invalid_symmetry_data("particle-hole relation C H C^-1 = -H fails");
        c = antiunitary_square(*u_c, tol);
        if (c == 0) throw invalid_antiunitary("C^2 is neither +1 nor -1");
    }
    int s = 0;
    if (t != 0 && c != 0)
        for (const auto& row : tenfold_table())
            if (row.trs == t && row.phs == c) s = row.chiral;
    return az_lookup(t, c, s);
}

TenfoldClass az_detect_exact(const CycMat& h, const std::optional<CycMat>& u_t,
                             const std::optional<CycMat>& u_c) {
    if (!h.eq(h.dagger())) throw invalid_symmetry_data("hamiltonian is not hermitian");
    int t = 0, c = 0;
    CycMat id = CycMat::identity(h.n);
    auto square_sign = [&](const CycMat& u) {
        CycMat sq = u.mul(u.conj());
        if (sq.eq(id)) return 1;
        if (sq.eq(id.neg())) return -1;
        return 0;
    };
    if (u_t) {
        if (!u_t->mul(u_t->dagger()).eq(id)) throw invalid_symmetry_data("T operator is not unitary");
        if (!u_t->mul(h.conj()).mul(u_t->dagger()).eq(h))
            throw invalid_symmetry_data("time reversal relation T H T^-1 = H fails");
        t = square_sign(*u_t);
        if (t == 0) throw invalid_antiunitary("T^2 is neither +1 nor -1");
    }
    if (u_c) {
        if (!u_c->mul(u_c->dagger()).eq(id)) throw invalid_symmetry_data("C operator is not unitary");
        if (!u_c->mul(h.conj()).mul(u_c->dagger()).eq(h.neg()))
            throw invalid_symmetry_data("particle-hole relation C H C^-1 = -H fails");
        c = square_sign(*u_c);
        if (c == 0) throw invalid_antiunitary("C^2 is neither +1 nor -1");
    }
    int s = 0;
    if (t != 0 && c != 0)
        for (const auto& row : tenfold_table())
            if (row.trs == t && row.phs == c) s = row.chiral;
    return az_lookup(t, c, s);
}

}  // namespace magb
