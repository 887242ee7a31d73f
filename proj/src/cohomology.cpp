#include "magb/cohomology.hpp"

#include <algorithm>

namespace magb {

namespace {

void check_cells(long rows, long cols, const Budget& b, const char* what) {
    if (rows * cols > b.max_cells)
        throw resource_limit(std::string("dense elimination budget exceeded for ") + what + ": " +
                             std::to_string(rows) + " x " + std::to_string(cols) + " cells > " +
                             std::to_string(b.max_cells));
}

// basis of the column lattice of P: column-eliminate and keep the staircase
IntMatrix column_lattice_basis(IntMatrix A) {
    int finished = 0;
    for (int r = 0; r < A.rows && finished < A.cols; ++r) {
        for (;;) {
            std::vector<int> js;
            for (int j = finished; j < A.cols; ++j)
                if (!is_zero(A.at(r, j))) js.push_back(j);
            if (js.empty()) break;
            if (js.size() == 1) {
                A.swap_cols(finished, js[0]);
                ++finished;
                break;
            }
            int j0 = js[0];
            for (std::size_t k = 1; k < js.size(); ++k)
                if (abs_less(A.at(r, js[k]), A.at(r, j0))) j0 = js[k];
            for (int j : js) {
                if (j == j0) continue;
                Int q = div_round(A.at(r, j), A.at(r, j0));
                if (!is_zero(q))
                    for (int i = 0; i < A.rows; ++i)
                        if (!is_zero(A.at(i, j0))) A.at(i, j) -= q * A.at(i, j0);
            }
        }
    }
    IntMatrix K(A.rows, finished);
    for (int j = 0; j < finished; ++j)
        for (int i = 0; i < A.rows; ++i) K.at(i, j) = A.at(i, j);
    return K;
}

}  // namespace

Int CohomologyGroup::group_size() const {
    Int n = 1;
    for (const auto& d : invariant_factors) n *= d;
    return n;
}

std::vector<Int> CohomologyGroup::cocycle_vector(const Cochain& c) const {
    // integer lift of a presentation-model cocycle as a vector over the
    // integer-side cochain space
    if (bockstein) {
        // Bockstein: z = delta(rational lift), an integer 3-cochain
        if (c.degree != degree || !(c.model == model))
            throw invalid_parameter("cocycle is not in the presentation model");
        std::vector<int> w;
        if (!is_cocycle(base, c, &w)) {
            std::string msg = "not a cocycle; violated tuple (";
            for (std::size_t i = 0; i < w.size(); ++i) msg += (i ? "," : "") + std::to_string(w[i]);
            throw invalid_cocycle(msg + ")");
        }
        // values are canonical lifts in [0,1); apply the integral delta to them
        Cochain z;
        z.degree = c.degree + 1;
        z.model = model_Z(true);
        z.group_order = c.group_order;
        TupleSpace ts(base.group);
        z.values.assign(ts.count(z.degree), Rat(0));
        std::vector<Triplet> dm = delta_matrix(base, true, c.degree);
        for (const auto& t : dm) z.values[t.r] += Rat(t.v) * c.values[t.c];
        std::vector<Int> out(z.values.size());
        for (std::size_t i = 0; i < z.values.size(); ++i) {
            if (!is_integer(z.values[i]))
                throw invalid_cocycle("Bockstein image has a non-integer value");
            out[i] = z.values[i].get_num();
        }
        return out;
    }
    if (c.degree != degree || !(c.model == model))
        throw invalid_parameter("cocycle is not in the presentation model");
    std::vector<int> w;
    if (!is_cocycle(base, c, &w)) {
        std::string msg = "not a cocycle; violated tuple (";
        for (std::size_t i = 0; i < w.size(); ++i) msg += (i ? "," : "") + std::to_string(w[i]);
        throw invalid_cocycle(msg + ")");
    }
    std::vector<Int> out(c.values.size());
    for (std::size_t i = 0; i < c.values.size(); ++i) out[i] = c.values[i].get_num();
    return out;
}

std::vector<Int> CohomologyGroup::integer_coords(const std::vector<Int>& z) const {
    auto y = ksolver_->solve(z);
    if (!y) throw domain_error("internal: cocycle not in the kernel lattice");
    std::vector<Int> w(U_.rows, Int(0));
    for (int j = 0; j < U_.cols; ++j) {
        if (is_zero((*y)[j])) continue;
        for (int i = 0; i < U_.rows; ++i)
            if (!is_zero(U_.at(i, j))) w[i] += U_.at(i, j) * (*y)[j];
    }
    std::vector<Int> coords;
    for (int p : live_) {
        Int r;
        mpz_fdiv_r(r.get_mpz_t(), w[p].get_mpz_t(), diag_[p].get_mpz_t());
        coords.push_back(r);
    }
    return coords;
}

std::vector<Int> CohomologyGroup::coords_of(const Cochain& c) const {
    return integer_coords(cocycle_vector(c));
}

Cochain CohomologyGroup::combine(const std::vector<Int>& coords) const {
    if (coords.size() != generators.size()) throw invalid_parameter("coordinate count mismatch");
    Cochain out = Cochain::zero(base, model, degree);
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (is_zero(coords[i])) continue;
        Rat s(coords[i]);
        for (std::size_t v = 0; v < out.values.size(); ++v)
            out.values[v] += s * generators[i].values[v];
    }
    normalize_cochain(out);
    return out;
}

CohomologyGroup cohomology(const MagneticGroup& m, CoefficientModel model, int degree,
                           const Budget& budget) {
    if (degree < 1) throw invalid_parameter("cohomology degree must be >= 1");
    if (model.kind == CoeffKind::QmodZ)
        throw invalid_parameter("use h2_units for the C^*_phi presentation");
    TupleSpace ts(m.group);
    long cn = ts.count(degree);
    long cn1 = ts.count(degree + 1);
    long cprev = ts.count(degree - 1);

    CohomologyGroup H;
    H.base = m;
    H.model = model;
    H.degree = degree;

    // kernel lattice of the (possibly mod-m) cocycle condition
    IntMatrix K;
    if (model.kind == CoeffKind::Z) {
        check_cells(cn1, cn, budget, "ker(delta_n)");
        ColEchelon E(cn1, cn, delta_matrix(m, model.twisted, degree));
        K = E.kernel();
    } else {
        check_cells(cn1, cn + cn1, budget, "ker(delta_n mod m)");
        std::vector<Triplet> aug = delta_matrix(m, model.twisted, degree);
        for (long i = 0; i < cn1; ++i) aug.push_back({(int)i, (int)(cn + i), (long)model.m});
        ColEchelon E((int)cn1, (int)(cn + cn1), aug);
        IntMatrix Kfull = E.kernel();
        IntMatrix P((int)cn, Kfull.cols);
        for (int j = 0; j < Kfull.cols; ++j)
            for (long i = 0; i < cn; ++i) P.at((int)i, j) = Kfull.at((int)i, j);
        K = column_lattice_basis(std::move(P));
        if (K.cols != (int)cn)
            throw domain_error("internal: mod-m kernel lattice is not full rank");
    }
    H.K_ = K;
    H.ksolver_ = std::make_unique<ColEchelon>(K);

    // relation columns: im(delta_{n-1}) (+ m * identity for Zmod)
    std::vector<Triplet> rel = delta_matrix(m, model.twisted, degree - 1);
    long rel_cols = cprev;
    H.rel_prim_cols_ = cprev;
    if (model.kind == CoeffKind::Zmod) {
        for (long i = 0; i < cn; ++i) rel.push_back({(int)i, (int)(cprev + i), (long)model.m});
        rel_cols = cprev + cn;
    }
    IntMatrix R = IntMatrix::from_triplets((int)cn, (int)rel_cols, rel);
    H.relsolver_ = std::make_unique<ColEchelon>(R);

    // express relations in kernel coordinates and take the SNF
    IntMatrix Y(K.cols, (int)rel_cols);
    for (int j = 0; j < (int)rel_cols; ++j) {
        auto y = H.ksolver_->solve(R.col(j));
        if (!y) throw domain_error("internal: delta^2 != 0 or unsaturated kernel");
        for (int i = 0; i < K.cols; ++i) Y.at(i, j) = (*y)[i];
    }
    SmithDecomposition S = smith_normal_form(Y);
    if ((int)S.d.size() != K.cols)
        throw domain_error("internal: cohomology has a free summand (unexpected for n >= 1)");
    H.U_ = S.U;
    H.diag_ = S.d;
    for (int i = 0; i < (int)S.d.size(); ++i)
        if (S.d[i] > 1) H.live_.push_back(i);
    for (int p : H.live_) H.invariant_factors.push_back(S.d[p]);

    // generators: columns of K * U^{-1} at the live positions
    ColEchelon usolve(S.U);
    for (int p : H.live_) {
        std::vector<Int> e(S.U.rows, Int(0));
        e[p] = 1;
        auto x = usolve.solve(e);
        if (!x) throw domain_error("internal: U not invertible");
        std::vector<Int> gen = mat_vec(K, *x);
        Cochain g = Cochain::zero(m, model, degree);
        for (std::size_t i = 0; i < gen.size(); ++i) g.values[i] = Rat(gen[i]);
        normalize_cochain(g);
        H.generators.push_back(std::move(g));
    }

    // order witnesses: delta(w) = d * gen (mod m)
    for (std::size_t gi = 0; gi < H.generators.size(); ++gi) {
        std::vector<Int> rhs(cn, Int(0));
        for (long i = 0; i < cn; ++i) {
            Rat v = H.generators[gi].values[i] * Rat(H.invariant_factors[gi]);
            // for Zmod reduce the target into the lattice of representable values
            rhs[i] = v.get_num();  // v integer by construction
        }
        auto w = H.relsolver_->solve(rhs);
        if (!w) throw domain_error("internal: generator order witness missing");
        Cochain wit = Cochain::zero(m, model, degree - 1);
        for (long i = 0; i < cprev; ++i) wit.values[i] = Rat((*w)[i]);
        normalize_cochain(wit);
        H.order_witnesses.push_back(std::move(wit));
    }
    return H;
}

CohomologyGroup h2_units(const MagneticGroup& m, const Budget& budget) {
    CohomologyGroup H3 = cohomology(m, model_Z(true), 3, budget);
    CohomologyGroup U;
    U.base = H3.base;
    U.model = model_QmodZ();
    U.degree = 2;
    U.bockstein = true;
    U.invariant_factors = H3.invariant_factors;
    U.K_ = std::move(H3.K_);
    U.U_ = std::move(H3.U_);
    U.diag_ = std::move(H3.diag_);
    U.live_ = std::move(H3.live_);
    U.ksolver_ = std::move(H3.ksolver_);
    U.relsolver_ = std::move(H3.relsolver_);
    U.rel_prim_cols_ = H3.rel_prim_cols_;

    // convert integer 3-cocycle generators z to Q/Z 2-cocycles:
    // c(g,h) := -(1/N) sum_l z(g,h,l) solves delta(c) = z over Q
    const int N = m.order();
    TupleSpace ts(m.group);
    for (const auto& z : H3.generators) {
        Cochain c = Cochain::zero(m, model_QmodZ(), 2);
        int t[3];
        for (long r = 0; r < (long)z.values.size(); ++r) {
            if (z.values[r] == 0) continue;
            ts.decode(r, 3, t);
            long pair = ts.encode(t, 2);
            // tuples with identity in the first two slots cannot occur
            c.values[pair] -= z.values[r] / Rat(N);
        }
        normalize_cochain(c);
        for (const auto& v : c.values)
            if (!divides(Int(v.get_den()), Int(N)))
                throw domain_error("internal: generator denominator exceeds |G|");
        U.generators.push_back(std::move(c));
    }
    // sanity: generator coordinates must be unit vectors
    for (std::size_t i = 0; i < U.generators.size(); ++i) {
        auto coords = U.coords_of(U.generators[i]);
        for (std::size_t j = 0; j < coords.size(); ++j) {
            Int want = (i == j) ? 1 : 0;
            if (coords[j] != want)
                throw domain_error("internal: units generator has non-unit coordinates");
        }
    }
    // order witnesses at the presentation level: alpha with delta(alpha) = d * gen
    for (std::size_t i = 0; i < U.generators.size(); ++i) {
        Cochain scaled = U.generators[i];
        for (auto& v : scaled.values) v = mod1(v * Rat(U.invariant_factors[i]));
        auto alpha = trivialize(U, scaled, nullptr);
        if (!alpha) throw domain_error("internal: d * generator fails to trivialize");
        U.order_witnesses.push_back(std::move(*alpha));
    }
    return U;
}

CocycleClass class_of(const CohomologyGroup& units, const Cochain& c) {
    if (!units.bockstein) throw invalid_parameter("class_of expects the units presentation");
    return CocycleClass{units.coords_of(c)};
}

std::optional<Cochain> trivialize(const CohomologyGroup& units, const Cochain& c,
                                  std::vector<Int>* coords_out) {
    CocycleClass cls = class_of(units, c);
    if (coords_out) *coords_out = cls.coords;
    if (!cls.trivial()) return std::nullopt;
    const MagneticGroup& m = units.base;
    const int N = m.order();
    TupleSpace ts(m.group);
    // z = delta(lift) over Q, integral because delta(c) = 0 mod 1
    std::vector<Int> z = units.cocycle_vector(c);
    auto w = units.relsolver_->solve(z);
    if (!w) throw domain_error("internal: trivial class but no integer coboundary witness");
    // the solution w IS an integer 2-cochain with delta(w) = z, so
    // u := lift(c) - w is an exact rational 2-cocycle
    std::vector<Rat> u = c.values;
    for (std::size_t i = 0; i < u.size(); ++i) u[i] -= Rat((*w)[i]);
    // averaging homotopy: alpha(g) = (1/N) sum_k u(g, k)
    Cochain alpha = Cochain::zero(m, model_QmodZ(), 1);
    int pair[2];
    for (long r = 0; r < (long)u.size(); ++r) {
        if (u[r] == 0) continue;
        ts.decode(r, 2, pair);
        long gi = ts.encode(pair, 1);
        alpha.values[gi] += u[r] / Rat(N);
    }
    normalize_cochain(alpha);
    // exactness check: delta(alpha) == c in Q/Z
    Cochain check = coboundary(m, alpha);
    for (std::size_t i = 0; i < check.values.size(); ++i)
        if (mod1(check.values[i] - c.values[i]) != 0)
            throw domain_error("internal: averaging homotopy failed");
    return alpha;
}

}  // namespace magb
