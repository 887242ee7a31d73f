#include "magb/brauer.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <thread>

namespace magb {

BrauerContext::BrauerContext(MagneticGroup m, const Budget& budget)
    : BrauerContext(m, h2_units(m, budget)) {}

BrauerContext::BrauerContext(MagneticGroup m, CohomologyGroup h2)
    : m_(std::move(m)), h2_(std::move(h2)), homs_(hom_to_z2(m_)) {
    if (h2_.base.canonical_key() != m_.canonical_key())
        throw invalid_parameter("units presentation belongs to a different group");
    for (std::size_t i = 0; i < homs_.size(); ++i) hom_index_[homs_[i]] = (int)i;
    // sign classes are pure functions of (psi0, psi1, a0 a1); precompute them all
    for (std::size_t i = 0; i < homs_.size(); ++i)
        for (std::size_t j = 0; j < homs_.size(); ++j)
            for (int b = 0; b < 2; ++b) {
                const auto& p0 = homs_[i];
                const auto& p1 = homs_[j];
                Cochain cup = cup_z2(m_, p0, p1);
                if (b) {
                    std::vector<std::uint8_t> phi(m_.phi.begin(), m_.phi.end());
                    Cochain c1 = cup_z2(m_, p0, phi);
                    Cochain c2 = cup_z2(m_, p1, phi);
                    for (std::size_t v = 0; v < cup.values.size(); ++v)
                        cup.values[v] = normalize_value(cup.model,
                                                        cup.values[v] + c1.values[v] + c2.values[v]);
                }
                CocycleClass cls = class_of(h2_, iota(m_, cup));
                sign_cache_[{{(int)i, (int)j}, b != 0}] = cls.coords;
            }
}

std::vector<Int> BrauerContext::sign_class(const std::vector<std::uint8_t>& p0,
                                           const std::vector<std::uint8_t>& p1,
                                           bool with_phi) const {
    auto i = hom_index_.find(p0);
    auto j = hom_index_.find(p1);
    if (i == hom_index_.end() || j == hom_index_.end())
        throw invalid_parameter("psi component is not a homomorphism of this group");
    return sign_cache_.at({{i->second, j->second}, with_phi});
}

std::vector<Int> BrauerContext::reduce_lam(std::vector<Int> lam) const {
    const auto& d = h2_.invariant_factors;
    if (lam.size() != d.size()) throw invalid_parameter("lambda coordinate count mismatch");
    for (std::size_t i = 0; i < lam.size(); ++i) {
        Int r;
        mpz_fdiv_r(r.get_mpz_t(), lam[i].get_mpz_t(), d[i].get_mpz_t());
        lam[i] = r;
    }
    return lam;
}

BrauerElement BrauerContext::identity() const {
    BrauerElement e;
    e.lam.assign(h2_.invariant_factors.size(), Int(0));
    e.psi.assign(m_.order(), 0);
    e.a = 0;
    return e;
}

BrauerElement BrauerContext::make(std::vector<Int> lam, std::vector<std::uint8_t> psi, int a) const {
    if (!hom_index_.count(psi)) throw invalid_parameter("psi is not a homomorphism G -> Z/2");
    BrauerElement e;
    e.lam = reduce_lam(std::move(lam));
    e.psi = std::move(psi);
    e.a = (std::uint8_t)(a & 1);
    return e;
}

BrauerElement BrauerContext::mul(const BrauerElement& x, const BrauerElement& y) const {
    bool twist = x.a && y.a;
    std::vector<Int> lam(x.lam.size());
    std::vector<Int> sign = sign_class(x.psi, y.psi, twist);
    for (std::size_t i = 0; i < lam.size(); ++i) lam[i] = x.lam[i] + y.lam[i] + sign[i];
    BrauerElement out;
    out.lam = reduce_lam(std::move(lam));
    out.psi.resize(m_.order());
    for (int g = 0; g < m_.order(); ++g)
        out.psi[g] = (std::uint8_t)(x.psi[g] ^ y.psi[g] ^ (twist ? m_.phi[g] : 0));
    out.a = (std::uint8_t)(x.a ^ y.a);
    return out;
}

Int BrauerContext::order_of(const BrauerElement& x) const {
    BrauerElement id = identity();
    BrauerElement cur = x;
    Int k = 1;
    while (!(cur == id)) {
        cur = mul(cur, x);
        k += 1;
        if (k > Int(1) << 20) throw domain_error("internal: runaway element order");
    }
    return k;
}

BrauerElement BrauerContext::inv(const BrauerElement& x) const {
    Int n = order_of(x);
    BrauerElement id = identity();
    BrauerElement cur = id;
    for (Int i = 0; i < n - 1; ++i) cur = mul(cur, x);
    return cur;
}

std::vector<BrauerElement> BrauerContext::elements() const {
    std::vector<BrauerElement> out;
    std::vector<BrauerElement> prime = elements_prime();
    for (const auto& e : prime) out.push_back(e);
    for (auto e : prime) {
        e.a = 1;
        out.push_back(e);
    }
    return out;
}

std::vector<BrauerElement> BrauerContext::elements_prime() const {
    std::vector<BrauerElement> out;
    const auto& d = h2_.invariant_factors;
    std::vector<Int> lam(d.size(), Int(0));
    std::function<void(std::size_t)> rec = [&](std::size_t pos) {
        if (pos == d.size()) {
            for (const auto& psi : homs_) {
                BrauerElement e;
                e.lam = lam;
                e.psi = psi;
                e.a = 0;
                out.push_back(e);
            }
            return;
        }
        for (Int v = 0; v < d[pos]; ++v) {
            lam[pos] = v;
            rec(pos + 1);
        }
    };
    rec(0);
    return out;
}

BrauerGroupStructure BrauerContext::census(const std::vector<BrauerElement>& elems, int jobs) const {
    std::vector<Int> orders(elems.size());
    jobs = std::max(1, jobs);
    if (jobs == 1) {
        for (std::size_t i = 0; i < elems.size(); ++i) orders[i] = order_of(elems[i]);
    } else {
        std::vector<std::thread> pool;
        std::size_t chunk = (elems.size() + jobs - 1) / jobs;
        for (int t = 0; t < jobs; ++t) {
            std::size_t lo = t * chunk, hi = std::min(elems.size(), lo + chunk);
            pool.emplace_back([&, lo, hi] {
                for (std::size_t i = lo; i < hi; ++i) orders[i] = order_of(elems[i]);
            });
        }
        for (auto& th : pool) th.join();
    }
    BrauerGroupStructure s;
    s.order = (long)elems.size();
    s.invariant_factors = invariant_factors_from_orders(orders);
    return s;
}

BrauerGroupStructure BrauerContext::structure(int jobs) const {
    BrauerGroupStructure s = census(elements(), jobs);
    BrauerElement alpha = identity();
    alpha.a = 1;
    s.generators.push_back({"alpha(1)", alpha, order_of(alpha)});
    // F2-basis of Hom(G, Z/2)
    std::set<std::vector<std::uint8_t>> span{std::vector<std::uint8_t>(m_.order(), 0)};
    for (const auto& psi : homs_) {
        if (span.count(psi)) continue;
        std::set<std::vector<std::uint8_t>> grown = span;
        for (const auto& s0 : span) {
            std::vector<std::uint8_t> x(m_.order());
            for (int g = 0; g < m_.order(); ++g) x[g] = s0[g] ^ psi[g];
            grown.insert(x);
        }
        span = std::move(grown);
        BrauerElement e = identity();
        e.psi = psi;
        std::string bits;
        for (auto b : psi) bits += char('0' + b);
        s.generators.push_back({"sigma(psi=" + bits + ")", e, order_of(e)});
    }
    for (std::size_t i = 0; i < h2_.invariant_factors.size(); ++i) {
        BrauerElement e = identity();
        e.lam[i] = 1;
        s.generators.push_back(
            {"EndV(lambda_" + std::to_string(i) + ")", e, order_of(e)});
    }
    return s;
}

BrauerGroupStructure BrauerContext::structure_prime() const {
    BrauerGroupStructure s = census(elements_prime(), 1);
    return s;
}

BrauerGroupStructure BrauerContext::structure_doubleprime() const {
    std::vector<BrauerElement> elems;
    for (const auto& e : elements_prime())
        if (std::all_of(e.psi.begin(), e.psi.end(), [](std::uint8_t b) { return b == 0; }))
            elems.push_back(e);
    return census(elems, 1);
}

namespace {

template <class Elem, class Mul>
std::vector<Int> generic_orders(const std::vector<Elem>& elems, const Elem& id, Mul&& mul) {
    std::vector<Int> orders;
    orders.reserve(elems.size());
    for (const auto& x : elems) {
        Elem cur = x;
        Int k = 1;
        while (!(cur == id)) {
            cur = mul(cur, x);
            k += 1;
        }
        orders.push_back(k);
    }
    return orders;
}

struct RiehmElem {
    std::vector<Int> lam;
    int hom = 0;
    int c = 0;
    bool operator==(const RiehmElem& o) const { return lam == o.lam && hom == o.hom && c == o.c; }
};

}  // namespace

RiehmGroupStructure riehm_grbr(const FiniteGroup& g, char field, const Budget& budget) {
    if (field != 'R' && field != 'C') throw invalid_parameter("field must be R or C");
    MagneticGroup plain = plain_group(g);
    auto homs = hom_to_z2(plain);
    int wall = field == 'R' ? 8 : 2;  // |GrBr(R)| = 8, |GrBr(C)| = 2

    std::vector<Int> factors;  // of H^2(G, k^*)
    std::vector<std::vector<Int>> cup_class(homs.size() * homs.size());
    if (field == 'C') {
        CohomologyGroup units = h2_units(plain, budget);
        factors = units.invariant_factors;
        for (std::size_t i = 0; i < homs.size(); ++i)
            for (std::size_t j = 0; j < homs.size(); ++j)
                cup_class[i * homs.size() + j] =
                    class_of(units, iota(plain, cup_z2(plain, homs[i], homs[j]))).coords;
    } else {
        CohomologyGroup h2z2 = cohomology(plain, model_Zmod(2, false), 2, budget);
        factors = h2z2.invariant_factors;
        for (std::size_t i = 0; i < homs.size(); ++i)
            for (std::size_t j = 0; j < homs.size(); ++j)
                cup_class[i * homs.size() + j] = h2z2.coords_of(cup_z2(plain, homs[i], homs[j]));
    }

    auto reduce = [&](std::vector<Int> lam) {
        for (std::size_t i = 0; i < lam.size(); ++i) {
            Int r;
            mpz_fdiv_r(r.get_mpz_t(), lam[i].get_mpz_t(), factors[i].get_mpz_t());
            lam[i] = r;
        }
        return lam;
    };
    auto mul = [&](const RiehmElem& x, const RiehmElem& y) {
        RiehmElem out;
        out.lam.resize(factors.size());
        const auto& tw = cup_class[x.hom * homs.size() + y.hom];
        for (std::size_t i = 0; i < factors.size(); ++i) out.lam[i] = x.lam[i] + y.lam[i] + tw[i];
        out.lam = reduce(out.lam);
        // hom indices form a group under pointwise xor; find the index
        std::vector<std::uint8_t> p(g.order);
        for (int e = 0; e < g.order; ++e) p[e] = homs[x.hom][e] ^ homs[y.hom][e];
        out.hom = (int)(std::find(homs.begin(), homs.end(), p) - homs.begin());
        out.c = (x.c + y.c) % wall;
        return out;
    };

    std::vector<RiehmElem> elems;
    std::vector<Int> lam(factors.size(), Int(0));
    std::function<void(std::size_t)> rec = [&](std::size_t pos) {
        if (pos == factors.size()) {
            for (std::size_t h = 0; h < homs.size(); ++h)
                for (int c = 0; c < wall; ++c) elems.push_back({lam, (int)h, c});
            return;
        }
        for (Int v = 0; v < factors[pos]; ++v) {
            lam[pos] = v;
            rec(pos + 1);
        }
    };
    rec(0);

    RiehmElem id{std::vector<Int>(factors.size(), Int(0)), 0, 0};
    // index 0 must be the zero hom (homs are sorted, zero table is minimal)
    std::vector<Int> orders = generic_orders(elems, id, mul);
    RiehmGroupStructure out;
    out.field = field;
    out.order = (long)elems.size();
    out.invariant_factors = invariant_factors_from_orders(orders);
    return out;
}

BrauerContext core_context(const MagneticGroup& m, const Budget& budget) {
    return BrauerContext(plain_group(core(m).as_group()), budget);
}

BrauerElement restrict_to_core(const BrauerContext& ctx, const BrauerElement& x,
                               const BrauerContext& core_ctx) {
    Subgroup g0 = core(ctx.group());
    const FiniteGroup core_group = core_ctx.group().group;
    if (core_group.order != (int)g0.members.size())
        throw invalid_parameter("core context does not match ker(phi)");
    // lambda: restrict the combined cocycle values to core pairs
    Cochain full = ctx.h2().combine(x.lam);
    TupleSpace ts_parent(ctx.group().group);
    Cochain restricted = Cochain::zero(core_ctx.group(), model_QmodZ(), 2);
    TupleSpace ts_core(core_group);
    int pair[2];
    for (long r = 0; r < (long)restricted.values.size(); ++r) {
        ts_core.decode(r, 2, pair);
        int parent_pair[2] = {g0.members[pair[0]], g0.members[pair[1]]};
        long idx = ts_parent.encode(parent_pair, 2);
        restricted.values[r] = idx >= 0 ? full.values[idx] : Rat(0);
    }
    std::vector<Int> lam = class_of(core_ctx.h2(), restricted).coords;
    std::vector<std::uint8_t> psi(core_group.order);
    for (int i = 0; i < core_group.order; ++i) psi[i] = x.psi[g0.members[i]];
    return core_ctx.make(std::move(lam), std::move(psi), x.a);
}

bool four_periodic(const MagneticGroup& m, const Budget& budget) {
    if (m.mode != MagneticMode::magnetic) throw invalid_parameter("four_periodic needs a magnetic group");
    CohomologyGroup units = h2_units(m, budget);
    std::vector<std::uint8_t> phi(m.phi.begin(), m.phi.end());
    Cochain c = iota(m, cup_z2(m, phi, phi));  // c(g,h) = phi(g) phi(h) / 2
    return class_of(units, c).trivial();
}

namespace {

// X(g) entries of the tau-twisted regular representation inside M_{|G|}
std::vector<GradedAlgebra::Vec> twisted_regular_action(const GradedAlgebra& alg,
                                                       const MagneticGroup& m,
                                                       const ScalarCocycle& tau) {
    int n = m.order();
    std::vector<GradedAlgebra::Vec> X;
    for (int g = 0; g < n; ++g) {
        GradedAlgebra::Vec v = alg.zero_vec();
        for (int k = 0; k < n; ++k) {
            const Rat& ang = tau.at(g, k);
            Cyclotomic val = Cyclotomic::zeta_pow((int)ang.get_den().get_si(),
                                                  (long)ang.get_num().get_si());
            v[(std::size_t)m.group.mul(g, k) * n + k] = val;
        }
        X.push_back(std::move(v));
    }
    return X;
}

}  // namespace

MECSGA representative_algebra(const BrauerContext& ctx, const BrauerElement& x) {
    const MagneticGroup& m = ctx.group();
    bool lam_zero = std::all_of(x.lam.begin(), x.lam.end(), [](const Int& v) { return is_zero(v); });
    bool psi_zero = std::all_of(x.psi.begin(), x.psi.end(), [](std::uint8_t b) { return b == 0; });

    struct Part {
        GradedAlgebra alg;
        std::vector<GradedAlgebra::Vec> X;
    };
    std::vector<Part> parts;

    if (!lam_zero) {
        Cochain lam_cocycle = ctx.h2().combine(x.lam);
        ScalarCocycle tau = ScalarCocycle::from_cochain(m, lam_cocycle);
        GradedAlgebra end_alg = matrix_algebra(m.order(), 0, std::lcm(std::max(tau.order, 1), 4));
        Part p{end_alg, twisted_regular_action(end_alg, m, tau)};
        parts.push_back(std::move(p));
    }
    if (!psi_zero) {
        GradedAlgebra sigma = complexify(clifford_real(2, 0));
        std::vector<GradedAlgebra::Vec> X;
        for (int g = 0; g < m.order(); ++g)
            X.push_back(x.psi[g] ? sigma.basis_vec(1) : sigma.unit);  // e_1^{psi(g)}
        parts.push_back({std::move(sigma), std::move(X)});
    }
    if (x.a) {
        GradedAlgebra alpha = complexify(clifford_real(1, 0));
        std::vector<GradedAlgebra::Vec> X;
        for (int g = 0; g < m.order(); ++g) X.push_back(alpha.unit);
        parts.push_back({std::move(alpha), std::move(X)});
    }
    if (parts.empty()) return trivial_mecsga(m);

    Part acc = std::move(parts[0]);
    for (std::size_t p = 1; p < parts.size(); ++p) {
        GradedAlgebra t = graded_tensor(acc.alg, parts[p].alg);
        std::vector<GradedAlgebra::Vec> X;
        for (int g = 0; g < m.order(); ++g) {
            GradedAlgebra::Vec v(t.dim, Cyclotomic(Rat(0), t.conductor));
            for (int i = 0; i < acc.alg.dim; ++i) {
                if (acc.X[g][i].is_zero()) continue;
                for (int j = 0; j < parts[p].alg.dim; ++j) {
                    if (parts[p].X[g][j].is_zero()) continue;
                    v[(std::size_t)i * parts[p].alg.dim + j] = acc.X[g][i] * parts[p].X[g][j];
                }
            }
            X.push_back(std::move(v));
        }
        acc = Part{std::move(t), std::move(X)};
    }
    MECSGA out;
    out.alg = std::move(acc.alg);
    out.base = m;
    out.X = std::move(acc.X);
    out.validate();
    return out;
}

BrauerElement decompose_algebra(const BrauerContext& ctx, const MECSGA& a) {
    a.validate();
    const MagneticGroup& m = ctx.group();
    if (m.canonical_key() != a.base.canonical_key())
        throw invalid_parameter("algebra base group does not match the context");
    // psi from the degrees of the implementing elements
    std::vector<std::uint8_t> psi(m.order());
    for (int g = 0; g < m.order(); ++g) psi[g] = (std::uint8_t)a.psi_of(g);
    if (!is_hom_to_z2(m.group, psi))
        throw invalid_action("degrees of the implementing elements are not a homomorphism");
    // a-bit: odd part of the ungraded center detects the odd-type class
    int abit = 0;
    for (const auto& z : ungraded_center(a.alg)) {
        GradedAlgebra::Vec odd = a.alg.zero_vec();
        bool nonzero = false;
        for (int i = 0; i < a.alg.dim; ++i)
            if (a.alg.degrees[i] && !z[i].is_zero()) {
                odd[i] = z[i];
                nonzero = true;
            }
        if (nonzero) {
            abit = 1;
            break;
        }
    }
    // lambda: discrepancy relative to the sigma/alpha reference
    ScalarCocycle tau_a = a.discrepancy();
    BrauerElement ref = ctx.identity();
    ref.psi = psi;
    ref.a = (std::uint8_t)abit;
    MECSGA refalg = representative_algebra(ctx, ref);
    ScalarCocycle tau_r = refalg.discrepancy();
    Cochain lam_cocycle = Cochain::zero(m, model_QmodZ(), 2);
    TupleSpace ts(m.group);
    int pair[2];
    for (long r = 0; r < (long)lam_cocycle.values.size(); ++r) {
        ts.decode(r, 2, pair);
        lam_cocycle.values[r] = mod1(tau_a.at(pair[0], pair[1]) - tau_r.at(pair[0], pair[1]));
    }
    std::vector<Int> lam = class_of(ctx.h2(), lam_cocycle).coords;
    BrauerElement out;
    out.lam = std::move(lam);
    out.psi = std::move(psi);
    out.a = (std::uint8_t)abit;
    return out;
}

}  // namespace magb
