#include <doctest.h>

#include "helpers.hpp"
#include "magb/cohomology.hpp"
#include "magb/magrep.hpp"

using namespace magb;
using magbtest::census;

namespace {

CycMat mat2(long a, long b, long c, long d) {
    CycMat m(2);
    m.at(0, 0) = Cyclotomic(Rat(a), 4);
    m.at(0, 1) = Cyclotomic(Rat(b), 4);
    m.at(1, 0) = Cyclotomic(Rat(c), 4);
    m.at(1, 1) = Cyclotomic(Rat(d), 4);
    return m;
}

CycMat i_sigma_y() { return mat2(0, 1, -1, 0); }
CycMat sigma_x() { return mat2(0, 1, 1, 0); }
CycMat sigma_z() { return mat2(1, 0, 0, -1); }

MagneticRep trivial_rep(const MagneticGroup& m, int dim) {
    MagneticRep r;
    r.base = m;
    r.dim = dim;
    r.mats.assign(m.order(), CycMat::identity(dim));
    return r;
}

// the strict quaternionic representation of (Z/4, mod2):
// t -> i sigma_y, t^2 -> -I, t^3 -> -i sigma_y
MagneticRep quaternionic_z4() {
    MagneticRep r;
    r.base = magbtest::cyclic_mod2(4);
    r.dim = 2;
    r.mats = {CycMat::identity(2), i_sigma_y(), CycMat::identity(2).neg(), i_sigma_y().neg()};
    return r;
}

}  // namespace

TEST_CASE("twisted homomorphism verification") {
    CHECK(verify_twisted_hom(trivial_rep(magbtest::cyclic_mod2(4), 2)).ok);

    MagneticRep q = quaternionic_z4();
    CHECK(verify_twisted_hom(q).ok);
    // Lambda_t conj(Lambda_t) = (i sigma_y)^2 = -I = Lambda_{t^2}
    CHECK(q.mats[1].mul(q.mats[1].conj()).eq(q.mats[2]));

    MagneticRep broken = q;
    broken.mats[2] = CycMat::identity(2);
    TwistedHomReport rep = verify_twisted_hom(broken);
    CHECK(!rep.ok);
    CHECK(rep.g == 1);
    CHECK(rep.h == 1);
}

TEST_CASE("cocycle extraction") {
    MagneticRep t = trivial_rep(magbtest::cyclic_mod2(4), 2);
    ScalarCocycle tau = extract_cocycle(t);
    CHECK(tau.order == 1);
    for (const auto& a : tau.angle) CHECK(a == 0);

    // (Z/2, id) with Lambda_g = i sigma_y: tau(g,g) = -1
    MagneticGroup z2 = magbtest::cyclic_mod2(2);
    MagneticRep r;
    r.base = z2;
    r.dim = 2;
    r.mats = {CycMat::identity(2), i_sigma_y()};
    ScalarCocycle q = extract_cocycle(r);
    CHECK(q.at(1, 1) == make_rat(1, 2));
    CHECK(q.identity_holds(z2));

    // sigma_z / sigma_x K projective rep of (Z/2 x Z/2, pi2)
    MagneticGroup klein = magbtest::product_pi2(2);
    MagneticRep pr;
    pr.base = klein;
    pr.dim = 2;
    pr.mats.resize(4, CycMat::identity(2));
    pr.mats[2] = sigma_z();             // (1,0)
    pr.mats[1] = sigma_x();             // (0,1), antilinear
    pr.mats[3] = sigma_z().mul(sigma_x());  // a chosen lift of (1,1)
    ScalarCocycle tau2 = extract_cocycle(pr);
    CHECK(tau2.identity_holds(klein));
    // the commutator discrepancy is the central -1
    Rat diff = mod1(tau2.at(2, 1) - tau2.at(1, 2));
    CHECK(diff == make_rat(1, 2));
    // delta(extract_cocycle) = 0 certified for all projective examples above
}

TEST_CASE("non-projective input is rejected with a witness pair") {
    MagneticGroup z2 = plain_group(cyclic(2));
    MagneticRep r;
    r.base = z2;
    r.dim = 2;
    r.mats = {CycMat::identity(2), mat2(1, 1, 0, 1)};
    CHECK_THROWS_AS((void)extract_cocycle(r), not_projective);
}

TEST_CASE("cocycle to extension group") {
    MagneticGroup z2 = magbtest::cyclic_mod2(2);
    ExtensionGroup triv = cocycle_to_extension(ScalarCocycle::trivial(z2), z2);
    CHECK(triv.group.order == 2);

    // tau(g,g) = -1 gives Z/4
    MagneticRep r;
    r.base = z2;
    r.dim = 2;
    r.mats = {CycMat::identity(2), i_sigma_y()};
    ExtensionGroup e = cocycle_to_extension(extract_cocycle(r), z2);
    CHECK(e.m == 2);
    CHECK(e.group.order == 4);
    CHECK(census(e.group) == census(cyclic(4)));
    // mu_m is elementwise central exactly when m <= 2
    for (int z : e.mu_elements)
        for (int x = 0; x < e.group.order; ++x) CHECK(e.group.mul(z, x) == e.group.mul(x, z));

    // the sigma_z/sigma_x cocycle on the Klein group gives a nonabelian order-8 group
    MagneticGroup klein = magbtest::product_pi2(2);
    MagneticRep pr;
    pr.base = klein;
    pr.dim = 2;
    pr.mats.resize(4, CycMat::identity(2));
    pr.mats[2] = sigma_z();
    pr.mats[1] = sigma_x();
    pr.mats[3] = sigma_z().mul(sigma_x());
    ExtensionGroup e8 = cocycle_to_extension(extract_cocycle(pr), klein);
    CHECK(e8.group.order == 8);
    CHECK(!e8.group.is_abelian());

    // a mu_m fiber with m > 2 is twisted by the antilinear elements, so it is
    // no longer elementwise central
    MagneticRep proj4;
    proj4.base = magbtest::cyclic_mod2(4);
    proj4.dim = 1;
    proj4.mats.assign(4, CycMat::identity(1));
    proj4.mats[1].at(0, 0) = Cyclotomic::zeta(8);
    proj4.mats[2].at(0, 0) = Cyclotomic::i();
    proj4.mats[3].at(0, 0) = Cyclotomic::zeta(8).pow(3);
    ScalarCocycle tau4 = extract_cocycle(proj4);
    REQUIRE(tau4.order > 2);
    ExtensionGroup ext4 = cocycle_to_extension(tau4, proj4.base);
    CHECK(ext4.group.order == tau4.order * 4);
    bool all_central = true;
    for (int z : ext4.mu_elements)
        for (int x = 0; x < ext4.group.order; ++x)
            if (ext4.group.mul(z, x) != ext4.group.mul(x, z)) all_central = false;
    CHECK(!all_central);
}

TEST_CASE("tensor products of representations") {
    MagneticGroup z4 = magbtest::cyclic_mod2(4);
    MagneticRep q = quaternionic_z4();
    MagneticRep t = tensor(q, trivial_rep(z4, 1));
    CHECK(t.dim == 2);
    for (int g = 0; g < 4; ++g) CHECK(t.mats[g].eq(q.mats[g]));

    MagneticRep qq = tensor(q, q);
    CHECK(qq.dim == 4);
    CHECK(verify_twisted_hom(qq).ok);  // strict (x) strict is strict

    // cocycles multiply pointwise
    MagneticGroup z2 = magbtest::cyclic_mod2(2);
    MagneticRep r;
    r.base = z2;
    r.dim = 2;
    r.mats = {CycMat::identity(2), i_sigma_y()};
    ScalarCocycle tau = extract_cocycle(r);
    ScalarCocycle tau2 = extract_cocycle(tensor(r, r));
    for (int g = 0; g < 2; ++g)
        for (int h = 0; h < 2; ++h)
            CHECK(tau2.at(g, h) == mod1(tau.at(g, h) + tau.at(g, h)));
}

TEST_CASE("equivalence of representations") {
    MagneticRep q = quaternionic_z4();
    auto self = equival_reps(q, q);
    REQUIRE(self.has_value());

    // conjugate by a fixed P and recover an intertwiner
    CycMat p = mat2(1, 2, 0, 1);
    MagneticRep conj_rep = q;
    auto pinv = p.inverse();
    for (int g = 0; g < 4; ++g) {
        CycMat m = q.base.antilinear(g) ? p.mul(q.mats[g]).mul(pinv->conj()) : p.mul(q.mats[g]).mul(*pinv);
        conj_rep.mats[g] = m;
    }
    CHECK(verify_twisted_hom(conj_rep).ok);
    auto found = equival_reps(conj_rep, q, 3, 100000);
    REQUIRE(found.has_value());
    for (int g = 0; g < 4; ++g) {
        CycMat lhs = q.mats[g].mul(q.base.antilinear(g) ? found->conj() : *found);
        CHECK(lhs.eq(found->mul(conj_rep.mats[g])));
    }

    // plain Z/2: sign vs trivial have only the zero intertwiner
    MagneticGroup plain = plain_group(cyclic(2));
    MagneticRep triv1;
    triv1.base = plain;
    triv1.dim = 1;
    triv1.mats = {CycMat::identity(1), CycMat::identity(1)};
    MagneticRep sign = triv1;
    sign.mats[1] = CycMat::identity(1).neg();
    CHECK(!equival_reps(sign, triv1).has_value());

    // magnetic (Z/2, id): the same pair IS equivalent (M = i works)
    MagneticGroup z2 = magbtest::cyclic_mod2(2);
    MagneticRep mtriv = triv1, msign = sign;
    mtriv.base = z2;
    msign.base = z2;
    CHECK(equival_reps(msign, mtriv).has_value());
}

TEST_CASE("commutants and Wigner types") {
    MagneticGroup z2 = magbtest::cyclic_mod2(2);
    CommutantReport r1 = commutant(trivial_rep(z2, 1));
    CHECK(r1.real_dimension == 1);
    CHECK(r1.wigner_type == 'R');

    CommutantReport rh = commutant(quaternionic_z4());
    CHECK(rh.real_dimension == 4);
    CHECK(rh.wigner_type == 'H');
    // the defining equations hold exactly on every basis element
    MagneticRep q = quaternionic_z4();
    for (const auto& x : rh.basis)
        for (int g = 0; g < 4; ++g) {
            CycMat lhs = q.mats[g].mul(q.base.antilinear(g) ? x.conj() : x);
            CHECK(lhs.eq(x.mul(q.mats[g])));
        }

    // conjugation invariance of the dimension
    CycMat p = mat2(1, 1, 0, 1);
    MagneticRep conj_rep = q;
    auto pinv = p.inverse();
    for (int g = 0; g < 4; ++g)
        conj_rep.mats[g] = q.base.antilinear(g) ? p.mul(q.mats[g]).mul(pinv->conj())
                                                : p.mul(q.mats[g]).mul(*pinv);
    CHECK(commutant(conj_rep).real_dimension == 4);
}

TEST_CASE("graded commutant classifies the chiral-only example as AIII") {
    // plain Z/2 graded by psi = id, acting by sigma_x: only S is present
    MagneticGroup plain = plain_group(cyclic(2));
    MagneticRep r;
    r.base = plain;
    r.dim = 2;
    r.mats = {CycMat::identity(2), sigma_x()};
    r.psi = std::vector<std::uint8_t>{0, 1};
    r.even_dim = 1;
    CommutantReport c = commutant(r);
    REQUIRE(c.dyson.has_value());
    CHECK(c.dyson->tag == Tenfold::C1);
    CHECK(c.dyson->az_label == "AIII");
}

TEST_CASE("trivializability matches strict lifts") {
    // quaternionic rep of (Z/2, id): cocycle class is nontrivial, no strict lift
    MagneticGroup z2 = magbtest::cyclic_mod2(2);
    MagneticRep r;
    r.base = z2;
    r.dim = 2;
    r.mats = {CycMat::identity(2), i_sigma_y()};
    CohomologyGroup u = h2_units(z2);
    Cochain c = extract_cocycle(r).to_cochain(z2);
    CHECK(!trivialize(u, c).has_value());

    // a 1-dim projective rep of (Z/4, mod2) whose discrepancy is exactly
    // phi cup phi; its class vanishes and the lift rescales it to a strict rep
    MagneticGroup z4 = magbtest::cyclic_mod2(4);
    MagneticRep s;
    s.base = z4;
    s.dim = 1;
    s.mats.assign(4, CycMat::identity(1));
    s.mats[2].at(0, 0) = Cyclotomic(Rat(-1), 4);
    s.mats[3].at(0, 0) = Cyclotomic(Rat(-1), 4);
    ScalarCocycle tau = extract_cocycle(s);
    CHECK(tau.at(1, 1) == make_rat(1, 2));
    CHECK(tau.at(2, 1) == 0);
    CohomologyGroup u4 = h2_units(z4);
    Cochain c4 = tau.to_cochain(z4);
    auto alpha = trivialize(u4, c4);
    REQUIRE(alpha.has_value());
    // alpha rescales the representation to a strict one
    MagneticRep lifted = s;
    TupleSpace ts(z4.group);
    for (int g = 0; g < 4; ++g) {
        if (g == z4.group.identity) continue;
        int one[1] = {g};
        Rat ang = alpha->values[ts.encode(one, 1)];
        Cyclotomic scale = Cyclotomic::zeta_pow((int)ang.get_den().get_si(),
                                                (long)ang.get_num().get_si());
        for (auto& e : lifted.mats[g].e) e = scale.inverse() * e;
    }
    CHECK(verify_twisted_hom(lifted).ok);
}
