#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "helpers.hpp"
#include "magb/groupspec.hpp"
#include "magb/serialize.hpp"

using namespace magb;
using magbtest::census;

TEST_CASE("group spec mini-language") {
    CHECK(parse_group_spec("cyclic:4").group.order == 4);
    CHECK(parse_group_spec("dihedral:3").group.order == 6);
    CHECK(parse_group_spec("quaternion:8").group.order == 8);
    CHECK(parse_group_spec("product(cyclic:2,cyclic:3)").group.order == 6);
    CHECK(census(parse_group_spec("semidirect(cyclic:4,cyclic:2,perm=[0,3,2,1])").group) ==
          census(dihedral(4)));
    CHECK(census(parse_group_spec("pullback(cyclic:4,mod2,4)").group) ==
          census(direct_product(cyclic(2), cyclic(4))));
    CHECK(parse_group_spec("pullback(product(cyclic:2,cyclic:2),proj2,4)").group.order == 8);

    CHECK_THROWS_AS(parse_group_spec("cyclic:"), parse_error);
    CHECK_THROWS_AS(parse_group_spec("frobnicate:3"), parse_error);
    CHECK_THROWS_AS(parse_group_spec("cyclic:4extra"), parse_error);
    CHECK_THROWS_AS(parse_group_spec("quaternion:16"), invalid_parameter);
    CHECK_THROWS_AS(parse_group_spec("cyclic:0"), invalid_parameter);
    CHECK_THROWS_AS(parse_group_spec("semidirect(cyclic:4,cyclic:2,perm=[1,0,3,2])"),
                    invalid_action);
}

TEST_CASE("phi specs") {
    CHECK(parse_magnetic_group("cyclic:4", "mod2").antilinear(1));
    CHECK(parse_magnetic_group("cyclic:2", "id").antilinear(1));
    CHECK(parse_magnetic_group("cyclic:5", "trivial").mode == MagneticMode::plain);
    MagneticGroup prod = parse_magnetic_group("product(cyclic:4,cyclic:2)", "proj2");
    CHECK(prod.antilinear(1));
    CHECK(!prod.antilinear(2));
    MagneticGroup vals = parse_magnetic_group("cyclic:4", "values:[0,1,0,1]");
    CHECK(vals.mode == MagneticMode::magnetic);

    CHECK_THROWS_AS(parse_magnetic_group("cyclic:3", "mod2"), invalid_parameter);
    CHECK_THROWS_AS(parse_magnetic_group("cyclic:4", "proj2"), invalid_parameter);
    CHECK_THROWS_AS(parse_magnetic_group("cyclic:4", "values:[0,1]"), invalid_parameter);
    CHECK_THROWS_AS(parse_magnetic_group("cyclic:4", "wibble"), parse_error);
}

TEST_CASE("table files") {
    namespace fs = std::filesystem;
    std::string path = (fs::temp_directory_path() / "magb-table-test.json").string();
    {
        std::ofstream out(path);
        out << group_to_json(quaternion8()).dump();
    }
    ParsedGroup g = parse_group_spec("table:@" + path);
    CHECK(census(g.group) == census(quaternion8()));
    fs::remove(path);
}

TEST_CASE("cochain json round trip") {
    MagneticGroup m = magbtest::cyclic_mod2(4);
    Cochain c = Cochain::zero(m, model_QmodZ(), 2);
    TupleSpace ts(m.group);
    int pair[2] = {1, 3};
    c.values[ts.encode(pair, 2)] = make_rat(3, 4);
    json j = cochain_to_json(m, c);
    CHECK(j["model"] == "QZt");
    Cochain back = cochain_from_json(m, j);
    CHECK(back.values == c.values);
    CHECK(back.degree == 2);
}

TEST_CASE("graded algebra json round trip") {
    GradedAlgebra a = clifford_real(1, 1);
    json j = graded_algebra_to_json(a);
    GradedAlgebra b = graded_algebra_from_json(j);
    CHECK(b.dim == a.dim);
    CHECK(b.degrees == a.degrees);
    for (int i = 0; i < a.dim; ++i)
        for (int k = 0; k < a.dim; ++k) {
            GradedAlgebra::Vec lhs = a.mul(a.basis_vec(i), a.basis_vec(k));
            GradedAlgebra::Vec rhs = b.mul(b.basis_vec(i), b.basis_vec(k));
            for (int l = 0; l < a.dim; ++l) CHECK(lhs[l] == rhs[l]);
        }
    // a complex algebra survives too
    GradedAlgebra c = matrix_algebra(1, 1, 4);
    GradedAlgebra c2 = graded_algebra_from_json(graded_algebra_to_json(c));
    CHECK(c2.conductor == 4);
    CHECK(c2.dim == 4);
}

TEST_CASE("representation json") {
    MagneticGroup m = magbtest::cyclic_mod2(2);
    json j;
    j["N"] = 4;
    j["dim"] = 2;
    j["phi"] = {0, 1};
    // i sigma_y over Q(i); entries are rational strings (or coefficient arrays)
    j["matrices"]["0"] = json::array({json::array({"1", "0"}), json::array({"0", "1"})});
    j["matrices"]["1"] = json::array({json::array({"0", "1"}), json::array({"-1", "0"})});
    MagneticRep r = rep_from_json(m, j);
    CHECK(r.dim == 2);
    CHECK(r.mats[1].at(0, 1) == Cyclotomic(Rat(1), 4));

    json missing = j;
    missing["matrices"].erase("1");
    CHECK_THROWS_AS((void)rep_from_json(m, missing), invalid_parameter);
}

TEST_CASE("hamiltonian matrices") {
    json j = json::array();
    j.push_back(json::array({json::array({1.0, 0.0}), json::array({0.0, 0.0})}));
    j.push_back(json::array({json::array({0.0, 0.0}), json::array({-1.0, 0.0})}));
    ComplexMatrix h = complex_matrix_from_json(j);
    CHECK(h.at(0, 0) == std::complex<double>(1, 0));
    CHECK(!json_matrix_is_exact(j));

    json je = json::array();
    je.push_back(json::array({"1", "1/2+1/3 i"}));
    je.push_back(json::array({"1/2-1/3 i", "-1"}));
    CHECK(json_matrix_is_exact(je));
    CycMat e = exact_matrix_from_json(je);
    CHECK(e.at(0, 1) == Cyclotomic(make_rat(1, 2), 4) + make_rat(1, 3) * Cyclotomic::i());
    CHECK(e.at(1, 0) == e.at(0, 1).conj());
    CHECK(e.eq(e.dagger()));
}

TEST_CASE("invariant factor pretty printing") {
    CHECK(invariant_factor_string({}) == "trivial");
    CHECK(invariant_factor_string(magbtest::ints({8})) == "Z/8");
    CHECK(invariant_factor_string(magbtest::ints({2, 4})) == "Z/2 x Z/4");
}

TEST_CASE("rational parsing") {
    CHECK(parse_rat("3/4") == make_rat(3, 4));
    CHECK(parse_rat("-7") == Rat(-7));
    CHECK(rat_string(make_rat(-3, 6)) == "-1/2");
    CHECK_THROWS_AS(parse_rat("1/0"), invalid_parameter);
    CHECK_THROWS_AS(parse_rat("abc"), invalid_parameter);
}
