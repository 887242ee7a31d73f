#include "magb/serialize.hpp"

#include <algorithm>

namespace magb {

json group_to_json(const FiniteGroup& g) {
    json rows = json::array();
    for (int r = 0; r < g.order; ++r) {
        json row = json::array();
        for (int c = 0; c < g.order; ++c) row.push_back(g.mul(r, c));
        rows.push_back(row);
    }
    json j;
    j["order"] = g.order;
    j["table"] = rows;
    if (!g.labels.empty()) j["labels"] = g.labels;
    return j;
}

FiniteGroup group_from_json(const json& j) {
    FiniteGroup g = FiniteGroup::from_table(j.at("table").get<std::vector<std::vector<int>>>());
    if (j.contains("labels")) g.labels = j.at("labels").get<std::vector<std::string>>();
    return g;
}

json cochain_to_json(const MagneticGroup& m, const Cochain& c) {
    json values = json::object();
    TupleSpace ts(m.group);
    std::vector<int> t(c.degree);
    for (long r = 0; r < (long)c.values.size(); ++r) {
        if (c.values[r] == 0) continue;
        ts.decode(r, c.degree, t.data());
        std::string key;
        for (int i = 0; i < c.degree; ++i) key += (i ? "," : "") + std::to_string(t[i]);
        values[key] = rat_string(c.values[r]);
    }
    json j;
    j["degree"] = c.degree;
    j["model"] = c.model.name();
    j["values"] = values;
    return j;
}

Cochain cochain_from_json(const MagneticGroup& m, const json& j) {
    CoefficientModel model = CoefficientModel::parse(j.at("model").get<std::string>());
    Cochain c = Cochain::zero(m, model, j.at("degree").get<int>());
    TupleSpace ts(m.group);
    for (auto it = j.at("values").begin(); it != j.at("values").end(); ++it) {
        std::vector<int> t;
        std::string key = it.key();
        std::size_t pos = 0;
        while (pos <= key.size()) {
            std::size_t comma = key.find(',', pos);
            if (comma == std::string::npos) comma = key.size();
            t.push_back(std::stoi(key.substr(pos, comma - pos)));
            pos = comma + 1;
        }
        if ((int)t.size() != c.degree) throw invalid_parameter("cochain key arity mismatch");
        long idx = ts.encode(t.data(), c.degree);
        if (idx < 0) throw invalid_parameter("cochain key contains the identity");
        c.values[idx] = normalize_value(model, parse_rat(it.value().get<std::string>()));
    }
    return c;
}

json brauer_element_to_json(const BrauerElement& e) {
    json lam = json::array();
    for (const auto& v : e.lam) lam.push_back(v.get_str());
    json psi = json::array();
    for (auto b : e.psi) psi.push_back((int)b);
    json j;
    j["lam"] = lam;
    j["psi"] = psi;
    j["a"] = (int)e.a;
    return j;
}

BrauerElement brauer_element_from_json(const BrauerContext& ctx, const json& j) {
    std::vector<Int> lam;
    for (const auto& v : j.at("lam")) lam.push_back(Int(v.get<std::string>()));
    std::vector<std::uint8_t> psi;
    for (const auto& b : j.at("psi")) psi.push_back((std::uint8_t)b.get<int>());
    return ctx.make(std::move(lam), std::move(psi), j.at("a").get<int>());
}

namespace {

json factors_json(const std::vector<Int>& d) {
    json out = json::array();
    for (const auto& v : d) out.push_back(v.get_str());
    return out;
}

std::vector<Int> factors_from_json(const json& j) {
    std::vector<Int> out;
    for (const auto& v : j) out.push_back(Int(v.get<std::string>()));
    return out;
}

json intmatrix_to_json(const IntMatrix& m) {
    json data = json::array();
    for (const auto& v : m.a) data.push_back(v.get_str());
    return json{{"rows", m.rows}, {"cols", m.cols}, {"data", data}};
}

IntMatrix intmatrix_from_json(const json& j) {
    IntMatrix m(j.at("rows").get<int>(), j.at("cols").get<int>());
    const auto& data = j.at("data");
    for (std::size_t i = 0; i < m.a.size(); ++i) m.a[i] = Int(data.at(i).get<std::string>());
    return m;
}

}  // namespace

json brauer_structure_to_json(const BrauerGroupStructure& s) {
    json gens = json::array();
    for (const auto& g : s.generators)
        gens.push_back(json{{"name", g.name},
                            {"order", g.order.get_str()},
                            {"element", brauer_element_to_json(g.element)}});
    return json{{"order", s.order.get_str()},
                {"invariant_factors", factors_json(s.invariant_factors)},
                {"generators", gens}};
}

json riehm_structure_to_json(const RiehmGroupStructure& s) {
    return json{{"field", std::string(1, s.field)},
                {"order", s.order.get_str()},
                {"invariant_factors", factors_json(s.invariant_factors)}};
}

struct CohomologySerde {
    static json dump(const CohomologyGroup& h) {
        json j;
        j["group"] = group_to_json(h.base.group);
        json phi = json::array();
        for (auto b : h.base.phi) phi.push_back((int)b);
        j["phi"] = phi;
        j["mode"] = h.base.mode == MagneticMode::magnetic ? "magnetic" : "plain";
        j["model"] = h.model.name();
        j["degree"] = h.degree;
        j["bockstein"] = h.bockstein;
        j["invariant_factors"] = factors_json(h.invariant_factors);
        json gens = json::array(), wits = json::array();
        for (const auto& g : h.generators) gens.push_back(cochain_to_json(h.base, g));
        for (const auto& w : h.order_witnesses) wits.push_back(cochain_to_json(h.base, w));
        j["generators"] = gens;
        j["order_witnesses"] = wits;
        j["K"] = intmatrix_to_json(h.K_);
        j["U"] = intmatrix_to_json(h.U_);
        j["diag"] = factors_json(h.diag_);
        j["live"] = h.live_;
        j["rel_prim_cols"] = h.rel_prim_cols_;
        return j;
    }

    static CohomologyGroup load(const json& j) {
        CohomologyGroup h;
        FiniteGroup g = group_from_json(j.at("group"));
        std::vector<std::uint8_t> phi;
        for (const auto& b : j.at("phi")) phi.push_back((std::uint8_t)b.get<int>());
        MagneticMode mode = j.at("mode").get<std::string>() == "magnetic" ? MagneticMode::magnetic
                                                                          : MagneticMode::plain;
        h.base = MagneticGroup(std::move(g), std::move(phi), mode);
        h.model = CoefficientModel::parse(j.at("model").get<std::string>());
        h.degree = j.at("degree").get<int>();
        h.bockstein = j.at("bockstein").get<bool>();
        h.invariant_factors = factors_from_json(j.at("invariant_factors"));
        for (const auto& gj : j.at("generators")) h.generators.push_back(cochain_from_json(h.base, gj));
        for (const auto& wj : j.at("order_witnesses"))
            h.order_witnesses.push_back(cochain_from_json(h.base, wj));
        h.K_ = intmatrix_from_json(j.at("K"));
        h.U_ = intmatrix_from_json(j.at("U"));
        h.diag_ = factors_from_json(j.at("diag"));
        h.live_ = j.at("live").get<std::vector<int>>();
        h.rel_prim_cols_ = j.at("rel_prim_cols").get<long>();
        h.ksolver_ = std::make_unique<ColEchelon>(h.K_);
        // rebuild the relation solver from the differential
        int int_degree = h.bockstein ? 3 : h.degree;
        bool tw = h.bockstein ? true : h.model.twisted;
        TupleSpace ts(h.base.group);
        std::vector<Triplet> rel = delta_matrix(h.base, tw, int_degree - 1);
        long cn = ts.count(int_degree);
        long cols = ts.count(int_degree - 1);
        if (!h.bockstein && h.model.kind == CoeffKind::Zmod) {
            for (long i = 0; i < cn; ++i) rel.push_back({(int)i, (int)(cols + i), (long)h.model.m});
            cols += cn;
        }
        h.relsolver_ = std::make_unique<ColEchelon>((int)cn, (int)cols, rel);
        return h;
    }
};

json cohomology_group_to_json(const CohomologyGroup& h) { return CohomologySerde::dump(h); }
CohomologyGroup cohomology_group_from_json(const json& j) { return CohomologySerde::load(j); }

namespace {

Cyclotomic field_element_from_json(const json& v, int conductor) {
    if (v.is_string()) return Cyclotomic(parse_rat(v.get<std::string>()), conductor).promoted(conductor);
    if (v.is_number_integer()) return Cyclotomic(Rat((long)v.get<long>()), conductor);
    if (v.is_array()) {
        int deg = euler_phi(conductor);
        if ((int)v.size() != deg) throw invalid_parameter("field element coefficient count mismatch");
        std::vector<Rat> c;
        for (const auto& x : v)
            c.push_back(x.is_string() ? parse_rat(x.get<std::string>()) : Rat((long)x.get<long>()));
        return Cyclotomic(conductor, std::move(c));
    }
    throw invalid_parameter("malformed field element");
}

json field_element_to_json(const Cyclotomic& c, int conductor) {
    Cyclotomic p = c.promoted(conductor);
    if (conductor == 1) return rat_string(p.coeffs()[0]);
    json out = json::array();
    for (const auto& x : p.coeffs()) out.push_back(rat_string(x));
    return out;
}

int conductor_from_field_tag(const json& j) {
    std::string f = j.at("field").get<std::string>();
    if (f == "Q") return 1;
    if (f == "Qi") return 4;
    if (f == "QzetaN") return j.at("N").get<int>();
    throw invalid_parameter("unknown field tag '" + f + "'");
}

}  // namespace

GradedAlgebra graded_algebra_from_json(const json& j) {
    GradedAlgebra a;
    a.conductor = conductor_from_field_tag(j);
    auto degrees = j.at("degrees").get<std::vector<int>>();
    a.dim = (int)degrees.size();
    for (int d : degrees) a.degrees.push_back((std::uint8_t)d);
    a.names.resize(a.dim);
    for (int i = 0; i < a.dim; ++i) a.names[i] = "b" + std::to_string(i);
    const auto& sc = j.at("sc");
    if ((int)sc.size() != a.dim) throw invalid_parameter("sc has wrong outer dimension");
    a.prod.resize((std::size_t)a.dim * a.dim);
    for (int i = 0; i < a.dim; ++i) {
        if ((int)sc.at(i).size() != a.dim) throw invalid_parameter("sc has wrong inner dimension");
        for (int k = 0; k < a.dim; ++k) {
            const auto& coords = sc.at(i).at(k);
            if ((int)coords.size() != a.dim) throw invalid_parameter("sc coordinate count mismatch");
            for (int l = 0; l < a.dim; ++l) {
                Cyclotomic c = field_element_from_json(coords.at(l), a.conductor);
                if (!c.is_zero()) a.prod[(std::size_t)i * a.dim + k].push_back({l, c});
            }
        }
    }
    const auto& uj = j.at("unit");
    if ((int)uj.size() != a.dim) throw invalid_parameter("unit coordinate count mismatch");
    for (const auto& v : uj) a.unit.push_back(field_element_from_json(v, a.conductor));
    a.validate();
    return a;
}

json graded_algebra_to_json(const GradedAlgebra& a) {
    json j;
    j["field"] = a.conductor == 1 ? "Q" : (a.conductor == 4 ? "Qi" : "QzetaN");
    if (a.conductor != 1 && a.conductor != 4) j["N"] = a.conductor;
    json degrees = json::array();
    for (auto d : a.degrees) degrees.push_back((int)d);
    j["degrees"] = degrees;
    json sc = json::array();
    for (int i = 0; i < a.dim; ++i) {
        json row = json::array();
        for (int k = 0; k < a.dim; ++k) {
            std::vector<Cyclotomic> coords(a.dim, Cyclotomic(Rat(0), a.conductor));
            for (const auto& [l, c] : a.table(i, k)) coords[l] += c;
            json cj = json::array();
            for (const auto& c : coords) cj.push_back(field_element_to_json(c, a.conductor));
            row.push_back(cj);
        }
        sc.push_back(row);
    }
    j["sc"] = sc;
    json uj = json::array();
    for (const auto& u : a.unit) uj.push_back(field_element_to_json(u, a.conductor));
    j["unit"] = uj;
    return j;
}

MagneticRep rep_from_json(const MagneticGroup& base, const json& j) {
    MagneticRep r;
    r.base = base;
    r.conductor = j.at("N").get<int>();
    r.dim = j.at("dim").get<int>();
    if (j.contains("phi")) {
        auto phi = j.at("phi").get<std::vector<int>>();
        if ((int)phi.size() != base.order()) throw invalid_parameter("phi length mismatch");
        for (int g = 0; g < base.order(); ++g)
            if ((int)base.phi[g] != phi[g])
                throw invalid_parameter("phi in the file disagrees with the group phi");
    }
    const auto& mats = j.at("matrices");
    r.mats.assign(base.order(), CycMat(r.dim));
    std::vector<bool> seen(base.order(), false);
    for (auto it = mats.begin(); it != mats.end(); ++it) {
        int g = std::stoi(it.key());
        if (g < 0 || g >= base.order()) throw invalid_parameter("matrix key out of range");
        CycMat m(r.dim);
        const auto& rows = it.value();
        if ((int)rows.size() != r.dim) throw invalid_parameter("matrix row count mismatch");
        for (int a = 0; a < r.dim; ++a) {
            if ((int)rows.at(a).size() != r.dim) throw invalid_parameter("matrix column count mismatch");
            for (int b = 0; b < r.dim; ++b)
                m.at(a, b) = field_element_from_json(rows.at(a).at(b), r.conductor);
        }
        r.mats[g] = std::move(m);
        seen[g] = true;
    }
    for (bool s : seen)
        if (!s) throw invalid_parameter("missing matrix for a group element");
    if (j.contains("psi")) {
        std::vector<std::uint8_t> psi;
        for (int v : j.at("psi").get<std::vector<int>>()) psi.push_back((std::uint8_t)v);
        r.psi = std::move(psi);
        r.even_dim = j.at("even_dim").get<int>();
    }
    r.validate_shape();
    return r;
}

namespace {

// "a/b+c/d i" or "a/b-c/d i" or plain "a/b"
Cyclotomic gaussian_from_string(std::string s) {
    s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
    bool has_i = !s.empty() && s.back() == 'i';
    if (!has_i) return Cyclotomic(parse_rat(s), 4);
    s.pop_back();
    // split at the last +/- that is not at position 0
    std::size_t split = std::string::npos;
    for (std::size_t k = s.size(); k-- > 1;)
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != '/') {
            split = k;
            break;
        }
    Rat re(0), im(1);
    if (split == std::string::npos) {
        std::string imag = s;
        if (imag.empty() || imag == "+")
            im = 1;
        else if (imag == "-")
            im = -1;
        else
            im = parse_rat(imag);
    } else {
        re = parse_rat(s.substr(0, split));
        std::string imag = s.substr(split);
        if (imag == "+")
            im = 1;
        else if (imag == "-")
            im = -1;
        else
            im = parse_rat(imag);
    }
    return Cyclotomic(re, 4) + Cyclotomic(im, 4) * Cyclotomic::i();
}

}  // namespace

bool json_matrix_is_exact(const json& j) {
    for (const auto& row : j)
        for (const auto& v : row)
            if (v.is_string()) return true;
    return false;
}

ComplexMatrix complex_matrix_from_json(const json& j) {
    ComplexMatrix m;
    m.n = (int)j.size();
    m.e.assign((std::size_t)m.n * m.n, {0, 0});
    for (int r = 0; r < m.n; ++r) {
        const auto& row = j.at(r);
        if ((int)row.size() != m.n) throw invalid_parameter("hamiltonian matrix is not square");
        for (int c = 0; c < m.n; ++c) {
            const auto& v = row.at(c);
            if (v.is_array())
                m.at(r, c) = {v.at(0).get<double>(), v.at(1).get<double>()};
            else if (v.is_number())
                m.at(r, c) = {v.get<double>(), 0.0};
            else if (v.is_string())
                m.at(r, c) = gaussian_from_string(v.get<std::string>()).to_complex();
            else
                throw invalid_parameter("malformed matrix entry");
        }
    }
    return m;
}

CycMat exact_matrix_from_json(const json& j) {
    CycMat m((int)j.size());
    for (int r = 0; r < m.n; ++r) {
        const auto& row = j.at(r);
        if ((int)row.size() != m.n) throw invalid_parameter("matrix is not square");
        for (int c = 0; c < m.n; ++c) {
            const auto& v = row.at(c);
            if (v.is_string())
                m.at(r, c) = gaussian_from_string(v.get<std::string>());
            else if (v.is_number_integer())
                m.at(r, c) = Cyclotomic(Rat((long)v.get<long>()), 4);
            else if (v.is_array())
                m.at(r, c) = Cyclotomic(parse_rat(v.at(0).is_string()
                                                      ? v.at(0).get<std::string>()
                                                      : std::to_string(v.at(0).get<long>())),
                                        4) +
                             Cyclotomic(parse_rat(v.at(1).is_string()
                                                      ? v.at(1).get<std::string>()
                                                      : std::to_string(v.at(1).get<long>())),
                                        4) *
                                 Cyclotomic::i();
            else
                throw invalid_parameter("malformed exact matrix entry");
        }
    }
    return m;
}

std::string invariant_factor_string(const std::vector<Int>& d) {
    if (d.empty()) return "trivial";
    std::string out;
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (i) out += " x ";
        out += "Z/" + d[i].get_str();
    }
    return out;
}

}  // namespace magb
