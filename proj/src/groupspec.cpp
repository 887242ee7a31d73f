#include "magb/groupspec.hpp"

#include <fstream>

#include <json.hpp>

namespace magb {

namespace {

struct Parser {
    const std::string& s;
    std::size_t pos = 0;

    char peek() const { return pos < s.size() ? s[pos] : '\0'; }
    char take() { return pos < s.size() ? s[pos++] : '\0'; }
    bool eat(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) throw parse_error(std::string("expected '") + c + "'", pos);
    }
    std::string ident() {
        std::size_t start = pos;
        while (pos < s.size() && (isalnum((unsigned char)s[pos]) || s[pos] == '_')) ++pos;
        if (pos == start) throw parse_error("expected identifier", pos);
        return s.substr(start, pos - start);
    }
    int number() {
        std::size_t start = pos;
        if (peek() == '-') ++pos;
        while (pos < s.size() && isdigit((unsigned char)s[pos])) ++pos;
        if (pos == start) throw parse_error("expected number", pos);
        return std::stoi(s.substr(start, pos - start));
    }
    std::vector<int> int_list() {
        expect('[');
        std::vector<int> out;
        if (!eat(']')) {
            out.push_back(number());
            while (eat(',')) out.push_back(number());
            expect(']');
        }
        return out;
    }

    ParsedGroup group() {
        std::string head = ident();
        ParsedGroup out;
        if (head == "cyclic") {
            expect(':');
            int n = number();
            if (n < 1) throw invalid_parameter("cyclic:N needs N >= 1");
            out.group = cyclic(n);
            out.is_cyclic = true;
            return out;
        }
        if (head == "dihedral") {
            expect(':');
            out.group = dihedral(number());
            return out;
        }
        if (head == "quaternion") {
            expect(':');
            int n = number();
            if (n != 8) throw invalid_parameter("only quaternion:8 is supported");
            out.group = quaternion8();
            return out;
        }
        if (head == "product") {
            expect('(');
            ParsedGroup a = group();
            expect(',');
            ParsedGroup b = group();
            expect(')');
            out.group = direct_product(a.group, b.group);
            out.shape = ParsedGroup::Shape::product;
            out.second_order = b.group.order;
            return out;
        }
        if (head == "semidirect") {
            expect('(');
            ParsedGroup a = group();
            expect(',');
            ParsedGroup b = group();
            expect(',');
            std::string kw = ident();
            if (kw != "perm") throw parse_error("expected perm=[...]", pos);
            expect('=');
            std::vector<int> perm = int_list();
            expect(')');
            if (!b.is_cyclic)
                throw invalid_parameter("semidirect mini-language needs a cyclic acting group");
            if ((int)perm.size() != a.group.order)
                throw invalid_action("perm length must equal |S1|");
            // action of the canonical generator of S2; powers for the rest
            std::vector<std::vector<int>> action(b.group.order);
            std::vector<int> id(a.group.order);
            for (int i = 0; i < a.group.order; ++i) id[i] = i;
            action[0] = id;
            for (int k = 1; k < b.group.order; ++k) {
                action[k].resize(a.group.order);
                for (int i = 0; i < a.group.order; ++i) action[k][i] = perm[action[k - 1][i]];
            }
            out.group = semidirect(a.group, b.group, action);
            out.shape = ParsedGroup::Shape::semidirect;
            out.second_order = b.group.order;
            return out;
        }
        if (head == "pullback") {
            expect('(');
            ParsedGroup a = group();
            expect(',');
            std::string phispec;
            // phi-spec extends to the next top-level comma
            int depth = 0;
            while (pos < s.size()) {
                char c = peek();
                if (depth == 0 && (c == ',' || c == ')')) break;
                if (c == '[' || c == '(') ++depth;
                if (c == ']' || c == ')') --depth;
                phispec += take();
            }
            expect(',');
            int n = number();
            expect(')');
            MagneticGroup m = apply_phi_spec(a, phispec);
            out.group = pullback_z2n(m, n);
            out.shape = ParsedGroup::Shape::pullback;
            return out;
        }
        if (head == "table") {
            expect(':');
            expect('@');
            std::string file = s.substr(pos);
            pos = s.size();
            std::ifstream in(file);
            if (!in) throw invalid_parameter("cannot open table file: " + file);
            nlohmann::json j;
            in >> j;
            std::vector<std::vector<int>> rows = j.at("table").get<std::vector<std::vector<int>>>();
            if (j.contains("order") && (int)rows.size() != j.at("order").get<int>())
                throw invalid_parameter("table order field disagrees with the table size");
            out.group = FiniteGroup::from_table(rows);
            out.shape = ParsedGroup::Shape::table;
            return out;
        }
        throw parse_error("unknown group constructor '" + head + "'", pos);
    }
};

}  // namespace

ParsedGroup parse_group_spec(const std::string& spec) {
    Parser p{spec};
    ParsedGroup g = p.group();
    if (p.pos != spec.size()) throw parse_error("trailing input in group spec", p.pos);
    return g;
}

MagneticGroup apply_phi_spec(const ParsedGroup& g, const std::string& phispec) {
    const FiniteGroup& grp = g.group;
    if (phispec == "trivial") return plain_group(grp);
    if (phispec == "mod2" || phispec == "id") {
        if (!g.is_cyclic || grp.order % 2 != 0)
            throw invalid_parameter("mod2 phi-spec needs a cyclic group of even order");
        std::vector<std::uint8_t> phi(grp.order);
        for (int i = 0; i < grp.order; ++i) phi[i] = (std::uint8_t)(i % 2);
        return MagneticGroup(grp, std::move(phi), MagneticMode::magnetic);
    }
    if (phispec == "proj2") {
        if (g.shape != ParsedGroup::Shape::product && g.shape != ParsedGroup::Shape::semidirect)
            throw invalid_parameter("proj2 phi-spec needs a product or semidirect group");
        if (g.second_order % 2 != 0)
            throw invalid_parameter("proj2 phi-spec needs an even second factor");
        std::vector<std::uint8_t> phi(grp.order);
        for (int i = 0; i < grp.order; ++i) phi[i] = (std::uint8_t)((i % g.second_order) % 2);
        return MagneticGroup(grp, std::move(phi), MagneticMode::magnetic);
    }
    if (phispec.rfind("values:", 0) == 0) {
        Parser p{phispec};
        p.pos = 7;
        std::vector<int> vals = p.int_list();
        if ((int)vals.size() != grp.order) throw invalid_parameter("values list length mismatch");
        std::vector<std::uint8_t> phi;
        bool onto = false;
        for (int v : vals) {
            if (v != 0 && v != 1) throw invalid_parameter("phi values must be bits");
            onto |= v == 1;
            phi.push_back((std::uint8_t)v);
        }
        return MagneticGroup(grp, std::move(phi),
                             onto ? MagneticMode::magnetic : MagneticMode::plain);
    }
    throw parse_error("unknown phi-spec '" + phispec + "'", 0);
}

MagneticGroup parse_magnetic_group(const std::string& groupspec, const std::string& phispec) {
    return apply_phi_spec(parse_group_spec(groupspec), phispec);
}

}  // namespace magb
