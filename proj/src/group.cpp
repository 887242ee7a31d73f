#include "magb/group.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace magb {

void FiniteGroup::validate() const {
    int n = order;
    if (n <= 0) throw invalid_parameter("group order must be positive");
    if ((int)table.size() != n * n || (int)inverses.size() != n)
        throw invalid_parameter("group table dimensions inconsistent");
    for (int x : table)
        if (x < 0 || x >= n) throw invalid_parameter("group table entry out of range");
    for (int g = 0; g < n; ++g)
        if (mul(identity, g) != g || mul(g, identity) != g)
            throw invalid_parameter("identity axiom fails");
    for (int g = 0; g < n; ++g)
        if (mul(g, inverses[g]) != identity || mul(inverses[g], g) != identity)
            throw invalid_parameter("inverse axiom fails");
    std::vector<bool> seen(n);
    for (int g = 0; g < n; ++g) {
        std::fill(seen.begin(), seen.end(), false);
        for (int h = 0; h < n; ++h) seen[mul(g, h)] = true;
        for (bool b : seen)
            if (!b) throw invalid_parameter("row is not a permutation");
        std::fill(seen.begin(), seen.end(), false);
        for (int h = 0; h < n; ++h) seen[mul(h, g)] = true;
        for (bool b : seen)
            if (!b) throw invalid_parameter("column is not a permutation");
    }
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            for (int k = 0; k < n; ++k)
                if (mul(mul(g, h), k) != mul(g, mul(h, k)))
                    throw invalid_parameter("associativity fails");
}

namespace {

void finish(FiniteGroup& g) {
    int n = g.order;
    g.identity = -1;
    for (int e = 0; e < n && g.identity < 0; ++e) {
        bool ok = true;
        for (int x = 0; x < n; ++x)
            if (g.mul(e, x) != x || g.mul(x, e) != x) {
                ok = false;
                break;
            }
        if (ok) g.identity = e;
    }
    if (g.identity < 0) throw invalid_parameter("no identity element");
    g.inverses.assign(n, -1);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (g.mul(x, y) == g.identity && g.mul(y, x) == g.identity) {
                g.inverses[x] = y;
                break;
            }
    g.validate();
}

}  // namespace

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<int>>& rows) {
    FiniteGroup g;
    g.order = (int)rows.size();
    g.table.reserve((std::size_t)g.order * g.order);
    for (const auto& r : rows) {
        if ((int)r.size() != g.order) throw invalid_parameter("table is not square");
        g.table.insert(g.table.end(), r.begin(), r.end());
    }
    finish(g);
    return g;
}

Int FiniteGroup::element_order(int g) const {
    Int k = 1;
    int x = g;
    while (x != identity) {
        x = mul(x, g);
        k += 1;
    }
    return k;
}

std::vector<Int> FiniteGroup::order_census() const {
    std::vector<Int> out(order);
    for (int g = 0; g < order; ++g) out[g] = element_order(g);
    return out;
}

bool FiniteGroup::is_abelian() const {
    for (int g = 0; g < order; ++g)
        for (int h = g + 1; h < order; ++h)
            if (mul(g, h) != mul(h, g)) return false;
    return true;
}

std::string FiniteGroup::canonical_key() const {
    std::ostringstream os;
    os << order << ":";
    for (int x : table) os << x << ",";
    return os.str();
}

FiniteGroup cyclic(int n) {
    if (n < 1) throw invalid_parameter("cyclic group order must be >= 1");
    FiniteGroup g;
    g.order = n;
    g.table.resize((std::size_t)n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g.table[(std::size_t)i * n + j] = (i + j) % n;
    g.labels.resize(n);
    for (int i = 0; i < n; ++i) g.labels[i] = std::to_string(i);
    finish(g);
    return g;
}

FiniteGroup dihedral(int n) {
    if (n < 1) throw invalid_parameter("dihedral parameter must be >= 1");
    // elements r^i s^j, index = i + n*j
    FiniteGroup g;
    g.order = 2 * n;
    g.table.resize((std::size_t)g.order * g.order);
    auto idx = [n](int i, int j) { return i + n * j; };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < 2; ++l) {
                    // (r^i s^j)(r^k s^l) = r^{i + (-1)^j k} s^{j+l}
                    int rr = ((i + (j ? n - k : k)) % n + n) % n;
                    g.table[(std::size_t)idx(i, j) * g.order + idx(k, l)] = idx(rr, (j + l) % 2);
                }
    g.labels.resize(g.order);
    for (int i = 0; i < n; ++i) {
        g.labels[idx(i, 0)] = "r" + std::to_string(i);
        g.labels[idx(i, 1)] = "r" + std::to_string(i) + "s";
    }
    finish(g);
    return g;
}

FiniteGroup quaternion8() {
    // 0..7 = 1, -1, i, -i, j, -j, k, -k
    auto neg = [](int x) { return x ^ 1; };
    std::vector<std::vector<int>> t(8, std::vector<int>(8));
    auto set = [&](int a, int b, int c) { t[a][b] = c; };
    for (int x = 0; x < 8; ++x) {
        set(0, x, x);
        set(x, 0, x);
        set(1, x, neg(x));
        if (x) set(x, 1, neg(x));
    }
    // i*i = j*j = k*k = -1; i*j = k, j*k = i, k*i = j
    int I = 2, J = 4, K = 6;
    auto rule = [&](int a, int b, int c) {
        set(a, b, c);
        set(neg(a), b, neg(c));
        set(a, neg(b), neg(c));
        set(neg(a), neg(b), c);
    };
    rule(I, I, 1);
    rule(J, J, 1);
    rule(K, K, 1);
    rule(I, J, K);
    rule(J, K, I);
    rule(K, I, J);
    rule(J, I, neg(K));
    rule(K, J, neg(I));
    rule(I, K, neg(J));
    FiniteGroup g = FiniteGroup::from_table(t);
    g.labels = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
    return g;
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
    FiniteGroup g;
    int n = a.order * b.order;
    g.order = n;
    g.table.resize((std::size_t)n * n);
    auto idx = [&](int x, int y) { return x * b.order + y; };
    for (int x0 = 0; x0 < a.order; ++x0)
        for (int y0 = 0; y0 < b.order; ++y0)
            for (int x1 = 0; x1 < a.order; ++x1)
                for (int y1 = 0; y1 < b.order; ++y1)
                    g.table[(std::size_t)idx(x0, y0) * n + idx(x1, y1)] =
                        idx(a.mul(x0, x1), b.mul(y0, y1));
    finish(g);
    return g;
}

FiniteGroup semidirect(const FiniteGroup& a, const FiniteGroup& b,
                       const std::vector<std::vector<int>>& action) {
    if ((int)action.size() != b.order) throw invalid_action("need one permutation per acting element");
    for (const auto& perm : action) {
        if ((int)perm.size() != a.order) throw invalid_action("permutation size mismatch");
        // each permutation must be an automorphism of a
        for (int x = 0; x < a.order; ++x)
            for (int y = 0; y < a.order; ++y)
                if (perm[a.mul(x, y)] != a.mul(perm[x], perm[y]))
                    throw invalid_action("action value is not an automorphism");
    }
    // the action must be a homomorphism b -> Aut(a)
    for (int u = 0; u < b.order; ++u)
        for (int v = 0; v < b.order; ++v)
            for (int x = 0; x < a.order; ++x)
                if (action[b.mul(u, v)][x] != action[u][action[v][x]])
                    throw invalid_action("action is not a homomorphism");
    FiniteGroup g;
    int n = a.order * b.order;
    g.order = n;
    g.table.resize((std::size_t)n * n);
    auto idx = [&](int x, int y) { return x * b.order + y; };
    for (int x0 = 0; x0 < a.order; ++x0)
        for (int y0 = 0; y0 < b.order; ++y0)
            for (int x1 = 0; x1 < a.order; ++x1)
                for (int y1 = 0; y1 < b.order; ++y1)
                    g.table[(std::size_t)idx(x0, y0) * n + idx(x1, y1)] =
                        idx(a.mul(x0, action[y0][x1]), b.mul(y0, y1));
    finish(g);
    return g;
}

MagneticGroup::MagneticGroup(FiniteGroup g, std::vector<std::uint8_t> phi_bits, MagneticMode m)
    : group(std::move(g)), phi(std::move(phi_bits)), mode(m) {
    if ((int)phi.size() != group.order) throw invalid_parameter("phi table size mismatch");
    for (auto b : phi)
        if (b > 1) throw invalid_parameter("phi values must be bits");
    for (int g0 = 0; g0 < group.order; ++g0)
        for (int h = 0; h < group.order; ++h)
            if (phi[group.mul(g0, h)] != (phi[g0] ^ phi[h]))
                throw invalid_parameter("phi is not a homomorphism");
    bool onto = std::find(phi.begin(), phi.end(), 1) != phi.end();
    if (mode == MagneticMode::magnetic && !onto)
        throw invalid_parameter("magnetic mode requires surjective phi");
    if (mode == MagneticMode::plain && onto)
        throw invalid_parameter("plain mode requires trivial phi");
}

MagneticGroup plain_group(FiniteGroup g) {
    std::vector<std::uint8_t> phi(g.order, 0);
    return MagneticGroup(std::move(g), std::move(phi), MagneticMode::plain);
}

std::string MagneticGroup::canonical_key() const {
    std::string s = group.canonical_key() + "|phi:";
    for (auto b : phi) s += char('0' + b);
    return s;
}

FiniteGroup pullback_z2n(const MagneticGroup& m, int n) {
    if (m.mode != MagneticMode::magnetic) throw invalid_parameter("pullback needs a magnetic group");
    if (n < 2 || n % 2 != 0) throw invalid_parameter("pullback modulus must be even");
    const FiniteGroup& g = m.group;
    std::vector<std::pair<int, int>> elems;  // (g, k)
    for (int x = 0; x < g.order; ++x)
        for (int k = 0; k < n; ++k)
            if ((k % 2) == m.phi[x]) elems.push_back({x, k});
    int N = (int)elems.size();
    auto find = [&](int x, int k) {
        for (int i = 0; i < N; ++i)
            if (elems[i].first == x && elems[i].second == k) return i;
        return -1;
    };
    FiniteGroup out;
    out.order = N;
    out.table.resize((std::size_t)N * N);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
            out.table[(std::size_t)i * N + j] =
                find(g.mul(elems[i].first, elems[j].first), (elems[i].second + elems[j].second) % n);
    out.labels.resize(N);
    for (int i = 0; i < N; ++i)
        out.labels[i] = "(" + std::to_string(elems[i].first) + "," + std::to_string(elems[i].second) + ")";
    finish(out);
    return out;
}

Subgroup core(const MagneticGroup& m) {
    Subgroup s;
    s.parent = m.group;
    for (int g = 0; g < m.group.order; ++g)
        if (!m.phi[g]) s.members.push_back(g);
    return s;
}

FiniteGroup Subgroup::as_group() const {
    int n = (int)members.size();
    std::vector<int> pos(parent.order, -1);
    for (int i = 0; i < n; ++i) pos[members[i]] = i;
    std::vector<std::vector<int>> rows(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int p = parent.mul(members[i], members[j]);
            if (pos[p] < 0) throw invalid_parameter("member set is not closed");
            rows[i][j] = pos[p];
        }
    return FiniteGroup::from_table(rows);
}

std::vector<int> subgroup_closure(const FiniteGroup& g, std::vector<int> seed) {
    std::set<int> have{g.identity};
    for (int x : seed) have.insert(x);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<int> cur(have.begin(), have.end());
        for (int x : cur)
            for (int y : cur) {
                if (have.insert(g.mul(x, y)).second) grew = true;
            }
    }
    return std::vector<int>(have.begin(), have.end());
}

std::vector<int> generators(const FiniteGroup& g) {
    std::vector<int> gens;
    std::vector<int> span = subgroup_closure(g, {});
    while ((int)span.size() < g.order) {
        int next = -1;
        std::set<int> in(span.begin(), span.end());
        for (int x = 0; x < g.order; ++x)
            if (!in.count(x)) {
                next = x;
                break;
            }
        gens.push_back(next);
        span = subgroup_closure(g, gens);
    }
    return gens;
}

}  // namespace magb
