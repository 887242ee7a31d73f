#include "magb/cochain.hpp"

#include <algorithm>

namespace magb {

std::string CoefficientModel::name() const {
    switch (kind) {
        case CoeffKind::Z:
            return twisted ? "Zt" : "Z";
        case CoeffKind::Zmod:
            return "Z" + std::to_string(m) + (twisted ? "t" : "");
        case CoeffKind::QmodZ:
            return twisted ? "QZt" : "QZ";
    }
    return "?";
}

CoefficientModel CoefficientModel::parse(const std::string& s) {
    if (s == "Z") return model_Z(false);
    if (s == "Zt") return model_Z(true);
    if (s == "QZt" || s == "QZ") return model_QmodZ();
    if (s.size() >= 2 && s[0] == 'Z') {
        std::string body = s.substr(1);
        bool tw = false;
        if (!body.empty() && body.back() == 't') {
            tw = true;
            body.pop_back();
        }
        try {
            int m = std::stoi(body);
            if (m >= 2) return model_Zmod(m, tw);
        } catch (...) {
        }
    }
    throw parse_error("unknown coefficient model '" + s + "'", 0);
}

TupleSpace::TupleSpace(const FiniteGroup& g) : order(g.order), pos(g.order, -1) {
    for (int x = 0; x < g.order; ++x)
        if (x != g.identity) {
            pos[x] = (int)elems.size();
            elems.push_back(x);
        }
}

long TupleSpace::count(int degree) const {
    long c = 1;
    for (int i = 0; i < degree; ++i) c *= (long)elems.size();
    return c;
}

void TupleSpace::decode(long idx, int degree, int* out) const {
    long base = (long)elems.size();
    for (int i = 0; i < degree; ++i) {
        out[i] = elems[idx % base];
        idx /= base;
    }
}

long TupleSpace::encode(const int* tuple, int degree) const {
    long base = (long)elems.size();
    long idx = 0;
    for (int i = degree - 1; i >= 0; --i) {
        int p = pos[tuple[i]];
        if (p < 0) return -1;
        idx = idx * base + p;
    }
    return idx;
}

Cochain Cochain::zero(const MagneticGroup& m, CoefficientModel model, int degree) {
    Cochain c;
    c.degree = degree;
    c.model = model;
    c.group_order = m.order();
    c.values.assign(TupleSpace(m.group).count(degree), Rat(0));
    return c;
}

bool Cochain::is_zero() const {
    for (const auto& v : values)
        if (v != 0) return false;
    return true;
}

Rat normalize_value(const CoefficientModel& model, const Rat& v) {
    switch (model.kind) {
        case CoeffKind::Z:
            if (!is_integer(v)) throw invalid_parameter("Z-model cochain with non-integer value");
            return v;
        case CoeffKind::Zmod: {
            if (!is_integer(v)) throw invalid_parameter("Zmod-model cochain with non-integer value");
            Rat r = v / Rat(model.m);
            return mod1(r) * Rat(model.m);
        }
        case CoeffKind::QmodZ:
            return mod1(v);
    }
    return v;
}

void normalize_cochain(Cochain& c) {
    for (auto& v : c.values) v = normalize_value(c.model, v);
}

namespace {

// shared expansion of the twisted bar differential
template <class Emit>
void expand_delta_row(const MagneticGroup& m, const TupleSpace& ts, bool twisted, int degree,
                      const int* t, Emit&& emit) {
    // t has degree+1 entries; emits (tuple-index in C^degree, coefficient)
    std::vector<int> sub(degree);
    // leading term: (-1)^{phi(t0)} when twisted
    for (int i = 0; i < degree; ++i) sub[i] = t[i + 1];
    long j0 = degree ? ts.encode(sub.data(), degree) : 0;
    if (j0 >= 0) emit(j0, (twisted && m.phi[t[0]]) ? -1 : 1);
    // inner merges
    for (int j = 1; j <= degree; ++j) {
        int merged = m.group.mul(t[j - 1], t[j]);
        int k = 0;
        for (int i = 0; i <= degree; ++i) {
            if (i == j - 1) {
                sub[k++] = merged;
                ++i;  // skip t[j]
            } else
                sub[k++] = t[i];
        }
        long idx = ts.encode(sub.data(), degree);
        if (idx >= 0) emit(idx, (j % 2) ? -1 : 1);
    }
    // trailing term: (-1)^{degree+1}
    for (int i = 0; i < degree; ++i) sub[i] = t[i];
    long jl = degree ? ts.encode(sub.data(), degree) : 0;
    if (jl >= 0) emit(jl, ((degree + 1) % 2) ? -1 : 1);
}

}  // namespace

Cochain coboundary(const MagneticGroup& m, const Cochain& f) {
    if (f.group_order != m.order()) throw invalid_parameter("cochain/group mismatch");
    TupleSpace ts(m.group);
    Cochain out;
    out.degree = f.degree + 1;
    out.model = f.model;
    out.group_order = f.group_order;
    out.values.assign(ts.count(out.degree), Rat(0));
    std::vector<int> t(out.degree);
    for (long r = 0; r < (long)out.values.size(); ++r) {
        ts.decode(r, out.degree, t.data());
        Rat acc(0);
        expand_delta_row(m, ts, f.model.twisted, f.degree, t.data(),
                         [&](long idx, int coef) { acc += Rat(coef) * f.values[idx]; });
        out.values[r] = normalize_value(out.model, acc);
    }
    return out;
}

std::vector<Triplet> delta_matrix(const MagneticGroup& m, bool twisted, int degree) {
    TupleSpace ts(m.group);
    std::vector<Triplet> trip;
    long rows = ts.count(degree + 1);
    std::vector<int> t(degree + 1);
    for (long r = 0; r < rows; ++r) {
        ts.decode(r, degree + 1, t.data());
        expand_delta_row(m, ts, twisted, degree, t.data(),
                         [&](long idx, int coef) { trip.push_back({(int)r, (int)idx, coef}); });
    }
    return trip;
}

bool is_cocycle(const MagneticGroup& m, const Cochain& c, std::vector<int>* witness) {
    Cochain d = coboundary(m, c);
    TupleSpace ts(m.group);
    for (long r = 0; r < (long)d.values.size(); ++r)
        if (d.values[r] != 0) {
            if (witness) {
                witness->assign(d.degree, 0);
                ts.decode(r, d.degree, witness->data());
            }
            return false;
        }
    return true;
}

bool is_hom_to_z2(const FiniteGroup& g, const std::vector<std::uint8_t>& psi) {
    if ((int)psi.size() != g.order) return false;
    for (int x = 0; x < g.order; ++x)
        for (int y = 0; y < g.order; ++y)
            if (psi[g.mul(x, y)] != (psi[x] ^ psi[y])) return false;
    return true;
}

std::vector<std::vector<std::uint8_t>> hom_to_z2(const MagneticGroup& m) {
    const FiniteGroup& g = m.group;
    int n = g.order;
    // solve f(g) + f(h) = f(gh) over GF(2) on the non-identity unknowns
    TupleSpace ts(g);
    int unknowns = n - 1;
    std::vector<std::vector<std::uint8_t>> rows;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            std::vector<std::uint8_t> row(unknowns, 0);
            auto add = [&](int e) {
                if (e != g.identity) row[ts.pos[e]] ^= 1;
            };
            add(x);
            add(y);
            add(g.mul(x, y));
            rows.push_back(std::move(row));
        }
    // GF(2) kernel of the constraint matrix
    std::vector<int> pivot_col;
    std::vector<std::vector<std::uint8_t>> echelon;
    for (auto& row : rows) {
        for (std::size_t p = 0; p < echelon.size(); ++p)
            if (row[pivot_col[p]])
                for (int j = 0; j < unknowns; ++j) row[j] ^= echelon[p][j];
        int lead = -1;
        for (int j = 0; j < unknowns; ++j)
            if (row[j]) {
                lead = j;
                break;
            }
        if (lead >= 0) {
            pivot_col.push_back(lead);
            echelon.push_back(row);
        }
    }
    // full reduction so each pivot appears in exactly one row
    for (std::size_t p = 0; p < echelon.size(); ++p)
        for (std::size_t q = 0; q < echelon.size(); ++q)
            if (q != p && echelon[q][pivot_col[p]])
                for (int j = 0; j < unknowns; ++j) echelon[q][j] ^= echelon[p][j];
    std::vector<int> free_cols;
    for (int j = 0; j < unknowns; ++j)
        if (std::find(pivot_col.begin(), pivot_col.end(), j) == pivot_col.end())
            free_cols.push_back(j);
    std::vector<std::vector<std::uint8_t>> basis;
    for (int fc : free_cols) {
        std::vector<std::uint8_t> sol(unknowns, 0);
        sol[fc] = 1;
        for (std::size_t p = 0; p < echelon.size(); ++p) sol[pivot_col[p]] = echelon[p][fc];
        basis.push_back(sol);
    }
    std::vector<std::vector<std::uint8_t>> out;
    for (long mask = 0; mask < (1L << basis.size()); ++mask) {
        std::vector<std::uint8_t> table(n, 0);
        for (std::size_t b = 0; b < basis.size(); ++b)
            if (mask & (1L << b))
                for (int j = 0; j < unknowns; ++j) table[ts.elems[j]] ^= basis[b][j];
        if (is_hom_to_z2(g, table)) out.push_back(table);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Cochain cup_z2(const MagneticGroup& m, const std::vector<std::uint8_t>& psi0,
               const std::vector<std::uint8_t>& psi1) {
    if (!is_hom_to_z2(m.group, psi0) || !is_hom_to_z2(m.group, psi1))
        throw invalid_parameter("cup_z2 arguments must be homomorphisms G -> Z/2");
    Cochain c = Cochain::zero(m, model_Zmod(2, false), 2);
    TupleSpace ts(m.group);
    int t[2];
    for (long r = 0; r < (long)c.values.size(); ++r) {
        ts.decode(r, 2, t);
        c.values[r] = (psi0[t[0]] & psi1[t[1]]) ? 1 : 0;
    }
    return c;
}

Cochain iota(const MagneticGroup& m, const Cochain& z2_cocycle) {
    if (z2_cocycle.model.kind != CoeffKind::Zmod || z2_cocycle.model.m != 2)
        throw invalid_parameter("iota expects a Z/2-valued cochain");
    std::vector<int> w;
    if (!is_cocycle(m, z2_cocycle, &w)) throw invalid_cocycle("iota input is not a cocycle");
    Cochain out = z2_cocycle;
    out.model = model_QmodZ();
    for (auto& v : out.values) v = mod1(v / 2);
    return out;
}

}  // namespace magb
