#include "magb/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace magb {

int euler_phi(int n) {
    int result = n;
    int m = n;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        while (m % p == 0) m /= p;
        result -= result / p;
    }
    if (m > 1) result -= result / m;
    return result;
}

namespace {

// exact division of integer polynomials, remainder must vanish
std::vector<Int> poly_div(const std::vector<Int>& num, const std::vector<Int>& den) {
    std::vector<Int> r = num;
    int dn = (int)den.size() - 1;
    std::vector<Int> q((int)num.size() - dn, Int(0));
    for (int i = (int)r.size() - 1; i >= dn; --i) {
        if (is_zero(r[i])) continue;
        Int f = div_exact(r[i], den[dn]);
        q[i - dn] = f;
        for (int j = 0; j <= dn; ++j) r[i - dn + j] -= f * den[j];
    }
    return q;
}

std::map<int, std::vector<Int>> g_cyclo_cache;
std::mutex g_cyclo_mutex;

}  // namespace

const std::vector<Int>& cyclotomic_polynomial(int n) {
    std::lock_guard<std::mutex> lk(g_cyclo_mutex);
    auto it = g_cyclo_cache.find(n);
    if (it != g_cyclo_cache.end()) return it->second;
    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, computed without the lock
    // re-entering: build dependencies iteratively
    std::vector<int> need{n};
    for (std::size_t k = 0; k < need.size(); ++k)
        for (int d = 1; d < need[k]; ++d)
            if (need[k] % d == 0 && !g_cyclo_cache.count(d)) need.push_back(d);
    std::sort(need.begin(), need.end());
    need.erase(std::unique(need.begin(), need.end()), need.end());
    for (int m : need) {
        if (g_cyclo_cache.count(m)) continue;
        std::vector<Int> poly(m + 1, Int(0));
        poly[0] = -1;
        poly[m] = 1;
        for (int d = 1; d < m; ++d)
            if (m % d == 0) poly = poly_div(poly, g_cyclo_cache.at(d));
        g_cyclo_cache[m] = std::move(poly);
    }
    return g_cyclo_cache.at(n);
}

std::vector<Rat> Cyclotomic::reduce(int n, std::vector<Rat> poly) {
    const auto& phi = cyclotomic_polynomial(n);
    int deg = (int)phi.size() - 1;
    for (int i = (int)poly.size() - 1; i >= deg; --i) {
        if (poly[i] == 0) continue;
        Rat f = poly[i];  // phi monic
        poly[i] = 0;
        for (int j = 0; j < deg; ++j) poly[i - deg + j] -= f * Rat(phi[j]);
    }
    poly.resize(deg);
    return poly;
}

Cyclotomic::Cyclotomic(const Rat& r, int conductor) : n_(conductor) {
    int deg = euler_phi(conductor);
    c_.assign(deg, Rat(0));
    c_[0] = r;
}

Cyclotomic::Cyclotomic(int conductor, std::vector<Rat> coeffs) : n_(conductor), c_(std::move(coeffs)) {
    if ((int)c_.size() != euler_phi(conductor))
        throw invalid_parameter("cyclotomic coefficient vector has wrong length");
}

Cyclotomic Cyclotomic::zeta(int n) { return zeta_pow(n, 1); }

Cyclotomic Cyclotomic::zeta_pow(int n, long k) {
    k %= n;
    if (k < 0) k += n;
    std::vector<Rat> poly(n, Rat(0));
    poly[k] = 1;
    return Cyclotomic(n, reduce(n, std::move(poly)));
}

bool Cyclotomic::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rat Cyclotomic::rational_value() const {
    if (!is_rational()) throw domain_error("cyclotomic value is not rational");
    return c_[0];
}

Cyclotomic Cyclotomic::promoted(int m) const {
    if (m == n_) return *this;
    if (m % n_ != 0) throw invalid_parameter("conductor promotion requires divisibility");
    int s = m / n_;
    std::vector<Rat> poly(m, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) poly[i * s] += c_[i];
    return Cyclotomic(m, reduce(m, std::move(poly)));
}

Cyclotomic Cyclotomic::conj() const {
    std::vector<Rat> poly(n_ == 1 ? 1 : n_, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        int e = (int)((n_ - (long)i) % n_);
        poly[e] += c_[i];
    }
    return Cyclotomic(n_, reduce(n_, std::move(poly)));
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    int m = std::lcm(a.n_, b.n_);
    Cyclotomic x = a.promoted(m), y = b.promoted(m);
    for (std::size_t i = 0; i < x.c_.size(); ++i) x.c_[i] += y.c_[i];
    return x;
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
    int m = std::lcm(a.n_, b.n_);
    Cyclotomic x = a.promoted(m), y = b.promoted(m);
    for (std::size_t i = 0; i < x.c_.size(); ++i) x.c_[i] -= y.c_[i];
    return x;
}

Cyclotomic operator-(const Cyclotomic& a) {
    Cyclotomic x = a;
    for (auto& v : x.c_) v = -v;
    return x;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    int m = std::lcm(a.n_, b.n_);
    Cyclotomic x = a.promoted(m), y = b.promoted(m);
    std::vector<Rat> poly(2 * x.c_.size(), Rat(0));
    for (std::size_t i = 0; i < x.c_.size(); ++i) {
        if (x.c_[i] == 0) continue;
        for (std::size_t j = 0; j < y.c_.size(); ++j)
            if (y.c_[j] != 0) poly[i + j] += x.c_[i] * y.c_[j];
    }
    return Cyclotomic(m, Cyclotomic::reduce(m, std::move(poly)));
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    int m = std::lcm(a.n_, b.n_);
    return a.promoted(m).c_ == b.promoted(m).c_;
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw division_by_zero();
    if (is_rational()) return Cyclotomic(Rat(1) / c_[0], n_);
    // extended Euclid in Q[x]: u * this + v * Phi_n = 1
    const auto& phi_i = cyclotomic_polynomial(n_);
    std::vector<Rat> r0(phi_i.begin(), phi_i.end());
    std::vector<Rat> r1 = c_;
    while (!r1.empty() && r1.back() == 0) r1.pop_back();
    std::vector<Rat> s0{Rat(0)}, s1{Rat(1)};  // coefficients of `this`
    auto deg = [](const std::vector<Rat>& p) { return (int)p.size() - 1; };
    while (deg(r1) > 0) {
        // r0 = q * r1 + r2
        std::vector<Rat> q(deg(r0) - deg(r1) + 1, Rat(0));
        std::vector<Rat> r2 = r0;
        for (int i = deg(r2); i >= deg(r1); --i) {
            if (r2[i] == 0) continue;
            Rat f = r2[i] / r1.back();
            q[i - deg(r1)] = f;
            for (int j = 0; j <= deg(r1); ++j) r2[i - deg(r1) + j] -= f * r1[j];
        }
        while (r2.size() > 1 && r2.back() == 0) r2.pop_back();
        // s2 = s0 - q * s1
        std::vector<Rat> s2(std::max(s0.size(), q.size() + s1.size() - 1), Rat(0));
        for (std::size_t i = 0; i < s0.size(); ++i) s2[i] = s0[i];
        for (std::size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (std::size_t j = 0; j < s1.size(); ++j) s2[i + j] -= q[i] * s1[j];
        }
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r1.empty() || r1[0] == 0) throw division_by_zero();
    // this * s1 = r1[0] (a nonzero rational): inverse = s1 / r1[0]
    for (auto& v : s1) v /= r1[0];
    s1.resize(2 * c_.size(), Rat(0));
    return Cyclotomic(n_, reduce(n_, std::move(s1)));
}

Cyclotomic Cyclotomic::pow(long k) const {
    if (k < 0) return inverse().pow(-k);
    Cyclotomic result(Rat(1), n_), base = *this;
    while (k) {
        if (k & 1) result *= base;
        base *= base;
        k >>= 1;
    }
    return result;
}

std::optional<long> Cyclotomic::root_of_unity_order(long bound) const {
    Cyclotomic one(Rat(1), n_);
    for (long k = 1; k <= bound; ++k) {
        if (bound % k != 0) continue;
        if (pow(k) == one) return k;
    }
    return std::nullopt;
}

std::optional<Rat> Cyclotomic::angle() const {
    int m = n_ % 2 == 0 ? n_ : 2 * n_;  // the roots of unity in Q(zeta_n)
    Cyclotomic z = Cyclotomic::zeta(m);
    Cyclotomic p(Rat(1), m);
    Cyclotomic self = promoted(std::lcm(n_, m));
    for (int k = 0; k < m; ++k) {
        if (p == self) return make_rat(k, m);
        p *= z;
    }
    return std::nullopt;
}

std::complex<double> Cyclotomic::to_complex() const {
    std::complex<double> acc = 0.0;
    double theta = 2.0 * M_PI / n_;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        acc += c_[i].get_d() * std::complex<double>(std::cos(theta * i), std::sin(theta * i));
    }
    return acc;
}

std::string Cyclotomic::str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (!first) os << " + ";
        os << rat_string(c_[i]);
        if (i > 0) os << "*z" << n_ << "^" << i;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace magb
