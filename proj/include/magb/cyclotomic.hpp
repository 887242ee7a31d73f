#pragma once

// Elements of Q(zeta_N) in the power basis zeta^0..zeta^{phi(N)-1} modulo the
// N-th cyclotomic polynomial, with exact complex conjugation.

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "magb/numeric.hpp"

namespace magb {

int euler_phi(int n);
// coefficients of the (monic) N-th cyclotomic polynomial, degree phi(N)
const std::vector<Int>& cyclotomic_polynomial(int n);

class Cyclotomic {
  public:
    Cyclotomic() : n_(1), c_(1, Rat(0)) {}
    explicit Cyclotomic(const Rat& r, int conductor = 1);
    Cyclotomic(int conductor, std::vector<Rat> coeffs);  // size phi(conductor)

    static Cyclotomic zeta(int n);          // primitive n-th root
    static Cyclotomic zeta_pow(int n, long k);
    static Cyclotomic i() { return zeta(4); }

    int conductor() const { return n_; }
    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    Rat rational_value() const;  // throws if not rational

    Cyclotomic promoted(int m) const;  // n_ | m

    Cyclotomic conj() const;  // zeta -> zeta^{-1}
    Cyclotomic inverse() const;
    Cyclotomic pow(long k) const;

    // smallest k >= 1 with x^k = 1, searched over divisors of bound; nullopt
    // when x is not a root of unity of order dividing bound
    std::optional<long> root_of_unity_order(long bound) const;
    // exact angle a/m in [0,1) with x = e^{2 pi i a/m}; requires x a root of
    // unity in the field (order divides lcm(2, conductor))
    std::optional<Rat> angle() const;

    std::complex<double> to_complex() const;
    std::string str() const;

    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator-(const Cyclotomic& a);
    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }
    Cyclotomic& operator+=(const Cyclotomic& b) { return *this = *this + b; }
    Cyclotomic& operator-=(const Cyclotomic& b) { return *this = *this - b; }
    Cyclotomic& operator*=(const Cyclotomic& b) { return *this = *this * b; }

  private:
    int n_;
    std::vector<Rat> c_;
    static std::vector<Rat> reduce(int n, std::vector<Rat> poly);
};

inline Cyclotomic operator*(const Rat& s, const Cyclotomic& x) { return Cyclotomic(s) * x; }

}  // namespace magb
