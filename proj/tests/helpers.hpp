#pragma once

#include <cstdint>
#include <vector>

#include "magb/group.hpp"
#include "magb/numeric.hpp"

namespace magbtest {

// deterministic xorshift for reproducible sampled checks
struct Rng {
    std::uint64_t s;
    explicit Rng(std::uint64_t seed) : s(seed ? seed : 0x9e3779b97f4a7c15ull) {}
    std::uint64_t next() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    }
    long below(long n) { return (long)(next() % (std::uint64_t)n); }
};

inline std::vector<magb::Int> ints(std::initializer_list<long> xs) {
    std::vector<magb::Int> out;
    for (long x : xs) out.push_back(magb::Int(x));
    return out;
}

inline magb::MagneticGroup cyclic_mod2(int n) {
    magb::FiniteGroup g = magb::cyclic(n);
    std::vector<std::uint8_t> phi(n);
    for (int i = 0; i < n; ++i) phi[i] = (std::uint8_t)(i % 2);
    return magb::MagneticGroup(std::move(g), std::move(phi), magb::MagneticMode::magnetic);
}

// product Z/a x Z/2 with phi = second coordinate
inline magb::MagneticGroup product_pi2(int a) {
    magb::FiniteGroup g = magb::direct_product(magb::cyclic(a), magb::cyclic(2));
    std::vector<std::uint8_t> phi(g.order);
    for (int i = 0; i < g.order; ++i) phi[i] = (std::uint8_t)(i % 2);
    return magb::MagneticGroup(std::move(g), std::move(phi), magb::MagneticMode::magnetic);
}

// multiset of element orders as a sorted vector
inline std::vector<magb::Int> census(const magb::FiniteGroup& g) {
    auto out = g.order_census();
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace magbtest
