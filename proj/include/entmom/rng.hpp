// Deterministic sampling built on std::mt19937_64 with fixed derivations
// (53-bit uniforms, Box-Muller normals), so seeded runs are bit-identical
// across platforms. The exact recipe is documented in the README.

#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "entmom/matrix.hpp"

namespace entmom {

class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : gen_(seed) {}

    // uniform in [0, 1), 53 random bits
    double uniform() {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    // standard normal via Box-Muller; consumes exactly two uniforms
    double normal() {
        double u1 = uniform();
        const double u2 = uniform();
        if (u1 <= 0.0)
            u1 = 0x1.0p-53;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }

    // Exp(1)
    double exponential() {
        return -std::log1p(-uniform());
    }

    // real part sampled before imaginary part
    Complex complex_normal() {
        const double re = normal();
        const double im = normal();
        return Complex{re, im};
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace entmom
