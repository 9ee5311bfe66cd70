#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace srcsleep {

// Deterministic random stream used everywhere randomness is needed.
//
// The raw generator is std::mt19937_64, whose output sequence is fixed by the
// C++ standard, so identical seeds give identical streams on every platform.
// The standard library *distributions* are not portable, so the mappings from
// raw 64-bit words to uniforms, bounded integers and normals are implemented
// here and are part of the reproducibility contract:
//
//   unit():    (word >> 11) * 2^-53                      -> [0, 1)
//   below(n):  rejection sampling on the top multiple of n (unbiased)
//   normal():  Box-Muller from two unit() draws, exactly two words per call
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t word() { return gen_(); }

    // Uniform double in [0, 1) with 53 bits of precision.
    double unit() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    // Uniform integer in [0, n). n must be >= 1.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
        std::uint64_t x;
        do {
            x = gen_();
        } while (x >= limit);
        return x % n;
    }

    // Standard normal via Box-Muller; consumes exactly two words.
    double normal() {
        const double u1 = 1.0 - unit();  // (0, 1], keeps log finite
        const double u2 = unit();
        return std::sqrt(-2.0 * std::log(u1)) *
               std::cos(2.0 * 3.14159265358979323846 * u2);
    }

    // In-place Fisher-Yates shuffle.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::swap(v[i - 1], v[below(i)]);
        }
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace srcsleep
