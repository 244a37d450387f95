#pragma once

#include <cstdint>
#include <vector>

#include "hexmass/hex8.hpp"

// Deterministic element generators for the test families: the shear
// parallelepiped family, the uniformly perturbed cube family, and random
// parallelepipeds for exactness property tests.

namespace hexmass {

// SplitMix64. Pinned here (rather than using the platform default engine)
// so seeds are portable across toolchains; test vectors for seed 0 live in
// the unit tests.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1), 53 random bits.
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform in [-half_range, +half_range].
    double next_symmetric(double half_range) {
        return (2.0 * next_unit() - 1.0) * half_range;
    }

private:
    std::uint64_t state_;
};

struct RandomFamilySpec {
    double delta = 0.0;   // perturbation half-range, study range [0, 0.7]
    int count = 1;
    std::uint64_t seed = 0;
};

// Parallelepiped sheared along x and z in proportion to epsilon;
// epsilon = 0 is the edge-length-2 cube. Constant metric 1 for all epsilon.
ElementGeometry gen_shear_family(double epsilon);

// Reference cube with every coordinate independently perturbed by a
// uniform draw from [-delta, +delta]. Draw order is element-major,
// node-major, component-minor, and is part of the seed contract.
// Throws std::invalid_argument on invalid spec.
std::vector<ElementGeometry> gen_random_family(const RandomFamilySpec& spec);

// Origin plus three edge vectors with uniform entries in [-2,2], redrawn
// until the edge determinant exceeds 0.1. The result has spatially
// constant metric.
ElementGeometry gen_random_parallelepiped(std::uint64_t seed);

}  // namespace hexmass
