#include "hexmass/meshgen.hpp"

#include <stdexcept>

namespace hexmass {

ElementGeometry gen_shear_family(double epsilon) {
    ElementGeometry g = reference_cube();
    // Nodes 1,2,5,6 shift by epsilon along x; nodes 3,4,7,8 along z.
    for (int i : {0, 1, 4, 5}) {
        g.nodes[i][0] += epsilon;
    }
    for (int i : {2, 3, 6, 7}) {
        g.nodes[i][2] += epsilon;
    }
    return g;
}

std::vector<ElementGeometry> gen_random_family(const RandomFamilySpec& spec) {
    if (spec.delta < 0.0) {
        throw std::invalid_argument("gen_random_family: delta must be non-negative");
    }
    if (spec.count < 1) {
        throw std::invalid_argument("gen_random_family: count must be positive");
    }
    SplitMix64 rng(spec.seed);
    std::vector<ElementGeometry> out;
    out.reserve(static_cast<std::size_t>(spec.count));
    for (int e = 0; e < spec.count; ++e) {
        ElementGeometry g = reference_cube();
        for (int i = 0; i < 8; ++i) {
            for (int k = 0; k < 3; ++k) {
                g.nodes[i][k] += rng.next_symmetric(spec.delta);
            }
        }
        out.push_back(g);
    }
    return out;
}

ElementGeometry gen_random_parallelepiped(std::uint64_t seed) {
    SplitMix64 rng(seed);
    Vec3 origin;
    Vec3 edges[3];
    for (;;) {
        for (int k = 0; k < 3; ++k) {
            origin[k] = rng.next_symmetric(2.0);
        }
        for (auto& edge : edges) {
            for (int k = 0; k < 3; ++k) {
                edge[k] = rng.next_symmetric(2.0);
            }
        }
        Mat3 m;
        for (int a = 0; a < 3; ++a) {
            for (int k = 0; k < 3; ++k) {
                m[k][a] = edges[a][k];
            }
        }
        if (det3(m) > 0.1) {
            break;
        }
    }
    ElementGeometry g;
    for (int i = 0; i < 8; ++i) {
        for (int k = 0; k < 3; ++k) {
            double x = origin[k];
            for (int a = 0; a < 3; ++a) {
                if (kCornerSigns[i][a] > 0) {
                    x += edges[a][k];
                }
            }
            g.nodes[i][k] = x;
        }
    }
    return g;
}

}  // namespace hexmass
