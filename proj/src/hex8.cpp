#include "hexmass/hex8.hpp"

namespace hexmass {

ElementGeometry reference_cube() {
    ElementGeometry g;
    for (int i = 0; i < 8; ++i) {
        for (int k = 0; k < 3; ++k) {
            g.nodes[i][k] = static_cast<double>(kCornerSigns[i][k]);
        }
    }
    return g;
}

NodalDensities uniform_density(double rho) {
    NodalDensities d;
    d.rho.fill(rho);
    return d;
}

std::array<double, 8> shape_values(const LocalCoord& p) {
    std::array<double, 8> phi;
    for (int i = 0; i < 8; ++i) {
        const auto& s = kCornerSigns[i];
        phi[i] = 0.125 * (1.0 + s[0] * p.xi) * (1.0 + s[1] * p.eta) *
                 (1.0 + s[2] * p.zeta);
    }
    return phi;
}

std::array<Vec3, 8> shape_gradients(const LocalCoord& p) {
    std::array<Vec3, 8> grad;
    for (int i = 0; i < 8; ++i) {
        const auto& s = kCornerSigns[i];
        const double fx = 1.0 + s[0] * p.xi;
        const double fy = 1.0 + s[1] * p.eta;
        const double fz = 1.0 + s[2] * p.zeta;
        grad[i][0] = 0.125 * s[0] * fy * fz;
        grad[i][1] = 0.125 * s[1] * fx * fz;
        grad[i][2] = 0.125 * s[2] * fx * fy;
    }
    return grad;
}

Vec3 geometry_map(const ElementGeometry& g, const LocalCoord& p) {
    const auto phi = shape_values(p);
    Vec3 x{0.0, 0.0, 0.0};
    for (int i = 0; i < 8; ++i) {
        for (int k = 0; k < 3; ++k) {
            x[k] += phi[i] * g.nodes[i][k];
        }
    }
    return x;
}

double density_at(const NodalDensities& d, const LocalCoord& p) {
    const auto phi = shape_values(p);
    double rho = 0.0;
    for (int i = 0; i < 8; ++i) {
        rho += phi[i] * d.rho[i];
    }
    return rho;
}

Mat3 jacobian_at(const ElementGeometry& g, const LocalCoord& p) {
    const auto grad = shape_gradients(p);
    Mat3 j{};
    for (int i = 0; i < 8; ++i) {
        for (int m = 0; m < 3; ++m) {
            for (int n = 0; n < 3; ++n) {
                j[m][n] += grad[i][n] * g.nodes[i][m];
            }
        }
    }
    return j;
}

double det3(const Mat3& m) {
    return m[0][0] * m[1][1] * m[2][2] - m[0][0] * m[1][2] * m[2][1] -
           m[2][0] * m[1][1] * m[0][2] - m[1][0] * m[0][1] * m[2][2] +
           m[1][0] * m[2][1] * m[0][2] + m[2][0] * m[0][1] * m[1][2];
}

double metric_at(const ElementGeometry& g, const LocalCoord& p) {
    return det3(jacobian_at(g, p));
}

Validity check_validity(const ElementGeometry& g) {
    if (metric_at(g, LocalCoord{}) <= 0.0) {
        return Validity::inverted;
    }
    for (int i = 0; i < 8; ++i) {
        const auto& s = kCornerSigns[i];
        const LocalCoord corner{static_cast<double>(s[0]),
                                static_cast<double>(s[1]),
                                static_cast<double>(s[2])};
        if (metric_at(g, corner) <= 0.0) {
            return Validity::corner_warning;
        }
    }
    return Validity::ok;
}

}  // namespace hexmass
