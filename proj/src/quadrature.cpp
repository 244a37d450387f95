#include "hexmass/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace hexmass {

namespace {

struct Gauss1D {
    const double* nodes;
    const double* weights;
};

// Hard-coded 1-D Gauss-Legendre rules, bit-stable across builds.
const double kNodes1[] = {0.0};
const double kWeights1[] = {2.0};

const double kNodes2[] = {-0.5773502691896257645, 0.5773502691896257645};
const double kWeights2[] = {1.0, 1.0};

const double kNodes3[] = {-0.7745966692414833770, 0.0, 0.7745966692414833770};
const double kWeights3[] = {5.0 / 9.0, 8.0 / 9.0, 5.0 / 9.0};

const double kNodes4[] = {-0.8611363115940525752, -0.3399810435848562648,
                          0.3399810435848562648, 0.8611363115940525752};
const double kWeights4[] = {0.3478548451374538574, 0.6521451548625461426,
                            0.6521451548625461426, 0.3478548451374538574};

const double kNodes5[] = {-0.9061798459386639928, -0.5384693101056830910, 0.0,
                          0.5384693101056830910, 0.9061798459386639928};
const double kWeights5[] = {0.2369268850561890875, 0.4786286704993664680,
                            0.5688888888888888889, 0.4786286704993664680,
                            0.2369268850561890875};

const double kNodes6[] = {-0.9324695142031520278, -0.6612093864662645137,
                          -0.2386191860831969086, 0.2386191860831969086,
                          0.6612093864662645137,  0.9324695142031520278};
const double kWeights6[] = {0.1713244923791703450, 0.3607615730481386076,
                            0.4679139345726910474, 0.4679139345726910474,
                            0.3607615730481386076, 0.1713244923791703450};

const Gauss1D kRules[6] = {
    {kNodes1, kWeights1}, {kNodes2, kWeights2}, {kNodes3, kWeights3},
    {kNodes4, kWeights4}, {kNodes5, kWeights5}, {kNodes6, kWeights6},
};

}  // namespace

QuadratureRule gauss_tensor(int n) {
    if (n < 1 || n > 6) {
        throw std::invalid_argument("gauss_tensor: n must be in [1, 6]");
    }
    const Gauss1D& rule = kRules[n - 1];
    QuadratureRule out;
    out.name = "gauss" + std::to_string(n);
    out.points.reserve(static_cast<std::size_t>(n) * n * n);
    for (int kz = 0; kz < n; ++kz) {
        for (int ky = 0; ky < n; ++ky) {
            for (int kx = 0; kx < n; ++kx) {
                QuadraturePoint p;
                p.coord = {rule.nodes[kx], rule.nodes[ky], rule.nodes[kz]};
                p.weight = rule.weights[kx] * rule.weights[ky] * rule.weights[kz];
                out.points.push_back(p);
            }
        }
    }
    return out;
}

QuadratureRule special_rule_np1() {
    QuadratureRule out;
    out.name = "np1";
    out.points.push_back({LocalCoord{0.0, 0.0, 0.0}, 8.0});
    return out;
}

QuadratureRule special_rule_np4() {
    const double a = std::sqrt(2.0 / 3.0);
    const double b = 1.0 / std::sqrt(3.0);
    QuadratureRule out;
    out.name = "np4";
    out.points = {
        {LocalCoord{0.0, +a, -b}, 2.0},
        {LocalCoord{0.0, -a, -b}, 2.0},
        {LocalCoord{+a, 0.0, +b}, 2.0},
        {LocalCoord{-a, 0.0, +b}, 2.0},
    };
    return out;
}

double integrate(const QuadratureRule& rule,
                 const std::function<double(const LocalCoord&)>& f) {
    double sum = 0.0;
    for (const auto& p : rule.points) {
        sum += f(p.coord) * p.weight;
    }
    return sum;
}

}  // namespace hexmass
