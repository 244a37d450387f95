#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hexmass/hex8.hpp"

// Integration rules on the bi-unit reference cube: tensor-product
// Gauss-Legendre rules up to 6 points per axis, plus the special 1-point
// and 4-point brick rules.

namespace hexmass {

struct QuadraturePoint {
    LocalCoord coord;
    double weight = 0.0;
};

struct QuadratureRule {
    std::vector<QuadraturePoint> points;
    std::string name;
};

// Tensor product of the n-point 1-D Gauss-Legendre rule, 1 <= n <= 6.
// Point order: xi fastest, then eta, then zeta. Exact for polynomials of
// per-axis degree <= 2n-1. Throws std::invalid_argument outside range.
QuadratureRule gauss_tensor(int n);

/// Midpoint rule: single point (0,0,0) with weight 8.
QuadratureRule special_rule_np1();

// Four-point brick rule:
//   (0, +sqrt(2/3), -1/sqrt(3)), (0, -sqrt(2/3), -1/sqrt(3)),
//   (+sqrt(2/3), 0, +1/sqrt(3)), (-sqrt(2/3), 0, +1/sqrt(3)),
// each with weight 2.
QuadratureRule special_rule_np4();

// Plain sequential sum over the rule's points in stored order, for
// bit-reproducible results.
double integrate(const QuadratureRule& rule,
                 const std::function<double(const LocalCoord&)>& f);

}  // namespace hexmass
