#pragma once

#include <array>
#include <string>

#include "hexmass/hex8.hpp"
#include "hexmass/quadrature.hpp"

// Lumped and consistent mass matrices for the 8-node brick under five
// schemes: the constant-metric (CM) and linear-metric (LM) closed-form
// rules, the 1-point and 4-point quadrature rules, and an exact
// 3x3x3-Gauss evaluation used as ground truth.

namespace hexmass {

struct LumpedMass {
    std::array<double, 8> diag{};
    std::string scheme;
    // Set by the LM rule when extreme distortion drives an entry <= 0;
    // informational, the values are still returned.
    bool nonpositive_entries = false;

    double total() const;
};

struct ConsistentMass {
    std::array<std::array<double, 8>, 8> m{};
    std::string scheme;

    double total() const;
};

// Linear metric model J ~ j0 + xi*jt1 + eta*jt2 + zeta*jt3, with the
// first-order terms sampled at the face centers (1,0,0), (0,1,0), (0,0,1).
struct LmMetricModel {
    double j0 = 0.0;
    double jt1 = 0.0;
    double jt2 = 0.0;
    double jt3 = 0.0;
};

/// Metric at the element centroid, J0.
double centroid_metric(const ElementGeometry& g);

LmMetricModel lm_metric_model(const ElementGeometry& g);

// Integer coefficient tables of the closed-form rules, in units of 1/27:
//   27 M^ii_CM = sum_j cm_coefficient(i,j) rho_j J0
//   27 M^ii_LM = 27 M^ii_CM + sum_j lm_coefficient(i,j,k) rho_j Jt_k
// cm_coefficient rows sum to 27.
int cm_coefficient(int i, int j);
int lm_coefficient(int i, int j, int axis);

// Closed-form constant-metric rule. Throws std::domain_error when J0 <= 0.
LumpedMass lumped_cm(const ElementGeometry& g, const NodalDensities& d);

// Closed-form linear-metric rule. Throws std::domain_error when J0 <= 0;
// non-positive output entries are flagged, not rejected.
LumpedMass lumped_lm(const ElementGeometry& g, const NodalDensities& d);

/// M^ii = sum_p rho0 phi^i J w_p with exact metric evaluation per point.
LumpedMass lumped_quadrature(const ElementGeometry& g, const NodalDensities& d,
                             const QuadratureRule& rule);

// Ground truth: 3x3x3 Gauss. The integrand rho0 phi^i J has per-axis
// degree <= 4, within the rule's exactness degree 5.
LumpedMass lumped_exact(const ElementGeometry& g, const NodalDensities& d);

/// M^ij = sum_p rho0 phi^i phi^j J w_p; symmetric by construction.
ConsistentMass consistent_quadrature(const ElementGeometry& g,
                                     const NodalDensities& d,
                                     const QuadratureRule& rule);

/// Exact consistent matrix via 3x3x3 Gauss (per-axis degree <= 5).
ConsistentMass consistent_exact(const ElementGeometry& g,
                                const NodalDensities& d);

}  // namespace hexmass
