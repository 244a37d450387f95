#pragma once

#include <array>
#include <cstddef>

// Reference-element mathematics for the 8-node trilinear brick: shape
// functions and their gradients on the bi-unit cube [-1,1]^3, the
// isoparametric geometry and density maps, and the Jacobian/metric.

namespace hexmass {

using Vec3 = std::array<double, 3>;
using Mat3 = std::array<std::array<double, 3>, 3>;

struct LocalCoord {
    double xi = 0.0;
    double eta = 0.0;
    double zeta = 0.0;
};

// Corner signs of the reference cube in node order. Node i sits at the
// corner where shape function i equals one:
//   1:(-1,-1,-1) 2:(+1,-1,-1) 3:(+1,+1,-1) 4:(-1,+1,-1)
//   5:(-1,-1,+1) 6:(+1,-1,+1) 7:(+1,+1,+1) 8:(-1,+1,+1)
inline constexpr std::array<std::array<int, 3>, 8> kCornerSigns = {{
    {-1, -1, -1},
    {+1, -1, -1},
    {+1, +1, -1},
    {-1, +1, -1},
    {-1, -1, +1},
    {+1, -1, +1},
    {+1, +1, +1},
    {-1, +1, +1},
}};

struct ElementGeometry {
    // Row i = global Cartesian coordinates of node i.
    std::array<Vec3, 8> nodes{};
};

/// The reference cube itself: nodes at the corners listed above.
ElementGeometry reference_cube();

struct NodalDensities {
    std::array<double, 8> rho{};
};

/// Homogeneous density field.
NodalDensities uniform_density(double rho);

/// Trilinear shape function values phi^1..phi^8 at p. Sums to 1.
std::array<double, 8> shape_values(const LocalCoord& p);

/// Row i = (d phi^i/d xi, d phi^i/d eta, d phi^i/d zeta). Rows sum to zero.
std::array<Vec3, 8> shape_gradients(const LocalCoord& p);

/// Isoparametric map: X(p) = sum_i phi^i(p) N_i.
Vec3 geometry_map(const ElementGeometry& g, const LocalCoord& p);

/// Interpolated density rho_0(p) = sum_i phi^i(p) rho_i.
double density_at(const NodalDensities& d, const LocalCoord& p);

/// J_{mn} = d(X . e_m)/d(coordinate n) at p.
Mat3 jacobian_at(const ElementGeometry& g, const LocalCoord& p);

// Six-term determinant of a general 3x3 matrix:
//   J11 J22 J33 - J11 J23 J32 - J31 J22 J13 - J21 J12 J33
//   + J21 J32 J13 + J31 J12 J23
double det3(const Mat3& m);

/// Metric (Jacobian determinant) at p.
double metric_at(const ElementGeometry& g, const LocalCoord& p);

enum class Validity {
    ok,                 // centroid metric positive, all corner metrics positive
    corner_warning,     // centroid fine but some corner metric <= 0
    inverted,           // centroid metric <= 0
};

/// Centroid metric must be positive; non-positive corner metrics only warn.
Validity check_validity(const ElementGeometry& g);

}  // namespace hexmass
