#include "hexmass/mass.hpp"

#include <numeric>
#include <stdexcept>

namespace hexmass {

double LumpedMass::total() const {
    return std::accumulate(diag.begin(), diag.end(), 0.0);
}

double ConsistentMass::total() const {
    double sum = 0.0;
    for (const auto& row : m) {
        sum = std::accumulate(row.begin(), row.end(), sum);
    }
    return sum;
}

double centroid_metric(const ElementGeometry& g) {
    return det3(jacobian_at(g, LocalCoord{}));
}

LmMetricModel lm_metric_model(const ElementGeometry& g) {
    LmMetricModel model;
    model.j0 = centroid_metric(g);
    model.jt1 = metric_at(g, LocalCoord{1.0, 0.0, 0.0}) - model.j0;
    model.jt2 = metric_at(g, LocalCoord{0.0, 1.0, 0.0}) - model.j0;
    model.jt3 = metric_at(g, LocalCoord{0.0, 0.0, 1.0}) - model.j0;
    return model;
}

// Closed-form coefficient tables. With corner signs s, analytical
// integration of phi^i phi^j and of xi_k phi^i phi^j over the cube gives
//   27 int phi^i phi^j     = prod_a (s_i==s_j ? 2 : 1)
//   27 int xi_k phi^i phi^j = (s_i^k + s_j^k)/2 * prod_{a!=k} (s_i==s_j ? 2 : 1)
// which reproduces the published integer rows; the unit tests pin those.

int cm_coefficient(int i, int j) {
    int c = 1;
    for (int a = 0; a < 3; ++a) {
        c *= (kCornerSigns[i][a] == kCornerSigns[j][a]) ? 2 : 1;
    }
    return c;
}

int lm_coefficient(int i, int j, int axis) {
    int c = (kCornerSigns[i][axis] + kCornerSigns[j][axis]) / 2;
    for (int a = 0; a < 3; ++a) {
        if (a == axis) continue;
        c *= (kCornerSigns[i][a] == kCornerSigns[j][a]) ? 2 : 1;
    }
    return c;
}

LumpedMass lumped_cm(const ElementGeometry& g, const NodalDensities& d) {
    const double j0 = centroid_metric(g);
    if (j0 <= 0.0) {
        throw std::domain_error("lumped_cm: non-positive centroid metric (inverted element)");
    }
    LumpedMass out;
    out.scheme = "cm";
    for (int i = 0; i < 8; ++i) {
        double acc = 0.0;
        for (int j = 0; j < 8; ++j) {
            acc += cm_coefficient(i, j) * d.rho[j];
        }
        out.diag[i] = acc * j0 / 27.0;
    }
    return out;
}

LumpedMass lumped_lm(const ElementGeometry& g, const NodalDensities& d) {
    const LmMetricModel model = lm_metric_model(g);
    if (model.j0 <= 0.0) {
        throw std::domain_error("lumped_lm: non-positive centroid metric (inverted element)");
    }
    const double jt[3] = {model.jt1, model.jt2, model.jt3};
    LumpedMass out;
    out.scheme = "lm";
    for (int i = 0; i < 8; ++i) {
        double acc = 0.0;
        for (int j = 0; j < 8; ++j) {
            double coeff = cm_coefficient(i, j) * model.j0;
            for (int k = 0; k < 3; ++k) {
                coeff += lm_coefficient(i, j, k) * jt[k];
            }
            acc += coeff * d.rho[j];
        }
        out.diag[i] = acc / 27.0;
        if (out.diag[i] <= 0.0) {
            out.nonpositive_entries = true;
        }
    }
    return out;
}

LumpedMass lumped_quadrature(const ElementGeometry& g, const NodalDensities& d,
                             const QuadratureRule& rule) {
    LumpedMass out;
    out.scheme = rule.name;
    for (const auto& p : rule.points) {
        const auto phi = shape_values(p.coord);
        const double rho = density_at(d, p.coord);
        const double jac = metric_at(g, p.coord);
        const double factor = rho * jac * p.weight;
        for (int i = 0; i < 8; ++i) {
            out.diag[i] += phi[i] * factor;
        }
    }
    return out;
}

LumpedMass lumped_exact(const ElementGeometry& g, const NodalDensities& d) {
    LumpedMass out = lumped_quadrature(g, d, gauss_tensor(3));
    out.scheme = "exact";
    return out;
}

ConsistentMass consistent_quadrature(const ElementGeometry& g,
                                     const NodalDensities& d,
                                     const QuadratureRule& rule) {
    ConsistentMass out;
    out.scheme = rule.name;
    for (const auto& p : rule.points) {
        const auto phi = shape_values(p.coord);
        const double factor = density_at(d, p.coord) * metric_at(g, p.coord) * p.weight;
        for (int i = 0; i < 8; ++i) {
            for (int j = 0; j <= i; ++j) {
                out.m[i][j] += phi[i] * phi[j] * factor;
            }
        }
    }
    for (int i = 0; i < 8; ++i) {
        for (int j = i + 1; j < 8; ++j) {
            out.m[i][j] = out.m[j][i];
        }
    }
    return out;
}

ConsistentMass consistent_exact(const ElementGeometry& g,
                                const NodalDensities& d) {
    ConsistentMass out = consistent_quadrature(g, d, gauss_tensor(3));
    out.scheme = "exact";
    return out;
}

}  // namespace hexmass
