#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "hexmass/element_io.hpp"
#include "hexmass/study.hpp"

using namespace hexmass;

TEST_CASE("error metric basics") {
    LumpedMass exact;
    exact.diag = {1, 2, 3, 4, 5, 6, 7, 8};
    CHECK(element_error_pct(exact, exact) == 0.0);

    LumpedMass scaled = exact;
    for (double& v : scaled.diag) v *= 1.01;
    CHECK(element_error_pct(scaled, exact) == doctest::Approx(1.0).epsilon(1e-12));

    LumpedMass zero = exact;
    zero.diag[3] = 0.0;
    CHECK_THROWS_AS(element_error_pct(exact, zero), std::domain_error);
}

TEST_CASE("the 1-point rule reads 11.25% on the shear configuration") {
    // Four entries at 12.5% plus four at 10%, averaged; this pins the
    // error metric definition.
    const ElementGeometry g = gen_shear_family(100.0);
    const NodalDensities d = default_densities();
    const LumpedMass np1 = lumped_quadrature(g, d, special_rule_np1());
    const LumpedMass exact = lumped_exact(g, d);
    CHECK(element_error_pct(np1, exact) == doctest::Approx(11.25).epsilon(1e-9));
}

TEST_CASE("epsilon table values") {
    for (double eps : {0.0, 100.0}) {
        const EpsilonTable t = run_epsilon_table(eps);
        CHECK(t.cm_error_pct <= 1e-9);
        CHECK(t.lm_error_pct <= 1e-9);
        CHECK(t.np4_error_pct <= 1e-9);
        // The 1-point error is epsilon-independent on this family.
        CHECK(t.np1_error_pct == doctest::Approx(11.25).epsilon(1e-9));
    }
    // Homogeneous densities make all four schemes exact; check the
    // building blocks directly.
    const ElementGeometry g = gen_shear_family(100.0);
    const NodalDensities homog = uniform_density(1.0);
    const LumpedMass exact = lumped_exact(g, homog);
    CHECK(element_error_pct(lumped_cm(g, homog), exact) <= 1e-9);
    CHECK(element_error_pct(lumped_lm(g, homog), exact) <= 1e-9);
    CHECK(element_error_pct(lumped_quadrature(g, homog, special_rule_np1()), exact) <= 1e-9);
    CHECK(element_error_pct(lumped_quadrature(g, homog, special_rule_np4()), exact) <= 1e-9);
}

TEST_CASE("delta study: zero-delta row and determinism") {
    StudyConfig cfg;
    cfg.deltas = {0.0, 0.2};
    cfg.elements_per_delta = 10;
    cfg.seed = 5;
    const auto stats = run_delta_study(cfg);
    REQUIRE(stats.size() == 8);  // 4 schemes x 2 deltas
    for (const auto& row : stats) {
        CHECK(row.mean_error_pct >= 0.0);
        CHECK(row.max_error_pct >= row.mean_error_pct - 1e-15);
        CHECK(std::isfinite(row.mean_error_pct));
        if (row.delta == 0.0) {
            if (row.scheme == "np1") {
                CHECK(row.mean_error_pct == doctest::Approx(11.25).epsilon(1e-9));
            } else {
                CHECK(row.mean_error_pct <= 1e-9);
            }
        }
    }
    CHECK(to_csv(run_delta_study(cfg)) == to_csv(stats));
}

TEST_CASE("delta study: per-delta seeds are stable under grid extension") {
    StudyConfig small;
    small.deltas = {0.1, 0.3};
    small.elements_per_delta = 20;
    small.seed = 17;
    StudyConfig large = small;
    large.deltas = {0.1, 0.3, 0.5};
    const auto a = run_delta_study(small);
    const auto b = run_delta_study(large);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].scheme == b[i].scheme);
        CHECK(a[i].delta == b[i].delta);
        CHECK(a[i].mean_error_pct == b[i].mean_error_pct);
        CHECK(a[i].max_error_pct == b[i].max_error_pct);
    }
}

TEST_CASE("delta study rejects invalid configs") {
    StudyConfig cfg;
    cfg.deltas = {0.3, 0.1};
    CHECK_THROWS_AS(run_delta_study(cfg), std::invalid_argument);
    cfg.deltas = {0.1};
    cfg.elements_per_delta = 0;
    CHECK_THROWS_AS(run_delta_study(cfg), std::invalid_argument);
}

TEST_CASE("csv schema and formatting") {
    StudyConfig cfg;
    cfg.deltas = {0.0};
    cfg.elements_per_delta = 2;
    cfg.seed = 1;
    const std::string csv = to_csv(run_delta_study(cfg));
    CHECK(csv.rfind("scheme,delta,n_elements,n_skipped,mean_error_pct,max_error_pct\n", 0) == 0);
    // Header plus one row per scheme.
    int lines = 0;
    for (char c : csv) lines += (c == '\n');
    CHECK(lines == 5);
    CHECK(csv.find("cm,0.00000000000e+00,2,0,") != std::string::npos);
}

TEST_CASE("bench report shape and ordering smoke check") {
    const auto rows = run_bench(200, 3);
    REQUIRE(rows.size() == 5);
    CHECK(rows[0].scheme == "cm");
    CHECK(rows[4].scheme == "exact");
    double cm_time = 0.0;
    double exact_time = 0.0;
    for (const auto& row : rows) {
        CHECK(row.ns_per_element > 0.0);
        if (row.scheme == "cm") cm_time = row.ns_per_element;
        if (row.scheme == "exact") exact_time = row.ns_per_element;
    }
    // 27 metric evaluations versus 1; generous margin for timing noise.
    CHECK(exact_time > 10.0 * cm_time);

    CHECK_THROWS_AS(run_bench(100, 0), std::invalid_argument);
    CHECK_THROWS_AS(run_bench(0, 1), std::invalid_argument);
}
