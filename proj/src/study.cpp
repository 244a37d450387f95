#include "hexmass/study.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "hexmass/element_io.hpp"

namespace hexmass {

namespace {

LumpedMass compute_scheme(Scheme s, const ElementGeometry& g, const NodalDensities& d) {
    switch (s) {
        case Scheme::cm: return lumped_cm(g, d);
        case Scheme::lm: return lumped_lm(g, d);
        case Scheme::np1: return lumped_quadrature(g, d, special_rule_np1());
        case Scheme::np4: return lumped_quadrature(g, d, special_rule_np4());
    }
    throw std::logic_error("unknown scheme");
}

// Per-delta seed: one SplitMix64 step over the master seed offset by the
// delta index, so extending the grid never reshuffles existing draws.
std::uint64_t delta_seed(std::uint64_t master, std::size_t delta_index) {
    SplitMix64 mixer(master + 0x632be59bd9b4e019ULL * (delta_index + 1));
    return mixer.next_u64();
}

}  // namespace

const char* scheme_name(Scheme s) {
    switch (s) {
        case Scheme::cm: return "cm";
        case Scheme::lm: return "lm";
        case Scheme::np1: return "np1";
        case Scheme::np4: return "np4";
    }
    return "?";
}

StudyConfig default_study_config(std::uint64_t seed) {
    StudyConfig cfg;
    for (int i = 0; i <= 14; ++i) {
        cfg.deltas.push_back(0.05 * i);
    }
    cfg.seed = seed;
    return cfg;
}

double element_error_pct(const LumpedMass& approx, const LumpedMass& exact) {
    double sum = 0.0;
    for (int i = 0; i < 8; ++i) {
        if (exact.diag[i] == 0.0) {
            throw std::domain_error("element_error_pct: exact mass entry is zero");
        }
        sum += std::abs(approx.diag[i] - exact.diag[i]) / std::abs(exact.diag[i]);
    }
    return sum / 8.0 * 100.0;
}

EpsilonTable run_epsilon_table(double epsilon) {
    const ElementGeometry g = gen_shear_family(epsilon);
    const NodalDensities d = default_densities();
    const LumpedMass exact = lumped_exact(g, d);
    EpsilonTable table;
    table.epsilon = epsilon;
    table.cm_error_pct = element_error_pct(lumped_cm(g, d), exact);
    table.np1_error_pct = element_error_pct(lumped_quadrature(g, d, special_rule_np1()), exact);
    table.lm_error_pct = element_error_pct(lumped_lm(g, d), exact);
    table.np4_error_pct = element_error_pct(lumped_quadrature(g, d, special_rule_np4()), exact);
    return table;
}

std::vector<ErrorStats> run_delta_study(const StudyConfig& cfg) {
    if (cfg.elements_per_delta < 1) {
        throw std::invalid_argument("run_delta_study: elements_per_delta must be >= 1");
    }
    for (std::size_t i = 0; i < cfg.deltas.size(); ++i) {
        if (cfg.deltas[i] < 0.0 || (i > 0 && cfg.deltas[i] < cfg.deltas[i - 1])) {
            throw std::invalid_argument("run_delta_study: deltas must be non-negative and ascending");
        }
    }
    const NodalDensities d = default_densities();
    std::vector<ErrorStats> out;
    for (std::size_t di = 0; di < cfg.deltas.size(); ++di) {
        RandomFamilySpec spec;
        spec.delta = cfg.deltas[di];
        spec.count = cfg.elements_per_delta;
        spec.seed = delta_seed(cfg.seed, di);
        const auto elements = gen_random_family(spec);

        std::vector<double> mean(cfg.schemes.size(), 0.0);
        std::vector<double> max(cfg.schemes.size(), 0.0);
        int used = 0;
        int skipped = 0;
        for (const auto& g : elements) {
            if (centroid_metric(g) <= 0.0) {
                ++skipped;
                continue;
            }
            const LumpedMass exact = lumped_exact(g, d);
            for (std::size_t s = 0; s < cfg.schemes.size(); ++s) {
                const double err = element_error_pct(compute_scheme(cfg.schemes[s], g, d), exact);
                mean[s] += err;
                if (err > max[s]) max[s] = err;
            }
            ++used;
        }
        if (skipped > 0) {
            std::fprintf(stderr, "warning: delta=%g: skipped %d inverted element(s)\n",
                         cfg.deltas[di], skipped);
        }
        for (std::size_t s = 0; s < cfg.schemes.size(); ++s) {
            ErrorStats row;
            row.scheme = scheme_name(cfg.schemes[s]);
            row.delta = cfg.deltas[di];
            row.n_elements = used;
            row.n_skipped = skipped;
            row.mean_error_pct = used > 0 ? mean[s] / used : 0.0;
            row.max_error_pct = max[s];
            out.push_back(row);
        }
    }
    return out;
}

std::string to_csv(const std::vector<ErrorStats>& stats) {
    std::string csv = "scheme,delta,n_elements,n_skipped,mean_error_pct,max_error_pct\n";
    char buf[160];
    for (const auto& row : stats) {
        std::snprintf(buf, sizeof(buf), "%s,%.11e,%d,%d,%.11e,%.11e\n", row.scheme.c_str(),
                      row.delta, row.n_elements, row.n_skipped, row.mean_error_pct,
                      row.max_error_pct);
        csv += buf;
    }
    return csv;
}

std::vector<BenchRow> run_bench(int n_elements, int repetitions) {
    if (n_elements < 1) {
        throw std::invalid_argument("run_bench: n_elements must be >= 1");
    }
    if (repetitions < 1) {
        throw std::invalid_argument("run_bench: repetitions must be >= 1");
    }
    RandomFamilySpec spec;
    spec.delta = 0.4;
    spec.count = n_elements;
    spec.seed = 0x9e3779b97f4a7c15ULL;
    const auto elements = gen_random_family(spec);
    const NodalDensities d = default_densities();

    struct Entry {
        const char* name;
        LumpedMass (*fn)(const ElementGeometry&, const NodalDensities&);
    };
    static const Entry entries[] = {
        {"cm", [](const ElementGeometry& g, const NodalDensities& dd) { return lumped_cm(g, dd); }},
        {"lm", [](const ElementGeometry& g, const NodalDensities& dd) { return lumped_lm(g, dd); }},
        {"np1", [](const ElementGeometry& g, const NodalDensities& dd) {
             return lumped_quadrature(g, dd, special_rule_np1());
         }},
        {"np4", [](const ElementGeometry& g, const NodalDensities& dd) {
             return lumped_quadrature(g, dd, special_rule_np4());
         }},
        {"exact", [](const ElementGeometry& g, const NodalDensities& dd) {
             return lumped_exact(g, dd);
         }},
    };

    std::vector<BenchRow> out;
    volatile double sink = 0.0;
    for (const auto& entry : entries) {
        const auto start = std::chrono::steady_clock::now();
        for (int r = 0; r < repetitions; ++r) {
            for (const auto& g : elements) {
                sink = entry.fn(g, d).diag[0];
            }
        }
        const auto stop = std::chrono::steady_clock::now();
        const double ns = std::chrono::duration<double, std::nano>(stop - start).count();
        out.push_back({entry.name, ns / (static_cast<double>(repetitions) * n_elements)});
    }
    (void)sink;
    return out;
}

}  // namespace hexmass
