#include "entmom/acceptance.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <functional>

#include "entmom/detect.hpp"
#include "entmom/errors.hpp"
#include "entmom/rng.hpp"
#include "entmom/states.hpp"
#include "entmom/threshold.hpp"

namespace entmom {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

// sqrt(1-b^2)/2 coherences replaced by (1+b)/2; constructed with a loose
// PSD tolerance so the defect surfaces in the PPT oracle, not the ctor
DensityMatrix corrupted_sigma_b(double b) {
    ComplexMatrix m(8, 8);
    for (std::size_t i = 0; i < 4; ++i)
        m(i, i) = b;
    m(5, 5) = b;
    m(6, 6) = b;
    m(0, 5) = m(5, 0) = b;
    m(1, 6) = m(6, 1) = b;
    m(2, 7) = m(7, 2) = b;
    m(4, 4) = m(7, 7) = (1.0 + b) / 2.0;
    m(4, 7) = m(7, 4) = (1.0 + b) / 2.0;
    m *= Complex{1.0 / (7.0 * b + 1.0), 0.0};
    return DensityMatrix(std::move(m), Dims{2, 4}, 1e-12, 1e-12, 1.0);
}

ComplexMatrix random_hermitian(std::size_t d, std::uint64_t seed) {
    SeededRng rng(seed);
    ComplexMatrix m(d, d);
    for (std::size_t i = 0; i < d; ++i) {
        m(i, i) = rng.uniform() - 0.5;
        for (std::size_t j = i + 1; j < d; ++j) {
            const Complex v{rng.uniform() - 0.5, rng.uniform() - 0.5};
            m(i, j) = v;
            m(j, i) = std::conj(v);
        }
    }
    return m;
}

AcceptanceResult item_werner_threshold(ConsistencyLog& log) {
    const double target = 1.0 / 3.0;
    auto s1_min = [&](const std::string& map_id, double w) {
        const DensityMatrix rho = werner(w);
        return evaluate_detection(rho, make_map(map_id, 2), 1, 5, true, &log).hankel.min_eig_s1;
    };
    const double root_l1 = bisect_threshold(
        [&](double w) { return s1_min("lambda1", w); }, 0.2, 0.5, 1e-9);
    const double root_t = bisect_threshold(
        [&](double w) { return s1_min("transpose", w); }, 0.2, 0.5, 1e-9);
    const bool pass = std::abs(root_l1 - target) <= 1e-6 && std::abs(root_t - target) <= 1e-6;
    return {1, "werner S1 sign change at w = 1/3 (lambda1 and transpose)", pass,
            "lambda1 root " + fmt(root_l1) + ", transpose root " + fmt(root_t) +
                ", target " + fmt(target)};
}

AcceptanceResult item_spectrum_equivalence() {
    const SignedKrausMap map = lambda1();
    double worst = 0.0;
    for (std::uint64_t k = 0; k < 500; ++k) {
        const DensityMatrix rho = random_density(Dims{2, 2}, 7100 + k);
        const Spectrum via_map = mapped_spectrum(rho, map, 1);
        const Spectrum via_pt = hermitian_eigenvalues(partial_transpose(rho, 1));
        for (std::size_t i = 0; i < via_map.eigenvalues.size(); ++i)
            worst = std::max(worst, std::abs(via_map.eigenvalues[i] - via_pt.eigenvalues[i]));
    }
    const bool pass = worst <= 1e-9;
    return {2, "lambda1 spectrum equals partial-transpose spectrum (500 random states)", pass,
            "worst entrywise deviation " + fmt(worst)};
}

AcceptanceResult item_lambda2_suboptimal(ConsistencyLog& log) {
    const SignedKrausMap map = lambda2();
    auto s2_min = [&](double w) {
        return evaluate_detection(werner(w), map, 1, 5, true, &log).hankel.min_eig_s2;
    };
    double worst_s1 = 1.0;
    std::size_t first_neg = 0;
    bool found = false;
    const auto grid = linspace(0.0, 1.0, 101);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const DetectionResult d = evaluate_detection(werner(grid[i]), map, 1, 5, true, &log);
        worst_s1 = std::min(worst_s1, d.hankel.min_eig_s1);
        if (!found && d.hankel.min_eig_s2 < -1e-10) {
            first_neg = i;
            found = true;
        }
    }
    const bool s1_ok = worst_s1 >= -1e-10;
    double crossing = std::nan("");
    if (found && first_neg > 0)
        crossing = bisect_threshold(s2_min, grid[first_neg - 1], grid[first_neg], 1e-9);
    const bool pass = s1_ok && found && std::abs(crossing - 0.70) <= 0.01;
    return {3, "lambda2: S1 never negative, S2 turns negative at w = 0.70 +/- 0.01", pass,
            "S1 min over grid " + fmt(worst_s1) + ", S2 crossing " + fmt(crossing)};
}

AcceptanceResult item_rho_alpha_thresholds(ConsistencyLog& log) {
    // this family is detected only when the qutrit map acts on the first party
    const SignedKrausMap map = phi1();
    auto detection = [&](double alpha) {
        return evaluate_detection(rho_alpha(alpha), map, 0, 5, true, &log);
    };
    const double t_q3 = bisect_threshold(
        [&](double a) { return detection(a).q3_lambda_verdict->witness_value; }, 2.5, 4.9,
        1e-7);
    const double t_oq3 = bisect_threshold(
        [&](double a) { return detection(a).q3_optimal_verdict->witness_value; }, 2.5, 4.9,
        1e-7);
    const double t_oppt = bisect_threshold(
        [&](double a) {
            return evaluate_pt(rho_alpha(a), 1, 5, &log).p3_oppt_verdict.witness_value;
        },
        4.2, 5.0, 1e-7);
    const bool pass = std::abs(t_q3 - 3.1658) <= 1e-3 && std::abs(t_oq3 - 3.0291) <= 1e-3 &&
                      std::abs(t_oppt - 4.7259) <= 1e-3;
    return {4, "rho_alpha thresholds: q3 3.1658, optimal-q3 3.0291, optimal-PT 4.7259", pass,
            "q3 " + fmt(t_q3) + ", optimal-q3 " + fmt(t_oq3) + ", optimal-PT " + fmt(t_oppt)};
}

AcceptanceResult item_rho_alpha_npt_boundary() {
    const double root = bisect_threshold(
        [](double a) {
            return hermitian_eigenvalues(partial_transpose(rho_alpha(a), 1)).min();
        },
        3.5, 4.5, 1e-8);
    const bool pass = std::abs(root - 4.0) <= 1e-6;
    return {5, "rho_alpha partial transpose changes sign at alpha = 4", pass,
            "root " + fmt(root)};
}

AcceptanceResult item_ppt_families(bool corrupt) {
    double worst = 0.0;
    std::string worst_at = "-";
    auto scan_state = [&](const DensityMatrix& rho, const std::string& label) {
        const PptReport rep = ppt_check(rho);
        if (rep.min_eig() < worst) {
            worst = rep.min_eig();
            worst_at = label;
        }
    };
    const auto grid = linspace(1.0 / 22.0, 21.0 / 22.0, 21);
    for (double b : grid)
        scan_state(corrupt ? corrupted_sigma_b(b) : sigma_b(b), "sigma_b(" + fmt(b) + ")");
    for (double a : grid)
        scan_state(sigma_a(a), "sigma_a(" + fmt(a) + ")");
    scan_state(upb_tiles(), "upb_tiles");
    const bool pass = worst >= -1e-10;
    return {6, "sigma_b, sigma_a and upb_tiles are PPT across the parameter grids", pass,
            "worst PT eigenvalue " + fmt(worst) + " at " + worst_at};
}

AcceptanceResult item_upb_closed_form(ConsistencyLog& log) {
    const double closed = -9.0 / (4.0 * (301.0 + std::sqrt(91177.0)));
    const DensityMatrix rho = upb_tiles();
    std::string matches = "none";
    std::string detail = "closed form " + fmt(closed) + ";";
    bool finite = true;
    for (const char* id : {"reduction:3", "hou:3:ordered"}) {
        const SignedKrausMap map = make_map(id, 3);
        const DetectionResult norm = evaluate_detection(rho, map, 1, 5, true, &log);
        const DetectionResult raw = evaluate_detection(rho, map, 1, 5, false, &log);
        detail += std::string(" ") + id + " S1 min normalized " +
                  fmt(norm.hankel.min_eig_s1) + " raw " + fmt(raw.hankel.min_eig_s1) + ";";
        finite = finite && std::isfinite(norm.hankel.min_eig_s1) &&
                 std::isfinite(raw.hankel.min_eig_s1);
        if (std::abs(norm.hankel.min_eig_s1 - closed) <= 1e-9)
            matches = std::string(id) + " (normalized)";
        if (std::abs(raw.hankel.min_eig_s1 - closed) <= 1e-9)
            matches = std::string(id) + " (unnormalized)";
    }
    detail += " matching convention: " + matches;
    return {7, "upb_tiles S1 minimum compared against the closed-form value", finite, detail};
}

AcceptanceResult item_tripartite_equality() {
    const SignedKrausMap map = lambda1();
    double worst = 0.0;
    for (double t : linspace(0.0, 1.0, 11)) {
        for (int family = 0; family < 2; ++family) {
            const DensityMatrix rho = family == 0 ? ghz_noise(t) : w_noise(t);
            const MomentSequence geo = tripartite_moments(rho, map, 5, false);
            const MomentSequence pt =
                moment_sequence(partial_transpose(rho, 2), 5, false);
            for (std::size_t k = 0; k < 5; ++k)
                worst = std::max(worst, std::abs(geo.values[k] - pt.values[k]));
        }
    }
    const bool pass = worst <= 1e-10;
    return {8, "three-qubit geometric-mean moments equal PT moments (GHZ and W noise)", pass,
            "worst order-wise deviation " + fmt(worst)};
}

AcceptanceResult item_separable_guarantee(ConsistencyLog& log) {
    struct Case {
        Dims dims;
        std::size_t trials;
        std::vector<std::string> maps;
    };
    const std::vector<Case> cases = {
        {{2, 2}, 334, {"transpose", "lambda1", "lambda2", "reduction:2", "hou:2:unordered"}},
        {{2, 4},
         333,
         {"transpose", "lambda1", "lambda2", "reduction:2", "hou:2:unordered", "reduction:4",
          "hou:4:unordered"}},
        {{3, 3}, 333, {"transpose", "phi1", "reduction:3", "hou:3:unordered"}},
    };
    double worst = 0.0;
    std::string context = "-";
    std::size_t evaluations = 0;
    std::uint64_t seed = 90000;
    for (const auto& c : cases) {
        const SweepReport rep = separable_sweep(c.trials, c.dims, c.maps, seed, 5, &log);
        evaluations += rep.evaluations;
        if (rep.worst_witness < worst) {
            worst = rep.worst_witness;
            context = rep.worst_context;
        }
        seed += c.trials;
    }
    const bool pass = worst >= -1e-9;
    return {9, "1000 random separable states produce no witness below -1e-9", pass,
            "worst witness " + fmt(worst) + " (" + context + "), " +
                std::to_string(evaluations) + " evaluations"};
}

AcceptanceResult item_consistency(const ConsistencyLog& log) {
    const bool pass = log.checks > 0 && log.violations.empty();
    std::string detail = std::to_string(log.checks) + " checks, " +
                         std::to_string(log.violations.size()) + " violations";
    if (!log.violations.empty())
        detail += "; first: " + log.violations.front();
    return {10, "PSD mapped spectrum never pairs with a negative Hankel matrix", pass, detail};
}

AcceptanceResult item_moment_cross_check() {
    const std::array<std::size_t, 3> dims{4, 8, 9};
    double worst = 0.0;
    for (std::uint64_t k = 0; k < 200; ++k) {
        const ComplexMatrix m = random_hermitian(dims[k % 3], 550000 + k);
        const MomentSequence by_spec = moment_sequence(m, 5, false);
        const MomentSequence by_power = moment_sequence_by_power(m, 5, false);
        for (std::size_t i = 0; i < 5; ++i)
            worst = std::max(worst, std::abs(by_spec.values[i] - by_power.values[i]));
    }
    const bool pass = worst <= 1e-9;
    return {11, "spectrum-based and multiplication-based trace powers agree", pass,
            "worst deviation " + fmt(worst) + " over 200 matrices of dimension 4, 8, 9"};
}

}  // namespace

std::vector<AcceptanceResult> run_acceptance(const AcceptanceOptions& options) {
    std::vector<AcceptanceResult> results;
    ConsistencyLog log;
    auto guarded = [&results](int id, const char* name,
                              const std::function<AcceptanceResult()>& fn) {
        try {
            results.push_back(fn());
        } catch (const std::exception& e) {
            results.push_back({id, name, false, std::string("error: ") + e.what()});
        }
    };

    guarded(1, "werner S1 sign change at w = 1/3 (lambda1 and transpose)",
            [&] { return item_werner_threshold(log); });
    guarded(2, "lambda1 spectrum equals partial-transpose spectrum (500 random states)",
            [&] { return item_spectrum_equivalence(); });
    guarded(3, "lambda2: S1 never negative, S2 turns negative at w = 0.70 +/- 0.01",
            [&] { return item_lambda2_suboptimal(log); });
    guarded(4, "rho_alpha thresholds: q3 3.1658, optimal-q3 3.0291, optimal-PT 4.7259",
            [&] { return item_rho_alpha_thresholds(log); });
    guarded(5, "rho_alpha partial transpose changes sign at alpha = 4",
            [&] { return item_rho_alpha_npt_boundary(); });
    guarded(6, "sigma_b, sigma_a and upb_tiles are PPT across the parameter grids",
            [&] { return item_ppt_families(options.corrupt_sigma_b); });
    guarded(7, "upb_tiles S1 minimum compared against the closed-form value",
            [&] { return item_upb_closed_form(log); });
    guarded(8, "three-qubit geometric-mean moments equal PT moments (GHZ and W noise)",
            [&] { return item_tripartite_equality(); });
    guarded(9, "1000 random separable states produce no witness below -1e-9",
            [&] { return item_separable_guarantee(log); });
    guarded(10, "PSD mapped spectrum never pairs with a negative Hankel matrix",
            [&] { return item_consistency(log); });
    guarded(11, "spectrum-based and multiplication-based trace powers agree",
            [&] { return item_moment_cross_check(); });
    return results;
}

bool all_passed(const std::vector<AcceptanceResult>& results) {
    for (const auto& r : results)
        if (!r.pass)
            return false;
    return true;
}

std::string format_acceptance_line(const AcceptanceResult& r) {
    char head[16];
    std::snprintf(head, sizeof(head), "[%s] %2d ", r.pass ? "PASS" : "FAIL", r.id);
    return std::string(head) + r.name + " -- " + r.details;
}

}  // namespace entmom
