// Runs every acceptance criterion at its stated tolerance and prints one
// PASS/FAIL line each. Optional arguments select criteria by number.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <set>
#include <string>
#include <vector>

#include "nlsphere/models.hpp"
#include "nlsphere/quadrature.hpp"
#include "nlsphere/specfun.hpp"
#include "nlsphere/spectrum.hpp"

using namespace nlsphere;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

struct Criterion {
    int id;
    const char* name;
    double time_limit;  // seconds, <= 0 for none
    std::function<Outcome()> run;
};

std::string fmt(const char* f, double a)
{
    char buf[96];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

std::string fmt(const char* f, double a, double b)
{
    char buf[128];
    std::snprintf(buf, sizeof buf, f, a, b);
    return buf;
}

Outcome closed_form_spectrum()
{
    const Spectrum s = compute_spectrum(200, KernelParams(-0.5, 2.0));
    double worst = s[0] == 0.0 ? 0.0 : 1.0;
    for (int l = 1; l <= 200; ++l) worst = std::max(worst, std::abs(s[l] + 2.0 * l) / (2.0 * l));
    return {worst <= 1e-11, fmt("max relative error %.2e (tol 1e-11)", worst)};
}

Outcome local_limit()
{
    double worst_ratio = 0.0;
    for (double a : {-0.5, 0.5})
        for (double d : {1e-3, 1e-2}) {
            const Spectrum s = compute_spectrum(50, KernelParams(a, d));
            for (int l = 1; l <= 50; ++l) {
                const double ll = l * (l + 1.0);
                const double bound = ll * (l + 2.0) * (l + 2.0) * d * d / 16.0;
                worst_ratio = std::max(worst_ratio, std::abs(s[l] + ll) / bound);
            }
        }
    return {worst_ratio <= 1.0, fmt("max |lambda + l(l+1)| / bound = %.3f (tol 1)", worst_ratio)};
}

Outcome spectrum_bounds()
{
    double worst = 0.0;  // largest violation in units of the slack
    int checked = 0;
    for (double a : {-0.9, -0.5, 0.0, 0.5, 0.9})
        for (double d : {0.01, 0.1, 1.0, 2.0}) {
            const Spectrum s = compute_spectrum(200, KernelParams(a, d));
            for (int l = 1; l <= 200; ++l) {
                const double ll = l * (l + 1.0);
                const double slack = 1e-8 * ll;
                const double excess = std::max(s[l] - 0.0, -ll - s[l]);
                worst = std::max(worst, excess / slack);
                ++checked;
            }
            if (s[0] != 0.0) worst = std::max(worst, 2.0);
        }
    return {worst <= 1.0, fmt("%.0f eigenvalues, worst excess %.2e x slack", checked, worst)};
}

Outcome hybrid_consistency()
{
    const KernelParams p(-0.5, 1.0);
    double worst = 0.0;
    for (int l = 60; l <= 1000; ++l) {
        const double r = eigenvalue(l, p, EvalMethod::recurrence());
        const double a = eigenvalue(l, p, EvalMethod::asymptotic());
        worst = std::max(worst, std::abs(a - r) / std::abs(r));
    }
    return {worst <= 1e-8, fmt("max relative difference %.2e over l=60..1000 (tol 1e-8)", worst)};
}

Outcome quadrature_exactness()
{
    double worst = 0.0;
    for (int n : {8, 64, 256})
        for (double a : {-0.5, 0.0, 0.5}) {
            const CCRule r = cc_weights(a, 0.0, n + 1);
            const auto mu = jacobi_moments(a, 0.0, n + 1);
            for (int k = 0; k <= n; ++k) {
                double s = 0.0;
                for (std::size_t j = 0; j < r.size(); ++j)
                    s += r.weights[j] * std::cos(k * std::acos(r.nodes[j]));
                worst = std::max(worst, std::abs(s - mu[k]) / std::abs(mu[0]));
            }
        }
    return {worst <= 1e-12, fmt("max |sum w T_k - mu_k| / mu_0 = %.2e (tol 1e-12)", worst)};
}

Outcome sht_roundtrip()
{
    double coeff = 0.0, parseval = 0.0;
    for (int n : {16, 64}) {
        const SphereGrid g(n);
        const SphHarmCoeffs c = random_coeffs(n, n, 1.0, 2024 + n);
        const GridValues v = synthesis(c, g);
        const SphHarmCoeffs back = analysis(v, g);
        for (std::size_t k = 0; k < c.data().size(); ++k)
            coeff = std::max(coeff, std::abs(back.data()[k] - c.data()[k]));
        GridValues sq = v;
        for (double& x : sq.data()) x *= x;
        const double norm2 = l2_norm(c) * l2_norm(c);
        parseval = std::max(parseval, std::abs(integrate(sq, g) - norm2) / norm2);
    }
    return {coeff <= 1e-12 && parseval <= 1e-11,
            fmt("roundtrip %.2e (tol 1e-12), Parseval %.2e (tol 1e-11)", coeff, parseval)};
}

Outcome poisson_convergence()
{
    const KernelParams p(0.0, 1.5);
    auto solve = [&](int n) { return solve_poisson(PoissonProblem(death_star_rhs(n), compute_spectrum(n, p))); };
    const SphHarmCoeffs ref = solve(160);
    std::vector<double> err;
    for (int n = 10; n <= 120; n += 10) err.push_back(relative_l2_error(solve(n), ref));
    // Geometric decay: each step of 10 degrees at least halves the error until
    // it reaches the rounding floor.
    constexpr double floor = 1e-13;
    bool geometric = true;
    for (std::size_t i = 1; i < err.size(); ++i)
        if (err[i - 1] > floor && err[i] > 0.5 * err[i - 1]) geometric = false;
    const double at100 = err[9];
    std::string detail = "errors n=10..120:";
    for (double e : err) detail += fmt(" %.1e", e);
    return {geometric && at100 <= 1e-11, detail + fmt("; n=100: %.2e (tol 1e-11)", at100)};
}

Outcome etdrk4_order()
{
    const int n = 63;
    AllenCahnConfig cfg;  // eps 0.1, alpha -0.5, delta 1
    cfg.degree = n;
    const SphereGrid grid(n);
    const auto nonlinearity = allen_cahn_pseudospectral(grid);
    const SphHarmCoeffs u0 = cos10xy(n);
    const std::vector<DiagonalOperator> ops{allen_cahn_operator(cfg)};
    auto run = [&](int k) {
        return evolve(Fields{u0}, ops, nonlinearity, std::ldexp(1.0, -k), 1L << k)[0];
    };
    const SphHarmCoeffs ref = run(8);
    std::vector<double> lh, le;
    std::string detail = "errors h=2^-2..2^-6:";
    for (int k = 2; k <= 6; ++k) {
        const double e = relative_l2_error(run(k), ref);
        detail += fmt(" %.2e", e);
        lh.push_back(-k * std::log(2.0));
        le.push_back(std::log(e));
    }
    const double mx = (lh.front() + lh.back()) / 2.0;
    double my = 0.0;
    for (double y : le) my += y / le.size();
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < lh.size(); ++i) {
        sxy += (lh[i] - mx) * (le[i] - my);
        sxx += (lh[i] - mx) * (lh[i] - mx);
    }
    const double slope = sxy / sxx;
    return {std::abs(slope - 4.0) <= 0.5, detail + fmt("; fitted slope %.3f (4 +- 0.5)", slope)};
}

Outcome energy_monotone()
{
    const int n = 127;
    const SphHarmCoeffs u0 = random_coeffs(127, n, 1.0 / 128.0, 0);
    const SphereGrid grid(n);
    const SphereGrid egrid = energy_grid(n);
    const auto nonlinearity = allen_cahn_pseudospectral(grid);
    bool ok = true;
    std::string detail;
    for (Kernel k : {Kernel{LocalKernel{}}, Kernel{KernelParams(-0.5, 1.0)}}) {
        AllenCahnConfig cfg;
        cfg.degree = n;
        cfg.kernel = k;
        const DiagonalOperator op = allen_cahn_operator(cfg);
        std::vector<double> e;
        Observer rec{1, [&](long, double, const Fields& u) {
                         e.push_back(ginzburg_landau_energy(u[0], op.lambda(), cfg.epsilon, egrid));
                     }};
        const std::vector<DiagonalOperator> ops{op};
        evolve(Fields{u0}, ops, nonlinearity, 0.1, 200, std::span(&rec, 1));
        double worst = -1e300;
        for (std::size_t s = 1; s < e.size(); ++s)
            worst = std::max(worst, (e[s] - e[s - 1]) / std::abs(e[s - 1]));
        ok = ok && worst <= 1e-8;
        detail += std::string(std::holds_alternative<LocalKernel>(k) ? "local" : "nonlocal") +
                  fmt(": E %.4f -> %.4f", e.front(), e.back()) +
                  fmt(", max relative step change %.2e; ", worst);
    }
    return {ok, detail + "slack 1e-8"};
}

Outcome cesaro_overshoot()
{
    const int n = 100;
    // sign(z) has zonal coefficients 4 pi sqrt((2l+1)/(4 pi)) int_0^1 P_l for odd l,
    // with int_0^1 P_l = (P_{l-1}(0) - P_{l+1}(0)) / (2l+1).
    SphHarmCoeffs c(n);
    for (int l = 1; l <= n; l += 2) {
        const double half = (legendre_rec(l - 1, 0.0) - legendre_rec(l + 1, 0.0)) / (2 * l + 1);
        c.set(l, 0, 4.0 * std::numbers::pi * std::sqrt((2 * l + 1) / (4.0 * std::numbers::pi)) * half);
    }
    const SphereGrid fine(4 * n);
    auto max_of = [&](const SphHarmCoeffs& a) {
        const GridValues v = synthesis(a, fine);
        return *std::max_element(v.data().begin(), v.data().end());
    };
    const double raw = max_of(c);
    const double c2 = max_of(cesaro_apply(c, 2));
    return {raw > 1.05 && c2 <= 1.001, fmt("raw max %.5f (> 1.05), (C,2) max %.6f (<= 1.001)", raw, c2)};
}

Outcome brusselator_fixed_point()
{
    const int n = 63;
    const BrusselatorConfig cfg;  // E 4, eps 0.075, tau 7.8125, f 0.8
    const auto ops = brusselator_operators(compute_spectrum(n, KernelParams(0.0, 1.0)).values(), cfg);
    const SphereGrid grid(n);
    const Fields start = brusselator_equilibrium(n, cfg);
    const Fields end = evolve(start, ops, brusselator_pseudospectral(grid, cfg), 0.1, 100);
    double drift = 0.0;
    for (int f = 0; f < 2; ++f) {
        const GridValues a = synthesis(start[f], grid), b = synthesis(end[f], grid);
        for (std::size_t k = 0; k < a.data().size(); ++k)
            drift = std::max(drift, std::abs(a.data()[k] - b.data()[k]));
    }
    return {drift <= 1e-10, fmt("max pointwise drift %.2e after 100 steps (tol 1e-10)", drift)};
}

}  // namespace

int main(int argc, char** argv)
{
    const std::vector<Criterion> criteria{
        {1, "closed-form spectrum alpha=-0.5 delta=2", 5.0, closed_form_spectrum},
        {2, "local limit bound", 5.0, local_limit},
        {3, "spectrum bounds over parameter grid", 30.0, spectrum_bounds},
        {4, "recurrence vs asymptotic eigenvalues", 60.0, hybrid_consistency},
        {5, "Clenshaw-Curtis exactness", 0.0, quadrature_exactness},
        {6, "SHT roundtrip and Parseval", 0.0, sht_roundtrip},
        {7, "Poisson spectral convergence", 300.0, poisson_convergence},
        {8, "ETDRK4 fourth order on Allen-Cahn", 600.0, etdrk4_order},
        {9, "Ginzburg-Landau energy decay", 0.0, energy_monotone},
        {10, "Cesaro (C,2) removes Gibbs overshoot", 0.0, cesaro_overshoot},
        {11, "Brusselator equilibrium is fixed", 0.0, brusselator_fixed_point},
    };

    std::set<int> selected;
    for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));

    int failures = 0;
    for (const auto& c : criteria) {
        if (!selected.empty() && !selected.count(c.id)) continue;
        const auto t0 = std::chrono::steady_clock::now();
        Outcome out{false, ""};
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::string timing = fmt("%.2fs", secs);
        if (c.time_limit > 0) {
            timing += fmt(" of %.0fs", c.time_limit);
            if (secs > c.time_limit) {
                out.pass = false;
                out.detail += "; over time limit";
            }
        }
        if (!out.pass) ++failures;
        std::printf("%s [%2d] %s: %s (%s)\n", out.pass ? "PASS" : "FAIL", c.id, c.name,
                    out.detail.c_str(), timing.c_str());
        std::fflush(stdout);
    }
    std::printf("%d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
