#include "nlsphere/quadrature.hpp"

#include <fftw3.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "fftw_lock.hpp"
#include "nlsphere/errors.hpp"

namespace nlsphere {
namespace {

void check_jacobi_exponents(double alpha, double beta)
{
    if (!(alpha > -1.0) || !(beta > -1.0))
        throw DomainError("Jacobi exponents must exceed -1 (alpha=" + std::to_string(alpha) +
                          ", beta=" + std::to_string(beta) + ")");
}

// Y_j = X_0 + (-1)^j X_N + 2 sum_{k=1}^{N-1} X_k cos(pi j k / N)
void cosine_sum_direct(const std::vector<double>& x, std::vector<double>& y)
{
    const std::size_t n = x.size() - 1;
    std::vector<double> cos_table(2 * n);
    for (std::size_t r = 0; r < 2 * n; ++r)
        cos_table[r] = std::cos(std::numbers::pi * static_cast<double>(r) / static_cast<double>(n));
    for (std::size_t j = 0; j <= n; ++j) {
        double acc = x[0] + ((j % 2 == 0) ? x[n] : -x[n]);
        for (std::size_t k = 1; k < n; ++k) acc += 2.0 * x[k] * cos_table[(j * k) % (2 * n)];
        y[j] = acc;
    }
}

void cosine_sum_dct(std::vector<double> x, std::vector<double>& y)
{
    const int size = static_cast<int>(x.size());
    fftw_plan plan;
    {
        std::lock_guard lock(detail::fftw_planner_mutex());
        plan = fftw_plan_r2r_1d(size, x.data(), y.data(), FFTW_REDFT00, FFTW_ESTIMATE);
    }
    fftw_execute(plan);
    std::lock_guard lock(detail::fftw_planner_mutex());
    fftw_destroy_plan(plan);
}

}  // namespace

std::vector<double> jacobi_moments(double alpha, double beta, int count)
{
    check_jacobi_exponents(alpha, beta);
    if (count < 1) throw DomainError("moment count must be positive");
    std::vector<double> mu(static_cast<std::size_t>(count));
    mu[0] = std::pow(2.0, alpha + beta + 1.0) * std::beta(alpha + 1.0, beta + 1.0);
    if (count > 1) mu[1] = (beta - alpha) / (alpha + beta + 2.0) * mu[0];
    for (int l = 1; l + 1 < count; ++l) {
        mu[l + 1] = -(2.0 * (alpha - beta) * mu[l] + (alpha + beta - l + 2.0) * mu[l - 1]) /
                    (alpha + beta + l + 2.0);
    }
    return mu;
}

CCRule cc_weights(double alpha, double beta, int n_nodes, CosineSum method)
{
    check_jacobi_exponents(alpha, beta);
    if (n_nodes < 2) throw DomainError("Clenshaw-Curtis rule needs at least 2 nodes");
    const int n = n_nodes - 1;

    CCRule rule;
    rule.alpha = alpha;
    rule.beta = beta;
    rule.nodes.resize(n_nodes);
    rule.one_minus_nodes.resize(n_nodes);
    for (int k = 0; k <= n; ++k) {
        rule.nodes[k] = std::sin(std::numbers::pi * (n - 2.0 * k) / (2.0 * n));
        const double h = std::sin(std::numbers::pi * k / (2.0 * n));
        rule.one_minus_nodes[k] = 2.0 * h * h;
    }

    std::vector<double> mu = jacobi_moments(alpha, beta, n_nodes);
    rule.weights.resize(n_nodes);
    if (method == CosineSum::Direct) cosine_sum_direct(mu, rule.weights);
    else cosine_sum_dct(std::move(mu), rule.weights);

    for (int j = 0; j <= n; ++j) rule.weights[j] /= n;
    rule.weights[0] /= 2.0;
    rule.weights[n] /= 2.0;
    return rule;
}

GLRule gauss_legendre(int n_nodes)
{
    if (n_nodes < 1) throw DomainError("Gauss-Legendre rule needs at least 1 node");
    const int n = n_nodes;
    GLRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);

    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        bool converged = false;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 1; k < n; ++k) {
                const double p2 = ((2.0 * k + 1.0) * x * p1 - k * p0) / (k + 1.0);
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) <= 1e-15) {
                converged = true;
                break;
            }
        }
        if (!converged)
            throw ConvergenceError("Gauss-Legendre Newton iteration failed for n=" +
                                   std::to_string(n));
        // Refresh the derivative at the converged node.
        double p0 = 1.0, p1 = x;
        for (int k = 1; k < n; ++k) {
            const double p2 = ((2.0 * k + 1.0) * x * p1 - k * p0) / (k + 1.0);
            p0 = p1;
            p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);

        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = x;
        rule.nodes[n - 1 - i] = -x;
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
    return rule;
}

}  // namespace nlsphere
