#include "nlsphere/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "nlsphere/errors.hpp"
#include "nlsphere/parallel.hpp"
#include "nlsphere/quadrature.hpp"
#include "nlsphere/specfun.hpp"

namespace nlsphere {
namespace {

// Neumaier-compensated accumulator.
class CompensatedSum {
public:
    void add(double x)
    {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) comp_ += (sum_ - t) + x;
        else comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

// P_l(cos theta) where sin^2(theta/2) = hav, away from theta = 0.
double legendre_at_hav(int ell, double hav, bool asymptotic)
{
    if (hav >= 1.0) return (ell % 2 == 0) ? 1.0 : -1.0;
    if (asymptotic) return legendre_szego(ell, 2.0 * std::asin(std::sqrt(hav)));
    return legendre_rec(ell, 1.0 - 2.0 * hav);
}

}  // namespace

KernelParams::KernelParams(double alpha, double delta) : alpha_(alpha), delta_(delta)
{
    if (!(alpha > -1.0 && alpha < 1.0))
        throw DomainError("kernel alpha must lie in (-1, 1), got " + std::to_string(alpha));
    if (!(delta > 0.0 && delta <= 2.0))
        throw DomainError("kernel delta must lie in (0, 2], got " + std::to_string(delta));
}

double KernelParams::prefactor() const noexcept
{
    return (1.0 + alpha_) * std::pow(2.0, 2.0 - alpha_) / (delta_ * delta_);
}

EvalMethod EvalMethod::hybrid(int switch_degree)
{
    if (switch_degree < 0) throw DomainError("switch degree must be nonnegative");
    return EvalMethod(Kind::Hybrid, switch_degree);
}

bool EvalMethod::uses_asymptotics(int ell) const noexcept
{
    switch (kind_) {
    case Kind::Recurrence: return false;
    case Kind::Asymptotic: return true;
    case Kind::Hybrid: return ell > switch_degree_;
    }
    return false;
}

Spectrum::Spectrum(KernelParams params, EvalMethod method, std::vector<double> values)
    : params_(params), method_(method), values_(std::move(values))
{
    if (values_.empty()) throw ShapeError("spectrum needs at least lambda(0)");
}

double near_zero_threshold(int ell)
{
    const double l = ell;
    return std::min(1e-2, 1.0 / std::max(1.0, l * (l + 1.0)));
}

int eigenvalue_node_count(int ell) { return std::max(ell + 1, 8); }

double eigenvalue_with_nodes(int ell, const KernelParams& params, const EvalMethod& method,
                             int n_nodes)
{
    if (ell < 0) throw DomainError("degree must be nonnegative");
    if (ell == 0) return 0.0;

    const CCRule rule = cc_weights(params.alpha(), 0.0, n_nodes);
    const double scale = params.delta() * params.delta() / 8.0;
    const double threshold = near_zero_threshold(ell);
    const bool asymptotic = method.uses_asymptotics(ell);
    const double l = ell;

    CompensatedSum sum;
    for (std::size_t j = 0; j < rule.size(); ++j) {
        const double one_minus = rule.one_minus_nodes[j];
        const double hav = scale * one_minus;
        double g;
        if (one_minus == 0.0) g = -scale * l * (l + 1.0);
        else if (hav <= threshold) g = scale * legendre_m1_over_hav_series(ell, hav);
        else g = (legendre_at_hav(ell, hav, asymptotic) - 1.0) / one_minus;
        sum.add(rule.weights[j] * g);
    }
    return params.prefactor() * sum.value();
}

double eigenvalue(int ell, const KernelParams& params, const EvalMethod& method)
{
    return eigenvalue_with_nodes(ell, params, method, eigenvalue_node_count(ell));
}

Spectrum compute_spectrum(int n, const KernelParams& params, const EvalMethod& method)
{
    if (n < 0) throw DomainError("spectrum degree must be nonnegative");
    std::vector<double> values(static_cast<std::size_t>(n) + 1, 0.0);
    // Largest degrees first so the expensive entries start early.
    parallel_for(static_cast<std::size_t>(n), [&](std::size_t i) {
        const int ell = n - static_cast<int>(i);
        values[static_cast<std::size_t>(ell)] = eigenvalue(ell, params, method);
    });
    return Spectrum(params, method, std::move(values));
}

double local_eigenvalue(int ell)
{
    if (ell < 0) throw DomainError("degree must be nonnegative");
    return -static_cast<double>(ell) * (ell + 1.0);
}

std::vector<double> local_spectrum_values(int n)
{
    std::vector<double> v(static_cast<std::size_t>(n) + 1);
    for (int l = 0; l <= n; ++l) v[static_cast<std::size_t>(l)] = local_eigenvalue(l);
    return v;
}

}  // namespace nlsphere
