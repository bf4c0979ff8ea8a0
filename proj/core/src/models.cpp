#include "nlsphere/models.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "nlsphere/errors.hpp"

namespace nlsphere {
namespace {

void require_lambda(std::span<const double> lambda, int degree)
{
    if (lambda.size() != static_cast<std::size_t>(degree) + 1)
        throw ShapeError("eigenvalue count " + std::to_string(lambda.size()) +
                         " does not match degree " + std::to_string(degree));
}

template <typename Fn>
void for_each_entry(SphHarmCoeffs& c, Fn&& fn)
{
    const int n = c.degree();
    for (int col = 0; col <= 2 * n; ++col) {
        const int m = SphHarmCoeffs::order_of_column(col);
        for (int row = 0; row + m <= n; ++row) fn(c(row, col), row + m);
    }
}

GridValues pointwise(const GridValues& in, double (*f)(double))
{
    GridValues out(in.n_theta(), in.n_phi());
    auto src = in.data();
    auto dst = out.data();
    for (std::size_t k = 0; k < src.size(); ++k) dst[k] = f(src[k]);
    return out;
}

// Box-Muller over a 64-bit engine, caching the second variate.
class NormalStream {
public:
    explicit NormalStream(std::uint64_t seed) : engine_(seed) {}

    double next()
    {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        const double u1 = open_unit();
        const double u2 = open_unit();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(a);
        has_spare_ = true;
        return r * std::cos(a);
    }

private:
    // Uniform on (0, 1] with 53 random bits.
    double open_unit() { return (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53; }

    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

void fill_random(SphHarmCoeffs& c, int cap, double scale, NormalStream& normals)
{
    for (int l = 0; l <= cap; ++l)
        for (int m = -l; m <= l; ++m) c.set(l, m, scale * normals.next());
}

}  // namespace

std::vector<double> kernel_eigenvalues(const Kernel& kernel, int n, const EvalMethod& method)
{
    if (n < 0) throw DomainError("degree must be nonnegative");
    if (std::holds_alternative<LocalKernel>(kernel)) return local_spectrum_values(n);
    return compute_spectrum(n, std::get<KernelParams>(kernel), method).values();
}

PoissonProblem::PoissonProblem(SphHarmCoeffs rhs_, std::vector<double> lambda_)
    : rhs(std::move(rhs_)), lambda(std::move(lambda_))
{
    require_lambda(lambda, rhs.degree());
}

PoissonProblem::PoissonProblem(SphHarmCoeffs rhs_, const Spectrum& spectrum)
    : PoissonProblem(std::move(rhs_), spectrum.values())
{
}

SphHarmCoeffs solve_poisson(const PoissonProblem& problem)
{
    require_lambda(problem.lambda, problem.rhs.degree());
    for (std::size_t l = 1; l < problem.lambda.size(); ++l)
        if (problem.lambda[l] == 0.0)
            throw DomainError("zero eigenvalue at degree " + std::to_string(l) +
                              ": the operator is not invertible");
    SphHarmCoeffs u = problem.rhs;
    for_each_entry(u, [&](double& v, int l) {
        if (l > 0) v /= problem.lambda[static_cast<std::size_t>(l)];
    });
    return u;
}

SphHarmCoeffs poisson_operator_apply(const SphHarmCoeffs& u, std::span<const double> lambda)
{
    require_lambda(lambda, u.degree());
    SphHarmCoeffs out = u;
    for_each_entry(out, [&](double& v, int l) {
        if (l > 0) v *= lambda[static_cast<std::size_t>(l)];
    });
    return out;
}

double death_star(double x, double y, double z)
{
    const double dx = x - 0.25;
    const double dy = y - std::sqrt(11.0) / 4.0;
    const double dz = z - 0.25;
    return -std::exp(-30.0 * (dx * dx + dy * dy + dz * dz)) - std::exp(-50.0 * z * z);
}

SphHarmCoeffs death_star_rhs(int n)
{
    const SphereGrid grid(n);
    return analysis(sample(grid, death_star), grid);
}

void AllenCahnConfig::validate() const
{
    if (!(epsilon > 0.0)) throw DomainError("epsilon must be positive");
    if (degree < 0) throw DomainError("degree must be nonnegative");
    if (!(h > 0.0)) throw DomainError("time step must be positive");
    if (steps < 1) throw DomainError("step count must be positive");
}

GridValues allen_cahn_nonlinearity(const GridValues& u)
{
    return pointwise(u, [](double x) { return allen_cahn_reaction(x); });
}

FieldsNonlinearity allen_cahn_pseudospectral(const SphereGrid& grid)
{
    return pseudospectral(grid, [](std::span<const GridValues> in, std::span<GridValues> out) {
        auto src = in[0].data();
        auto dst = out[0].data();
        for (std::size_t k = 0; k < src.size(); ++k) dst[k] = allen_cahn_reaction(src[k]);
    });
}

DiagonalOperator allen_cahn_operator(const AllenCahnConfig& cfg)
{
    cfg.validate();
    return DiagonalOperator(kernel_eigenvalues(cfg.kernel, cfg.degree, cfg.method),
                            cfg.epsilon * cfg.epsilon);
}

void BrusselatorConfig::validate() const
{
    if (!(E > 0.0)) throw DomainError("E must be positive");
    if (!(epsilon > 0.0)) throw DomainError("epsilon must be positive");
    if (!(tau > 0.0)) throw DomainError("tau must be positive");
    if (!(f > 0.0 && f < 1.0)) throw DomainError("f must lie in (0, 1)");
}

namespace {

struct BrusselatorRates {
    double source, decay, f, inv_eps2_tau;

    explicit BrusselatorRates(const BrusselatorConfig& cfg)
        : source(cfg.epsilon * cfg.epsilon * cfg.E),
          decay(cfg.linear_decay ? 0.0 : 1.0),
          f(cfg.f),
          inv_eps2_tau(1.0 / (cfg.epsilon * cfg.epsilon * cfg.tau))
    {
    }

    void operator()(double u, double v, double& nu, double& nv) const
    {
        const double u2v = u * u * v;
        nu = source - decay * u + f * u2v;
        nv = inv_eps2_tau * (u - u2v);
    }
};

}  // namespace

std::pair<GridValues, GridValues> brusselator_nonlinearities(const GridValues& u,
                                                             const GridValues& v,
                                                             const BrusselatorConfig& cfg)
{
    if (u.n_theta() != v.n_theta() || u.n_phi() != v.n_phi())
        throw ShapeError("u and v grids differ");
    const BrusselatorRates rates(cfg);
    GridValues nu(u.n_theta(), u.n_phi());
    GridValues nv(u.n_theta(), u.n_phi());
    auto us = u.data();
    auto vs = v.data();
    auto nus = nu.data();
    auto nvs = nv.data();
    for (std::size_t k = 0; k < us.size(); ++k) rates(us[k], vs[k], nus[k], nvs[k]);
    return {std::move(nu), std::move(nv)};
}

FieldsNonlinearity brusselator_pseudospectral(const SphereGrid& grid, const BrusselatorConfig& cfg)
{
    cfg.validate();
    const BrusselatorRates rates(cfg);
    return pseudospectral(grid, [rates](std::span<const GridValues> in, std::span<GridValues> out) {
        if (in.size() != 2) throw ShapeError("the Brusselator has two fields");
        auto us = in[0].data();
        auto vs = in[1].data();
        auto nus = out[0].data();
        auto nvs = out[1].data();
        for (std::size_t k = 0; k < us.size(); ++k) rates(us[k], vs[k], nus[k], nvs[k]);
    });
}

std::vector<DiagonalOperator> brusselator_operators(std::vector<double> lambda,
                                                    const BrusselatorConfig& cfg)
{
    cfg.validate();
    const double eps2 = cfg.epsilon * cfg.epsilon;
    std::vector<DiagonalOperator> ops;
    ops.emplace_back(lambda, eps2, cfg.linear_decay ? -1.0 : 0.0);
    ops.emplace_back(std::move(lambda), 1.0 / cfg.tau);
    return ops;
}

Fields brusselator_equilibrium(int n, const BrusselatorConfig& cfg)
{
    cfg.validate();
    const double root4pi = std::sqrt(4.0 * std::numbers::pi);
    Fields out{SphHarmCoeffs(n), SphHarmCoeffs(n)};
    out[0].set(0, 0, cfg.u_equilibrium() * root4pi);
    out[1].set(0, 0, cfg.v_equilibrium() * root4pi);
    return out;
}

double ginzburg_landau_energy(const SphHarmCoeffs& u, std::span<const double> lambda,
                              double epsilon, const SphereGrid& grid)
{
    require_lambda(lambda, u.degree());
    double linear = 0.0;
    SphHarmCoeffs copy = u;
    for_each_entry(copy, [&](double& v, int l) {
        linear += lambda[static_cast<std::size_t>(l)] * v * v;
    });
    linear *= -0.5 * epsilon * epsilon;

    GridValues w = synthesis(u, grid);
    for (double& v : w.data()) {
        const double s = v * v - 1.0;
        v = 0.25 * s * s;
    }
    return linear + integrate(w, grid);
}

SphereGrid energy_grid(int n) { return SphereGrid(2 * n); }

CesaroWeights cesaro_weights(int n, int kappa)
{
    if (n < 0) throw DomainError("degree must be nonnegative");
    if (kappa < 0) throw DomainError("Cesaro order must be nonnegative");
    CesaroWeights w{kappa, n, std::vector<double>(static_cast<std::size_t>(n) + 1, 1.0)};
    // A_{n-l}/A_n = prod_{j=1}^{kappa} (n - l + j) / (n + j)
    for (int l = 0; l <= n; ++l) {
        double r = 1.0;
        for (int j = 1; j <= kappa; ++j) r *= static_cast<double>(n - l + j) / (n + j);
        w.factors[static_cast<std::size_t>(l)] = r;
    }
    return w;
}

SphHarmCoeffs cesaro_apply(const SphHarmCoeffs& coeffs, int kappa)
{
    const CesaroWeights w = cesaro_weights(coeffs.degree(), kappa);
    SphHarmCoeffs out = coeffs;
    if (kappa == 0) return out;
    for_each_entry(out, [&](double& v, int l) { v *= w.factors[static_cast<std::size_t>(l)]; });
    return out;
}

SphHarmCoeffs random_coeffs(int degree_cap, int n, double scale, std::uint64_t seed)
{
    return std::move(random_fields(1, degree_cap, n, scale, seed)[0]);
}

Fields random_fields(int count, int degree_cap, int n, double scale, std::uint64_t seed)
{
    if (degree_cap < 0 || degree_cap > n)
        throw DomainError("random degree cap must lie in [0, n]");
    NormalStream normals(seed);
    Fields out;
    for (int k = 0; k < count; ++k) {
        out.emplace_back(n);
        fill_random(out.back(), degree_cap, scale, normals);
    }
    return out;
}

SphHarmCoeffs cos10xy(int n)
{
    const SphereGrid grid(n);
    return analysis(sample(grid, [](double x, double y, double) { return std::cos(10.0 * x * y); }),
                    grid);
}

}  // namespace nlsphere
