#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "nlsphere/sht.hpp"
#include "nlsphere/spectrum.hpp"
#include "nlsphere/timestep.hpp"

namespace nlsphere {

/// Marker for the local Laplace-Beltrami operator, eigenvalues -l(l+1).
struct LocalKernel {
    friend bool operator==(const LocalKernel&, const LocalKernel&) = default;
};

using Kernel = std::variant<LocalKernel, KernelParams>;

/// Eigenvalues for degrees 0..n of the local or nonlocal operator.
std::vector<double> kernel_eigenvalues(const Kernel& kernel, int n,
                                       const EvalMethod& method = EvalMethod::hybrid());

// Poisson problem L u = f with u_0^0 = f_0^0.

struct PoissonProblem {
    SphHarmCoeffs rhs;
    std::vector<double> lambda;  ///< lambda[l], l = 0..rhs.degree()

    PoissonProblem(SphHarmCoeffs rhs, std::vector<double> lambda);
    PoissonProblem(SphHarmCoeffs rhs, const Spectrum& spectrum);
};

SphHarmCoeffs solve_poisson(const PoissonProblem& problem);

/// Applies the operator with the l = 0 entry replaced by 1.
SphHarmCoeffs poisson_operator_apply(const SphHarmCoeffs& u, std::span<const double> lambda);

double death_star(double x, double y, double z);
SphHarmCoeffs death_star_rhs(int n);

// Allen-Cahn: u_t = eps^2 L u + u - u^3.

struct AllenCahnConfig {
    double epsilon = 0.1;
    Kernel kernel = KernelParams(-0.5, 1.0);
    EvalMethod method = EvalMethod::hybrid();
    int degree = 63;
    double h = 0.1;
    long steps = 10;

    void validate() const;
};

inline double allen_cahn_reaction(double u) { return u - u * u * u; }
GridValues allen_cahn_nonlinearity(const GridValues& u);

/// Coefficient-space Allen-Cahn nonlinearity on the grid of the given degree.
FieldsNonlinearity allen_cahn_pseudospectral(const SphereGrid& grid);

DiagonalOperator allen_cahn_operator(const AllenCahnConfig& cfg);

// Brusselator:
//   u_t = eps^2 L u + eps^2 E - u + f u^2 v
//   tau v_t = L v + eps^{-2} (u - u^2 v)

struct BrusselatorConfig {
    double E = 4.0;
    double epsilon = 0.075;
    double tau = 7.8125;
    double f = 0.8;
    /// Move the -u decay of the u equation into the (diagonal) linear part.
    bool linear_decay = false;

    void validate() const;
    double u_equilibrium() const { return epsilon * epsilon * E / (1.0 - f); }
    double v_equilibrium() const { return 1.0 / u_equilibrium(); }
};

std::pair<GridValues, GridValues> brusselator_nonlinearities(const GridValues& u,
                                                             const GridValues& v,
                                                             const BrusselatorConfig& cfg);

FieldsNonlinearity brusselator_pseudospectral(const SphereGrid& grid, const BrusselatorConfig& cfg);

/// Operators for (u, v): eps^2 L (- 1 with linear_decay) and L / tau.
std::vector<DiagonalOperator> brusselator_operators(std::vector<double> lambda,
                                                    const BrusselatorConfig& cfg);

/// Constant fields at the equilibrium, degree n.
Fields brusselator_equilibrium(int n, const BrusselatorConfig& cfg);

// Ginzburg-Landau free energy
//   E(u) = -(eps^2/2) sum lambda(l) (u_l^m)^2 + 1/4 int (u^2 - 1)^2.
// The quartic term is integrated on `grid`, which should have degree >= 2n
// for exactness; see energy_grid().

double ginzburg_landau_energy(const SphHarmCoeffs& u, std::span<const double> lambda,
                              double epsilon, const SphereGrid& grid);
SphereGrid energy_grid(int n);

// Cesaro (C, kappa) means: degree-l coefficients scaled by A_{n-l}^kappa / A_n^kappa,
// A_l^kappa = binom(l + kappa, l).

struct CesaroWeights {
    int kappa = 0;
    int n = 0;
    std::vector<double> factors;
};

CesaroWeights cesaro_weights(int n, int kappa);
SphHarmCoeffs cesaro_apply(const SphHarmCoeffs& coeffs, int kappa);

/// Standard normal draws times `scale` for every coefficient of degree <= cap,
/// in order l = 0..cap, m = -l..l. Generator: std::mt19937_64 seeded with
/// `seed`, normals by the Box-Muller transform (both outputs used).
SphHarmCoeffs random_coeffs(int degree_cap, int n, double scale, std::uint64_t seed);

/// Continues the same normal stream into several fields, one after another.
Fields random_fields(int count, int degree_cap, int n, double scale, std::uint64_t seed);

/// cos(10 x y) analyzed at degree n.
SphHarmCoeffs cos10xy(int n);

}  // namespace nlsphere
