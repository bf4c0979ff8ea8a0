#pragma once

#include <functional>
#include <span>
#include <vector>

#include "nlsphere/sht.hpp"
#include "nlsphere/spectrum.hpp"

namespace nlsphere {

/// One coefficient set per field of a (possibly coupled) system.
using Fields = std::vector<SphHarmCoeffs>;

/// Linear operator that is diagonal in the spherical harmonic basis and
/// depends on the degree only: entry(l) = prefactor * lambda[l] + shift.
class DiagonalOperator {
public:
    explicit DiagonalOperator(std::vector<double> lambda, double prefactor = 1.0,
                              double shift = 0.0);
    static DiagonalOperator from_spectrum(const Spectrum& spectrum, double prefactor = 1.0,
                                          double shift = 0.0);

    int degree() const noexcept { return static_cast<int>(lambda_.size()) - 1; }
    double entry(int ell) const { return prefactor_ * lambda_.at(static_cast<std::size_t>(ell)) + shift_; }
    const std::vector<double>& lambda() const noexcept { return lambda_; }
    double prefactor() const noexcept { return prefactor_; }
    double shift() const noexcept { return shift_; }

    /// Mode-wise product with the coefficient layout.
    SphHarmCoeffs apply(const SphHarmCoeffs& u) const;

private:
    std::vector<double> lambda_;
    double prefactor_;
    double shift_;
};

/// Scalar ETDRK4 coefficient functions of z = h*lambda, divided by h:
/// stage = (e^{z/2} - 1)/z, and f1, f2, f3 as in the Cox-Matthews scheme.
struct Etdrk4Coefficients {
    double stage;
    double f1;
    double f2;
    double f3;
};

/// Below this |z| the coefficient functions switch to their Taylor series.
inline constexpr double etdrk4_taylor_threshold = 0.5;

Etdrk4Coefficients etdrk4_coefficients(double z);
Etdrk4Coefficients etdrk4_coefficients_direct(double z);
Etdrk4Coefficients etdrk4_coefficients_taylor(double z);

/// Per-degree ETDRK4 tables for one diagonal operator and step size.
struct Etdrk4Tables {
    double h = 0.0;
    std::vector<double> exp_half;  ///< e^{h L / 2}
    std::vector<double> exp_full;  ///< e^{h L}
    std::vector<double> stage;     ///< L^{-1}(e^{h L / 2} - I)
    std::vector<double> f1, f2, f3;
    /// Some entry of L is positive; the exponentials then grow.
    bool has_positive_entries = false;

    int degree() const noexcept { return static_cast<int>(exp_full.size()) - 1; }
};

Etdrk4Tables etdrk4_tables(const DiagonalOperator& op, double h);

using CoeffNonlinearity = std::function<SphHarmCoeffs(const SphHarmCoeffs&)>;
using FieldsNonlinearity = std::function<Fields(const Fields&)>;

/// One ETDRK4 step of u_t = L u + N(u). Throws BlowUpError(step_index) when
/// the result is not finite.
SphHarmCoeffs etdrk4_step(const SphHarmCoeffs& u, const Etdrk4Tables& tables,
                          const CoeffNonlinearity& nonlinearity, long step_index = 0);

/// Multi-field step: field k uses tables[k]; the nonlinearity couples them.
Fields etdrk4_step(const Fields& u, std::span<const Etdrk4Tables> tables,
                   const FieldsNonlinearity& nonlinearity, long step_index = 0);

/// Pointwise nonlinearity on grid samples: in[k] holds field k, out[k]
/// receives N_k on the same grid.
using GridNonlinearity =
    std::function<void(std::span<const GridValues> in, std::span<GridValues> out)>;

/// Wraps a grid nonlinearity as synthesis -> pointwise -> analysis.
FieldsNonlinearity pseudospectral(const SphereGrid& grid, GridNonlinearity pointwise);

/// Called with (step index, time, state) at step 0 and every `stride` steps.
struct Observer {
    long stride = 1;
    std::function<void(long, double, const Fields&)> callback;
};

/// Advances `steps` ETDRK4 steps of size h from `initial`.
Fields evolve(Fields initial, std::span<const DiagonalOperator> ops,
              const FieldsNonlinearity& nonlinearity, double h, long steps,
              std::span<const Observer> observers = {});

}  // namespace nlsphere
