#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <vector>

namespace nlsphere {

/// Real spherical harmonic coefficients of degree <= n in an
/// (n+1) x (2n+1) row-major array. Column 0 holds u_l^0 at row l. For
/// m = 1..n, column 2m-1 holds u_{m+i}^{-m} and column 2m holds u_{m+i}^{m}
/// at row i. Entries with row + m > n are structural zeros.
///
/// The pair (u_l^{-m}, u_l^{m}) multiplies the real harmonics
/// P~_l^m(cos theta) sin(m phi)/sqrt(pi) and P~_l^m(cos theta) cos(m phi)/sqrt(pi);
/// u_l^0 multiplies P~_l^0(cos theta)/sqrt(2 pi). The basis is orthonormal
/// under the surface measure.
class SphHarmCoeffs {
public:
    explicit SphHarmCoeffs(int degree = 0);

    int degree() const noexcept { return degree_; }
    int rows() const noexcept { return degree_ + 1; }
    int cols() const noexcept { return 2 * degree_ + 1; }

    double get(int ell, int m) const;
    void set(int ell, int m, double value);

    double& operator()(int row, int col) { return data_[index(row, col)]; }
    double operator()(int row, int col) const { return data_[index(row, col)]; }

    std::span<double> data() noexcept { return data_; }
    std::span<const double> data() const noexcept { return data_; }

    /// |m| stored in a layout column.
    static int order_of_column(int col) noexcept { return (col + 1) / 2; }
    /// Degree l of the coefficient at (row, col); > degree() for structural zeros.
    static int degree_at(int row, int col) noexcept { return row + order_of_column(col); }

    /// Zero-padded or truncated copy.
    SphHarmCoeffs resized(int new_degree) const;

    friend bool operator==(const SphHarmCoeffs&, const SphHarmCoeffs&) = default;

private:
    std::size_t index(int row, int col) const noexcept
    {
        return static_cast<std::size_t>(row) * static_cast<std::size_t>(cols()) +
               static_cast<std::size_t>(col);
    }
    std::size_t locate(int ell, int m) const;

    int degree_;
    std::vector<double> data_;
};

/// Field samples on a SphereGrid: rows are colatitudes, columns longitudes.
class GridValues {
public:
    GridValues() = default;
    GridValues(int n_theta, int n_phi, double fill = 0.0);

    int n_theta() const noexcept { return n_theta_; }
    int n_phi() const noexcept { return n_phi_; }

    double& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * n_phi_ + j]; }
    double operator()(int i, int j) const
    {
        return data_[static_cast<std::size_t>(i) * n_phi_ + j];
    }

    std::span<double> data() noexcept { return data_; }
    std::span<const double> data() const noexcept { return data_; }
    std::span<double> row(int i) { return std::span(data_).subspan(static_cast<std::size_t>(i) * n_phi_, n_phi_); }
    std::span<const double> row(int i) const
    {
        return std::span(data_).subspan(static_cast<std::size_t>(i) * n_phi_, n_phi_);
    }

private:
    int n_theta_ = 0;
    int n_phi_ = 0;
    std::vector<double> data_;
};

/// Tensor-product grid for degree n: n+1 Gauss-Legendre colatitudes and
/// 2n+1 equispaced longitudes phi_j = 2 pi j / (2n+1). Synthesis followed by
/// analysis is the identity on coefficients of degree <= n.
///
/// Holds the precomputed Legendre recurrence data and FFT plans; copies
/// share that immutable state.
class SphereGrid {
public:
    explicit SphereGrid(int degree);

    int degree() const noexcept;
    int n_theta() const noexcept { return degree() + 1; }
    int n_phi() const noexcept { return 2 * degree() + 1; }

    std::span<const double> colatitudes() const noexcept;
    /// cos(theta_i), the Gauss-Legendre nodes.
    std::span<const double> cos_colatitudes() const noexcept;
    std::span<const double> colatitude_weights() const noexcept;
    std::span<const double> longitudes() const noexcept;
    /// Trapezoid weight 2 pi / (2n+1).
    double longitude_weight() const noexcept;

    struct Impl;
    const Impl& impl() const noexcept { return *impl_; }

private:
    std::shared_ptr<const Impl> impl_;
};

/// Evaluates the expansion on the grid. coeffs.degree() may be below the
/// grid degree (implicit zero padding); above it is a ShapeError.
GridValues synthesis(const SphHarmCoeffs& coeffs, const SphereGrid& grid);

/// Projects grid samples onto the real basis, returning degree grid.degree().
SphHarmCoeffs analysis(const GridValues& values, const SphereGrid& grid);

/// As analysis() but only up to out_degree <= grid.degree().
SphHarmCoeffs analysis(const GridValues& values, const SphereGrid& grid, int out_degree);

/// Samples f(x, y, z) at the grid points, (x,y,z) = (sin t cos p, sin t sin p, cos t).
GridValues sample(const SphereGrid& grid, const std::function<double(double, double, double)>& f);

/// Surface integral by Gauss-Legendre x trapezoid quadrature.
double integrate(const GridValues& values, const SphereGrid& grid);

/// Integral of the expansion over the sphere: u_0^0 * sqrt(4 pi).
double mean(const SphHarmCoeffs& coeffs);

/// sqrt(sum of squared coefficients) = L2 norm of the field.
double l2_norm(const SphHarmCoeffs& coeffs);

/// ||approx - reference|| / ||reference|| over coefficients, padding the
/// lower-degree set with zeros.
double relative_l2_error(const SphHarmCoeffs& approx, const SphHarmCoeffs& reference);

}  // namespace nlsphere
