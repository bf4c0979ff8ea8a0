#include "nlsphere/sht.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "fftw_lock.hpp"
#include "nlsphere/errors.hpp"
#include "nlsphere/parallel.hpp"
#include "nlsphere/quadrature.hpp"

namespace nlsphere {

// ---------------------------------------------------------------------------
// SphHarmCoeffs

SphHarmCoeffs::SphHarmCoeffs(int degree) : degree_(degree)
{
    if (degree < 0) throw DomainError("coefficient degree must be nonnegative");
    data_.assign(static_cast<std::size_t>(rows()) * static_cast<std::size_t>(cols()), 0.0);
}

std::size_t SphHarmCoeffs::locate(int ell, int m) const
{
    if (ell < 0 || ell > degree_ || std::abs(m) > ell)
        throw DomainError("no coefficient (l=" + std::to_string(ell) + ", m=" + std::to_string(m) +
                          ") at degree " + std::to_string(degree_));
    const int am = std::abs(m);
    const int col = m == 0 ? 0 : (m < 0 ? 2 * am - 1 : 2 * am);
    return index(ell - am, col);
}

double SphHarmCoeffs::get(int ell, int m) const { return data_[locate(ell, m)]; }

void SphHarmCoeffs::set(int ell, int m, double value) { data_[locate(ell, m)] = value; }

SphHarmCoeffs SphHarmCoeffs::resized(int new_degree) const
{
    SphHarmCoeffs out(new_degree);
    const int n = std::min(degree_, new_degree);
    for (int col = 0; col <= 2 * n; ++col) {
        const int m = order_of_column(col);
        for (int row = 0; row + m <= n; ++row) out(row, col) = (*this)(row, col);
    }
    return out;
}

GridValues::GridValues(int n_theta, int n_phi, double fill)
    : n_theta_(n_theta), n_phi_(n_phi),
      data_(static_cast<std::size_t>(n_theta) * static_cast<std::size_t>(n_phi), fill)
{
    if (n_theta < 1 || n_phi < 1) throw ShapeError("grid dimensions must be positive");
}

// ---------------------------------------------------------------------------
// SphereGrid

struct SphereGrid::Impl {
    int degree = 0;
    std::vector<double> theta, x, sin_theta, weights, phi;
    double dphi = 0.0;

    // P~_m^m(x_i) at pmm[m * n_theta + i], flushed to zero below underflow_cut.
    std::vector<double> pmm;
    // Three-term coefficients for l = m+2..degree, packed per m from offset[m].
    std::vector<std::size_t> offset;
    std::vector<double> rec_a, rec_b;

    fftw_plan r2c = nullptr;
    fftw_plan c2r = nullptr;

    static constexpr double underflow_cut = 1e-250;

    explicit Impl(int n);
    ~Impl();
    Impl(const Impl&) = delete;
    Impl& operator=(const Impl&) = delete;

    int n_theta() const { return degree + 1; }
    int n_phi() const { return 2 * degree + 1; }

    // Visits P~_l^m(x_i) for l = m..max_degree in order.
    template <typename Visit>
    void sweep(int m, int i, int max_degree, Visit&& visit) const
    {
        double p0 = pmm[static_cast<std::size_t>(m) * n_theta() + i];
        if (p0 == 0.0) return;
        const double xi = x[static_cast<std::size_t>(i)];
        visit(m, p0);
        if (max_degree == m) return;
        double p1 = std::sqrt(2.0 * m + 3.0) * xi * p0;
        visit(m + 1, p1);
        const double* a = rec_a.data() + offset[static_cast<std::size_t>(m)];
        const double* b = rec_b.data() + offset[static_cast<std::size_t>(m)];
        for (int l = m + 2; l <= max_degree; ++l) {
            const double p2 = a[l - m - 2] * (xi * p1 - b[l - m - 2] * p0);
            visit(l, p2);
            p0 = p1;
            p1 = p2;
        }
    }
};

SphereGrid::Impl::Impl(int n) : degree(n)
{
    const GLRule gl = gauss_legendre(n + 1);
    x = gl.nodes;
    weights = gl.weights;
    theta.resize(x.size());
    sin_theta.resize(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        theta[i] = std::acos(x[i]);
        sin_theta[i] = std::sqrt((1.0 - x[i]) * (1.0 + x[i]));
    }
    const int nphi = n_phi();
    dphi = 2.0 * std::numbers::pi / nphi;
    phi.resize(static_cast<std::size_t>(nphi));
    for (int j = 0; j < nphi; ++j) phi[static_cast<std::size_t>(j)] = dphi * j;

    const auto nt = static_cast<std::size_t>(n_theta());
    pmm.assign((static_cast<std::size_t>(n) + 1) * nt, 0.0);
    for (std::size_t i = 0; i < nt; ++i) pmm[i] = 1.0 / std::numbers::sqrt2;
    for (int m = 1; m <= n; ++m) {
        const double factor = std::sqrt((2.0 * m + 1.0) / (2.0 * m));
        for (std::size_t i = 0; i < nt; ++i) {
            double v = pmm[(static_cast<std::size_t>(m) - 1) * nt + i] * factor * sin_theta[i];
            if (std::abs(v) < underflow_cut) v = 0.0;
            pmm[static_cast<std::size_t>(m) * nt + i] = v;
        }
    }

    offset.resize(static_cast<std::size_t>(n) + 1);
    std::size_t total = 0;
    for (int m = 0; m <= n; ++m) {
        offset[static_cast<std::size_t>(m)] = total;
        total += static_cast<std::size_t>(std::max(0, n - m - 1));
    }
    rec_a.resize(total);
    rec_b.resize(total);
    for (int m = 0; m <= n; ++m) {
        const double mm = m;
        for (int l = m + 2; l <= n; ++l) {
            const double ll = l;
            const std::size_t k = offset[static_cast<std::size_t>(m)] + static_cast<std::size_t>(l - m - 2);
            rec_a[k] = std::sqrt((4.0 * ll * ll - 1.0) / (ll * ll - mm * mm));
            rec_b[k] = std::sqrt(((ll - 1.0) * (ll - 1.0) - mm * mm) /
                                 (4.0 * (ll - 1.0) * (ll - 1.0) - 1.0));
        }
    }

    std::vector<double> real_buf(static_cast<std::size_t>(nphi));
    std::vector<std::complex<double>> complex_buf(static_cast<std::size_t>(n) + 1);
    auto* cbuf = reinterpret_cast<fftw_complex*>(complex_buf.data());
    std::lock_guard lock(detail::fftw_planner_mutex());
    r2c = fftw_plan_dft_r2c_1d(nphi, real_buf.data(), cbuf, FFTW_ESTIMATE | FFTW_UNALIGNED);
    c2r = fftw_plan_dft_c2r_1d(nphi, cbuf, real_buf.data(), FFTW_ESTIMATE | FFTW_UNALIGNED);
}

SphereGrid::Impl::~Impl()
{
    std::lock_guard lock(detail::fftw_planner_mutex());
    if (r2c) fftw_destroy_plan(r2c);
    if (c2r) fftw_destroy_plan(c2r);
}

SphereGrid::SphereGrid(int degree)
{
    if (degree < 0) throw DomainError("grid degree must be nonnegative");
    impl_ = std::make_shared<const Impl>(degree);
}

int SphereGrid::degree() const noexcept { return impl_->degree; }
std::span<const double> SphereGrid::colatitudes() const noexcept { return impl_->theta; }
std::span<const double> SphereGrid::cos_colatitudes() const noexcept { return impl_->x; }
std::span<const double> SphereGrid::colatitude_weights() const noexcept { return impl_->weights; }
std::span<const double> SphereGrid::longitudes() const noexcept { return impl_->phi; }
double SphereGrid::longitude_weight() const noexcept { return impl_->dphi; }

// ---------------------------------------------------------------------------
// Transforms

namespace {

const double inv_sqrt_2pi = 1.0 / std::sqrt(2.0 * std::numbers::pi);
const double inv_sqrt_pi = 1.0 / std::sqrt(std::numbers::pi);

// Rows of a Fourier table are per colatitude, columns m = 0..degree.
using FourierTable = std::vector<std::complex<double>>;

// Fewer than this many m-columns per thread is not worth a thread.
constexpr std::size_t min_columns_per_thread = 16;

}  // namespace

GridValues synthesis(const SphHarmCoeffs& coeffs, const SphereGrid& grid)
{
    const auto& g = grid.impl();
    const int n = g.degree;
    const int nc = coeffs.degree();
    if (nc > n)
        throw ShapeError("coefficient degree " + std::to_string(nc) + " exceeds grid degree " +
                         std::to_string(n));
    const int nt = g.n_theta();
    const std::size_t nf = static_cast<std::size_t>(n) + 1;
    FourierTable fourier(static_cast<std::size_t>(nt) * nf);

    parallel_for(
        static_cast<std::size_t>(nc) + 1,
        [&](std::size_t mi) {
            const int m = static_cast<int>(mi);
            std::vector<double> uc(static_cast<std::size_t>(nc - m + 1));
            std::vector<double> us(uc.size(), 0.0);
            const int col_c = m == 0 ? 0 : 2 * m;
            for (int l = m; l <= nc; ++l) {
                uc[static_cast<std::size_t>(l - m)] = coeffs(l - m, col_c);
                if (m > 0) us[static_cast<std::size_t>(l - m)] = coeffs(l - m, 2 * m - 1);
            }
            const double norm = m == 0 ? inv_sqrt_2pi : 0.5 * inv_sqrt_pi;
            for (int i = 0; i < nt; ++i) {
                double a = 0.0, b = 0.0;
                g.sweep(m, i, nc, [&](int l, double p) {
                    a += uc[static_cast<std::size_t>(l - m)] * p;
                    b += us[static_cast<std::size_t>(l - m)] * p;
                });
                fourier[static_cast<std::size_t>(i) * nf + mi] = {norm * a, -norm * b};
            }
        },
        min_columns_per_thread);

    GridValues values(nt, g.n_phi());
    parallel_for(static_cast<std::size_t>(nt), [&](std::size_t i) {
        // c2r may overwrite its input.
        FourierTable row(fourier.begin() + static_cast<std::ptrdiff_t>(i * nf),
                         fourier.begin() + static_cast<std::ptrdiff_t>((i + 1) * nf));
        fftw_execute_dft_c2r(g.c2r, reinterpret_cast<fftw_complex*>(row.data()),
                             values.row(static_cast<int>(i)).data());
    }, min_columns_per_thread);
    return values;
}

SphHarmCoeffs analysis(const GridValues& values, const SphereGrid& grid)
{
    return analysis(values, grid, grid.degree());
}

SphHarmCoeffs analysis(const GridValues& values, const SphereGrid& grid, int out_degree)
{
    const auto& g = grid.impl();
    const int n = g.degree;
    if (values.n_theta() != g.n_theta() || values.n_phi() != g.n_phi())
        throw ShapeError("grid values shape does not match the grid");
    if (out_degree < 0 || out_degree > n)
        throw ShapeError("analysis degree must lie in 0.." + std::to_string(n));

    const int nt = g.n_theta();
    const std::size_t nf = static_cast<std::size_t>(n) + 1;
    FourierTable fourier(static_cast<std::size_t>(nt) * nf);
    parallel_for(static_cast<std::size_t>(nt), [&](std::size_t i) {
        std::vector<double> row(values.row(static_cast<int>(i)).begin(),
                                values.row(static_cast<int>(i)).end());
        fftw_execute_dft_r2c(g.r2c, row.data(),
                             reinterpret_cast<fftw_complex*>(fourier.data() + i * nf));
    }, min_columns_per_thread);

    SphHarmCoeffs out(out_degree);
    parallel_for(
        static_cast<std::size_t>(out_degree) + 1,
        [&](std::size_t mi) {
            const int m = static_cast<int>(mi);
            std::vector<double> acc_c(static_cast<std::size_t>(out_degree - m + 1), 0.0);
            std::vector<double> acc_s(acc_c.size(), 0.0);
            const double norm = (m == 0 ? inv_sqrt_2pi : inv_sqrt_pi) * g.dphi;
            for (int i = 0; i < nt; ++i) {
                const std::complex<double> f = fourier[static_cast<std::size_t>(i) * nf + mi];
                const double w = norm * g.weights[static_cast<std::size_t>(i)];
                const double c = w * f.real();
                const double s = -w * f.imag();
                g.sweep(m, i, out_degree, [&](int l, double p) {
                    acc_c[static_cast<std::size_t>(l - m)] += c * p;
                    acc_s[static_cast<std::size_t>(l - m)] += s * p;
                });
            }
            for (int l = m; l <= out_degree; ++l) {
                if (m == 0) {
                    out(l, 0) = acc_c[static_cast<std::size_t>(l)];
                } else {
                    out(l - m, 2 * m - 1) = acc_s[static_cast<std::size_t>(l - m)];
                    out(l - m, 2 * m) = acc_c[static_cast<std::size_t>(l - m)];
                }
            }
        },
        min_columns_per_thread);
    return out;
}

GridValues sample(const SphereGrid& grid, const std::function<double(double, double, double)>& f)
{
    const auto& g = grid.impl();
    GridValues values(g.n_theta(), g.n_phi());
    for (int i = 0; i < g.n_theta(); ++i) {
        const double st = g.sin_theta[static_cast<std::size_t>(i)];
        const double ct = g.x[static_cast<std::size_t>(i)];
        for (int j = 0; j < g.n_phi(); ++j) {
            const double p = g.phi[static_cast<std::size_t>(j)];
            values(i, j) = f(st * std::cos(p), st * std::sin(p), ct);
        }
    }
    return values;
}

double integrate(const GridValues& values, const SphereGrid& grid)
{
    const auto& g = grid.impl();
    if (values.n_theta() != g.n_theta() || values.n_phi() != g.n_phi())
        throw ShapeError("grid values shape does not match the grid");
    double total = 0.0;
    for (int i = 0; i < g.n_theta(); ++i) {
        double row_sum = 0.0;
        for (double v : values.row(i)) row_sum += v;
        total += g.weights[static_cast<std::size_t>(i)] * row_sum;
    }
    return total * g.dphi;
}

double mean(const SphHarmCoeffs& coeffs)
{
    return coeffs(0, 0) * std::sqrt(4.0 * std::numbers::pi);
}

double l2_norm(const SphHarmCoeffs& coeffs)
{
    double sum = 0.0;
    for (double c : coeffs.data()) sum += c * c;
    return std::sqrt(sum);
}

double relative_l2_error(const SphHarmCoeffs& approx, const SphHarmCoeffs& reference)
{
    const int n = std::max(approx.degree(), reference.degree());
    const SphHarmCoeffs a = approx.resized(n);
    const SphHarmCoeffs r = reference.resized(n);
    double diff = 0.0, norm = 0.0;
    for (std::size_t k = 0; k < a.data().size(); ++k) {
        const double d = a.data()[k] - r.data()[k];
        diff += d * d;
        norm += r.data()[k] * r.data()[k];
    }
    return std::sqrt(diff) / std::sqrt(norm);
}

}  // namespace nlsphere
