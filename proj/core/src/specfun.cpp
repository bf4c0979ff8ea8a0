#include "nlsphere/specfun.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "nlsphere/errors.hpp"

namespace nlsphere {
namespace {

constexpr double eps = std::numeric_limits<double>::epsilon();

double checked_cosine_argument(double t)
{
    if (!(std::abs(t) <= 1.0 + 4.0 * eps))
        throw DomainError("Legendre argument outside [-1, 1]: " + std::to_string(t));
    return std::clamp(t, -1.0, 1.0);
}

template <std::size_t N>
double horner(const std::array<double, N>& c, double x)
{
    double acc = 0.0;
    for (std::size_t i = N; i-- > 0;) acc = acc * x + c[i];
    return acc;
}

// Taylor coefficients of a_1/theta, a_2/theta^2 and a_3/theta^3 in powers of
// theta^2. The closed forms lose all accuracy as theta -> 0.
constexpr std::array<double, 11> a1_series = {
    -1.0 / 24.0,
    -1.0 / 360.0,
    -1.0 / 3780.0,
    -1.0 / 37800.0,
    -1.0 / 374220.0,
    -691.0 / 2554051500.0,
    -1.0 / 36486450.0,
    -3617.0 / 1302566265000.0,
    -43867.0 / 155917181920500.0,
    -174611.0 / 6125317861162500.0,
    -77683.0 / 26895713881286250.0,
};
constexpr std::array<double, 10> a2_series = {
    7.0 / 1920.0,
    13.0 / 20160.0,
    19.0 / 201600.0,
    5.0 / 399168.0,
    21421.0 / 13621608000.0,
    37.0 / 194594400.0,
    155531.0 / 6947020080000.0,
    43867.0 / 16970577624000.0,
    174611.0 / 593970216840000.0,
    4738663.0 / 143443807366860000.0,
};
constexpr std::array<double, 10> a3_series = {
    -31.0 / 64512.0,
    -157.0 / 967680.0,
    -1093.0 / 31933440.0,
    -16091.0 / 2724321600.0,
    -59491.0 / 65383718400.0,
    -111373.0 / 855017856000.0,
    -793579.0 / 44797753728000.0,
    -1272921823.0 / 548828480360160000.0,
    -27272107.0 / 92476593760320000.0,
    -50501072749.0 / 1378437611272577856000.0,
};
constexpr double szego_taylor_cutoff = 0.5;

struct SzegoCoefficients {
    double a1, a2, a3;
};

SzegoCoefficients szego_coefficients(double theta)
{
    if (theta < szego_taylor_cutoff) {
        const double t2 = theta * theta;
        return {theta * horner(a1_series, t2), t2 * horner(a2_series, t2),
                t2 * theta * horner(a3_series, t2)};
    }
    const double s = std::sin(theta), c = std::cos(theta);
    const double t2 = theta * theta, s2 = s * s;
    const double a1 = (theta * c - s) / (8.0 * theta * s);
    const double a2 = (6.0 * theta * s * c - 15.0 * s2 + t2 * (9.0 - s2)) / (128.0 * t2 * s2);
    const double a3 = 5.0 *
                      (((t2 * theta + 21.0 * theta) * s2 + 15.0 * t2 * theta) * c -
                       ((3.0 * t2 + 63.0) * s2 - 27.0 * t2) * s) /
                      (1024.0 * t2 * theta * s2 * s);
    return {a1, a2, a3};
}

double bessel_series(int nu, double z)
{
    // Alternating terms peak near k = z/2; long double keeps the cancellation
    // below 1e-15 absolute for z up to the cutoff.
    const long double half = static_cast<long double>(z) / 2.0L;
    const long double q = -half * half;
    long double term = nu == 0 ? 1.0L : half;
    long double sum = term;
    for (int k = 1; k < 200; ++k) {
        term *= q / (static_cast<long double>(k) * (k + nu));
        sum += term;
        if (k > half && std::abs(term) < 1e-22L * std::abs(sum)) break;
    }
    return static_cast<double>(sum);
}

// Hankel expansion J_nu(z) = sqrt(2/(pi z)) [P cos w - Q sin w], w = z - nu pi/2 - pi/4,
// with the terms summed until they stop decreasing.
double bessel_asymptotic(int nu, double z)
{
    const double mu = 4.0 * nu * nu;
    double p = 1.0, q = 0.0, term = 1.0;
    for (int k = 1; k < 60; ++k) {
        const double next = term * (mu - (2.0 * k - 1.0) * (2.0 * k - 1.0)) / (8.0 * k * z);
        if (std::abs(next) >= std::abs(term) || next == 0.0) break;
        term = next;
        // a_k z^{-k} enters P with sign (-1)^{k/2} for even k, Q with (-1)^{(k-1)/2} for odd k.
        const double signed_term = ((k / 2) % 2 == 0) ? term : -term;
        if (k % 2 == 0) p += signed_term;
        else q += signed_term;
        if (std::abs(term) < 1e-17) break;
    }
    const double s = std::sin(z), c = std::cos(z);
    double cw, sw;
    if (nu == 0) {
        cw = (c + s) / std::numbers::sqrt2;
        sw = (s - c) / std::numbers::sqrt2;
    } else {
        cw = (s - c) / std::numbers::sqrt2;
        sw = -(s + c) / std::numbers::sqrt2;
    }
    return std::sqrt(2.0 / (std::numbers::pi * z)) * (p * cw - q * sw);
}

}  // namespace

SzegoTermCount::SzegoTermCount(int count) : count_(count)
{
    if (count < 1 || count > max_terms)
        throw DomainError("Szego term count must be in 1..4, got " + std::to_string(count));
}

double legendre_rec(int ell, double t)
{
    if (ell < 0) throw DomainError("Legendre degree must be nonnegative");
    t = checked_cosine_argument(t);
    if (ell == 0) return 1.0;
    double p0 = 1.0, p1 = t;
    for (int k = 1; k < ell; ++k) {
        const double p2 = ((2.0 * k + 1.0) * t * p1 - k * p0) / (k + 1.0);
        p0 = p1;
        p1 = p2;
    }
    return p1;
}

double legendre_szego(int ell, double theta, SzegoTermCount terms)
{
    if (ell < 1) throw DomainError("Szego asymptotics need degree >= 1");
    if (!(theta > 0.0 && theta < std::numbers::pi))
        throw DomainError("Szego asymptotics need theta in (0, pi)");

    double sign = 1.0;
    if (theta > std::numbers::pi / 2) {
        theta = std::numbers::pi - theta;
        if (ell % 2 != 0) sign = -1.0;
    }

    const double order = ell + 0.5;
    const double z = order * theta;
    const auto [j0, j1] = bessel_j01(z);
    const double j2 = (2.0 / z) * j1 - j0;
    const double j3 = (4.0 / z) * j2 - j1;
    const auto [a1, a2, a3] = szego_coefficients(theta);

    const int n = terms.value();
    double sum = j0;
    if (n > 1) sum += a1 * j1 / order;
    if (n > 2) sum += a2 * j2 / (order * order);
    if (n > 3) sum += a3 * j3 / (order * order * order);
    return sign * std::sqrt(theta / std::sin(theta)) * sum;
}

SzegoValue legendre_szego_checked(int ell, double theta, int switch_degree, SzegoTermCount terms)
{
    return {legendre_szego(ell, theta, terms), ell <= switch_degree};
}

double legendre_m1_over_hav_series(int ell, double hav)
{
    if (ell < 0) throw DomainError("Legendre degree must be nonnegative");
    if (ell == 0) return 0.0;
    const double l = ell;
    double term = -l * (l + 1.0);
    double sum = term;
    for (int k = 1; k < ell; ++k) {
        const double next = -term * (l - k) * (l + k + 1.0) / ((k + 1.0) * (k + 1.0)) * hav;
        sum += next;
        const bool decreasing = std::abs(next) < std::abs(term);
        term = next;
        if (decreasing && std::abs(term) < eps * std::abs(sum)) break;
    }
    return sum;
}

double legendre_m1_over_hav(int ell, double theta)
{
    if (ell < 0) throw DomainError("Legendre degree must be nonnegative");
    if (!(theta >= 0.0 && theta <= std::numbers::pi))
        throw DomainError("theta outside [0, pi]: " + std::to_string(theta));
    if (theta == 0.0) return -static_cast<double>(ell) * (ell + 1.0);
    const double half = std::sin(theta / 2);
    const double hav = half * half;
    // Past l(l+1)hav ~ 1 the series alternates with huge terms, while
    // P_l(cos theta) - 1 no longer cancels.
    if (static_cast<double>(ell) * (ell + 1.0) * hav <= 1.0)
        return legendre_m1_over_hav_series(ell, hav);
    return (legendre_rec(ell, 1.0 - 2.0 * hav) - 1.0) / hav;
}

BesselPair bessel_j01(double z)
{
    if (!(z > 0.0)) throw DomainError("Bessel argument must be positive");
    if (z <= bessel_series_cutoff) return {bessel_series(0, z), bessel_series(1, z)};
    return {bessel_asymptotic(0, z), bessel_asymptotic(1, z)};
}

double bessel_j(int nu, double z)
{
    if (nu < 0 || nu > 3) throw DomainError("Bessel order must be in 0..3");
    const auto [j0, j1] = bessel_j01(z);
    if (nu == 0) return j0;
    if (nu == 1) return j1;
    const double j2 = (2.0 / z) * j1 - j0;
    if (nu == 2) return j2;
    return (4.0 / z) * j2 - j1;
}

double assoc_legendre_normalized(int ell, int m, double t)
{
    if (ell < 0) throw DomainError("Legendre degree must be nonnegative");
    m = std::abs(m);
    if (m > ell)
        throw DomainError("order |m| = " + std::to_string(m) + " exceeds degree " +
                          std::to_string(ell));
    t = checked_cosine_argument(t);

    const double s = std::sqrt((1.0 - t) * (1.0 + t));
    double pmm = 1.0 / std::numbers::sqrt2;
    for (int k = 1; k <= m; ++k) pmm *= std::sqrt((2.0 * k + 1.0) / (2.0 * k)) * s;
    if (ell == m) return pmm;

    double p0 = pmm;
    double p1 = std::sqrt(2.0 * m + 3.0) * t * pmm;
    for (int l = m + 2; l <= ell; ++l) {
        const double ll = l, mm = m;
        const double a = std::sqrt((4.0 * ll * ll - 1.0) / (ll * ll - mm * mm));
        const double b = std::sqrt(((ll - 1.0) * (ll - 1.0) - mm * mm) /
                                   (4.0 * (ll - 1.0) * (ll - 1.0) - 1.0));
        const double p2 = a * (t * p1 - b * p0);
        p0 = p1;
        p1 = p2;
    }
    return p1;
}

}  // namespace nlsphere
