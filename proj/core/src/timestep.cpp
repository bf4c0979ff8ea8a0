#include "nlsphere/timestep.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "nlsphere/errors.hpp"

namespace nlsphere {
namespace {

constexpr int taylor_terms = 20;

void check_same_shape(const SphHarmCoeffs& u, int degree)
{
    if (u.degree() != degree)
        throw ShapeError("coefficient degree " + std::to_string(u.degree()) +
                         " does not match operator degree " + std::to_string(degree));
}

// Calls fn(flat index, degree) for every stored (non-structural) entry.
template <typename Fn>
void for_each_mode(int n, Fn&& fn)
{
    const int cols = 2 * n + 1;
    for (int row = 0; row <= n; ++row) {
        for (int col = 0; col < cols; ++col) {
            const int ell = SphHarmCoeffs::degree_at(row, col);
            if (ell > n) continue;
            fn(static_cast<std::size_t>(row) * cols + col, ell);
        }
    }
}

void check_finite(const SphHarmCoeffs& u, long step_index)
{
    for (double v : u.data())
        if (!std::isfinite(v)) throw BlowUpError(step_index);
}

}  // namespace

DiagonalOperator::DiagonalOperator(std::vector<double> lambda, double prefactor, double shift)
    : lambda_(std::move(lambda)), prefactor_(prefactor), shift_(shift)
{
    if (lambda_.empty()) throw ShapeError("diagonal operator needs at least one degree");
}

DiagonalOperator DiagonalOperator::from_spectrum(const Spectrum& spectrum, double prefactor,
                                                 double shift)
{
    return DiagonalOperator(spectrum.values(), prefactor, shift);
}

SphHarmCoeffs DiagonalOperator::apply(const SphHarmCoeffs& u) const
{
    check_same_shape(u, degree());
    SphHarmCoeffs out(u.degree());
    auto src = u.data();
    auto dst = out.data();
    for_each_mode(degree(), [&](std::size_t k, int ell) { dst[k] = entry(ell) * src[k]; });
    return out;
}

Etdrk4Coefficients etdrk4_coefficients_taylor(double z)
{
    // stage: sum z^k / (2^{k+1} (k+1)!)
    // f1: sum (k+1)^2 z^k / (k+3)!,  f2: sum (k+1) z^k / (k+3)!,  f3: sum (1-k) z^k / (k+3)!
    Etdrk4Coefficients c{0.0, 0.0, 0.0, 0.0};
    double zk = 1.0;
    double inv_fact_k1 = 1.0;        // 1/(k+1)!
    double inv_fact_k3 = 1.0 / 6.0;  // 1/(k+3)!
    double half_pow = 0.5;           // 2^{-(k+1)}
    for (int k = 0; k < taylor_terms; ++k) {
        c.stage += half_pow * inv_fact_k1 * zk;
        c.f1 += (k + 1.0) * (k + 1.0) * inv_fact_k3 * zk;
        c.f2 += (k + 1.0) * inv_fact_k3 * zk;
        c.f3 += (1.0 - k) * inv_fact_k3 * zk;
        zk *= z;
        inv_fact_k1 /= (k + 2.0);
        inv_fact_k3 /= (k + 4.0);
        half_pow *= 0.5;
    }
    return c;
}

Etdrk4Coefficients etdrk4_coefficients_direct(double z)
{
    const double ez = std::exp(z);
    const double z3 = z * z * z;
    return {std::expm1(z / 2.0) / z,
            (-4.0 - z + ez * (4.0 - 3.0 * z + z * z)) / z3,
            (2.0 + z + ez * (-2.0 + z)) / z3,
            (-4.0 - 3.0 * z - z * z + ez * (4.0 - z)) / z3};
}

Etdrk4Coefficients etdrk4_coefficients(double z)
{
    if (std::abs(z) < etdrk4_taylor_threshold) return etdrk4_coefficients_taylor(z);
    return etdrk4_coefficients_direct(z);
}

Etdrk4Tables etdrk4_tables(const DiagonalOperator& op, double h)
{
    if (!(h > 0.0)) throw DomainError("time step must be positive");
    const auto count = static_cast<std::size_t>(op.degree()) + 1;
    Etdrk4Tables t;
    t.h = h;
    for (auto* v : {&t.exp_half, &t.exp_full, &t.stage, &t.f1, &t.f2, &t.f3}) v->resize(count);
    for (std::size_t l = 0; l < count; ++l) {
        const double lambda = op.entry(static_cast<int>(l));
        if (lambda > 0.0) t.has_positive_entries = true;
        const double z = h * lambda;
        const Etdrk4Coefficients c = etdrk4_coefficients(z);
        t.exp_half[l] = std::exp(z / 2.0);
        t.exp_full[l] = std::exp(z);
        t.stage[l] = h * c.stage;
        t.f1[l] = h * c.f1;
        t.f2[l] = h * c.f2;
        t.f3[l] = h * c.f3;
    }
    return t;
}

Fields etdrk4_step(const Fields& u, std::span<const Etdrk4Tables> tables,
                   const FieldsNonlinearity& nonlinearity, long step_index)
{
    if (u.size() != tables.size()) throw ShapeError("one table set per field is required");
    for (std::size_t f = 0; f < u.size(); ++f) check_same_shape(u[f], tables[f].degree());

    const std::size_t nfields = u.size();
    auto check_n = [&](const Fields& n) {
        if (n.size() != nfields) throw ShapeError("nonlinearity returned the wrong field count");
        for (std::size_t f = 0; f < nfields; ++f) check_same_shape(n[f], u[f].degree());
    };

    // a = e^{hL/2} u + S N(u)
    const Fields nu = nonlinearity(u);
    check_n(nu);
    Fields a = u;
    for (std::size_t f = 0; f < nfields; ++f) {
        const auto& t = tables[f];
        auto out = a[f].data();
        auto src = u[f].data();
        auto nv = nu[f].data();
        for_each_mode(u[f].degree(), [&](std::size_t k, int l) {
            out[k] = t.exp_half[l] * src[k] + t.stage[l] * nv[k];
        });
    }

    // b = e^{hL/2} u + S N(a)
    const Fields na = nonlinearity(a);
    check_n(na);
    Fields b = u;
    for (std::size_t f = 0; f < nfields; ++f) {
        const auto& t = tables[f];
        auto out = b[f].data();
        auto src = u[f].data();
        auto nv = na[f].data();
        for_each_mode(u[f].degree(), [&](std::size_t k, int l) {
            out[k] = t.exp_half[l] * src[k] + t.stage[l] * nv[k];
        });
    }

    // c = e^{hL/2} a + S (2 N(b) - N(u))
    const Fields nb = nonlinearity(b);
    check_n(nb);
    Fields c = u;
    for (std::size_t f = 0; f < nfields; ++f) {
        const auto& t = tables[f];
        auto out = c[f].data();
        auto src = a[f].data();
        auto nbv = nb[f].data();
        auto nuv = nu[f].data();
        for_each_mode(u[f].degree(), [&](std::size_t k, int l) {
            out[k] = t.exp_half[l] * src[k] + t.stage[l] * (2.0 * nbv[k] - nuv[k]);
        });
    }

    // u+ = e^{hL} u + f1 N(u) + 2 f2 (N(a) + N(b)) + f3 N(c)
    const Fields nc = nonlinearity(c);
    check_n(nc);
    Fields next = u;
    for (std::size_t f = 0; f < nfields; ++f) {
        const auto& t = tables[f];
        auto out = next[f].data();
        auto src = u[f].data();
        auto nuv = nu[f].data();
        auto nav = na[f].data();
        auto nbv = nb[f].data();
        auto ncv = nc[f].data();
        for_each_mode(u[f].degree(), [&](std::size_t k, int l) {
            out[k] = t.exp_full[l] * src[k] + t.f1[l] * nuv[k] +
                     2.0 * t.f2[l] * (nav[k] + nbv[k]) + t.f3[l] * ncv[k];
        });
        check_finite(next[f], step_index);
    }
    return next;
}

SphHarmCoeffs etdrk4_step(const SphHarmCoeffs& u, const Etdrk4Tables& tables,
                          const CoeffNonlinearity& nonlinearity, long step_index)
{
    const FieldsNonlinearity wrapped = [&](const Fields& v) { return Fields{nonlinearity(v[0])}; };
    Fields result = etdrk4_step(Fields{u}, std::span(&tables, 1), wrapped, step_index);
    return std::move(result[0]);
}

FieldsNonlinearity pseudospectral(const SphereGrid& grid, GridNonlinearity pointwise)
{
    return [grid, pointwise = std::move(pointwise)](const Fields& u) {
        std::vector<GridValues> in;
        in.reserve(u.size());
        for (const auto& field : u) in.push_back(synthesis(field, grid));
        std::vector<GridValues> out(u.size(), GridValues(grid.n_theta(), grid.n_phi()));
        pointwise(in, out);
        Fields result;
        result.reserve(u.size());
        for (std::size_t f = 0; f < u.size(); ++f)
            result.push_back(analysis(out[f], grid, u[f].degree()));
        return result;
    };
}

Fields evolve(Fields initial, std::span<const DiagonalOperator> ops,
              const FieldsNonlinearity& nonlinearity, double h, long steps,
              std::span<const Observer> observers)
{
    if (steps < 1) throw DomainError("evolve needs at least one step");
    if (ops.size() != initial.size()) throw ShapeError("one operator per field is required");
    std::vector<Etdrk4Tables> tables;
    tables.reserve(ops.size());
    for (const auto& op : ops) tables.push_back(etdrk4_tables(op, h));

    for (const auto& obs : observers) {
        if (obs.stride < 1) throw DomainError("observer stride must be positive");
        obs.callback(0, 0.0, initial);
    }
    Fields u = std::move(initial);
    for (long s = 1; s <= steps; ++s) {
        u = etdrk4_step(u, tables, nonlinearity, s);
        const double t = static_cast<double>(s) * h;
        for (const auto& obs : observers)
            if (s % obs.stride == 0) obs.callback(s, t, u);
    }
    return u;
}

}  // namespace nlsphere
