#pragma once

#include <vector>

namespace nlsphere {

/// Weakly singular kernel (1-t)^{alpha-1} restricted to Euclidean distance
/// <= delta. Requires -1 < alpha < 1 and 0 < delta <= 2.
class KernelParams {
public:
    KernelParams(double alpha, double delta);

    double alpha() const noexcept { return alpha_; }
    double delta() const noexcept { return delta_; }
    /// Lower limit of the interaction range in t = x.y: d = 1 - delta^2/2.
    double d() const noexcept { return 1.0 - delta_ * delta_ / 2.0; }
    /// (1+alpha) 2^{2-alpha} / delta^2, the factor in front of the rescaled integral.
    double prefactor() const noexcept;

private:
    double alpha_;
    double delta_;
};

/// How P_l is evaluated inside the eigenvalue quadrature.
class EvalMethod {
public:
    enum class Kind { Recurrence, Asymptotic, Hybrid };

    static constexpr int default_switch_degree = 50;

    static EvalMethod recurrence() { return EvalMethod(Kind::Recurrence, 0); }
    static EvalMethod asymptotic() { return EvalMethod(Kind::Asymptotic, 0); }
    /// Recurrence for l <= switch_degree, asymptotics above.
    static EvalMethod hybrid(int switch_degree = default_switch_degree);

    Kind kind() const noexcept { return kind_; }
    int switch_degree() const noexcept { return switch_degree_; }
    bool uses_asymptotics(int ell) const noexcept;

    friend bool operator==(const EvalMethod&, const EvalMethod&) = default;

private:
    EvalMethod(Kind kind, int switch_degree) : kind_(kind), switch_degree_(switch_degree) {}

    Kind kind_;
    int switch_degree_;
};

/// Eigenvalues lambda(0..n) of the nonlocal Laplace-Beltrami operator.
class Spectrum {
public:
    Spectrum(KernelParams params, EvalMethod method, std::vector<double> values);

    const KernelParams& params() const noexcept { return params_; }
    const EvalMethod& method() const noexcept { return method_; }
    const std::vector<double>& values() const noexcept { return values_; }
    int degree() const noexcept { return static_cast<int>(values_.size()) - 1; }
    double operator[](int ell) const { return values_.at(static_cast<std::size_t>(ell)); }

private:
    KernelParams params_;
    EvalMethod method_;
    std::vector<double> values_;
};

/// Largest sin^2(theta/2) at which the integrand uses the cancellation-free
/// series for (P_l - 1) instead of evaluating P_l directly.
double near_zero_threshold(int ell);

/// Number of Clenshaw-Curtis nodes used for degree l: max(l+1, 8).
int eigenvalue_node_count(int ell);

/// lambda_delta(l) by singular-weight Clenshaw-Curtis quadrature.
double eigenvalue(int ell, const KernelParams& params,
                  const EvalMethod& method = EvalMethod::hybrid());

/// As eigenvalue() with an explicit rule size (>= 2).
double eigenvalue_with_nodes(int ell, const KernelParams& params, const EvalMethod& method,
                             int n_nodes);

/// lambda_delta(l) for l = 0..n, computed in parallel over l.
Spectrum compute_spectrum(int n, const KernelParams& params,
                          const EvalMethod& method = EvalMethod::hybrid());

/// -l(l+1), the local Laplace-Beltrami eigenvalue.
double local_eigenvalue(int ell);

/// local_eigenvalue(l) for l = 0..n.
std::vector<double> local_spectrum_values(int n);

}  // namespace nlsphere
