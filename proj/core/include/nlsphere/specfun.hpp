#pragma once

// Legendre polynomials, their large-degree Bessel asymptotics, and the
// normalized associated Legendre functions used by the transform.

namespace nlsphere {

/// Number of terms kept in the Bessel-series asymptotic expansion of P_l.
/// Only the first four coefficient functions are implemented.
class SzegoTermCount {
public:
    static constexpr int max_terms = 4;

    explicit SzegoTermCount(int count = max_terms);

    int value() const noexcept { return count_; }

private:
    int count_;
};

/// P_l(t) by the forward three-term recurrence. O(l).
double legendre_rec(int ell, double t);

/// P_l(cos theta) by the truncated Bessel series
///   sqrt(theta/sin theta) * sum_{nu<terms} a_nu(theta) J_nu((l+1/2)theta) / (l+1/2)^nu.
/// Angles past pi/2 are folded with P_l(cos(pi-theta)) = (-1)^l P_l(cos theta).
/// O(1) in l. Requires l >= 1 and 0 < theta < pi.
double legendre_szego(int ell, double theta, SzegoTermCount terms = SzegoTermCount{});

struct SzegoValue {
    double value;
    bool degraded;  ///< l is at or below the caller's switch degree
};

/// As legendre_szego, flagging degrees where the expansion is not trusted.
SzegoValue legendre_szego_checked(int ell, double theta, int switch_degree,
                                  SzegoTermCount terms = SzegoTermCount{});

/// (P_l(cos theta) - 1) / sin^2(theta/2), accurate near theta = 0 where the
/// numerator cancels. Equals -l(l+1) at theta = 0.
double legendre_m1_over_hav(int ell, double theta);

/// Same ratio expressed through hav = sin^2(theta/2) using the finite series
///   sum_{k=1}^{l} (-1)^k C(l,k) C(l+k,k) hav^{k-1}.
/// Well conditioned while l(l+1)*hav stays O(1); callers outside that range
/// should use legendre_m1_over_hav.
double legendre_m1_over_hav_series(int ell, double hav);

/// Cylindrical Bessel J_nu(z) for nu in 0..3 and z > 0.
/// J_0 and J_1 use the power series for z <= bessel_series_cutoff and the
/// Hankel asymptotic expansion above it; J_2 and J_3 come from the forward
/// recurrence J_{nu+1} = (2nu/z) J_nu - J_{nu-1}.
double bessel_j(int nu, double z);

inline constexpr double bessel_series_cutoff = 15.0;

/// J_0(z) and J_1(z) evaluated together.
struct BesselPair {
    double j0;
    double j1;
};
BesselPair bessel_j01(double z);

/// Associated Legendre function normalized to unit L2 norm on [-1, 1] for
/// fixed m. No Condon-Shortley phase; P~_l^{-m} = P~_l^{m}.
double assoc_legendre_normalized(int ell, int m, double t);

}  // namespace nlsphere
