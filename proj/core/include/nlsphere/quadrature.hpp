#pragma once

#include <vector>

namespace nlsphere {

/// Clenshaw-Curtis rule for the Jacobi weight (1-x)^alpha (1+x)^beta on the
/// Chebyshev-Lobatto nodes x_k = cos(k pi / N), k = 0..N. Exact for every
/// polynomial of degree <= N against the weight.
struct CCRule {
    std::vector<double> nodes;
    /// 1 - x_k computed as 2 sin^2(k pi / 2N), accurate near x = 1.
    std::vector<double> one_minus_nodes;
    std::vector<double> weights;
    double alpha = 0.0;
    double beta = 0.0;

    std::size_t size() const noexcept { return nodes.size(); }
};

/// Gauss-Legendre rule on [-1, 1], nodes in decreasing order.
struct GLRule {
    std::vector<double> nodes;
    std::vector<double> weights;

    std::size_t size() const noexcept { return nodes.size(); }
};

/// Modified Chebyshev moments mu_k = int T_k(x) (1-x)^alpha (1+x)^beta dx,
/// k = 0..count-1, by the forward three-term recurrence.
std::vector<double> jacobi_moments(double alpha, double beta, int count);

enum class CosineSum { Direct, DCT };

/// Clenshaw-Curtis weights from the modified moments. The cosine sum is an
/// O(N^2) loop or an O(N log N) type-I discrete cosine transform.
CCRule cc_weights(double alpha, double beta, int n_nodes, CosineSum method = CosineSum::DCT);

/// Gauss-Legendre nodes by Newton iteration on the three-term recurrence.
GLRule gauss_legendre(int n_nodes);

}  // namespace nlsphere
