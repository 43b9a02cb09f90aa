#pragma once

#include <functional>
#include <vector>

namespace fbmlab {

/// Nodes and weights of the N-point Gauss-Legendre rule on [-1,1].
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;

  explicit GaussLegendre(int n);

  /// Apply the rule to f on [a,b].
  template <typename F>
  double integrate(F&& f, double a, double b) const {
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double acc = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) acc += weights[i] * f(mid + half * nodes[i]);
    return half * acc;
  }
};

/// Shared 64-point rule.
const GaussLegendre& gl64();

/// Adaptive Simpson on [a,b] to absolute tolerance tol.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol,
                        int max_depth = 60);

/// tanh-sinh (double exponential) rule on [a,b]; robust to integrable
/// endpoint singularities such as |x-a|^alpha with alpha > -1.
double tanh_sinh(const std::function<double(double)>& f, double a, double b, double tol);

}  // namespace fbmlab
