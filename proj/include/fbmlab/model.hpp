#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>

namespace fbmlab {

/// Parameter triple (H, sigma, tau) of the noisy fractional model
///   X_i = sigma * W^H_{i*delta} + tau * nu * Y_i.
struct Theta {
  double H = 0.5;      ///< Hurst exponent, in (0,1)
  double sigma = 1.0;  ///< fBm scale, > 0
  double tau = 1.0;    ///< noise scale, > 0

  void validate() const {
    if (!(H > 0.0 && H < 1.0)) throw std::domain_error("Theta: H must lie in (0,1)");
    if (!(sigma > 0.0)) throw std::domain_error("Theta: sigma must be positive");
    if (!(tau > 0.0)) throw std::domain_error("Theta: tau must be positive");
  }
};

/// Compact parameter box the estimators are projected onto.
struct ParamBox {
  double H_lo = 0.01, H_hi = 0.99;
  double sigma_lo = 0.05, sigma_hi = 20.0;
  double tau_lo = 0.01, tau_hi = 10.0;

  void validate() const {
    if (!(0.0 < H_lo && H_lo < H_hi && H_hi < 1.0))
      throw std::domain_error("ParamBox: need 0 < H_lo < H_hi < 1");
    if (!(0.0 < sigma_lo && sigma_lo < sigma_hi))
      throw std::domain_error("ParamBox: need 0 < sigma_lo < sigma_hi");
    if (!(0.0 < tau_lo && tau_lo < tau_hi))
      throw std::domain_error("ParamBox: need 0 < tau_lo < tau_hi");
  }

  bool contains(const Theta& t) const {
    return t.H >= H_lo && t.H <= H_hi && t.sigma >= sigma_lo && t.sigma <= sigma_hi &&
           t.tau >= tau_lo && t.tau <= tau_hi;
  }
};

/// Observation design: (n, delta_n, nu_n, K). In the estimation setting
/// delta_n = 1/n and nu_n is constant.
struct SamplingScheme {
  Eigen::Index n = 0;   ///< number of increments; the series has n+1 points
  double delta_n = 1.0; ///< grid step
  double nu_n = 1.0;    ///< noise intensity
  int K = 0;            ///< moving-average order of the noise

  void validate() const {
    if (n < 1) throw std::domain_error("SamplingScheme: n must be >= 1");
    if (!(delta_n > 0.0)) throw std::domain_error("SamplingScheme: delta_n must be positive");
    if (nu_n < 0.0) throw std::domain_error("SamplingScheme: nu_n must be non-negative");
    if (K < 0) throw std::domain_error("SamplingScheme: K must be a non-negative integer");
  }

  /// High-frequency estimation design: delta = 1/n, nu = 1.
  static SamplingScheme estimation(Eigen::Index n, int K = 0) {
    return SamplingScheme{n, 1.0 / static_cast<double>(n), 1.0, K};
  }
};

/// X_0..X_n on the regular grid, together with its design.
struct ObservationSeries {
  Eigen::VectorXd values;  ///< length scheme.n + 1
  SamplingScheme scheme;
  std::optional<std::uint64_t> seed;  ///< replication identifier, if simulated

  void validate() const {
    scheme.validate();
    if (values.size() != scheme.n + 1)
      throw std::invalid_argument("ObservationSeries: length must equal scheme.n + 1");
  }
};

/// First differences Z_1..Z_n of an observation series.
struct IncrementSeries {
  Eigen::VectorXd values;  ///< length scheme.n
  SamplingScheme scheme;
};

/// Z_i = X_i - X_{i-1}. Throws on series shorter than two points.
IncrementSeries differences(const ObservationSeries& obs);

/// Componentwise clamp of theta into the closed box. Idempotent.
Theta project_to_box(const Theta& theta, const ParamBox& box);

/// Series CSV: one value per line, full precision, optional leading header
///   # n=<n> delta=<delta> nu=<nu> K=<K> seed=<seed>
void write_series_csv(std::ostream& os, const ObservationSeries& obs);
ObservationSeries read_series_csv(std::istream& is);

}  // namespace fbmlab
