#pragma once

#include <cstdint>

namespace fbmlab {

/// Counter-based (Philox-style) random stream. A stream is addressed by
/// (seed, stream, lane); identical addresses reproduce the same sequence
/// bit for bit, and distinct addresses are statistically independent, so
/// Monte Carlo replications can run in parallel with stream = rep index.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream, std::uint64_t lane = 0)
      : key0_(seed), key1_(stream), lane_(lane) {}

  /// Independent stream derived from this one; used to keep the fGn draws
  /// and the noise draws on disjoint counters.
  RngStream substream(std::uint64_t tag) const {
    return RngStream(key0_, key1_, lane_ * 0x100 + 1 + tag);
  }

  std::uint64_t seed() const { return key0_; }
  std::uint64_t stream() const { return key1_; }

  std::uint64_t next_u64();

  /// Uniform on (0,1].
  double next_uniform();

  /// Standard normal via Box-Muller (pairs cached).
  double next_gaussian();

 private:
  void refill();

  std::uint64_t key0_, key1_, lane_;
  std::uint64_t counter_ = 0;
  std::uint64_t buf_[4] = {0, 0, 0, 0};
  int buf_pos_ = 4;
  double gauss_cache_ = 0.0;
  bool have_gauss_ = false;
};

}  // namespace fbmlab
