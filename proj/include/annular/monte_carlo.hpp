#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "annular/moments.hpp"

namespace annular {

/// SplitMix64 stream keyed by (seed, stream id), with standard normals from
/// the Marsaglia polar method. Output is fully specified, unlike
/// std::normal_distribution, so samples are identical across platforms.
class GaussianStream {
 public:
  static constexpr const char* kAlgorithm = "splitmix64+marsaglia-polar";

  GaussianStream(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t next_u64() noexcept;
  /// Uniform on [0, 1) with 53 random bits.
  double next_uniform() noexcept;
  /// Standard normal.
  double next_normal() noexcept;

 private:
  std::uint64_t state_;
  std::optional<double> spare_;
};

struct McEstimate {
  double mean = 0;
  double std_error = 0;  // sample standard deviation / sqrt(samples)
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  int dim = 0;
  std::optional<int> rect_dim;
  std::string generator = GaussianStream::kAlgorithm;
  std::uint64_t block_size = 0;
};

/// Samples per RNG stream; the k-th block always uses stream k, so the
/// estimate does not depend on the worker count.
inline constexpr std::uint64_t kMcBlockSize = 1000;

/// Monte Carlo estimate of E Tr M^n.
///   GOE: H = (G^T + G)/2, G real N x N, entries N(0, 1/2).
///   GUE: H = (G^* + G)/2, G complex N x N, real and imaginary parts N(0, 1/2).
///   LOE: W = G^T G, G real M x N.    LUE: W = G^* G, G complex M x N.
McEstimate mc_moment(Ensemble e, int n, int N, std::optional<int> M, std::uint64_t samples,
                     std::uint64_t seed);

}  // namespace annular
