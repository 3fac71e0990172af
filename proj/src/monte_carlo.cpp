#include "annular/monte_carlo.hpp"

#include <cmath>
#include <complex>
#include <vector>

#include "annular/errors.hpp"
#include "annular/parallel.hpp"

namespace annular {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

GaussianStream::GaussianStream(std::uint64_t seed, std::uint64_t stream)
    : state_(mix64(seed + kGolden) ^ mix64(stream * kGolden + 0x632BE59BD9B4E019ULL)) {}

std::uint64_t GaussianStream::next_u64() noexcept {
  state_ += kGolden;
  return mix64(state_);
}

double GaussianStream::next_uniform() noexcept {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double GaussianStream::next_normal() noexcept {
  if (spare_) {
    const double s = *spare_;
    spare_.reset();
    return s;
  }
  double u;
  double v;
  double s;
  do {
    u = 2.0 * next_uniform() - 1.0;
    v = 2.0 * next_uniform() - 1.0;
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  const double f = std::sqrt(-2.0 * std::log(s) / s);
  spare_ = v * f;
  return u * f;
}

namespace {

template <class T>
using Matrix = std::vector<T>;  // row-major

template <class T>
Matrix<T> multiply(const Matrix<T>& a, const Matrix<T>& b, int n) {
  Matrix<T> c(static_cast<std::size_t>(n * n), T(0));
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const T aik = a[static_cast<std::size_t>(i * n + k)];
      for (int j = 0; j < n; ++j) {
        c[static_cast<std::size_t>(i * n + j)] += aik * b[static_cast<std::size_t>(k * n + j)];
      }
    }
  }
  return c;
}

template <class T>
double trace_power(const Matrix<T>& m, int n, int power) {
  Matrix<T> p = m;
  for (int k = 1; k < power; ++k) p = multiply(p, m, n);
  T tr(0);
  for (int i = 0; i < n; ++i) tr += p[static_cast<std::size_t>(i * n + i)];
  return std::real(tr);
}

double conj_if(double x) { return x; }
std::complex<double> conj_if(std::complex<double> x) { return std::conj(x); }

template <class T>
T draw(GaussianStream& rng) {
  static const double sd = std::sqrt(0.5);
  if constexpr (std::is_same_v<T, double>) {
    return sd * rng.next_normal();
  } else {
    const double re = sd * rng.next_normal();
    const double im = sd * rng.next_normal();
    return {re, im};
  }
}

template <class T>
double sample_wigner(GaussianStream& rng, int N, int power) {
  Matrix<T> g(static_cast<std::size_t>(N * N));
  for (auto& x : g) x = draw<T>(rng);
  Matrix<T> h(g.size());
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) {
      h[static_cast<std::size_t>(i * N + j)] =
          0.5 * (g[static_cast<std::size_t>(i * N + j)] + conj_if(g[static_cast<std::size_t>(j * N + i)]));
    }
  }
  return trace_power(h, N, power);
}

template <class T>
double sample_wishart(GaussianStream& rng, int N, int M, int power) {
  Matrix<T> g(static_cast<std::size_t>(M * N));  // M x N
  for (auto& x : g) x = draw<T>(rng);
  Matrix<T> w(static_cast<std::size_t>(N * N), T(0));
  for (int r = 0; r < M; ++r) {
    for (int i = 0; i < N; ++i) {
      const T gri = conj_if(g[static_cast<std::size_t>(r * N + i)]);
      for (int j = 0; j < N; ++j) {
        w[static_cast<std::size_t>(i * N + j)] += gri * g[static_cast<std::size_t>(r * N + j)];
      }
    }
  }
  return trace_power(w, N, power);
}

struct BlockStats {
  std::uint64_t count = 0;
  double mean = 0;
  double m2 = 0;  // sum of squared deviations
};

}  // namespace

McEstimate mc_moment(Ensemble e, int n, int N, std::optional<int> M, std::uint64_t samples,
                     std::uint64_t seed) {
  if (n < 1) throw InvalidArgument("moment order must be positive");
  if (N < 1) throw InvalidArgument("matrix dimension must be positive");
  if (samples < 100) throw InvalidArgument("need at least 100 samples");
  if (is_laguerre(e) && (!M || *M < 1)) {
    throw InvalidArgument("Laguerre ensembles need a positive rectangular dimension M");
  }

  const std::uint64_t blocks = (samples + kMcBlockSize - 1) / kMcBlockSize;
  std::vector<BlockStats> stats(static_cast<std::size_t>(blocks));
  parallel_slices(blocks, static_cast<std::size_t>(blocks), [&](std::size_t b, Slice) {
    GaussianStream rng(seed, b);
    const std::uint64_t begin = b * kMcBlockSize;
    const std::uint64_t end = std::min(samples, begin + kMcBlockSize);
    BlockStats& s = stats[b];
    for (std::uint64_t k = begin; k < end; ++k) {
      double x = 0;
      switch (e) {
        case Ensemble::GOE:
          x = sample_wigner<double>(rng, N, n);
          break;
        case Ensemble::GUE:
          x = sample_wigner<std::complex<double>>(rng, N, n);
          break;
        case Ensemble::LOE:
          x = sample_wishart<double>(rng, N, *M, n);
          break;
        case Ensemble::LUE:
          x = sample_wishart<std::complex<double>>(rng, N, *M, n);
          break;
      }
      ++s.count;
      const double d = x - s.mean;
      s.mean += d / static_cast<double>(s.count);
      s.m2 += d * (x - s.mean);
    }
  });

  // Chan et al. pairwise combination, in block order.
  BlockStats total;
  for (const auto& s : stats) {
    if (s.count == 0) continue;
    const double na = static_cast<double>(total.count);
    const double nb = static_cast<double>(s.count);
    const double d = s.mean - total.mean;
    const double nt = na + nb;
    total.mean += d * nb / nt;
    total.m2 += s.m2 + d * d * na * nb / nt;
    total.count += s.count;
  }

  McEstimate out;
  out.mean = total.mean;
  const double var = total.m2 / static_cast<double>(total.count - 1);
  out.std_error = std::sqrt(var / static_cast<double>(total.count));
  out.samples = total.count;
  out.seed = seed;
  out.dim = N;
  out.rect_dim = is_laguerre(e) ? M : std::nullopt;
  out.block_size = kMcBlockSize;
  return out;
}

}  // namespace annular
