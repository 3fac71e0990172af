#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>

namespace annular {

/// Process-wide worker count used by the parallel helpers. Defaults to 1.
/// Results never depend on it: work is always cut into the same slices.
void set_thread_count(int threads);
int thread_count() noexcept;

/// Half-open rank range [begin, end) in a generator's deterministic order.
struct Slice {
  std::uint64_t begin = 0;
  std::uint64_t end = 0;

  std::uint64_t size() const noexcept { return end - begin; }
};

/// The k-th of `count` near-equal contiguous slices of [0, total).
Slice slice_of(std::uint64_t total, std::size_t k, std::size_t count);

/// Number of slices used for a given amount of work; a function of `total`
/// alone, so partitions are identical for every thread count.
std::size_t default_slice_count(std::uint64_t total) noexcept;

/// Calls fn(k, slice_of(total, k, slices)) for every k, spread over
/// thread_count() workers. The first exception thrown by any call is
/// rethrown after all workers stop.
void parallel_slices(std::uint64_t total, std::size_t slices,
                     const std::function<void(std::size_t, Slice)>& fn);

}  // namespace annular
