#include "annular/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "annular/errors.hpp"

namespace annular {

namespace {
std::atomic<int> g_threads{1};
}  // namespace

void set_thread_count(int threads) {
  if (threads < 1) throw InvalidArgument("thread count must be at least 1");
  g_threads.store(threads);
}

int thread_count() noexcept { return g_threads.load(); }

Slice slice_of(std::uint64_t total, std::size_t k, std::size_t count) {
  if (count == 0 || k >= count) throw InvalidArgument("slice index out of range");
  const std::uint64_t q = total / count;
  const std::uint64_t r = total % count;
  const std::uint64_t begin = k * q + std::min<std::uint64_t>(k, r);
  const std::uint64_t len = q + (k < r ? 1 : 0);
  return {begin, begin + len};
}

std::size_t default_slice_count(std::uint64_t total) noexcept {
  constexpr std::uint64_t kMinPerSlice = 4096;
  constexpr std::uint64_t kMaxSlices = 256;
  return static_cast<std::size_t>(std::clamp<std::uint64_t>(total / kMinPerSlice, 1, kMaxSlices));
}

void parallel_slices(std::uint64_t total, std::size_t slices,
                     const std::function<void(std::size_t, Slice)>& fn) {
  const auto workers = static_cast<std::size_t>(
      std::min<std::uint64_t>(static_cast<std::uint64_t>(thread_count()), slices));
  if (workers <= 1) {
    for (std::size_t k = 0; k < slices; ++k) fn(k, slice_of(total, k, slices));
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  std::exception_ptr error;
  std::mutex error_mu;
  auto work = [&] {
    while (!stop.load()) {
      const std::size_t k = next.fetch_add(1);
      if (k >= slices) return;
      try {
        fn(k, slice_of(total, k, slices));
      } catch (...) {
        std::lock_guard lock(error_mu);
        if (!error) error = std::current_exception();
        stop.store(true);
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (std::size_t i = 1; i < workers; ++i) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace annular
