#pragma once

// Parallel filtering of enumeration streams over a fixed slice partition.

#include <map>
#include <mutex>
#include <optional>
#include <vector>

#include "annular/enumerate.hpp"
#include "annular/map_families.hpp"
#include "annular/parallel.hpp"

namespace annular::detail {

/// Elements of the raw space [0, limit) accepted by `pred`, canonicalized.
/// `make(slice)` must return a stream over that rank range.
template <class MakeStream, class Pred>
FamilySet parallel_collect(std::uint64_t raw_total, const EnumerationBudget& budget,
                           const char* what, MakeStream make, Pred pred,
                           EnumerationOutcome* outcome = nullptr) {
  const std::uint64_t limit = admit(raw_total, budget, what);
  const std::size_t slices = default_slice_count(limit);
  std::vector<FamilySet> parts(slices);
  parallel_slices(limit, slices, [&](std::size_t k, Slice s) {
    auto stream = make(s);
    while (auto x = stream.next()) {
      if (pred(*x)) parts[k].push_back(Permutation(*x));
    }
  });
  FamilySet out;
  for (auto& part : parts) out.insert(out.end(), part.begin(), part.end());
  canonicalize(out);
  if (outcome) *outcome = {out.size(), limit < raw_total};
  return out;
}

/// Histogram of `key(x)` over accepted elements (nullopt keys are skipped).
template <class Key, class MakeStream, class KeyFn>
std::map<Key, std::uint64_t> parallel_tally(std::uint64_t raw_total,
                                            const EnumerationBudget& budget, const char* what,
                                            MakeStream make, KeyFn key) {
  const std::uint64_t limit = admit(raw_total, budget, what);
  const std::size_t slices = default_slice_count(limit);
  std::vector<std::map<Key, std::uint64_t>> parts(slices);
  parallel_slices(limit, slices, [&](std::size_t k, Slice s) {
    auto stream = make(s);
    while (auto x = stream.next()) {
      std::optional<Key> kv = key(*x);
      if (kv) ++parts[k][*kv];
    }
  });
  std::map<Key, std::uint64_t> out;
  for (const auto& part : parts) {
    for (const auto& [kv, c] : part) out[kv] += c;
  }
  return out;
}

}  // namespace annular::detail
