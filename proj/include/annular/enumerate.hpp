#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "annular/errors.hpp"
#include "annular/parallel.hpp"
#include "annular/permutation.hpp"

namespace annular {

enum class OverflowPolicy : std::uint8_t { Error, Truncate };

/// Hard cap on the size of a raw search space.
///
/// The default of 3e6 admits pairings of up to 16 points (15!! ~ 2.0e6) and
/// permutations of up to 9 points (9! ~ 3.6e5), and rejects the next size up
/// in both cases.
struct EnumerationBudget {
  static constexpr std::uint64_t kDefaultMaxElements = 3'000'000;

  std::uint64_t max_elements = kDefaultMaxElements;
  OverflowPolicy on_overflow = OverflowPolicy::Error;

  /// kDefaultMaxElements, or ANNULAR_MAX_ELEMENTS when set and valid.
  static EnumerationBudget from_environment();
};

/// Process-wide budget used when none is passed. Initialized from the
/// environment on first use.
const EnumerationBudget& default_budget();
void set_default_budget(const EnumerationBudget& budget);

struct EnumerationOutcome {
  std::uint64_t yielded = 0;
  bool truncated = false;
};

/// Saturating counts of the raw spaces (UINT64_MAX on overflow).
std::uint64_t count_pairings(int points);
std::uint64_t count_signed_symmetric_pairings(int n);
std::uint64_t count_permutations(int points);

/// Throws CapExceeded when `raw_total` exceeds the budget under
/// OverflowPolicy::Error. Returns the number of elements that may be yielded.
std::uint64_t admit(std::uint64_t raw_total, const EnumerationBudget& budget,
                    const char* what);

/// Pairings of a ground set, in the order "pair the smallest unpaired label
/// with each larger label, ascending". Rank r is the r-th pairing in that order.
class PairingStream {
 public:
  explicit PairingStream(GroundSet domain);
  PairingStream(GroundSet domain, Slice slice);

  static std::uint64_t total(GroundSet domain) { return count_pairings(domain.size()); }
  std::optional<Pairing> next();

 private:
  void build();

  GroundSet domain_;
  std::vector<int> digits_;  // digit i ranges over 0..size-2-2i
  std::uint64_t remaining_;
  std::vector<int> image_;
};

/// Pairings t1 of +-[n] with t0 t1 = t1 t0 and t0 t1 fixed-point free,
/// built as (pairing of [n], twist bit per pair). Untwisted {u,v} gives
/// (u,-v)(-u,v), twisted gives (u,v)(-u,-v). Rank = pairing_rank * 2^(n/2) +
/// twist bits, the first pair being the most significant bit.
class SignedSymmetricPairingStream {
 public:
  explicit SignedSymmetricPairingStream(int n);
  SignedSymmetricPairingStream(int n, Slice slice);

  static std::uint64_t total(int n) { return count_signed_symmetric_pairings(n); }
  std::optional<Pairing> next();

 private:
  int n_;
  PairingStream base_;
  std::optional<Pairing> current_;
  std::uint32_t bits_ = 0;
  std::uint32_t bit_limit_;
  std::uint64_t remaining_;
};

/// All permutations of a ground set in lexicographic order of the image
/// sequence (labels in index order).
class PermutationStream {
 public:
  explicit PermutationStream(GroundSet domain);
  PermutationStream(GroundSet domain, Slice slice);

  static std::uint64_t total(GroundSet domain) { return count_permutations(domain.size()); }
  std::optional<Permutation> next();

 private:
  GroundSet domain_;
  std::vector<int> image_;
  std::uint64_t remaining_;
};

/// t1 on +-[n] with t0 t1 t0 = t1^-1 and t0 t1 fixed-point free, filtered from
/// PermutationStream in its order. Slices refer to ranks of the raw stream.
class SignedSymmetricPermutationStream {
 public:
  explicit SignedSymmetricPermutationStream(int n);
  SignedSymmetricPermutationStream(int n, Slice slice);

  static std::uint64_t raw_total(int n) { return count_permutations(2 * n); }
  static bool admits(const Permutation& t1);
  std::optional<Permutation> next();

 private:
  PermutationStream raw_;
};

/// Drain a stream into `f`, honoring the budget against `raw_total`.
template <class Stream, class F>
EnumerationOutcome drain(Stream& stream, std::uint64_t raw_total, const EnumerationBudget& budget,
                         const char* what, F&& f) {
  const std::uint64_t limit = admit(raw_total, budget, what);
  EnumerationOutcome out;
  while (auto x = stream.next()) {
    if (out.yielded == limit) {
      out.truncated = true;
      break;
    }
    f(*x);
    ++out.yielded;
  }
  return out;
}

/// Materialized streams. n must be even for the pairing generators.
std::vector<Pairing> pairings(int n, const EnumerationBudget& budget = default_budget(),
                              EnumerationOutcome* outcome = nullptr);
std::vector<Pairing> pairings_of(GroundSet domain,
                                 const EnumerationBudget& budget = default_budget(),
                                 EnumerationOutcome* outcome = nullptr);
std::vector<Pairing> signed_symmetric_pairings(int n,
                                               const EnumerationBudget& budget = default_budget(),
                                               EnumerationOutcome* outcome = nullptr);
std::vector<Permutation> permutations(int n, const EnumerationBudget& budget = default_budget(),
                                      EnumerationOutcome* outcome = nullptr);
std::vector<Permutation> permutations_of(GroundSet domain,
                                         const EnumerationBudget& budget = default_budget(),
                                         EnumerationOutcome* outcome = nullptr);
std::vector<Permutation> signed_symmetric_permutations(
    int n, const EnumerationBudget& budget = default_budget(),
    EnumerationOutcome* outcome = nullptr);

}  // namespace annular
