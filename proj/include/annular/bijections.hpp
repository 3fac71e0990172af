#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "annular/enumerate.hpp"
#include "annular/map_families.hpp"
#include "annular/permutation.hpp"

namespace annular {

/// Outcome of an exhaustive two-sided comparison between a domain family
/// and a codomain family under a map.
struct BijectionReport {
  static constexpr std::size_t kDefaultWitnessCap = 100;

  std::string name;
  int n = 0;
  int p = 0;  // 0 for ungraded checks
  std::uint64_t domain_size = 0;
  std::uint64_t codomain_size = 0;
  bool injective = false;
  bool surjective = false;
  /// (input, image) in cycle notation, first entries of the domain order.
  std::vector<std::pair<std::string, std::string>> witnesses;
  /// Domain elements whose image falls outside the codomain.
  std::vector<std::string> failures;
  std::uint64_t failure_count = 0;
  /// Codomain elements not hit by any image.
  std::vector<std::string> unreached;
  std::uint64_t unreached_count = 0;

  bool verified() const noexcept {
    return injective && surjective && failure_count == 0;
  }
};

struct ReportOptions {
  std::size_t witness_cap = BijectionReport::kDefaultWitnessCap;  // 0 = no cap
  EnumerationBudget budget = default_budget();
};

using ElementMap = std::function<Permutation(const Permutation&)>;
/// Extra per-element acceptance test on (input, image).
using ImageCheck = std::function<bool(const Permutation&, const Permutation&)>;

/// Shared driver: maps every element of `domain`, then compares images with
/// `codomain` as sets. An image outside the codomain, or rejected by `check`,
/// is a failure.
BijectionReport compare_map(std::string name, int n, int p, const FamilySet& domain,
                            const FamilySet& codomain, const ElementMap& map,
                            const ReportOptions& options = {}, const ImageCheck& check = {});

/// t1 -> t1 t0, for t1 in b1(n). Inverse: pi -> pi t0.
Permutation phi1(const Pairing& t1);
Permutation phi1_inverse(const Permutation& pi);
/// t1 -> t1 t0, for t1 in b2(n). Inverse: pi -> pi t0.
Permutation phi2(const Pairing& t1);
Permutation phi2_inverse(const Permutation& pi);

BijectionReport verify_phi1(int n, const ReportOptions& options = {});
BijectionReport verify_torus_equality(int n, const ReportOptions& options = {});
BijectionReport verify_phi2(int n, const ReportOptions& options = {});

/// Bipartite versions; n is the half size, families live on [2n] / +-[2n].
BijectionReport verify_phi1_tilde(int n, int p, const ReportOptions& options = {});
BijectionReport verify_phi2_tilde(int n, int p, const ReportOptions& options = {});
BijectionReport verify_a_tilde_equality(int n, int p, const ReportOptions& options = {});

/// Map used by the hypermap versions.
///   Inverse: t1 -> t1^-1 (the map that verifies).
///   Tau0:    t1 -> t1 t0, the map as literally stated, kept for evidence.
enum class HatMap : std::uint8_t { Inverse, Tau0 };
std::string to_string(HatMap m);

BijectionReport verify_phi1_hat(int n, int p, HatMap map = HatMap::Inverse,
                                const ReportOptions& options = {});
BijectionReport verify_phi2_hat(int n, int p, HatMap map = HatMap::Inverse,
                                const ReportOptions& options = {});
BijectionReport verify_a_hat_equality(int n, int p, const ReportOptions& options = {});

/// The two correspondences between bipartite ribbon graphs on [2n] / +-[2n]
/// and hypermaps on [n] / +-[n], over all grades at once. An image only
/// counts as a hit when its grade matches the input's.
BijectionReport verify_lemma3_orientable(int n, const ReportOptions& options = {});
BijectionReport verify_lemma3_nonorientable(int n, const ReportOptions& options = {});

/// Table row for the probe |b~_{1,p}(n)| vs |NC~_2^{delta,p}(2n,-2n)|.
struct ConjectureRow {
  int n;
  int p;
  std::uint64_t b_tilde;
  std::uint64_t nc_delta_bip;
  bool equal() const noexcept { return b_tilde == nc_delta_bip; }
};
std::vector<ConjectureRow> conjecture_table(int max_n,
                                            const EnumerationBudget& budget = default_budget());

}  // namespace annular
