#include "annular/map_families.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "annular/errors.hpp"
#include "filter.hpp"

namespace annular {

void canonicalize(FamilySet& set) {
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
}

bool contains(const FamilySet& set, const Permutation& p) {
  return std::binary_search(set.begin(), set.end(), p);
}

Pairing tau0(int n) {
  std::vector<std::vector<int>> cycles;
  for (int i = 1; i <= n; ++i) cycles.push_back({i, -i});
  return Pairing(Permutation::from_cycles(GroundSet::signed_set(n), cycles));
}

Pairing tau2(int n) {
  if (n == 1) return Pairing(Permutation::from_cycles(GroundSet::signed_set(1), {{-1, 1}}));
  std::vector<std::vector<int>> cycles;
  for (int i = 1; i <= n; ++i) cycles.push_back({-i, i % n + 1});
  return Pairing(Permutation::from_cycles(GroundSet::signed_set(n), cycles));
}

Permutation one_n(int n) {
  std::vector<int> cyc(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) cyc[static_cast<std::size_t>(i)] = i + 1;
  return Permutation::from_cycles(GroundSet::unsigned_set(n), std::vector<std::vector<int>>{cyc});
}

Permutation one_tilde_n(int n) {
  std::vector<int> pos(static_cast<std::size_t>(n));
  std::vector<int> neg(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    pos[static_cast<std::size_t>(i)] = i + 1;
    neg[static_cast<std::size_t>(i)] = -n + i;
  }
  return Permutation::from_cycles(GroundSet::signed_set(n), std::vector<std::vector<int>>{pos, neg});
}

CanonicalFrames CanonicalFrames::make(int n) {
  return CanonicalFrames{n, annular::tau0(n), annular::tau2(n), annular::one_n(n),
                         annular::one_tilde_n(n)};
}

namespace {

// Index of -l is size-1-index of l, so t0 acts on indices as i -> m-i.
int mirror_index(const Permutation& p, int i) { return p.size() - 1 - i; }

void require_signed(const Permutation& p, const char* what) {
  if (!p.domain().is_signed()) {
    throw DomainMismatch(std::string(what) + " needs a permutation of +-[n]");
  }
}

void require_unsigned(const Permutation& p, const char* what) {
  if (p.domain().is_signed()) {
    throw DomainMismatch(std::string(what) + " needs a permutation of [n]");
  }
}

bool is_hypermap_symmetric(const Permutation& t1) {
  return SignedSymmetricPermutationStream::admits(t1);
}

bool has_negative_image(const Permutation& t1) {
  for (int a = 1; a <= t1.domain().n(); ++a) {
    if (t1(a) < 0) return true;
  }
  return false;
}

int count_restricted(const Permutation& p, const std::vector<int>& subset) {
  try {
    return restrict_to(p, subset).num_cycles();
  } catch (const InvalidArgument& e) {
    throw InvariantViolation(std::string("boundary cycle is not monochromatic: ") + e.what());
  }
}

std::vector<int> odd_labels(int m) {
  std::vector<int> out;
  for (int a = 1; a <= m; a += 2) out.push_back(a);
  return out;
}

}  // namespace

bool is_signed_symmetric(const Permutation& t1) {
  if (!t1.domain().is_signed()) return false;
  for (int i = 0; i < t1.size(); ++i) {
    const int t0t1 = mirror_index(t1, t1.image_index(i));
    if (t0t1 == i) return false;
    if (t1.image_index(mirror_index(t1, i)) != mirror_index(t1, t1.image_index(i))) return false;
  }
  return true;
}

bool has_twist(const Permutation& t1) {
  require_signed(t1, "has_twist");
  for (int a = 1; a <= t1.domain().n(); ++a) {
    if (t1(a) > 0) return true;
  }
  return false;
}

RibbonGraph RibbonGraph::orientable(Pairing pi) {
  require_unsigned(pi, "orientable ribbon graph");
  if (pi.domain().n() % 2) throw InvalidArgument("ribbon graph needs even n");
  return RibbonGraph(true, std::move(pi));
}

RibbonGraph RibbonGraph::nonorientable(Pairing t1) {
  require_signed(t1, "non-orientable ribbon graph");
  if (t1.domain().n() % 2) throw InvalidArgument("ribbon graph needs even n");
  if (!is_signed_symmetric(t1)) {
    throw InvalidArgument("t1 must commute with t0 and t0 t1 must be fixed-point free");
  }
  if (!has_twist(t1)) throw InvalidArgument("non-orientable ribbon graph needs a twisted edge");
  return RibbonGraph(false, std::move(t1));
}

int RibbonGraph::euler_genus() const {
  return orientable_ ? 2 * orientable_genus(edges_) : nonorientable_euler_genus(edges_);
}

Hypermap Hypermap::orientable(Permutation pi) {
  require_unsigned(pi, "orientable hypermap");
  return Hypermap(true, std::move(pi));
}

Hypermap Hypermap::nonorientable(Permutation t1) {
  require_signed(t1, "non-orientable hypermap");
  if (!is_hypermap_symmetric(t1)) {
    throw InvalidArgument("t1 must satisfy t0 t1 t0 = t1^-1 with t0 t1 fixed-point free");
  }
  if (!has_negative_image(t1)) {
    throw InvalidArgument("non-orientable hypermap needs some a in [n] with t1(a) < 0");
  }
  return Hypermap(false, std::move(t1));
}

int orientable_genus(const Pairing& pi) {
  require_unsigned(pi, "orientable_genus");
  const int n = pi.domain().n();
  if (n % 2) throw InvalidArgument("orientable_genus needs even n");
  const int twice_g = n / 2 + 1 - num_cycles(compose(pi, one_n(n)));  // pi^-1 = pi
  if (twice_g < 0 || twice_g % 2) {
    throw InvariantViolation("non-integral genus for " + to_cycle_string(pi));
  }
  return twice_g / 2;
}

int nonorientable_euler_genus(const Pairing& t1) {
  require_signed(t1, "nonorientable_euler_genus");
  if (!is_signed_symmetric(t1) || !has_twist(t1)) {
    throw InvalidArgument("not a non-orientable ribbon graph: " + to_cycle_string(t1));
  }
  const int n = t1.domain().n();
  const int c = num_cycles(compose(tau2(n), t1));
  if ((n - c) % 2) {
    throw InvariantViolation("#(t2 t1) has the wrong parity for " + to_cycle_string(t1));
  }
  return 1 + (n - c) / 2;
}

bool in_black(int label) noexcept { return label > 0 ? (label % 2 != 0) : (label % 2 == 0); }

std::vector<int> black_labels(int n) {
  std::vector<int> out;
  for (int a = -2 * n; a <= 2 * n; ++a) {
    if (a != 0 && in_black(a)) out.push_back(a);
  }
  return out;
}

std::vector<int> white_labels(int n) {
  std::vector<int> out;
  for (int a = -2 * n; a <= 2 * n; ++a) {
    if (a != 0 && !in_black(a)) out.push_back(a);
  }
  return out;
}

bool is_bipartite_pairing(const Permutation& pi) {
  if (pi.domain().is_signed()) return false;
  for (int a = 2; a <= pi.domain().n(); a += 2) {
    if (pi(a) % 2 == 0) return false;
  }
  return true;
}

bool preserves_black(const Permutation& t1) {
  if (!t1.domain().is_signed()) return false;
  for (int a : t1.domain().labels()) {
    if (in_black(a) && !in_black(t1(a))) return false;
  }
  return true;
}

std::pair<int, int> bipartite_orientable_grade(const Pairing& pi) {
  if (!is_bipartite_pairing(pi) || pi.domain().n() % 2) {
    throw InvalidArgument("not a bipartite pairing of [2n]: " + to_cycle_string(pi));
  }
  const int m = pi.domain().n();
  const Permutation boundary = compose(pi, one_n(m));
  const int p = count_restricted(boundary, odd_labels(m));
  return {orientable_genus(pi), p};
}

std::pair<int, int> bipartite_nonorientable_grade(const Pairing& t1) {
  if (!t1.domain().is_signed() || t1.domain().n() % 2 || !preserves_black(t1)) {
    throw InvalidArgument("not a bipartite pairing of +-[2n]: " + to_cycle_string(t1));
  }
  const int n = t1.domain().n() / 2;
  const Permutation boundary = compose(tau2(2 * n), t1);
  const int white = count_restricted(boundary, white_labels(n));
  count_restricted(boundary, black_labels(n));
  if (white % 2) throw InvariantViolation("odd white boundary count for " + to_cycle_string(t1));
  return {nonorientable_euler_genus(t1), white / 2};
}

std::optional<std::pair<int, int>> hypermap_orientable_grade(const Permutation& pi) {
  require_unsigned(pi, "hypermap grade");
  const int n = pi.domain().n();
  const int p = num_cycles(pi);
  const int twice_g = n - p + 1 - num_cycles(compose(inverse(pi), one_n(n)));
  if (twice_g < 0 || twice_g % 2) return std::nullopt;
  return std::pair{twice_g / 2, p};
}

std::optional<std::pair<int, int>> hypermap_nonorientable_grade(const Permutation& t1) {
  require_signed(t1, "hypermap grade");
  const int n = t1.domain().n();
  const int c1 = num_cycles(t1);
  const int c2 = num_cycles(compose(one_tilde_n(n), t1));
  if (c1 % 2 || c2 % 2) return std::nullopt;
  const int p = c1 / 2;
  return std::pair{n - p + 1 - c2 / 2, p};
}

// Families

FamilySet family_a(int n, int g, const EnumerationBudget& budget, EnumerationOutcome* outcome) {
  const GroundSet dom = GroundSet::unsigned_set(n);
  return detail::parallel_collect(
      PairingStream::total(dom), budget, "family a",
      [&](Slice s) { return PairingStream(dom, s); },
      [&](const Pairing& pi) { return orientable_genus(pi) == g; }, outcome);
}

FamilySet family_b(int n, int k, const EnumerationBudget& budget, EnumerationOutcome* outcome) {
  return detail::parallel_collect(
      SignedSymmetricPairingStream::total(n), budget, "family b",
      [&](Slice s) { return SignedSymmetricPairingStream(n, s); },
      [&](const Pairing& t1) { return has_twist(t1) && nonorientable_euler_genus(t1) == k; },
      outcome);
}

FamilySet family_a_tilde(int n, int g, int p, const EnumerationBudget& budget,
                         EnumerationOutcome* outcome) {
  const GroundSet dom = GroundSet::unsigned_set(2 * n);
  return detail::parallel_collect(
      PairingStream::total(dom), budget, "family a-tilde",
      [&](Slice s) { return PairingStream(dom, s); },
      [&](const Pairing& pi) {
        return is_bipartite_pairing(pi) && bipartite_orientable_grade(pi) == std::pair{g, p};
      },
      outcome);
}

FamilySet family_b_tilde(int n, int k, int p, const EnumerationBudget& budget,
                         EnumerationOutcome* outcome) {
  return detail::parallel_collect(
      SignedSymmetricPairingStream::total(2 * n), budget, "family b-tilde",
      [&](Slice s) { return SignedSymmetricPairingStream(2 * n, s); },
      [&](const Pairing& t1) {
        return has_twist(t1) && preserves_black(t1) &&
               bipartite_nonorientable_grade(t1) == std::pair{k, p};
      },
      outcome);
}

FamilySet family_a_hat(int n, int g, int p, const EnumerationBudget& budget,
                       EnumerationOutcome* outcome) {
  const GroundSet dom = GroundSet::unsigned_set(n);
  return detail::parallel_collect(
      PermutationStream::total(dom), budget, "family a-hat",
      [&](Slice s) { return PermutationStream(dom, s); },
      [&](const Permutation& pi) { return hypermap_orientable_grade(pi) == std::pair{g, p}; },
      outcome);
}

FamilySet family_b_hat(int n, int k, int p, const EnumerationBudget& budget,
                       EnumerationOutcome* outcome) {
  return detail::parallel_collect(
      SignedSymmetricPermutationStream::raw_total(n), budget, "family b-hat",
      [&](Slice s) { return SignedSymmetricPermutationStream(n, s); },
      [&](const Permutation& t1) {
        return has_negative_image(t1) && hypermap_nonorientable_grade(t1) == std::pair{k, p};
      },
      outcome);
}

std::map<int, std::uint64_t> count_a(int n, const EnumerationBudget& budget) {
  const GroundSet dom = GroundSet::unsigned_set(n);
  return detail::parallel_tally<int>(
      PairingStream::total(dom), budget, "family a",
      [&](Slice s) { return PairingStream(dom, s); },
      [](const Pairing& pi) { return std::optional<int>(orientable_genus(pi)); });
}

std::map<int, std::uint64_t> count_b(int n, const EnumerationBudget& budget) {
  return detail::parallel_tally<int>(
      SignedSymmetricPairingStream::total(n), budget, "family b",
      [&](Slice s) { return SignedSymmetricPairingStream(n, s); },
      [](const Pairing& t1) -> std::optional<int> {
        if (!has_twist(t1)) return std::nullopt;
        return nonorientable_euler_genus(t1);
      });
}

std::map<std::pair<int, int>, std::uint64_t> count_a_tilde(int n,
                                                           const EnumerationBudget& budget) {
  const GroundSet dom = GroundSet::unsigned_set(2 * n);
  return detail::parallel_tally<std::pair<int, int>>(
      PairingStream::total(dom), budget, "family a-tilde",
      [&](Slice s) { return PairingStream(dom, s); },
      [](const Pairing& pi) -> std::optional<std::pair<int, int>> {
        if (!is_bipartite_pairing(pi)) return std::nullopt;
        return bipartite_orientable_grade(pi);
      });
}

std::map<std::pair<int, int>, std::uint64_t> count_b_tilde(int n,
                                                           const EnumerationBudget& budget) {
  return detail::parallel_tally<std::pair<int, int>>(
      SignedSymmetricPairingStream::total(2 * n), budget, "family b-tilde",
      [&](Slice s) { return SignedSymmetricPairingStream(2 * n, s); },
      [](const Pairing& t1) -> std::optional<std::pair<int, int>> {
        if (!has_twist(t1) || !preserves_black(t1)) return std::nullopt;
        return bipartite_nonorientable_grade(t1);
      });
}

// Hypermap correspondences

Permutation hypermap_from_bipartite_orientable(const Pairing& pi) {
  if (!is_bipartite_pairing(pi) || pi.domain().n() % 2) {
    throw InvalidArgument("not a bipartite pairing of [2n]: " + to_cycle_string(pi));
  }
  const int n = pi.domain().n() / 2;
  std::vector<int> image(static_cast<std::size_t>(n));
  for (int u = 1; u <= n; ++u) image[static_cast<std::size_t>(u - 1)] = (pi(2 * u) + 1) / 2;
  return Permutation::from_label_images(GroundSet::unsigned_set(n), image);
}

Permutation hypermap_from_bipartite_nonorientable(const Pairing& t1) {
  if (!t1.domain().is_signed() || t1.domain().n() % 2 || !preserves_black(t1)) {
    throw InvalidArgument("not a bipartite pairing of +-[2n]: " + to_cycle_string(t1));
  }
  const int n = t1.domain().n() / 2;
  const Permutation boundary = compose(tau2(2 * n), t1);
  const std::vector<int> white = white_labels(n);
  InducedPermutation r;
  try {
    r = restrict_to(boundary, white);
  } catch (const InvalidArgument& e) {
    throw InvariantViolation(std::string("white boundary not invariant: ") + e.what());
  }
  auto f = [](int u) { return u % 2 == 0 ? -u / 2 : (u + 1) / 2; };
  const GroundSet dom = GroundSet::signed_set(n);
  std::vector<int> image(static_cast<std::size_t>(dom.size()));
  for (std::size_t i = 0; i < r.support.size(); ++i) {
    image[static_cast<std::size_t>(dom.index_of(f(std::abs(r.support[i]))))] =
        dom.index_of(f(std::abs(r.image[i])));
  }
  return Permutation::from_indices(dom, std::move(image));
}

}  // namespace annular
