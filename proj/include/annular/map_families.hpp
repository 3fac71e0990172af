#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "annular/enumerate.hpp"
#include "annular/permutation.hpp"

namespace annular {

/// Canonical, duplicate-free, sorted list of family members.
using FamilySet = std::vector<Permutation>;

/// Sorts and removes duplicates.
void canonicalize(FamilySet& set);
bool contains(const FamilySet& set, const Permutation& p);

/// t0 = (1,-1)(2,-2)...(n,-n)
Pairing tau0(int n);
/// t2 = (-1,2)(-2,3)...(-n,1)
Pairing tau2(int n);
/// (1,...,n) on [n]
Permutation one_n(int n);
/// (1,...,n)(-n,...,-1) on +-[n]
Permutation one_tilde_n(int n);

struct CanonicalFrames {
  int n;
  Pairing tau0;
  Pairing tau2;
  Permutation one_n;
  Permutation one_tilde_n;

  static CanonicalFrames make(int n);
};

/// t0 t1 = t1 t0 and t0 t1 fixed-point free.
bool is_signed_symmetric(const Permutation& t1);
/// Some a in [n] with t1(a) in [n].
bool has_twist(const Permutation& t1);

/// One-vertex ribbon graph: a pairing of [n] (orientable), or a signed
/// symmetric pairing of +-[n] with at least one twist (non-orientable).
class RibbonGraph {
 public:
  static RibbonGraph orientable(Pairing pi);
  static RibbonGraph nonorientable(Pairing t1);

  bool is_orientable() const noexcept { return orientable_; }
  int n() const noexcept { return edges_.domain().n(); }
  const Pairing& edges() const noexcept { return edges_; }
  /// 2g for orientable graphs, k otherwise.
  int euler_genus() const;

 private:
  RibbonGraph(bool orientable, Pairing edges) : orientable_(orientable), edges_(std::move(edges)) {}

  bool orientable_;
  Pairing edges_;
};

/// One-vertex hypermap: any permutation of [n], or t1 on +-[n] with
/// t0 t1 t0 = t1^-1, t0 t1 fixed-point free and some a in [n] with t1(a) < 0.
class Hypermap {
 public:
  static Hypermap orientable(Permutation pi);
  static Hypermap nonorientable(Permutation t1);

  bool is_orientable() const noexcept { return orientable_; }
  int n() const noexcept { return edges_.domain().n(); }
  const Permutation& edges() const noexcept { return edges_; }

 private:
  Hypermap(bool orientable, Permutation edges) : orientable_(orientable), edges_(std::move(edges)) {}

  bool orientable_;
  Permutation edges_;
};

/// g = (n/2 + 1 - #(pi^-1 1_n)) / 2.
int orientable_genus(const Pairing& pi);
/// k = 1 + (n - #(t2 t1)) / 2. Requires a signed symmetric pairing with a twist.
int nonorientable_euler_genus(const Pairing& t1);

/// B(n): odd positives and even negatives of +-[2n]. W(n): the rest.
std::vector<int> black_labels(int n);
std::vector<int> white_labels(int n);
bool in_black(int label) noexcept;

/// Evens of [2n] paired with odds.
bool is_bipartite_pairing(const Permutation& pi);
/// t1 on +-[2n] maps B(n) into B(n).
bool preserves_black(const Permutation& t1);

/// (g, p) of a bipartite pairing of [2n]: p = #((pi^-1 1_2n)|odd).
std::pair<int, int> bipartite_orientable_grade(const Pairing& pi);
/// (k, p) of a bipartite twisted pairing of +-[2n]: #((t2 t1)|W) = 2p.
std::pair<int, int> bipartite_nonorientable_grade(const Pairing& t1);

/// (g, p) with #pi = p and #(pi^-1 1_n) = n - p + 1 - 2g; nullopt if g is not
/// an integer.
std::optional<std::pair<int, int>> hypermap_orientable_grade(const Permutation& pi);
/// (k, p) with #t1 = 2p and #(1~_n t1) = 2(n - p + 1 - k); nullopt when a
/// count is odd.
std::optional<std::pair<int, int>> hypermap_nonorientable_grade(const Permutation& t1);

FamilySet family_a(int n, int g,
                   const EnumerationBudget& budget = default_budget(),
                   EnumerationOutcome* outcome = nullptr);
FamilySet family_b(int n, int k,
                   const EnumerationBudget& budget = default_budget(),
                   EnumerationOutcome* outcome = nullptr);
FamilySet family_a_tilde(int n, int g, int p,
                   const EnumerationBudget& budget = default_budget(),
                   EnumerationOutcome* outcome = nullptr);
FamilySet family_b_tilde(int n, int k, int p,
                   const EnumerationBudget& budget = default_budget(),
                   EnumerationOutcome* outcome = nullptr);
FamilySet family_a_hat(int n, int g, int p,
                   const EnumerationBudget& budget = default_budget(),
                   EnumerationOutcome* outcome = nullptr);
FamilySet family_b_hat(int n, int k, int p,
                   const EnumerationBudget& budget = default_budget(),
                   EnumerationOutcome* outcome = nullptr);

/// Family sizes for every grade in one pass. Keys are g, k, (g,p) or (k,p).
std::map<int, std::uint64_t> count_a(int n, const EnumerationBudget& budget = default_budget());
std::map<int, std::uint64_t> count_b(int n, const EnumerationBudget& budget = default_budget());
std::map<std::pair<int, int>, std::uint64_t> count_a_tilde(
    int n, const EnumerationBudget& budget = default_budget());
std::map<std::pair<int, int>, std::uint64_t> count_b_tilde(
    int n, const EnumerationBudget& budget = default_budget());

/// pi'(u) = (pi(2u) + 1) / 2 for a bipartite pairing of [2n].
Permutation hypermap_from_bipartite_orientable(const Pairing& pi);

/// Restricts t2 t1 to W(n), identifies w with |w| and relabels by
/// f(u) = -u/2 (u even), (u+1)/2 (u odd). W(n) holds exactly one of each
/// +-u, so the result is a permutation of +-[n].
Permutation hypermap_from_bipartite_nonorientable(const Pairing& t1);

}  // namespace annular
