#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "annular/enumerate.hpp"
#include "annular/map_families.hpp"
#include "annular/permutation.hpp"

namespace annular {

enum class FrameKind : std::uint8_t { Disk, Annulus, Torus, Klein };

/// Reference permutation gamma against which non-crossing is tested.
struct AnnularFrame {
  Permutation gamma;
  FrameKind kind;
  int n;
  int u = 0;
  int v = 0;

  std::string describe() const;
};

/// gamma = 1_n
AnnularFrame disk_frame(int n);
/// gamma = (1,...,n)(-n,...,-1)
AnnularFrame annulus_frame(int n);
/// gamma = 1_n (u-1, v) with (0,v) read as (n,v); 1 <= u < v < n.
/// Equals (u,...,v)(1,...,u-1,v+1,...,n).
AnnularFrame torus_frame(int n, int u, int v);
/// gamma = 1~_n (-u, v-1)(-v, u-1) with (-v,0) read as (-v,n); 1 <= u < v <= n.
/// Checked at construction against klein_frame_display.
AnnularFrame klein_frame(int n, int u, int v);
/// (u,...,v-1, 1-u,...,-1, -n,...,-v)(v,...,n, 1,...,u-1, 1-v,...,-u)
Permutation klein_frame_display(int n, int u, int v);

/// pi v gamma = 1 and #pi + #(pi^-1 gamma) + #gamma = |A| + 2.
bool is_noncrossing(const Permutation& pi, const Permutation& gamma);
/// |A| + 2 #(pi v gamma) - (#pi + #(pi^-1 gamma) + #gamma); >= 0 and even.
int euler_defect(const Permutation& pi, const Permutation& gamma);
/// t0 pi t0 = pi^-1 (every cycle (r1..rs) comes with (-rs..-r1)) and no cycle
/// is its own mirror. On pairings the second condition says (-r,r) is never a
/// cycle.
bool is_delta_symmetric(const Permutation& pi);

enum class NCTag : std::uint8_t {
  NC,            // permutations of [n], disk
  NC2,           // pairings of [n], disk
  NCdelta,       // permutations of +-[n], annulus, delta-symmetric
  NC2delta,      // pairings of +-[n], annulus, delta-symmetric
  NC2T,          // pairings of [n], union of torus frames
  NC2K,          // pairings of +-[n], union of Klein frames
  NC2delta_bip,  // bipartite NC2delta(n) graded by p
  NC2T_bip,      // bipartite NC2T(n) graded by p, v-u odd
  NC2K_bip,      // bipartite NC2K(n) graded by p, v-u even
  NCdelta_p,     // NCdelta(n) with #pi = 2p
  NCT_p,         // permutations of [n], torus frames, #pi = p
  NCK_p,         // permutations of +-[n], Klein frames, #pi = 2p
};

std::string to_string(NCTag tag);
std::optional<NCTag> nc_tag_from_string(const std::string& s);
bool is_graded(NCTag tag) noexcept;
bool is_union(NCTag tag) noexcept;  // indexed by (u,v) frames
bool acts_on_signed(NCTag tag) noexcept;

struct NCFamilyId {
  NCTag tag;
  int n;
  int p = 0;  // graded families only
};

using Witness = std::pair<int, int>;  // (u, v)

/// nullopt if pi is not a member. Otherwise the (u,v) frames witnessing
/// membership (empty for families that are not unions).
std::optional<std::vector<Witness>> nc_membership(const NCFamilyId& id, const Permutation& pi);

struct NCFamily {
  NCFamilyId id;
  FamilySet members;
  /// Every (u,v) witness of each member; union families only.
  std::map<Permutation, std::vector<Witness>> witnesses;
  bool truncated = false;
};

NCFamily family_nc(const NCFamilyId& id, const EnumerationBudget& budget = default_budget());

/// The frame a member is tested against, for the non-union families.
AnnularFrame base_frame(NCTag tag, int n);

}  // namespace annular
