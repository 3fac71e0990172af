#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace annular {

enum class DomainKind : std::uint8_t { Unsigned, Signed };

/// The ground set [n] = {1..n} or +-[n] = {-n..-1, 1..n}.
///
/// Elements are addressed by a dense index. Unsigned labels map as
/// a -> a-1. Signed labels map negatives first, ascending:
/// -n..-1 -> 0..n-1 and 1..n -> n..2n-1.
class GroundSet {
 public:
  static GroundSet unsigned_set(int n);
  static GroundSet signed_set(int n);

  DomainKind kind() const noexcept { return kind_; }
  bool is_signed() const noexcept { return kind_ == DomainKind::Signed; }
  int n() const noexcept { return n_; }
  int size() const noexcept { return kind_ == DomainKind::Signed ? 2 * n_ : n_; }

  bool contains(int label) const noexcept;
  /// Throws InvalidArgument for labels outside the set.
  int index_of(int label) const;
  int label_at(int index) const;

  /// Labels in index order.
  std::vector<int> labels() const;

  std::string describe() const;

  friend bool operator==(const GroundSet&, const GroundSet&) = default;
  friend auto operator<=>(const GroundSet&, const GroundSet&) = default;

 private:
  GroundSet(DomainKind kind, int n) : kind_(kind), n_(n) {}

  DomainKind kind_;
  int n_;
};

/// A bijection of a GroundSet onto itself, stored as an index image table.
/// Immutable after construction.
class Permutation {
 public:
  /// Identity on `domain`.
  explicit Permutation(GroundSet domain);

  /// Throws InvalidArgument unless `image` is a bijection of 0..size-1.
  static Permutation from_indices(GroundSet domain, std::vector<int> image);
  /// `image_labels[i]` is the image of the i-th label (index order).
  static Permutation from_label_images(GroundSet domain, std::span<const int> image_labels);
  /// Disjoint cycles given by labels; unlisted labels are fixed.
  static Permutation from_cycles(GroundSet domain, const std::vector<std::vector<int>>& cycles);
  static Permutation from_cycles(GroundSet domain,
                                 std::initializer_list<std::initializer_list<int>> cycles);

  const GroundSet& domain() const noexcept { return domain_; }
  int size() const noexcept { return static_cast<int>(image_.size()); }

  /// Image of a label.
  int operator()(int label) const;
  int image_index(int index) const noexcept { return image_[static_cast<std::size_t>(index)]; }
  std::span<const int> indices() const noexcept { return image_; }

  bool is_identity() const noexcept;
  bool has_fixed_point() const noexcept;
  bool is_involution() const noexcept;

  /// Cycles as labels, each starting at its minimal label and sorted by it.
  /// Fixed points are included as 1-cycles.
  std::vector<std::vector<int>> cycles() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  Permutation(GroundSet domain, std::vector<int> image)
      : domain_(domain), image_(std::move(image)) {}

  GroundSet domain_;
  std::vector<int> image_;
};

/// A fixed-point-free involution.
class Pairing {
 public:
  /// Throws InvalidArgument unless `p` is a fixed-point-free involution.
  explicit Pairing(Permutation p);

  static bool satisfies(const Permutation& p) noexcept;

  const Permutation& perm() const noexcept { return perm_; }
  operator const Permutation&() const noexcept { return perm_; }  // NOLINT
  const GroundSet& domain() const noexcept { return perm_.domain(); }
  int operator()(int label) const { return perm_(label); }

  friend bool operator==(const Pairing&, const Pairing&) = default;
  friend auto operator<=>(const Pairing&, const Pairing&) = default;

 private:
  Permutation perm_;
};

/// A permutation induced on an invariant subset. Its ground set is an
/// arbitrary set of labels, so it is kept apart from Permutation.
struct InducedPermutation {
  std::vector<int> support;  // sorted labels
  std::vector<int> image;    // image[i] is the image label of support[i]

  int num_cycles() const;
  std::vector<std::vector<int>> cycles() const;
};

/// (p.q)(x) = p(q(x)).
Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);
int num_cycles(const Permutation& p);
/// q.p.q^-1
Permutation conjugate(const Permutation& p, const Permutation& q);
/// Throws InvalidArgument if `subset` is not a union of cycles of p.
InducedPermutation restrict_to(const Permutation& p, std::span<const int> subset);

/// Number of blocks of the join of the cycle partitions of p and q.
int join_block_count(const Permutation& p, const Permutation& q);
bool is_jointly_transitive(const Permutation& p, const Permutation& q);

/// Grammar: permutation := cycle* ; cycle := '(' int (',' int)* ')'.
/// Whitespace between tokens is ignored.
Permutation parse_cycles(std::string_view text, GroundSet domain);
/// Fixed points omitted; identity prints as the empty string.
std::string to_cycle_string(const Permutation& p);

}  // namespace annular
