#include "annular/nc_families.hpp"

#include <algorithm>
#include <array>
#include <mutex>

#include "annular/errors.hpp"
#include "annular/parallel.hpp"

namespace annular {

std::string AnnularFrame::describe() const {
  switch (kind) {
    case FrameKind::Disk:
      return "disk(" + std::to_string(n) + ")";
    case FrameKind::Annulus:
      return "annulus(" + std::to_string(n) + ")";
    case FrameKind::Torus:
      return "torus(" + std::to_string(n) + "," + std::to_string(u) + "," + std::to_string(v) + ")";
    case FrameKind::Klein:
      return "klein(" + std::to_string(n) + "," + std::to_string(u) + "," + std::to_string(v) + ")";
  }
  return "?";
}

AnnularFrame disk_frame(int n) { return AnnularFrame{one_n(n), FrameKind::Disk, n}; }

AnnularFrame annulus_frame(int n) { return AnnularFrame{one_tilde_n(n), FrameKind::Annulus, n}; }

AnnularFrame torus_frame(int n, int u, int v) {
  if (!(1 <= u && u < v && v < n)) {
    throw InvalidArgument("torus frame needs 1 <= u < v < n, got n=" + std::to_string(n) +
                          " u=" + std::to_string(u) + " v=" + std::to_string(v));
  }
  const GroundSet dom = GroundSet::unsigned_set(n);
  const int a = u == 1 ? n : u - 1;
  const Permutation t = Permutation::from_cycles(dom, {{a, v}});
  Permutation gamma = compose(one_n(n), t);
  if (num_cycles(gamma) != 2) throw InvariantViolation("torus frame does not have 2 cycles");
  return AnnularFrame{std::move(gamma), FrameKind::Torus, n, u, v};
}

Permutation klein_frame_display(int n, int u, int v) {
  if (!(1 <= u && u < v && v <= n)) {
    throw InvalidArgument("klein frame needs 1 <= u < v <= n");
  }
  std::vector<int> c1;
  std::vector<int> c2;
  for (int x = u; x <= v - 1; ++x) c1.push_back(x);
  for (int x = 1 - u; x <= -1; ++x) c1.push_back(x);
  for (int x = -n; x <= -v; ++x) c1.push_back(x);
  for (int x = v; x <= n; ++x) c2.push_back(x);
  for (int x = 1; x <= u - 1; ++x) c2.push_back(x);
  for (int x = 1 - v; x <= -u; ++x) c2.push_back(x);
  return Permutation::from_cycles(GroundSet::signed_set(n), {c1, c2});
}

AnnularFrame klein_frame(int n, int u, int v) {
  if (!(1 <= u && u < v && v <= n)) {
    throw InvalidArgument("klein frame needs 1 <= u < v <= n, got n=" + std::to_string(n) +
                          " u=" + std::to_string(u) + " v=" + std::to_string(v));
  }
  const GroundSet dom = GroundSet::signed_set(n);
  const int b = u == 1 ? n : u - 1;
  const Permutation t1 = Permutation::from_cycles(dom, {{-u, v - 1}});
  const Permutation t2 = Permutation::from_cycles(dom, {{-v, b}});
  Permutation gamma = compose(compose(one_tilde_n(n), t1), t2);
  if (gamma != klein_frame_display(n, u, v)) {
    throw InvariantViolation("klein frame product " + to_cycle_string(gamma) +
                             " differs from its cycle display");
  }
  return AnnularFrame{std::move(gamma), FrameKind::Klein, n, u, v};
}

namespace {

int euler_sum(const Permutation& pi, const Permutation& gamma) {
  return num_cycles(pi) + num_cycles(compose(inverse(pi), gamma)) + num_cycles(gamma);
}

}  // namespace

bool is_noncrossing(const Permutation& pi, const Permutation& gamma) {
  if (pi.domain() != gamma.domain()) throw DomainMismatch("is_noncrossing: domains differ");
  return join_block_count(pi, gamma) == 1 && euler_sum(pi, gamma) == pi.size() + 2;
}

int euler_defect(const Permutation& pi, const Permutation& gamma) {
  if (pi.domain() != gamma.domain()) throw DomainMismatch("euler_defect: domains differ");
  return pi.size() + 2 * join_block_count(pi, gamma) - euler_sum(pi, gamma);
}

bool is_delta_symmetric(const Permutation& pi) {
  if (!pi.domain().is_signed()) return false;
  const int m = pi.size() - 1;  // t0 on indices: i -> m - i
  // t0 pi t0 = pi^-1  <=>  pi(t0(pi(t0 i))) = i
  for (int i = 0; i < pi.size(); ++i) {
    if (pi.image_index(m - pi.image_index(m - i)) != i) return false;
  }
  std::vector<int> cycle_of(static_cast<std::size_t>(pi.size()), -1);
  int c = 0;
  for (int i = 0; i < pi.size(); ++i) {
    if (cycle_of[static_cast<std::size_t>(i)] >= 0) continue;
    for (int j = i; cycle_of[static_cast<std::size_t>(j)] < 0; j = pi.image_index(j)) {
      cycle_of[static_cast<std::size_t>(j)] = c;
    }
    ++c;
  }
  for (int i = 0; i < pi.size(); ++i) {
    if (cycle_of[static_cast<std::size_t>(i)] == cycle_of[static_cast<std::size_t>(m - i)]) {
      return false;
    }
  }
  return true;
}

namespace {

struct TagInfo {
  NCTag tag;
  const char* name;
  bool graded;
  bool union_family;
  bool signed_domain;
  bool pairing;
};

constexpr std::array<TagInfo, 12> kTags{{
    {NCTag::NC, "nc", false, false, false, false},
    {NCTag::NC2, "nc2", false, false, false, true},
    {NCTag::NCdelta, "nc-delta", false, false, true, false},
    {NCTag::NC2delta, "nc2-delta", false, false, true, true},
    {NCTag::NC2T, "nc2-t", false, true, false, true},
    {NCTag::NC2K, "nc2-k", false, true, true, true},
    {NCTag::NC2delta_bip, "nc2-delta-bip", true, false, true, true},
    {NCTag::NC2T_bip, "nc2-t-bip", true, true, false, true},
    {NCTag::NC2K_bip, "nc2-k-bip", true, true, true, true},
    {NCTag::NCdelta_p, "nc-delta-p", true, false, true, false},
    {NCTag::NCT_p, "nc-t-p", true, true, false, false},
    {NCTag::NCK_p, "nc-k-p", true, true, true, false},
}};

const TagInfo& info(NCTag tag) {
  for (const auto& t : kTags) {
    if (t.tag == tag) return t;
  }
  throw InvalidArgument("unknown family tag");
}

std::vector<int> odds_of(int n) {
  std::vector<int> out;
  for (int a = 1; a <= n; a += 2) out.push_back(a);
  return out;
}

std::vector<int> evens_of(int n) {
  std::vector<int> out;
  for (int a = 2; a <= n; a += 2) out.push_back(a);
  return out;
}

int restricted_cycles(const Permutation& p, const std::vector<int>& subset) {
  try {
    return restrict_to(p, subset).num_cycles();
  } catch (const InvalidArgument& e) {
    throw InvariantViolation(std::string("boundary cycle is not monochromatic: ") + e.what());
  }
}

// Frames and label sets for one family, built once and shared by all
// membership tests.
class Membership {
 public:
  explicit Membership(const NCFamilyId& id) : id_(id), info_(info(id.tag)) {
    const int n = id.n;
    if (n < 1) throw InvalidArgument("family size must be positive");
    if (info_.graded && id.p < 1) throw InvalidArgument("graded family needs p >= 1");
    if (info_.pairing && !info_.signed_domain && n % 2) {
      throw InvalidArgument(std::string(info_.name) + " needs even n");
    }
    const bool bip = id.tag == NCTag::NC2delta_bip || id.tag == NCTag::NC2T_bip ||
                     id.tag == NCTag::NC2K_bip;
    if (bip && n % 2) throw InvalidArgument(std::string(info_.name) + " needs even n");
    domain_ = info_.signed_domain ? GroundSet::signed_set(n) : GroundSet::unsigned_set(n);

    switch (id.tag) {
      case NCTag::NC2T:
      case NCTag::NC2T_bip:
      case NCTag::NCT_p:
        for (int u = 1; u < n; ++u) {
          for (int v = u + 1; v < n; ++v) frames_.push_back(torus_frame(n, u, v));
        }
        break;
      case NCTag::NC2K:
      case NCTag::NC2K_bip:
      case NCTag::NCK_p:
        for (int u = 1; u < n; ++u) {
          for (int v = u + 1; v <= n; ++v) frames_.push_back(klein_frame(n, u, v));
        }
        break;
      default:
        base_ = base_frame(id.tag, n).gamma;
        break;
    }
    if (bip) {
      if (info_.signed_domain) {
        black_ = black_labels(n / 2);
        white_ = white_labels(n / 2);
      } else {
        black_ = odds_of(n);
        white_ = evens_of(n);
      }
      boundary_frame_ = info_.signed_domain ? one_tilde_n(n) : one_n(n);
    }
  }

  std::optional<std::vector<Witness>> test(const Permutation& pi) const {
    if (pi.domain() != domain_) {
      throw DomainMismatch(std::string(info_.name) + " lives on " + domain_.describe() +
                           ", got " + pi.domain().describe());
    }
    if (info_.pairing && !Pairing::satisfies(pi)) return std::nullopt;
    if (info_.signed_domain && !is_delta_symmetric(pi)) return std::nullopt;

    switch (id_.tag) {
      case NCTag::NCdelta_p:
        if (num_cycles(pi) != 2 * id_.p) return std::nullopt;
        break;
      case NCTag::NCT_p:
        if (num_cycles(pi) != id_.p) return std::nullopt;
        break;
      case NCTag::NCK_p:
        if (num_cycles(pi) != 2 * id_.p) return std::nullopt;
        break;
      default:
        break;
    }

    std::vector<Witness> witnesses;
    if (!info_.union_family) {
      if (!is_noncrossing(pi, base_)) return std::nullopt;
    } else {
      if (frames_.empty()) return std::nullopt;
      // Pairings use pi(a); permutation-level families use pi^-1(a).
      const Permutation look = info_.pairing ? pi : inverse(pi);
      const bool klein = frames_.front().kind == FrameKind::Klein;
      for (const auto& f : frames_) {
        const int u = f.u;
        const int v = f.v;
        if (id_.tag == NCTag::NC2T_bip && (v - u) % 2 == 0) continue;
        if (id_.tag == NCTag::NC2K_bip && (v - u) % 2 != 0) continue;
        if (look(u) != (klein ? -v : v)) continue;
        bool ok = true;
        for (int a = 1; a < u && ok; ++a) {
          const int b = look(a);
          ok = klein ? b > 0 : (b < u || b > v);
        }
        if (ok && is_noncrossing(pi, f.gamma)) witnesses.emplace_back(u, v);
      }
      if (witnesses.empty()) return std::nullopt;
    }

    if (!black_.empty()) {
      for (int a : white_) {
        if (!std::binary_search(black_.begin(), black_.end(), pi(a))) return std::nullopt;
      }
      const Permutation boundary = compose(inverse(pi), boundary_frame_);
      const int black = restricted_cycles(boundary, black_);
      restricted_cycles(boundary, white_);
      const int want = info_.signed_domain ? 2 * id_.p : id_.p;
      if (black != want) return std::nullopt;
    }
    return witnesses;
  }

  const GroundSet& domain() const { return domain_; }
  const TagInfo& tag_info() const { return info_; }

 private:
  NCFamilyId id_;
  TagInfo info_;
  GroundSet domain_ = GroundSet::unsigned_set(1);
  Permutation base_{GroundSet::unsigned_set(1)};
  std::vector<AnnularFrame> frames_;
  std::vector<int> black_;
  std::vector<int> white_;
  Permutation boundary_frame_{GroundSet::unsigned_set(1)};
};

template <class Stream, class MakeStream>
NCFamily collect(const NCFamilyId& id, const Membership& m, std::uint64_t raw_total,
                 const EnumerationBudget& budget, MakeStream make) {
  const std::uint64_t limit = admit(raw_total, budget, info(id.tag).name);
  const std::size_t slices = default_slice_count(limit);
  using Entry = std::pair<Permutation, std::vector<Witness>>;
  std::vector<std::vector<Entry>> parts(slices);
  parallel_slices(limit, slices, [&](std::size_t k, Slice s) {
    Stream stream = make(s);
    while (auto x = stream.next()) {
      const Permutation& p = *x;
      if (auto w = m.test(p)) parts[k].emplace_back(p, std::move(*w));
    }
  });
  NCFamily out{id, {}, {}, limit < raw_total};
  for (auto& part : parts) {
    for (auto& [p, w] : part) {
      out.members.push_back(p);
      if (info(id.tag).union_family) out.witnesses.emplace(p, std::move(w));
    }
  }
  canonicalize(out.members);
  return out;
}

}  // namespace

std::string to_string(NCTag tag) { return info(tag).name; }

std::optional<NCTag> nc_tag_from_string(const std::string& s) {
  for (const auto& t : kTags) {
    if (s == t.name) return t.tag;
  }
  return std::nullopt;
}

bool is_graded(NCTag tag) noexcept { return info(tag).graded; }
bool is_union(NCTag tag) noexcept { return info(tag).union_family; }
bool acts_on_signed(NCTag tag) noexcept { return info(tag).signed_domain; }

AnnularFrame base_frame(NCTag tag, int n) {
  switch (tag) {
    case NCTag::NC:
    case NCTag::NC2:
      return disk_frame(n);
    case NCTag::NCdelta:
    case NCTag::NC2delta:
    case NCTag::NC2delta_bip:
    case NCTag::NCdelta_p:
      return annulus_frame(n);
    default:
      throw InvalidArgument(to_string(tag) + " is a union over frames");
  }
}

std::optional<std::vector<Witness>> nc_membership(const NCFamilyId& id, const Permutation& pi) {
  return Membership(id).test(pi);
}

NCFamily family_nc(const NCFamilyId& id, const EnumerationBudget& budget) {
  const Membership m(id);
  const GroundSet dom = m.domain();
  if (m.tag_info().pairing) {
    if (dom.size() % 2) return NCFamily{id, {}, {}, false};  // no pairings of an odd set
    return collect<PairingStream>(id, m, PairingStream::total(dom), budget,
                                  [&](Slice s) { return PairingStream(dom, s); });
  }
  return collect<PermutationStream>(id, m, PermutationStream::total(dom), budget,
                                    [&](Slice s) { return PermutationStream(dom, s); });
}

}  // namespace annular
