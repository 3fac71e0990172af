#include "annular/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

#include "annular/errors.hpp"

namespace annular {

GroundSet GroundSet::unsigned_set(int n) {
  if (n < 1) throw InvalidArgument("ground set size must be positive, got " + std::to_string(n));
  return GroundSet(DomainKind::Unsigned, n);
}

GroundSet GroundSet::signed_set(int n) {
  if (n < 1) throw InvalidArgument("ground set size must be positive, got " + std::to_string(n));
  return GroundSet(DomainKind::Signed, n);
}

bool GroundSet::contains(int label) const noexcept {
  if (kind_ == DomainKind::Unsigned) return label >= 1 && label <= n_;
  return label != 0 && label >= -n_ && label <= n_;
}

int GroundSet::index_of(int label) const {
  if (!contains(label)) {
    throw InvalidArgument("label " + std::to_string(label) + " not in " + describe());
  }
  if (kind_ == DomainKind::Unsigned) return label - 1;
  return label < 0 ? label + n_ : label + n_ - 1;
}

int GroundSet::label_at(int index) const {
  if (index < 0 || index >= size()) {
    throw InvalidArgument("index " + std::to_string(index) + " out of range for " + describe());
  }
  if (kind_ == DomainKind::Unsigned) return index + 1;
  return index < n_ ? index - n_ : index - n_ + 1;
}

std::vector<int> GroundSet::labels() const {
  std::vector<int> out(static_cast<std::size_t>(size()));
  for (int i = 0; i < size(); ++i) out[static_cast<std::size_t>(i)] = label_at(i);
  return out;
}

std::string GroundSet::describe() const {
  return (kind_ == DomainKind::Signed ? "+-[" : "[") + std::to_string(n_) + "]";
}

Permutation::Permutation(GroundSet domain) : domain_(domain) {
  image_.resize(static_cast<std::size_t>(domain.size()));
  std::iota(image_.begin(), image_.end(), 0);
}

Permutation Permutation::from_indices(GroundSet domain, std::vector<int> image) {
  const int sz = domain.size();
  if (static_cast<int>(image.size()) != sz) {
    throw InvalidArgument("image table has wrong length for " + domain.describe());
  }
  std::vector<char> hit(image.size(), 0);
  for (int v : image) {
    if (v < 0 || v >= sz || hit[static_cast<std::size_t>(v)]) {
      throw InvalidArgument("image table is not a bijection on " + domain.describe());
    }
    hit[static_cast<std::size_t>(v)] = 1;
  }
  return Permutation(domain, std::move(image));
}

Permutation Permutation::from_label_images(GroundSet domain, std::span<const int> image_labels) {
  std::vector<int> image;
  image.reserve(image_labels.size());
  for (int l : image_labels) image.push_back(domain.index_of(l));
  return from_indices(domain, std::move(image));
}

Permutation Permutation::from_cycles(GroundSet domain,
                                     const std::vector<std::vector<int>>& cycles) {
  std::vector<int> image(static_cast<std::size_t>(domain.size()));
  std::iota(image.begin(), image.end(), 0);
  std::vector<char> seen(image.size(), 0);
  for (const auto& cyc : cycles) {
    if (cyc.empty()) throw InvalidArgument("empty cycle");
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      const int a = domain.index_of(cyc[i]);
      if (seen[static_cast<std::size_t>(a)]) {
        throw InvalidArgument("label " + std::to_string(cyc[i]) + " repeated in cycles");
      }
      seen[static_cast<std::size_t>(a)] = 1;
      image[static_cast<std::size_t>(a)] = domain.index_of(cyc[(i + 1) % cyc.size()]);
    }
  }
  return Permutation(domain, std::move(image));
}

Permutation Permutation::from_cycles(GroundSet domain,
                                     std::initializer_list<std::initializer_list<int>> cycles) {
  std::vector<std::vector<int>> cs;
  cs.reserve(cycles.size());
  for (const auto& c : cycles) cs.emplace_back(c);
  return from_cycles(domain, cs);
}

int Permutation::operator()(int label) const {
  return domain_.label_at(image_[static_cast<std::size_t>(domain_.index_of(label))]);
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (image_[i] != static_cast<int>(i)) return false;
  }
  return true;
}

bool Permutation::has_fixed_point() const noexcept {
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (image_[i] == static_cast<int>(i)) return true;
  }
  return false;
}

bool Permutation::is_involution() const noexcept {
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (image_[static_cast<std::size_t>(image_[i])] != static_cast<int>(i)) return false;
  }
  return true;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  // Index order is label order, so scanning indices upward visits each
  // cycle first at its minimal label and emits cycles already sorted.
  std::vector<std::vector<int>> out;
  std::vector<char> seen(image_.size(), 0);
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (seen[i]) continue;
    std::vector<int> cyc;
    for (auto j = i; !seen[j]; j = static_cast<std::size_t>(image_[j])) {
      seen[j] = 1;
      cyc.push_back(domain_.label_at(static_cast<int>(j)));
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

Pairing::Pairing(Permutation p) : perm_(std::move(p)) {
  if (!satisfies(perm_)) {
    throw InvalidArgument("not a fixed-point-free involution: " + to_cycle_string(perm_));
  }
}

bool Pairing::satisfies(const Permutation& p) noexcept {
  return !p.has_fixed_point() && p.is_involution();
}

int InducedPermutation::num_cycles() const { return static_cast<int>(cycles().size()); }

std::vector<std::vector<int>> InducedPermutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(support.size(), 0);
  auto pos = [&](int label) {
    return static_cast<std::size_t>(std::lower_bound(support.begin(), support.end(), label) -
                                    support.begin());
  };
  for (std::size_t i = 0; i < support.size(); ++i) {
    if (seen[i]) continue;
    std::vector<int> cyc;
    for (auto j = i; !seen[j]; j = pos(image[j])) {
      seen[j] = 1;
      cyc.push_back(support[j]);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

namespace {

void require_same_domain(const Permutation& p, const Permutation& q) {
  if (p.domain() != q.domain()) {
    throw DomainMismatch("permutations on " + p.domain().describe() + " and " +
                         q.domain().describe());
  }
}

// Minimal union-find over indices.
class Dsu {
 public:
  explicit Dsu(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      auto& px = parent_[static_cast<std::size_t>(x)];
      px = parent_[static_cast<std::size_t>(px)];
      x = px;
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[static_cast<std::size_t>(a)] = b;
    return true;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

Permutation compose(const Permutation& p, const Permutation& q) {
  require_same_domain(p, q);
  std::vector<int> image(static_cast<std::size_t>(p.size()));
  for (int i = 0; i < p.size(); ++i) {
    image[static_cast<std::size_t>(i)] = p.image_index(q.image_index(i));
  }
  return Permutation::from_indices(p.domain(), std::move(image));
}

Permutation inverse(const Permutation& p) {
  std::vector<int> image(static_cast<std::size_t>(p.size()));
  for (int i = 0; i < p.size(); ++i) image[static_cast<std::size_t>(p.image_index(i))] = i;
  return Permutation::from_indices(p.domain(), std::move(image));
}

int num_cycles(const Permutation& p) {
  std::vector<char> seen(static_cast<std::size_t>(p.size()), 0);
  int count = 0;
  for (int i = 0; i < p.size(); ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    ++count;
    for (int j = i; !seen[static_cast<std::size_t>(j)]; j = p.image_index(j)) {
      seen[static_cast<std::size_t>(j)] = 1;
    }
  }
  return count;
}

Permutation conjugate(const Permutation& p, const Permutation& q) {
  return compose(compose(q, p), inverse(q));
}

InducedPermutation restrict_to(const Permutation& p, std::span<const int> subset) {
  InducedPermutation out;
  out.support.assign(subset.begin(), subset.end());
  std::sort(out.support.begin(), out.support.end());
  if (std::adjacent_find(out.support.begin(), out.support.end()) != out.support.end()) {
    throw InvalidArgument("restriction subset has repeated labels");
  }
  out.image.reserve(out.support.size());
  for (int x : out.support) {
    const int y = p(x);
    if (!std::binary_search(out.support.begin(), out.support.end(), y)) {
      throw InvalidArgument("subset is not invariant: " + std::to_string(x) + " -> " +
                            std::to_string(y) + " under " + to_cycle_string(p));
    }
    out.image.push_back(y);
  }
  return out;
}

int join_block_count(const Permutation& p, const Permutation& q) {
  require_same_domain(p, q);
  Dsu dsu(p.size());
  int blocks = p.size();
  for (int i = 0; i < p.size(); ++i) {
    if (dsu.unite(i, p.image_index(i))) --blocks;
    if (dsu.unite(i, q.image_index(i))) --blocks;
  }
  return blocks;
}

bool is_jointly_transitive(const Permutation& p, const Permutation& q) {
  return join_block_count(p, q) == 1;
}

Permutation parse_cycles(std::string_view text, GroundSet domain) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& what) -> ParseError {
    return ParseError(what + " at offset " + std::to_string(pos) + " in \"" +
                      std::string(text) + "\"");
  };

  std::vector<std::vector<int>> cycles;
  std::vector<char> seen(static_cast<std::size_t>(domain.size()), 0);
  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(') throw fail("expected '('");
    ++pos;
    std::vector<int> cyc;
    while (true) {
      skip_ws();
      int value = 0;
      const char* first = text.data() + pos;
      const char* last = text.data() + text.size();
      auto [ptr, ec] = std::from_chars(first, last, value);
      if (ec != std::errc() || ptr == first) throw fail("expected integer");
      if (value == 0) throw fail("label 0 is not allowed");
      if (!domain.contains(value)) {
        throw fail("label " + std::to_string(value) + " outside " + domain.describe());
      }
      auto& s = seen[static_cast<std::size_t>(domain.index_of(value))];
      if (s) throw fail("repeated label " + std::to_string(value));
      s = 1;
      cyc.push_back(value);
      pos = static_cast<std::size_t>(ptr - text.data());
      skip_ws();
      if (pos >= text.size()) throw fail("unterminated cycle");
      if (text[pos] == ',') {
        ++pos;
        continue;
      }
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      throw fail("expected ',' or ')'");
    }
    cycles.push_back(std::move(cyc));
    skip_ws();
  }
  return Permutation::from_cycles(domain, cycles);
}

std::string to_cycle_string(const Permutation& p) {
  std::string out;
  for (const auto& cyc : p.cycles()) {
    if (cyc.size() == 1) continue;
    out += '(';
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(cyc[i]);
    }
    out += ')';
  }
  return out;
}

}  // namespace annular
