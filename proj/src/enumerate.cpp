#include "annular/enumerate.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <mutex>
#include <numeric>
#include <string>

namespace annular {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t mul_sat(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

std::mutex g_budget_mu;
std::optional<EnumerationBudget> g_budget;

void require_even(int points, const char* what) {
  if (points <= 0 || points % 2 != 0) {
    throw InvalidArgument(std::string(what) + " needs an even positive size, got " +
                          std::to_string(points));
  }
}

}  // namespace

EnumerationBudget EnumerationBudget::from_environment() {
  EnumerationBudget b;
  if (const char* env = std::getenv("ANNULAR_MAX_ELEMENTS")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) b.max_elements = v;
  }
  return b;
}

const EnumerationBudget& default_budget() {
  std::lock_guard lock(g_budget_mu);
  if (!g_budget) g_budget = EnumerationBudget::from_environment();
  return *g_budget;
}

void set_default_budget(const EnumerationBudget& budget) {
  if (budget.max_elements == 0) throw InvalidArgument("max_elements must be positive");
  std::lock_guard lock(g_budget_mu);
  g_budget = budget;
}

std::uint64_t count_pairings(int points) {
  require_even(points, "pairing count");
  std::uint64_t r = 1;
  for (int k = points - 1; k > 1; k -= 2) r = mul_sat(r, static_cast<std::uint64_t>(k));
  return r;
}

std::uint64_t count_signed_symmetric_pairings(int n) {
  std::uint64_t r = count_pairings(n);
  for (int i = 0; i < n / 2; ++i) r = mul_sat(r, 2);
  return r;
}

std::uint64_t count_permutations(int points) {
  if (points < 1) throw InvalidArgument("permutation count needs a positive size");
  std::uint64_t r = 1;
  for (int k = 2; k <= points; ++k) r = mul_sat(r, static_cast<std::uint64_t>(k));
  return r;
}

std::uint64_t admit(std::uint64_t raw_total, const EnumerationBudget& budget, const char* what) {
  if (raw_total <= budget.max_elements) return raw_total;
  if (budget.on_overflow == OverflowPolicy::Error) {
    throw CapExceeded(std::string(what) + ": search space of " +
                      (raw_total == kSaturated ? std::string("> 2^64")
                                               : std::to_string(raw_total)) +
                      " elements exceeds max_elements=" + std::to_string(budget.max_elements));
  }
  return budget.max_elements;
}

// PairingStream

PairingStream::PairingStream(GroundSet domain)
    : PairingStream(domain, Slice{0, count_pairings(domain.size())}) {}

PairingStream::PairingStream(GroundSet domain, Slice slice)
    : domain_(domain), remaining_(slice.size()) {
  require_even(domain.size(), "pairings");
  const int half = domain.size() / 2;
  if (slice.begin > slice.end || slice.end > total(domain)) {
    throw InvalidArgument("pairing slice out of range");
  }
  // Mixed radix unranking, last digit least significant.
  digits_.assign(static_cast<std::size_t>(half), 0);
  std::uint64_t r = slice.begin;
  for (int i = half - 1; i >= 0; --i) {
    const auto radix = static_cast<std::uint64_t>(domain.size() - 1 - 2 * i);
    digits_[static_cast<std::size_t>(i)] = static_cast<int>(r % radix);
    r /= radix;
  }
  image_.resize(static_cast<std::size_t>(domain.size()));
}

void PairingStream::build() {
  std::vector<int> free(static_cast<std::size_t>(domain_.size()));
  std::iota(free.begin(), free.end(), 0);
  for (int d : digits_) {
    const int a = free[0];
    const int b = free[static_cast<std::size_t>(1 + d)];
    image_[static_cast<std::size_t>(a)] = b;
    image_[static_cast<std::size_t>(b)] = a;
    free.erase(free.begin() + 1 + d);
    free.erase(free.begin());
  }
}

std::optional<Pairing> PairingStream::next() {
  if (remaining_ == 0) return std::nullopt;
  --remaining_;
  build();
  Pairing out(Permutation::from_indices(domain_, image_));
  for (int i = static_cast<int>(digits_.size()) - 1; i >= 0; --i) {
    const int radix = domain_.size() - 1 - 2 * i;
    if (++digits_[static_cast<std::size_t>(i)] < radix) break;
    digits_[static_cast<std::size_t>(i)] = 0;
  }
  return out;
}

// SignedSymmetricPairingStream

SignedSymmetricPairingStream::SignedSymmetricPairingStream(int n)
    : SignedSymmetricPairingStream(n, Slice{0, count_signed_symmetric_pairings(n)}) {}

SignedSymmetricPairingStream::SignedSymmetricPairingStream(int n, Slice slice)
    : n_(n),
      base_(GroundSet::unsigned_set(std::max(n, 2)),
            Slice{slice.begin >> (n / 2), count_pairings(n)}),
      bit_limit_(1u << (n / 2)),
      remaining_(slice.size()) {
  require_even(n, "signed symmetric pairings");
  if (n > 62) throw InvalidArgument("signed symmetric pairings: n too large");
  if (slice.begin > slice.end || slice.end > total(n)) {
    throw InvalidArgument("signed symmetric pairing slice out of range");
  }
  bits_ = static_cast<std::uint32_t>(slice.begin & (bit_limit_ - 1));
  if (remaining_ > 0) current_ = base_.next();
}

std::optional<Pairing> SignedSymmetricPairingStream::next() {
  if (remaining_ == 0 || !current_) return std::nullopt;
  --remaining_;
  const GroundSet dom = GroundSet::signed_set(n_);
  const int half = n_ / 2;
  std::vector<int> image(static_cast<std::size_t>(dom.size()));
  int pair_no = 0;
  for (int u = 1; u <= n_; ++u) {
    const int v = (*current_)(u);
    if (v < u) continue;
    const bool twisted = (bits_ >> (half - 1 - pair_no)) & 1u;
    ++pair_no;
    auto link = [&](int a, int b) {
      image[static_cast<std::size_t>(dom.index_of(a))] = dom.index_of(b);
      image[static_cast<std::size_t>(dom.index_of(b))] = dom.index_of(a);
    };
    if (twisted) {
      link(u, v);
      link(-u, -v);
    } else {
      link(u, -v);
      link(-u, v);
    }
  }
  Pairing out(Permutation::from_indices(dom, std::move(image)));
  if (++bits_ == bit_limit_) {
    bits_ = 0;
    current_ = base_.next();
  }
  return out;
}

// PermutationStream

PermutationStream::PermutationStream(GroundSet domain)
    : PermutationStream(domain, Slice{0, count_permutations(domain.size())}) {}

PermutationStream::PermutationStream(GroundSet domain, Slice slice)
    : domain_(domain), remaining_(slice.size()) {
  if (slice.begin > slice.end || slice.end > total(domain)) {
    throw InvalidArgument("permutation slice out of range");
  }
  // Lehmer code unranking.
  const int m = domain.size();
  std::vector<int> pool(static_cast<std::size_t>(m));
  std::iota(pool.begin(), pool.end(), 0);
  std::uint64_t r = slice.begin;
  for (int i = 0; i < m; ++i) {
    const std::uint64_t f = count_permutations(std::max(1, m - 1 - i));
    const auto q = static_cast<std::size_t>(m - 1 - i == 0 ? 0 : r / f);
    if (m - 1 - i > 0) r %= f;
    image_.push_back(pool[q]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(q));
  }
}

std::optional<Permutation> PermutationStream::next() {
  if (remaining_ == 0) return std::nullopt;
  --remaining_;
  Permutation out = Permutation::from_indices(domain_, image_);
  std::next_permutation(image_.begin(), image_.end());
  return out;
}

// SignedSymmetricPermutationStream

SignedSymmetricPermutationStream::SignedSymmetricPermutationStream(int n)
    : raw_(GroundSet::signed_set(n)) {}

SignedSymmetricPermutationStream::SignedSymmetricPermutationStream(int n, Slice slice)
    : raw_(GroundSet::signed_set(n), slice) {}

bool SignedSymmetricPermutationStream::admits(const Permutation& t1) {
  if (!t1.domain().is_signed()) return false;
  // index_of(-l) = size-1-index_of(l), so t0 acts on indices as i -> m-i.
  const int m = t1.size() - 1;
  for (int i = 0; i < t1.size(); ++i) {
    const int t0t1 = m - t1.image_index(i);
    if (t0t1 == i) return false;
    if (m - t1.image_index(t0t1) != i) return false;  // (t0 t1)^2 = id
  }
  return true;
}

std::optional<Permutation> SignedSymmetricPermutationStream::next() {
  while (auto p = raw_.next()) {
    if (admits(*p)) return p;
  }
  return std::nullopt;
}

// Materializers

std::vector<Pairing> pairings(int n, const EnumerationBudget& budget,
                              EnumerationOutcome* outcome) {
  require_even(n, "pairings");
  return pairings_of(GroundSet::unsigned_set(n), budget, outcome);
}

std::vector<Pairing> pairings_of(GroundSet domain, const EnumerationBudget& budget,
                                 EnumerationOutcome* outcome) {
  require_even(domain.size(), "pairings");
  std::vector<Pairing> out;
  PairingStream s(domain);
  auto o = drain(s, PairingStream::total(domain), budget, "pairings",
                 [&](const Pairing& p) { out.push_back(p); });
  if (outcome) *outcome = o;
  return out;
}

std::vector<Pairing> signed_symmetric_pairings(int n, const EnumerationBudget& budget,
                                               EnumerationOutcome* outcome) {
  require_even(n, "signed symmetric pairings");
  std::vector<Pairing> out;
  SignedSymmetricPairingStream s(n);
  auto o = drain(s, SignedSymmetricPairingStream::total(n), budget, "signed symmetric pairings",
                 [&](const Pairing& p) { out.push_back(p); });
  if (outcome) *outcome = o;
  return out;
}

std::vector<Permutation> permutations(int n, const EnumerationBudget& budget,
                                      EnumerationOutcome* outcome) {
  return permutations_of(GroundSet::unsigned_set(n), budget, outcome);
}

std::vector<Permutation> permutations_of(GroundSet domain, const EnumerationBudget& budget,
                                         EnumerationOutcome* outcome) {
  std::vector<Permutation> out;
  PermutationStream s(domain);
  auto o = drain(s, PermutationStream::total(domain), budget, "permutations",
                 [&](const Permutation& p) { out.push_back(p); });
  if (outcome) *outcome = o;
  return out;
}

std::vector<Permutation> signed_symmetric_permutations(int n, const EnumerationBudget& budget,
                                                       EnumerationOutcome* outcome) {
  std::vector<Permutation> out;
  SignedSymmetricPermutationStream s(n);
  auto o = drain(s, SignedSymmetricPermutationStream::raw_total(n), budget,
                 "signed symmetric permutations",
                 [&](const Permutation& p) { out.push_back(p); });
  if (outcome) *outcome = o;
  return out;
}

}  // namespace annular
