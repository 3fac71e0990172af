#include <catch_amalgamated.hpp>

#include <cstdlib>
#include <set>

#include "annular/enumerate.hpp"
#include "annular/errors.hpp"
#include "annular/parallel.hpp"
#include "bridge.hpp"

using namespace annular;

TEST_CASE("raw space sizes") {
  for (int points = 2; points <= 16; points += 2) {
    CHECK(count_pairings(points) == oracle::double_factorial_odd(points));
  }
  CHECK_THROWS_AS(count_pairings(3), InvalidArgument);
  CHECK_THROWS_AS(signed_symmetric_pairings(3), InvalidArgument);
  CHECK(count_permutations(9) == 362880);
  CHECK(count_signed_symmetric_pairings(4) == 3 * 4);
  CHECK(count_signed_symmetric_pairings(6) == 15 * 8);
  CHECK(count_pairings(200) == UINT64_MAX);
}

TEST_CASE("pairing stream matches the recursive oracle") {
  for (int n = 2; n <= 10; n += 2) {
    const auto got = pairings(n);
    std::set<oracle::Perm> mine;
    for (const auto& p : got) mine.insert(bridge::to_oracle(p));
    const auto want = oracle::pairings(oracle::unsigned_labels(n));
    CHECK(got.size() == want.size());
    CHECK(mine == std::set<oracle::Perm>(want.begin(), want.end()));
  }
}

TEST_CASE("slices partition a stream in order") {
  const GroundSet d = GroundSet::unsigned_set(8);
  const auto whole = pairings_of(d);
  std::vector<Pairing> joined;
  const std::uint64_t total = PairingStream::total(d);
  for (std::size_t k = 0; k < 7; ++k) {
    PairingStream s(d, slice_of(total, k, 7));
    while (auto x = s.next()) joined.push_back(*x);
  }
  CHECK(joined == whole);

  const auto perms = permutations(5);
  std::vector<Permutation> pj;
  for (std::size_t k = 0; k < 4; ++k) {
    PermutationStream s(GroundSet::unsigned_set(5), slice_of(120, k, 4));
    while (auto x = s.next()) pj.push_back(*x);
  }
  CHECK(pj == perms);
  CHECK(std::set<Permutation>(perms.begin(), perms.end()).size() == 120);
}

TEST_CASE("signed symmetric pairings: constructive stream equals brute-force filter") {
  for (int n = 2; n <= 6; n += 2) {
    std::set<oracle::Perm> want;
    for (const auto& p : oracle::pairings(oracle::signed_labels(n))) {
      if (oracle::signed_symmetric_pairing(p, n)) want.insert(p);
    }
    const auto got = signed_symmetric_pairings(n);
    std::set<oracle::Perm> mine;
    for (const auto& p : got) mine.insert(bridge::to_oracle(p));
    CHECK(got.size() == want.size());
    CHECK(mine == want);
  }
}

TEST_CASE("signed symmetric permutations: filter matches its definition") {
  for (int n = 1; n <= 3; ++n) {
    const oracle::Perm t0 = oracle::tau0(n);
    std::set<oracle::Perm> want;
    for (const auto& p : oracle::permutations(oracle::signed_labels(n))) {
      bool fpf = true;
      for (int a : oracle::signed_labels(n)) fpf = fpf && oracle::compose(t0, p).at(a) != a;
      if (fpf && oracle::compose(oracle::compose(t0, p), t0) == oracle::inverse(p)) {
        want.insert(p);
      }
    }
    const auto got = signed_symmetric_permutations(n);
    std::set<oracle::Perm> mine;
    for (const auto& p : got) mine.insert(bridge::to_oracle(p));
    CHECK(mine == want);
  }
}

TEST_CASE("default budget admits 16 points and 9! and rejects the next size") {
  const EnumerationBudget b;
  CHECK(admit(count_pairings(16), b, "test") == count_pairings(16));
  CHECK_THROWS_AS(admit(count_pairings(18), b, "test"), CapExceeded);
  CHECK(admit(count_permutations(9), b, "test") == count_permutations(9));
  CHECK_THROWS_AS(admit(count_permutations(10), b, "test"), CapExceeded);
  CHECK_THROWS_AS(pairings(18), CapExceeded);
}

TEST_CASE("truncation yields a prefix and reports it") {
  EnumerationBudget b;
  b.max_elements = 10;
  b.on_overflow = OverflowPolicy::Truncate;
  EnumerationOutcome out;
  const auto got = pairings(6, b, &out);
  CHECK(out.truncated);
  CHECK(out.yielded == 10);
  const auto all = pairings(6);
  CHECK(std::vector<Pairing>(all.begin(), all.begin() + 10) == got);

  b.on_overflow = OverflowPolicy::Error;
  CHECK_THROWS_AS(pairings(6, b), CapExceeded);
}

TEST_CASE("budget reads ANNULAR_MAX_ELEMENTS") {
  ::setenv("ANNULAR_MAX_ELEMENTS", "1234", 1);
  CHECK(EnumerationBudget::from_environment().max_elements == 1234);
  ::setenv("ANNULAR_MAX_ELEMENTS", "garbage", 1);
  CHECK(EnumerationBudget::from_environment().max_elements ==
        EnumerationBudget::kDefaultMaxElements);
  ::unsetenv("ANNULAR_MAX_ELEMENTS");
  CHECK(EnumerationBudget::from_environment().max_elements ==
        EnumerationBudget::kDefaultMaxElements);
}
