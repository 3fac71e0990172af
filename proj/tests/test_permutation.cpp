#include <catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <random>

#include "annular/errors.hpp"
#include "annular/permutation.hpp"
#include "bridge.hpp"

using namespace annular;

namespace {

Permutation random_permutation(GroundSet dom, std::mt19937_64& rng) {
  std::vector<int> image(static_cast<std::size_t>(dom.size()));
  std::iota(image.begin(), image.end(), 0);
  std::shuffle(image.begin(), image.end(), rng);
  return Permutation::from_indices(dom, image);
}

}  // namespace

TEST_CASE("signed ground set indexes negatives first") {
  const GroundSet s = GroundSet::signed_set(3);
  CHECK(s.size() == 6);
  CHECK(s.labels() == std::vector<int>{-3, -2, -1, 1, 2, 3});
  for (int l : s.labels()) CHECK(s.index_of(-l) == s.size() - 1 - s.index_of(l));
  CHECK_FALSE(s.contains(0));
  CHECK_THROWS_AS(s.index_of(4), InvalidArgument);

  const GroundSet u = GroundSet::unsigned_set(4);
  CHECK(u.labels() == std::vector<int>{1, 2, 3, 4});
  CHECK_FALSE(u.contains(-1));
  CHECK(u != GroundSet::signed_set(4));
}

TEST_CASE("cycle printer omits fixed points and starts cycles at their minimum") {
  const GroundSet d = GroundSet::unsigned_set(6);
  const Permutation p = Permutation::from_cycles(d, {{5, 6, 4}, {3, 1}});
  CHECK(to_cycle_string(p) == "(1,3)(4,5,6)");
  CHECK(to_cycle_string(Permutation(d)) == "");
  CHECK(p.cycles().size() == 3);  // the fixed point 2 included

  const GroundSet s = GroundSet::signed_set(3);
  const Permutation t = Permutation::from_cycles(s, {{1, -2}, {2, -1}});
  CHECK(to_cycle_string(t) == "(-2,1)(-1,2)");
}

TEST_CASE("parser accepts whitespace and rejects malformed input") {
  const GroundSet d = GroundSet::unsigned_set(4);
  CHECK(parse_cycles(" ( 1 , 3 ) (2,4) ", d) == Permutation::from_cycles(d, {{1, 3}, {2, 4}}));
  CHECK(parse_cycles("", d).is_identity());
  CHECK_THROWS_AS(parse_cycles("(1,2", d), ParseError);
  CHECK_THROWS_AS(parse_cycles("(1,2)(2,3)", d), ParseError);
  CHECK_THROWS_AS(parse_cycles("(1,5)", d), ParseError);
  CHECK_THROWS_AS(parse_cycles("(0,1)", d), ParseError);
  CHECK_THROWS_AS(parse_cycles("(1,x)", d), ParseError);
  CHECK_THROWS_AS(parse_cycles("(-1,2)", d), ParseError);
  CHECK_THROWS_AS(parse_cycles("1,2", d), ParseError);
  CHECK(parse_cycles("(-1,2)", GroundSet::signed_set(2))(-1) == 2);
}

TEST_CASE("composition applies the right factor first") {
  const GroundSet d = GroundSet::unsigned_set(3);
  const Permutation p = Permutation::from_cycles(d, {{1, 2}});
  const Permutation q = Permutation::from_cycles(d, {{2, 3}});
  const Permutation pq = compose(p, q);
  CHECK(pq(2) == 3);
  CHECK(pq(3) == 1);
  CHECK(pq(1) == 2);
  CHECK_THROWS_AS(compose(p, Permutation(GroundSet::unsigned_set(4))), DomainMismatch);
}

TEST_CASE("constructors validate their input") {
  const GroundSet d = GroundSet::unsigned_set(3);
  CHECK_THROWS_AS(Permutation::from_indices(d, {0, 0, 1}), InvalidArgument);
  CHECK_THROWS_AS(Permutation::from_indices(d, {0, 1}), InvalidArgument);
  CHECK_THROWS_AS(Pairing(Permutation::from_cycles(d, {{1, 2}})), InvalidArgument);
  CHECK_THROWS_AS(Pairing(Permutation::from_cycles(d, {{1, 2, 3}})), InvalidArgument);
  const GroundSet e = GroundSet::unsigned_set(4);
  CHECK(Pairing::satisfies(Permutation::from_cycles(e, {{1, 4}, {2, 3}})));
}

TEST_CASE("restriction to invariant subsets") {
  const GroundSet d = GroundSet::unsigned_set(5);
  const Permutation p = Permutation::from_cycles(d, {{1, 3}, {2, 5, 4}});
  const std::vector<int> ok{2, 4, 5};
  const InducedPermutation r = restrict_to(p, ok);
  CHECK(r.num_cycles() == 1);
  CHECK(r.cycles() == std::vector<std::vector<int>>{{2, 5, 4}});
  const std::vector<int> bad{1, 2};
  CHECK_THROWS_AS(restrict_to(p, bad), InvalidArgument);
}

TEST_CASE("join block count") {
  const GroundSet d = GroundSet::unsigned_set(4);
  const Permutation a = Permutation::from_cycles(d, {{1, 2}});
  const Permutation b = Permutation::from_cycles(d, {{3, 4}});
  CHECK(join_block_count(a, b) == 2);
  CHECK_FALSE(is_jointly_transitive(a, b));
  const Permutation c = Permutation::from_cycles(d, {{2, 3}});
  CHECK(join_block_count(compose(a, b), c) == 1);
}

TEST_CASE("random permutations agree with the map-based oracle") {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 300; ++trial) {
    const GroundSet d = trial % 2 ? GroundSet::signed_set(1 + trial % 5)
                                  : GroundSet::unsigned_set(1 + trial % 9);
    const Permutation p = random_permutation(d, rng);
    const Permutation q = random_permutation(d, rng);
    const oracle::Perm op = bridge::to_oracle(p);
    const oracle::Perm oq = bridge::to_oracle(q);

    CHECK(bridge::to_oracle(compose(p, q)) == oracle::compose(op, oq));
    CHECK(bridge::to_oracle(inverse(p)) == oracle::inverse(op));
    CHECK(num_cycles(p) == oracle::cycles(op));
    CHECK(compose(p, inverse(p)).is_identity());
    CHECK(parse_cycles(to_cycle_string(p), d) == p);
    CHECK(conjugate(p, q) == compose(compose(q, p), inverse(q)));
    CHECK(num_cycles(conjugate(p, q)) == num_cycles(p));

    std::size_t total = 0;
    for (const auto& c : p.cycles()) {
      total += c.size();
      CHECK(c.front() == *std::min_element(c.begin(), c.end()));
    }
    CHECK(total == static_cast<std::size_t>(d.size()));
  }
}
