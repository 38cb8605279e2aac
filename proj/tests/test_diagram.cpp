#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "tl/diagram.hpp"

using namespace tl;

namespace {

Diagram D(int top, int bot, std::vector<int> match) {
  Diagram d;
  d.top = top;
  d.bot = bot;
  d.match = std::move(match);
  return d;
}

Diagram random_diagram(int m, int n, Rng& rng) {
  const HomBasis& basis = hom_basis(m, n);
  return basis.diagram(static_cast<uint32_t>(rng.below(basis.size())));
}

}  // namespace

TEST_SUITE_BEGIN("diagram");

TEST_CASE("basic diagrams") {
  CHECK(identity_diagram(3) == D(3, 3, {3, 4, 5, 0, 1, 2}));
  CHECK(generator_diagram(1, 2) == D(2, 2, {1, 0, 3, 2}));
  CHECK(cap_diagram() == D(0, 2, {1, 0}));
  CHECK(cup_diagram() == D(2, 0, {1, 0}));
  CHECK_THROWS_AS(generator_diagram(0, 2), Error);
  CHECK_THROWS_AS(generator_diagram(2, 2), Error);
  CHECK(is_valid_diagram(identity_diagram(5)));
  CHECK(is_valid_diagram(generator_diagram(3, 6)));
}

TEST_CASE("validation rejects crossings and bad involutions") {
  // The crossing pairing on (2,2): top0-bot1, top1-bot0.
  CHECK_FALSE(is_valid_diagram(D(2, 2, {3, 2, 1, 0})));
  CHECK_FALSE(is_valid_diagram(D(2, 2, {0, 1, 2, 3})));  // fixed points
  CHECK_FALSE(is_valid_diagram(D(1, 2, {1, 0, 0})));     // not an involution
  CHECK_FALSE(is_valid_diagram(D(1, 0, {0})));           // odd point count
  CHECK(is_valid_diagram(D(2, 2, {1, 0, 3, 2})));
  CHECK(is_valid_diagram(D(0, 0, {})));
}

TEST_CASE("enumeration matches the brute-force oracle") {
  for (int m = 0; m <= 4; ++m) {
    for (int n = 0; n <= 4; ++n) {
      auto diagrams = enumerate_diagrams(m, n);
      auto expected = oracle::noncrossing_pairings_brute(m, n);
      CHECK(diagrams.size() == expected.size());
      std::set<std::vector<int>> got, want;
      for (const auto& d : diagrams) {
        CHECK(is_valid_diagram(d));
        got.insert(d.match);
      }
      for (const auto& match : expected) want.insert(match);
      CHECK(got == want);
      // deterministic lexicographic order
      for (size_t i = 1; i < diagrams.size(); ++i)
        CHECK(diagrams[i - 1].match < diagrams[i].match);
    }
  }
}

TEST_CASE("dimension counts") {
  CHECK(enumerate_diagrams(1, 1).size() == 1);
  CHECK(enumerate_diagrams(3, 3).size() == 5);
  CHECK(enumerate_diagrams(2, 3).size() == 0);
  const std::uint64_t expected[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430};
  for (int n = 0; n <= 8; ++n) {
    CHECK(catalan(n) == expected[n]);
    CHECK(enumerate_diagrams(n, n).size() == expected[n]);
  }
}

TEST_CASE("composition closes a circle") {
  auto [d, loops] = compose_diagrams(cup_diagram(), cap_diagram());
  CHECK(d == D(0, 0, {}));
  CHECK(loops == 1);
}

TEST_CASE("generator relation e o e = loop * e") {
  auto [d, loops] = compose_diagrams(generator_diagram(1, 2), generator_diagram(1, 2));
  CHECK(d == generator_diagram(1, 2));
  CHECK(loops == 1);
}

TEST_CASE("identity is neutral with no loops") {
  for (int n = 0; n <= 4; ++n) {
    for (const auto& a : enumerate_diagrams(n, n)) {
      auto [left, l1] = compose_diagrams(identity_diagram(n), a);
      auto [right, l2] = compose_diagrams(a, identity_diagram(n));
      CHECK(left == a);
      CHECK(right == a);
      CHECK(l1 == 0);
      CHECK(l2 == 0);
    }
  }
}

TEST_CASE("mismatched middle edge throws") {
  CHECK_THROWS_AS(compose_diagrams(cap_diagram(), cap_diagram()), Error);
}

TEST_CASE("composition associativity with loop bookkeeping, exhaustive to End(3)") {
  for (int n = 0; n <= 3; ++n) {
    auto diagrams = enumerate_diagrams(n, n);
    for (const auto& a : diagrams)
      for (const auto& b : diagrams)
        for (const auto& c : diagrams) {
          auto [cb, l1] = compose_diagrams(c, b);
          auto [cb_a, l2] = compose_diagrams(cb, a);
          auto [ba, l3] = compose_diagrams(b, a);
          auto [c_ba, l4] = compose_diagrams(c, ba);
          CHECK(cb_a == c_ba);
          CHECK(l1 + l2 == l3 + l4);
        }
  }
}

TEST_CASE("composition associativity, randomized mixed shapes") {
  Rng rng(101);
  for (int trial = 0; trial < 2000; ++trial) {
    int n0 = rng.range(0, 6);
    int n1 = rng.range(0, 6);
    int n2 = rng.range(0, 6);
    int n3 = rng.range(0, 6);
    if ((n0 + n1) % 2 || (n1 + n2) % 2 || (n2 + n3) % 2) continue;
    Diagram a = random_diagram(n0, n1, rng);
    Diagram b = random_diagram(n1, n2, rng);
    Diagram c = random_diagram(n2, n3, rng);
    auto [cb, l1] = compose_diagrams(c, b);
    auto [cb_a, l2] = compose_diagrams(cb, a);
    auto [ba, l3] = compose_diagrams(b, a);
    auto [c_ba, l4] = compose_diagrams(c, ba);
    CHECK(cb_a == c_ba);
    CHECK(l1 + l2 == l3 + l4);
  }
}

TEST_CASE("tensor structure") {
  CHECK(tensor_diagrams(identity_diagram(1), identity_diagram(1)) == identity_diagram(2));
  // two caps side by side pair bottom {0,1} and {2,3}
  CHECK(tensor_diagrams(cap_diagram(), cap_diagram()) == D(0, 4, {1, 0, 3, 2}));
  Rng rng(55);
  for (int trial = 0; trial < 200; ++trial) {
    int ma = rng.range(0, 3), na = rng.range(0, 3);
    int mb = rng.range(0, 3), nb = rng.range(0, 3);
    int mc = rng.range(0, 3), nc = rng.range(0, 3);
    if ((ma + na) % 2 || (mb + nb) % 2 || (mc + nc) % 2) continue;
    Diagram a = random_diagram(ma, na, rng);
    Diagram b = random_diagram(mb, nb, rng);
    Diagram c = random_diagram(mc, nc, rng);
    CHECK(tensor_diagrams(tensor_diagrams(a, b), c) ==
          tensor_diagrams(a, tensor_diagrams(b, c)));
    CHECK(is_valid_diagram(tensor_diagrams(a, b)));
  }
}

TEST_CASE("interchange of tensor and composition at the diagram level") {
  Rng rng(77);
  int done = 0;
  while (done < 300) {
    int m1 = rng.range(0, 3), k1 = rng.range(0, 3), n1 = rng.range(0, 3);
    int m2 = rng.range(0, 3), k2 = rng.range(0, 3), n2 = rng.range(0, 3);
    if ((m1 + k1) % 2 || (k1 + n1) % 2 || (m2 + k2) % 2 || (k2 + n2) % 2) continue;
    Diagram a = random_diagram(m1, k1, rng);
    Diagram b = random_diagram(k1, n1, rng);
    Diagram a2 = random_diagram(m2, k2, rng);
    Diagram b2 = random_diagram(k2, n2, rng);
    auto [lhs, ll] = compose_diagrams(tensor_diagrams(b, b2), tensor_diagrams(a, a2));
    auto [ba, l1] = compose_diagrams(b, a);
    auto [ba2, l2] = compose_diagrams(b2, a2);
    CHECK(lhs == tensor_diagrams(ba, ba2));
    CHECK(ll == l1 + l2);
    ++done;
  }
}

TEST_CASE("transpose") {
  CHECK(transpose_diagram(cap_diagram()) == cup_diagram());
  CHECK(transpose_diagram(identity_diagram(4)) == identity_diagram(4));
  // a (5,7) diagram and its mirror, by the index map oracle: point p on
  // the transpose is p+bot for tops and p-top for bottoms.
  Diagram wide = D(5, 7, {5, 2, 1, 4, 3, 0, 7, 6, 9, 8, 11, 10});
  REQUIRE(is_valid_diagram(wide));
  Diagram flipped = transpose_diagram(wide);
  CHECK(flipped.top == 7);
  CHECK(flipped.bot == 5);
  for (int p = 0; p < 12; ++p) {
    int q = wide.match[static_cast<size_t>(p)];
    auto flip = [&](int x) { return x < 5 ? x + 7 : x - 5; };
    CHECK(flipped.match[static_cast<size_t>(flip(p))] == flip(q));
  }

  Rng rng(91);
  for (int trial = 0; trial < 300; ++trial) {
    int m = rng.range(0, 4), n = rng.range(0, 4);
    if ((m + n) % 2) continue;
    Diagram a = random_diagram(m, n, rng);
    CHECK(transpose_diagram(transpose_diagram(a)) == a);
    CHECK(is_valid_diagram(transpose_diagram(a)));
  }
}

TEST_CASE("transpose is an anti-homomorphism for composition") {
  Rng rng(13);
  int done = 0;
  while (done < 300) {
    int l = rng.range(0, 4), m = rng.range(0, 4), n = rng.range(0, 4);
    if ((l + m) % 2 || (m + n) % 2) continue;
    Diagram a = random_diagram(l, m, rng);
    Diagram b = random_diagram(m, n, rng);
    auto [ba, loops] = compose_diagrams(b, a);
    auto [swapped, loops2] =
        compose_diagrams(transpose_diagram(a), transpose_diagram(b));
    CHECK(transpose_diagram(ba) == swapped);
    CHECK(loops == loops2);
    ++done;
  }
}

TEST_CASE("closure loop counts") {
  CHECK(closure_loops(identity_diagram(2)) == 2);
  CHECK(closure_loops(generator_diagram(1, 2)) == 1);
  CHECK(closure_loops(identity_diagram(0)) == 0);
  Rng rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    int n = rng.range(0, 5);
    Diagram a = random_diagram(n, n, rng);
    CHECK(closure_loops(transpose_diagram(a)) == closure_loops(a));
  }
}

TEST_CASE("rank lookup is the inverse of enumeration") {
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; n <= 4; ++n) {
      const HomBasis& basis = hom_basis(m, n);
      for (uint32_t r = 0; r < basis.size(); ++r)
        CHECK(basis.rank_of(basis.diagram(r)) == r);
    }
  CHECK_THROWS_AS(hom_basis(2, 2).rank_of(identity_diagram(3)), Error);
}

TEST_SUITE_END();
