#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "braidhom/braid.hpp"
#include "braidhom/corpus.hpp"

using namespace braidhom;

TEST_CASE("braid_cancel removes free pairs only") {
  CHECK(braid_cancel(BraidWord(3, {1, -1})).empty());
  CHECK(braid_cancel(BraidWord(3, {1, 2, -2, 1})) == BraidWord(3, {1, 1}));
  CHECK(braid_cancel(BraidWord(3, {1, 2, 1})) == BraidWord(3, {1, 2, 1}));
  CHECK_THROWS_AS(BraidWord(3, {3}), std::out_of_range);
}

TEST_CASE("permutation of a braid word") {
  Permutation p = permutation_of(BraidWord(3, {1}));
  CHECK(p.apply(1) == 2);
  CHECK(p.apply(2) == 1);
  CHECK(p.apply(3) == 3);

  Permutation q = permutation_of(BraidWord(3, {1, 2, 1}));
  CHECK(q.apply(1) == 3);
  CHECK(q.apply(2) == 2);
  CHECK(q.apply(3) == 1);

  CHECK(permutation_of(BraidWord(5)).is_identity());
}

TEST_CASE("permutation invariant under braids_equal moves") {
  SeededRng rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 3 + rng.below(3);
    auto corpus = random_words(n, 1, 6, rng.next());
    BraidWord u = corpus.front();
    // insert a relator at a random position
    int at = rng.below(u.length() + 1);
    std::vector<int> letters = u.letters();
    int i = 1 + rng.below(n - 2);
    std::vector<int> relator = {i, i + 1, i, -(i + 1), -i, -(i + 1)};
    letters.insert(letters.begin() + at, relator.begin(), relator.end());
    BraidWord v(n, letters);
    CHECK(braids_equal(u, v));
    CHECK(permutation_of(u) == permutation_of(v));
  }
}

TEST_CASE("artin generator convention") {
  FreeMap s1 = artin(BraidWord(2, {1}));
  CHECK(s1.image(1) == GroupWord(2, {1, 2, -1}));
  CHECK(s1.image(2) == GroupWord::generator(2, 1));
  CHECK(s1.verifies_inverse());

  CHECK(artin(BraidWord(2, {1, -1})).is_identity());
  CHECK(artin(BraidWord(3, {1, 2, 1})) == artin(BraidWord(3, {2, 1, 2})));

  // composites carry their inverse along
  FreeMap longer = artin(BraidWord(3, {1, 2, -1, 2}));
  CHECK(longer.has_inverse());
  CHECK(longer.verifies_inverse());
}

TEST_CASE("artin is a homomorphism") {
  SeededRng rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + rng.below(4);
    BraidWord u = random_words(n, 1, rng.below(9), rng.next()).front();
    BraidWord v = random_words(n, 1, rng.below(9), rng.next()).front();
    CHECK(artin(u * v) == compose(artin(u), artin(v)));
  }
}

TEST_CASE("word problem oracle") {
  CHECK(is_trivial(BraidWord(3, {1, 2, 1, -2, -1, -2})));
  CHECK_FALSE(is_trivial(BraidWord(3, {1, 2})));
  // pure but nontrivial; only the Artin action sees it
  BraidWord s1sq(3, {1, 1});
  CHECK(permutation_of(s1sq).is_identity());
  CHECK_FALSE(is_trivial(s1sq));

  CHECK(braids_equal(BraidWord(4, {1, 3}), BraidWord(4, {3, 1})));
  CHECK_FALSE(braids_equal(BraidWord(4, {1}), BraidWord(4, {2})));
  CHECK_THROWS_AS(braids_equal(BraidWord(3, {1}), BraidWord(4, {1})), std::invalid_argument);
}

TEST_CASE("braid relations hold under the oracle for n <= 8") {
  for (int n = 3; n <= 8; ++n) {
    for (int i = 1; i + 1 < n; ++i)
      CHECK(braids_equal(BraidWord(n, {i, i + 1, i}), BraidWord(n, {i + 1, i, i + 1})));
    for (int i = 1; i < n; ++i)
      for (int j = i + 2; j < n; ++j)
        CHECK(braids_equal(BraidWord(n, {i, j}), BraidWord(n, {j, i})));
  }
}

TEST_CASE("faithfulness sampling against independent invariants") {
  for (const BraidWord& w : exhaustive_words(3, 4)) {
    BraidWord r = braid_cancel(w);
    bool trivial = is_trivial(r);
    if (!permutation_of(r).is_identity()) CHECK_FALSE(trivial);
    if (exponent_sum(r) != 0) CHECK_FALSE(trivial);
    if (trivial) {
      CHECK(permutation_of(r).is_identity());
      CHECK(exponent_sum(r) == 0);
    }
  }
  for (const BraidWord& w : random_words(3, 100, 12, 2024, true)) CHECK_FALSE(is_trivial(w));
}

TEST_CASE("ribbon braid group laws") {
  RibbonBraid x({1, 0}, BraidWord(2));
  RibbonBraid y({0, 1}, BraidWord(2));
  RibbonBraid xy = ribbon_multiply(x, y);
  CHECK(xy.twists == std::vector<long long>{1, 1});
  CHECK(xy.braid.empty());

  // sigma_1 moves coordinate 1 to slot 2
  RibbonBraid s1({0, 0}, BraidWord(2, {1}));
  RibbonBraid z = ribbon_multiply(s1, RibbonBraid({1, 0}, BraidWord(2)));
  CHECK(z.twists == std::vector<long long>{0, 1});
  CHECK(z.braid == BraidWord(2, {1}));

  RibbonBraid w({3, -1, 2}, BraidWord(3, {1, 2, -1}));
  RibbonBraid prod = ribbon_multiply(w, ribbon_invert(w));
  CHECK(prod.twists == std::vector<long long>{0, 0, 0});
  CHECK(is_trivial(prod.braid));

  CHECK_THROWS_AS(RibbonBraid({0}, BraidWord(2)), std::invalid_argument);
  CHECK_THROWS_AS(ribbon_multiply(RibbonBraid({0, 0}, BraidWord(2)),
                                  RibbonBraid({0, 0, 0}, BraidWord(3))),
                  std::invalid_argument);
}

TEST_CASE("ribbon multiplication is associative") {
  SeededRng rng(29);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 2 + rng.below(3);
    auto mk = [&] {
      std::vector<long long> t;
      for (int i = 0; i < n; ++i) t.push_back(rng.below(5) - 2);
      return RibbonBraid(t, random_words(n, 1, rng.below(6), rng.next()).front());
    };
    RibbonBraid a = mk(), b = mk(), c = mk();
    RibbonBraid lhs = ribbon_multiply(ribbon_multiply(a, b), c);
    RibbonBraid rhs = ribbon_multiply(a, ribbon_multiply(b, c));
    CHECK(lhs.twists == rhs.twists);
    CHECK(lhs.braid == rhs.braid);
  }
}

TEST_CASE("gamma is the zero-twist section") {
  RibbonBraid g1 = gamma(BraidWord(4, {1}));
  CHECK(g1.twists == std::vector<long long>(4, 0));
  CHECK(g1.braid == BraidWord(4, {1}));
  Permutation p = permutation_of(g1.braid);
  CHECK(p.apply(1) == 2);
  CHECK(p.apply(2) == 1);

  SeededRng rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    BraidWord u = random_words(4, 1, rng.below(6), rng.next()).front();
    BraidWord v = random_words(4, 1, rng.below(6), rng.next()).front();
    RibbonBraid lhs = gamma(u * v);
    RibbonBraid rhs = ribbon_multiply(gamma(u), gamma(v));
    CHECK(lhs.twists == rhs.twists);
    CHECK(lhs.braid == rhs.braid);
  }
}

TEST_CASE("purity") {
  for (int g = 2; g <= 8; ++g)
    for (int i = 1; i < g; ++i) CHECK_FALSE(is_pure(gamma(BraidWord::generator(g, i))));
  CHECK(is_pure(RibbonBraid({3, -1}, BraidWord(2))));
  CHECK(is_pure(gamma(BraidWord(2, {1, 1}))));
}
