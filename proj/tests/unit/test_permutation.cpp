#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "quon/permutation.hpp"
#include "quon/rng.hpp"

using namespace quon;

namespace {

Permutation perm(std::vector<int> images) { return Permutation(std::move(images)); }

OrderedTuple tup(std::vector<int> entries) { return OrderedTuple(std::move(entries)); }

}  // namespace

TEST_CASE("permutation construction validates bijections") {
  CHECK_NOTHROW(perm({2, 1, 3}));
  CHECK_THROWS_AS(perm({1, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(perm({0, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(perm({1, 2, 4}), std::invalid_argument);
  CHECK(Permutation(0).degree() == 0);
  CHECK(Permutation(3).str() == "[1,2,3]");
}

TEST_CASE("inversion counts") {
  for (int n = 1; n <= 5; ++n) CHECK(Permutation(n).inversions() == 0);
  CHECK(perm({3, 1, 2}).inversions() == 2);
  CHECK(perm({3, 2, 1}).inversions() == 3);
  for (int n = 2; n <= 7; ++n)
    for (int k = 2; k <= n; ++k) CHECK(t1k(n, k).inversions() == k - 1);
}

TEST_CASE("composition laws") {
  Rng rng(3001);
  const auto s4 = all_permutations(4);
  for (int trial = 0; trial < 20; ++trial) {
    const Permutation& p = s4[rng.below(s4.size())];
    CHECK(compose(p, Permutation(4)) == p);
    CHECK(compose(Permutation(4), p) == p);
    CHECK(compose(p, p.inverse()).is_identity());
    CHECK(compose(p.inverse(), p).is_identity());
  }
  CHECK(compose(t1k(2, 2), t1k(2, 2)).is_identity());
  CHECK_THROWS_AS(compose(Permutation(2), Permutation(3)), std::invalid_argument);
}

TEST_CASE("composition applies the right factor first") {
  CHECK(compose(t1k(3, 2), t1k(3, 3)) == perm({3, 2, 1}));
  CHECK(compose(t1k(3, 3), t1k(3, 2)) == perm({1, 3, 2}));
}

TEST_CASE("inverse by pointwise solve") {
  CHECK(Permutation(4).inverse() == Permutation(4));
  CHECK(perm({2, 3, 1}).inverse() == perm({3, 1, 2}));
  CHECK(perm({3, 1, 2}).inverse().inversions() == 2);
}

TEST_CASE("inversions are invariant under inverse") {
  for (int n = 1; n <= 6; ++n)
    for (const Permutation& p : all_permutations(n))
      CHECK(p.inversions() == p.inverse().inversions());
}

TEST_CASE("cycle constructor") {
  CHECK(t1k(3, 2) == perm({2, 1, 3}));
  CHECK(t1k(4, 4) == perm({4, 1, 2, 3}));
  CHECK(t1k(2, 2) == perm({2, 1}));
  CHECK_THROWS_AS(t1k(3, 1), std::invalid_argument);
  CHECK_THROWS_AS(t1k(3, 4), std::invalid_argument);
}

TEST_CASE("lexicographic enumeration and ranks") {
  for (int n = 1; n <= 5; ++n) {
    const auto perms = all_permutations(n);
    CHECK(perms.size() == factorial(n));
    for (std::size_t i = 0; i < perms.size(); ++i) {
      CHECK(perms[i].lex_rank() == i);
      if (i > 0) CHECK(perms[i - 1] < perms[i]);
    }
  }
}

TEST_CASE("cycle product subsets enumerate correctly") {
  const auto single = enumerate_snp(3, 0);
  REQUIRE(single.size() == 1);
  CHECK(single[0].is_identity());

  const auto s21 = enumerate_snp(2, 1);
  REQUIRE(s21.size() == 1);
  CHECK(s21[0] == perm({2, 1}));

  CHECK(enumerate_snp(5, 2).size() == 6);
  CHECK_THROWS_AS(enumerate_snp(3, 3), std::invalid_argument);
}

TEST_CASE("cycle product subsets have binomial cardinality and no repeats") {
  for (int n = 1; n <= 7; ++n)
    for (int p = 0; p <= n - 1; ++p) {
      const auto elems = enumerate_snp(n, p);
      CHECK(elems.size() == binomial(n - 1, p));
      std::set<Permutation> unique(elems.begin(), elems.end());
      CHECK(unique.size() == elems.size());
    }
}

TEST_CASE("cycle product inversions add up") {
  for (int n = 2; n <= 6; ++n)
    for (int p = 0; p <= n - 1; ++p) {
      const auto subsets = index_subsets(n - 1, p);
      const auto elems = enumerate_snp(n, p);
      REQUIRE(subsets.size() == elems.size());
      for (std::size_t s = 0; s < subsets.size(); ++s) {
        int expected = 0;
        for (int idx : subsets[s]) expected += idx + 1;
        CHECK(elems[s].inversions() == expected);
      }
    }
}

TEST_CASE("ordered tuples validate distinctness") {
  CHECK_NOTHROW(tup({5, 9, 2}));
  CHECK_THROWS_AS(tup({5, 5}), std::invalid_argument);
  CHECK_THROWS_AS(tup({-1, 2}), std::invalid_argument);
  CHECK(tup({5, 9}).str() == "[5,9]");
  CHECK(OrderedTuple().empty());
}

TEST_CASE("relative inversion counts") {
  const OrderedTuple a = tup({4, 0, 7, 2});
  CHECK(relative_inversions(a, a) == 0);
  CHECK(relative_inversions(tup({5, 9}), tup({9, 5})) == 1);
  for (int n = 1; n <= 6; ++n) {
    std::vector<int> entries;
    for (int i = 0; i < n; ++i) entries.push_back(3 * i + 1);
    const OrderedTuple t = tup(entries);
    CHECK(relative_inversions(t, t.reversed()) == n * (n - 1) / 2);
  }
  CHECK_THROWS_AS(relative_inversions(tup({1, 2}), tup({1, 3})),
                  std::invalid_argument);
  CHECK_THROWS_AS(relative_inversions(tup({1, 2}), tup({1})),
                  std::invalid_argument);
}

TEST_CASE("relative inversions round-trip through relabeling") {
  const OrderedTuple a = tup({10, 3, 7, 1, 99});
  for (int n = 1; n <= 5; ++n) {
    const OrderedTuple prefix = a.subsequence([&] {
      std::vector<int> idx;
      for (int i = 0; i < n; ++i) idx.push_back(i);
      return idx;
    }());
    for (const Permutation& sigma : all_permutations(n))
      CHECK(relative_inversions(prefix, apply(sigma, prefix)) ==
            sigma.inversions());
  }
}

TEST_CASE("splitting off a subset") {
  const OrderedTuple k12 = tup({1, 2});
  auto [whole, zero] = split_concat(k12, k12);
  CHECK(whole == k12);
  CHECK(zero == 0);

  auto [front, one] = split_concat(k12, tup({1}));
  CHECK(front == tup({2, 1}));
  CHECK(one == 1);

  auto [mid, mid_inv] = split_concat(tup({1, 2, 3}), tup({2}));
  CHECK(mid == tup({1, 3, 2}));
  CHECK(mid_inv == 1);

  CHECK_THROWS_AS(split_concat(tup({1, 2}), tup({3})), std::invalid_argument);
  CHECK_THROWS_AS(split_concat(tup({1, 2, 3}), tup({3, 2})),
                  std::invalid_argument);
}

TEST_CASE("block inversion counts are additive") {
  const std::vector<int> labels = {6, 0, 8, 3, 11};
  for (int n = 0; n <= 5; ++n) {
    std::vector<int> base(labels.begin(), labels.begin() + n);
    const OrderedTuple K = tup(base);
    for (int jsize = 0; jsize <= n; ++jsize)
      for (const auto& jidx : index_subsets(n, jsize)) {
        const OrderedTuple J = K.subsequence(jidx);
        const OrderedTuple rest = subtract(K, J);
        for (int lsize = 0; lsize <= jsize; ++lsize)
          for (const auto& lidx : index_subsets(jsize, lsize)) {
            const OrderedTuple L = J.subsequence(lidx);
            const OrderedTuple inner = concat(L.reversed(), subtract(J, L));
            const OrderedTuple outer = concat(rest, inner);
            CHECK(split_concat(K, J).second + relative_inversions(J, inner) ==
                  relative_inversions(K, outer));
          }
      }
  }
}

TEST_CASE("tuple editing helpers") {
  const OrderedTuple t = tup({4, 0, 7});
  CHECK(t.without_position(2) == tup({4, 7}));
  CHECK(t.appended(5) == tup({4, 0, 7, 5}));
  CHECK_THROWS_AS(t.appended(0), std::invalid_argument);
  CHECK(t.reversed() == tup({7, 0, 4}));
  CHECK(concat(tup({1}), tup({2, 3})) == tup({1, 2, 3}));
  CHECK(subtract(tup({1, 2, 3}), tup({2})) == tup({1, 3}));
  CHECK_THROWS_AS(subtract(tup({1, 2}), tup({5})), std::invalid_argument);
  CHECK(t.contains(7));
  CHECK(!t.contains(2));
  CHECK(apply(perm({3, 1, 2}), t) == tup({7, 4, 0}));
}
