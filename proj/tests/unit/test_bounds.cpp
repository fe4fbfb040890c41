#include "transient/bounds.hpp"
#include "transient/errors.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace transient;

namespace {

AbelianGroup group(std::vector<long long> torsion, std::size_t free_rank = 0) {
  return AbelianGroup(std::vector<BigInt>(torsion.begin(), torsion.end()), free_rank);
}

bool has(const std::vector<std::string>& tags, const std::string& tag) {
  return std::find(tags.begin(), tags.end(), tag) != tags.end();
}

}  // namespace

TEST_SUITE("bounds") {
  TEST_CASE("rank") {
    CHECK(rank(group({3})) == 1);
    CHECK(rank(group({9, 9})) == 2);
    CHECK(rank(group({4, 4, 20, 20}, 4)) == 8);
    CHECK(rank(AbelianGroup{}) == 0);
  }

  TEST_CASE("tr lower bound examples") {
    LowerBound b = tr_lower_bound({{2, group({9, 9})}});
    CHECK(b.value == 2);
    CHECK(has(b.provenance, "thm1.3/p=2"));

    b = tr_lower_bound({{6, group({2, 2, 2, 2, 2, 2, 38, 9158})}});
    CHECK(b.value == 2);
    CHECK(b.provenance == std::vector<std::string>{"thm1.2/p=6"});

    b = tr_lower_bound({{2, group({3})}});
    CHECK(b.value == 1);
    CHECK(b.provenance == std::vector<std::string>{"nontrivial/p=2"});

    b = tr_lower_bound({{2, AbelianGroup{}}});
    CHECK(b.value == 0);
    CHECK(b.provenance == std::vector<std::string>{"none"});

    CHECK_THROWS_AS(tr_lower_bound(HomologyProfile{}), DomainError);
  }

  TEST_CASE("profiles reject impossible double covers") {
    HomologyProfile h;
    CHECK_THROWS_AS(h.set(2, group({2})), DomainError);
    CHECK_THROWS_AS(h.set(2, AbelianGroup::free(1)), DomainError);
    CHECK_THROWS_AS(h.set(1, group({3})), DomainError);
    CHECK_NOTHROW(h.set(6, AbelianGroup::free(2)));
  }

  TEST_CASE("u and t lower bounds") {
    CHECK(u_lower_bound(group({3})) == 1);
    CHECK(u_lower_bound(group({9, 9})) == 2);
    CHECK(u_lower_bound(AbelianGroup{}) == 0);
    CHECK(t_lower_bound(group({9, 9})) == 2);
    CHECK(t_lower_bound(group({5})) == 1);
    CHECK(t_lower_bound(group({3, 3, 3, 3, 15, 15})) == 3);
  }

  TEST_CASE("classify") {
    BoundReport r = classify({{2, group({3, 3})}}, 2, 2);
    CHECK(r.exact == 2);
    CHECK(r.tr_upper.provenance == std::vector<std::string>{"upper:min(u,t)"});

    r = classify({{2, group({7})}}, std::nullopt, 2);
    CHECK(r.tr_lower.value == 1);
    CHECK(r.tr_upper.value == 2);
    CHECK_FALSE(r.exact);

    r = classify({{2, group({3})}}, 1, 1);
    CHECK(r.exact == 1);

    r = classify({{2, group({3})}}, std::nullopt, std::nullopt);
    CHECK_FALSE(r.tr_upper.value);
    CHECK(r.tr_upper.provenance == std::vector<std::string>{"none"});
  }

  TEST_CASE("inconsistent data is flagged, not thrown") {
    BoundReport r = classify({{2, group({3, 3})}}, 1, 1);
    CHECK(r.inconsistent);
    CHECK_FALSE(r.exact);
    CHECK(r.issues.size() == 3);
  }

  TEST_CASE("lower bounds never drop when homology grows") {
    std::mt19937_64 rng(23);
    const long long odd[] = {3, 5, 7, 9, 15};
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<long long> t;
      for (int i = 0, k = static_cast<int>(rng() % 5); i < k; ++i) t.push_back(odd[rng() % 5]);
      AbelianGroup g2;
      for (long long x : t) g2 = direct_sum(g2, group({x}));
      HomologyProfile h{{2, g2}};
      const int before = tr_lower_bound(h).value;

      AbelianGroup bigger = direct_sum(g2, group({odd[rng() % 5]}));
      CHECK(tr_lower_bound({{2, bigger}}).value >= before);

      HomologyProfile more = h;
      more.set(3 + static_cast<int>(rng() % 4), AbelianGroup::free(rng() % 6));
      CHECK(tr_lower_bound(more).value >= before);
    }
  }
}

TEST_SUITE("connected_sum") {
  TEST_CASE("repeated sums") {
    CHECK(repeated_sum_lower_bound(group({3}), 2) == 2);
    CHECK(repeated_sum_lower_bound(group({3}), 5) == 2);
    CHECK(repeated_sum_lower_bound(group({3}), 1) == 1);
    LowerBound b = repeated_sum_bound(group({3}), 7);
    CHECK(b.value == 3);
    CHECK(has(b.provenance, "thm3.1/n=7"));
    CHECK_THROWS_AS(repeated_sum_lower_bound(AbelianGroup{}, 3), DomainError);
    CHECK_THROWS_AS(repeated_sum_lower_bound(group({3}), 0), DomainError);
  }

  TEST_CASE("upper bound") {
    CHECK(connected_sum_upper_bound(1, 1) == 3);
    CHECK(connected_sum_upper_bound(0, 0) == 1);
    CHECK(connected_sum_upper_bound(2, 1) == 4);
    CHECK_THROWS_AS(connected_sum_upper_bound(-1, 0), DomainError);
  }

  TEST_CASE("homology of a sum") {
    CHECK(connected_sum_homology(group({3}), group({3})) == group({3, 3}));
    CHECK(connected_sum_homology(group({3}), group({5})) == group({15}));
  }
}

TEST_SUITE("lemma") {
  TEST_CASE("examples") {
    CHECK(lemma_grupos_group(1, 0, 0, 0, 1).is_trivial());
    CHECK(lemma_grupos_group(3, 0, 1, 1, 1) == group({3}));
    CHECK(lemma_grupos_hypothesis_det(1, 0, 0, 0, 2) == 2);
    CHECK_THROWS_AS(lemma_grupos_group(1, 0, 0, 0, 2), DomainError);
    CHECK(lemma_grupos_presentation(1, 2, 3, 4, 5) ==
          IntMatrix{{1, 2, 3}, {3, 3, 6}, {4, 4, 5}});
  }

  TEST_CASE("a1 = a2 never satisfies the hypothesis") {
    // det [[2a, 2a3], [a4, a5]] = 2 (a a5 - a3 a4) is even, so the Z case is vacuous.
    int satisfying = 0;
    for (int a = -6; a <= 6; ++a)
      for (int a3 = -6; a3 <= 6; ++a3)
        for (int a4 = -6; a4 <= 6; ++a4)
          for (int a5 = -6; a5 <= 6; ++a5)
            if (abs(lemma_grupos_hypothesis_det(a, a, a3, a4, a5)) == 1) ++satisfying;
    CHECK(satisfying == 0);
  }
}
