#include "oracles.hpp"

#include "transient/covers.hpp"
#include "transient/errors.hpp"
#include "transient/smith.hpp"

#include <doctest.h>

using namespace transient;

namespace {

const char* kTrefoil = "PD[X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)]";
const char* kFigureEight = "PD[X(4,2,5,1),X(8,6,1,5),X(6,3,7,4),X(2,7,3,8)]";

SeifertMatrix braid_seifert(const char* text) { return seifert_matrix_from_braid(parse_braid(text)); }

AbelianGroup group(std::vector<long long> torsion, std::size_t free_rank = 0) {
  return AbelianGroup(std::vector<BigInt>(torsion.begin(), torsion.end()), free_rank);
}

std::vector<long long> small_coefficients(const IntPolynomial& p) {
  std::vector<long long> out;
  for (const auto& c : p.coefficients()) out.push_back(c.convert_to<long long>());
  return out;
}

}  // namespace

TEST_SUITE("goeritz") {
  TEST_CASE("determinants of small diagrams") {
    GoeritzMatrix t = goeritz_matrix(reconstruct_diagram(parse_pd(kTrefoil)));
    // With the unbounded region White, the standard trefoil has two White
    // regions, so the reduced matrix is 1 x 1.
    CHECK(t.matrix().rows() == 1);
    CHECK(abs(det(t.matrix())) == 3);
    GoeritzMatrix f = goeritz_matrix(reconstruct_diagram(parse_pd(kFigureEight)));
    CHECK(abs(det(f.matrix())) == 5);
    GoeritzMatrix kink = goeritz_matrix(reconstruct_diagram(parse_pd("PD[X(1,1,2,2)]")));
    CHECK(abs(det(kink.matrix())) == 1);
    CHECK(cover_homology(kink, 2).is_trivial());
  }

  TEST_CASE("symmetric and odd") {
    CHECK(goeritz_matrix(reconstruct_diagram(parse_pd(kFigureEight))).matrix().is_symmetric());
    CHECK_THROWS_AS(GoeritzMatrix(IntMatrix{{1, 2}, {3, 1}}), ValidationError);
    CHECK_THROWS_AS(GoeritzMatrix(IntMatrix{{2}}), ValidationError);
  }

  TEST_CASE("only the double cover") {
    GoeritzMatrix t = goeritz_matrix(reconstruct_diagram(parse_pd(kTrefoil)));
    CHECK(cover_homology(t, 2) == group({3}));
    CHECK_THROWS_AS(cover_homology(t, 3), DomainError);
    CHECK_THROWS_AS(cover_homology(HomologySource{t}, 4), DomainError);
  }
}

TEST_SUITE("seifert") {
  TEST_CASE("braid examples") {
    SeifertMatrix t = braid_seifert("2: 1 1 1");
    CHECK(t.size() == 2);
    CHECK(abs(det(t.matrix() + t.matrix().transpose())) == 3);
    SeifertMatrix f = braid_seifert("3: 1 -2 1 -2");
    CHECK(f.size() == 2);
    CHECK(abs(det(f.matrix() + f.matrix().transpose())) == 5);
    CHECK(braid_seifert("1:").size() == 0);
  }

  TEST_CASE("size is letters - strands + 1") {
    CHECK(braid_seifert("4: 1 -2 3 1 -2 3 -2").size() == 4);
    CHECK(braid_seifert("2: 1 1 1 1 1 1 1").size() == 6);
  }

  TEST_CASE("unimodularity is enforced") {
    CHECK_THROWS_AS(SeifertMatrix(IntMatrix{{1, 0}, {0, 1}}), ValidationError);
    CHECK_THROWS_AS(SeifertMatrix(IntMatrix(2, 3)), ValidationError);
    CHECK_NOTHROW(SeifertMatrix(IntMatrix{{-1, 1}, {0, -1}}));
  }

  TEST_CASE("Alexander polynomials") {
    CHECK(alexander_polynomial(braid_seifert("2: 1 1 1")) == IntPolynomial{1, -1, 1});
    CHECK(alexander_polynomial(braid_seifert("3: 1 -2 1 -2")) == IntPolynomial{1, -3, 1});
    CHECK(alexander_polynomial(SeifertMatrix{}) == IntPolynomial{1});
    // 5_1 = T(2,5).
    CHECK(alexander_polynomial(braid_seifert("2: 1 1 1 1 1")) == IntPolynomial{1, -1, 1, -1, 1});
  }
}

TEST_SUITE("cover_homology") {
  TEST_CASE("small knots") {
    SeifertMatrix t = braid_seifert("2: 1 1 1");
    SeifertMatrix f = braid_seifert("3: 1 -2 1 -2");
    CHECK(cover_homology(t, 2) == group({3}));
    CHECK(cover_homology(t, 3) == group({2, 2}));
    CHECK(cover_homology(f, 3) == group({4, 4}));
    CHECK(cover_homology(t, 6) == AbelianGroup::free(2));
    CHECK(cover_homology(SeifertMatrix{}, 5).is_trivial());
    CHECK_THROWS_AS(cover_presentation(t, 1), DomainError);
    CHECK(cover_presentation(t, 4).rows() == 6);
  }

  TEST_CASE("Fox order examples") {
    CHECK(fox_order(IntPolynomial{1, -1, 1}, 2) == FoxOrder::finite(3));
    CHECK(fox_order(IntPolynomial{1, -3, 1}, 3) == FoxOrder::finite(16));
    CHECK(fox_order(IntPolynomial{1, -1, 1}, 6).infinite);
    CHECK_THROWS_AS(fox_order(IntPolynomial{1, -1, 1}, 1), DomainError);
  }

  TEST_CASE("order agrees with the floating-point Fox product on random braids") {
    std::mt19937_64 rng(17);
    int checked = 0;
    while (checked < 60) {
      int n = 2 + static_cast<int>(rng() % 3);
      std::vector<int> letters;
      for (int i = 0, k = n - 1 + static_cast<int>(rng() % 7); i < k; ++i) {
        int g = 1 + static_cast<int>(rng() % static_cast<unsigned>(n - 1));
        letters.push_back(rng() % 2 ? g : -g);
      }
      if (closure_components(n, letters) != 1) continue;
      ++checked;
      SeifertMatrix v = seifert_matrix_from_braid({n, letters});
      IntPolynomial delta = alexander_polynomial(v);
      CHECK(delta.is_palindromic());
      CHECK(abs(delta(BigInt(1))) == 1);
      for (int p = 2; p <= 6; ++p) {
        AbelianGroup g = cover_homology(v, p);
        long double fox = oracle::fox_product(small_coefficients(delta), p);
        if (g.is_finite()) {
          CHECK(static_cast<long double>(g.torsion_order()) == doctest::Approx(fox).epsilon(1e-9));
        } else {
          CHECK(fox < 1e-6L);
        }
        FoxOrder exact = fox_order(delta, p);
        CHECK(exact.infinite == !g.is_finite());
        if (!exact.infinite) CHECK(exact.order == g.torsion_order());
      }
    }
  }
}
