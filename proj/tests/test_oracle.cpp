#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>

#include "braidhom/oracle.hpp"

using namespace braidhom;

TEST_CASE("gaussian binomials at q = -1") {
  CHECK(gaussian_binomial_minus1(2, 1) == 0);
  CHECK(gaussian_binomial_minus1(3, 1) == 1);
  CHECK(gaussian_binomial_minus1(3, 2) == 1);
  CHECK(gaussian_binomial_minus1(4, 2) == 2);
  CHECK(gaussian_binomial_minus1(4, 1) == 0);
  CHECK(gaussian_binomial_minus1(5, 2) == 2);
  CHECK(gaussian_binomial_minus1(6, 3) == 0);
  CHECK(gaussian_binomial_minus1(6, 2) == 3);
  CHECK(gaussian_binomial_minus1(0, 0) == 1);
}

TEST_CASE("chain complex shape and d^2 = 0") {
  for (int m = 2; m <= 8; ++m) {
    ChainComplex complex = braid_chain_complex(m);
    const int n = m - 1;
    REQUIRE(static_cast<int>(complex.boundaries.size()) == n);
    long long cells = 0;
    for (int c : complex.cell_counts) cells += c;
    CHECK(cells == (1LL << n));
    for (int k = 1; k + 1 <= n; ++k) {
      IntMatrix square = complex.boundaries[k - 1] * complex.boundaries[k];
      for (int i = 0; i < square.rows(); ++i)
        for (int j = 0; j < square.cols(); ++j) CHECK(square.at(i, j) == 0);
    }
  }
}

TEST_CASE("boundary of the rank-two cell") {
  // one 2-cell for B_3; its boundary identifies the two 1-cells
  ChainComplex complex = braid_chain_complex(3);
  const IntMatrix& d2 = complex.boundaries[1];
  REQUIRE(d2.rows() == 2);
  REQUIRE(d2.cols() == 1);
  CHECK(d2.at(0, 0) + d2.at(1, 0) == 0);
  CHECK(std::abs(d2.at(0, 0)) == 1);
}

TEST_CASE("exact ranks") {
  IntMatrix m(2, 3);
  m.at(0, 0) = 2;
  m.at(0, 1) = 4;
  m.at(0, 2) = 6;
  m.at(1, 0) = 1;
  m.at(1, 1) = 2;
  m.at(1, 2) = 3;
  CHECK(rank_over_q(m) == 1);
  CHECK(rank_mod_p(m, 5) == 1);

  IntMatrix two = IntMatrix::identity(2);
  two.at(0, 0) = 2;
  CHECK(rank_over_q(two) == 2);
  CHECK(rank_mod_p(two, 2) == 1);
}

TEST_CASE("oracle reproduces the circle answer rationally") {
  for (int m = 2; m <= 8; ++m) {
    GradedDims d = oracle_homology(m, 0, 6);
    CHECK(d.at(0) == 1);
    CHECK(d.at(1) == 1);
    for (int k = 2; k <= 6; ++k) CHECK(d.at(k) == 0);
  }
  CHECK(oracle_homology(1, 0, 3).dims == std::vector<long long>{1, 0, 0, 0});
}

TEST_CASE("oracle degree-one dimension is one for every field") {
  for (int m = 2; m <= 7; ++m)
    for (int p : {2, 3, 5}) CHECK(oracle_homology(m, p, 1).at(1) == 1);
}

TEST_CASE("oracle agrees with the monomial bases") {
  for (int m = 1; m <= 6; ++m) {
    CHECK(oracle_homology(m, 2, 6) == f2_dims(m, 6));
    CHECK(oracle_homology(m, 3, 6) == fp_dims(m, 3, 6));
    CHECK(oracle_homology(m, 5, 6) == fp_dims(m, 5, 6));
    CHECK(oracle_homology(m, 0, 6) == rational_dims(m, 6));
  }
  CHECK(oracle_homology(4, 2, 3).dims == std::vector<long long>{1, 1, 1, 1});
}

TEST_CASE("oracle agrees one step beyond the required range") {
  CHECK(oracle_homology(7, 2, 6) == f2_dims(7, 6));
  CHECK(oracle_homology(7, 3, 6) == fp_dims(7, 3, 6));
  CHECK(oracle_homology(8, 3, 7) == fp_dims(8, 3, 7));
  CHECK(oracle_homology(8, 5, 7) == fp_dims(8, 5, 7));
  CHECK(oracle_homology(7, 7, 6) == fp_dims(7, 7, 6));

  // the weight-8 generator enters in degree 7 on eight strands
  GradedDims b8 = oracle_homology(8, 2, 7);
  CHECK(b8 == f2_dims(8, 7));
  CHECK(b8.at(7) == 1);
  CHECK(f2_basis(8, 7).back().str() == "x3");
}

TEST_CASE("oracle stabilization in low degrees") {
  for (int d = 1; d <= 2; ++d) {
    long long v = oracle_homology(2 * d + 2, 2, d).at(d);
    for (int m = 2 * d + 2; m <= 8; ++m) CHECK(oracle_homology(m, 2, d).at(d) == v);
  }
}

TEST_CASE("oracle rejects out-of-scale inputs") {
  CHECK_THROWS_AS(oracle_homology(9, 2, 6), std::invalid_argument);
  CHECK_THROWS_AS(oracle_homology(4, 2, 9), std::invalid_argument);
  CHECK_THROWS_AS(oracle_homology(4, 11, 4), std::invalid_argument);
}
