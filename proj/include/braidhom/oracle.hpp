#pragma once

#include <vector>

#include "braidhom/homology.hpp"
#include "braidhom/intmatrix.hpp"

namespace braidhom {

// Gaussian binomial coefficient evaluated at q = -1, via the q-Pascal
// recurrence. Equals the signed count of minimal coset representatives of
// S_k x S_{n-k} in S_n (inversions of (k, n-k)-shuffles).
long long gaussian_binomial_minus1(int n, int k);

// Finite chain complex computing H_*(B_m) with trivial coefficients: the
// arrangement (Salvetti-type) model whose k-cells are the k-element subsets
// of the generators {sigma_1, ..., sigma_{m-1}}. The boundary coefficient of
// T -> T \ {s} is the signed shuffle count over the run of consecutive
// generators containing s, with alternating signs by position in T.
struct ChainComplex {
  std::vector<int> cell_counts;       // cells per dimension 0..m-1
  std::vector<IntMatrix> boundaries;  // boundaries[k]: C_{k+1} -> C_k
};

ChainComplex braid_chain_complex(int m);

// Exact rank of an integer matrix over Q (exact big-integer elimination)
// and over F_p.
int rank_over_q(const IntMatrix& mat);
int rank_mod_p(const IntMatrix& mat, int p);

// Independent homology oracle: dimensions of H_*(B_m; F) computed from the
// chain complex above by exact rank computations. p = 0 means Q. Desk-scale
// only (m <= 8, max_deg <= 8).
GradedDims oracle_homology(int m, int p, int max_deg);

}  // namespace braidhom
