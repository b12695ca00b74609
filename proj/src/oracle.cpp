#include "braidhom/oracle.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace braidhom {

using boost::multiprecision::cpp_int;

long long gaussian_binomial_minus1(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::vector<long long> row(1, 1);
  for (int r = 1; r <= n; ++r) {
    std::vector<long long> next(r + 1, 0);
    next[0] = 1;
    next[r] = 1;
    for (int c = 1; c < r; ++c) next[c] = row[c - 1] + (c % 2 == 0 ? row[c] : -row[c]);
    row = std::move(next);
  }
  return row[k];
}

namespace {

std::vector<int> bits_of(unsigned mask, int n) {
  std::vector<int> out;
  for (int i = 0; i < n; ++i)
    if (mask & (1u << i)) out.push_back(i + 1);
  return out;
}

// Signed boundary coefficient for removing generator s from the subset T.
// Only the run of consecutive generators containing s matters: removing the
// (j+1)-st generator of a length-r run contributes the signed shuffle count
// of S_{j+1} x S_{r-j} in S_{r+1}.
long long removal_coefficient(const std::vector<int>& t, int s) {
  int lo = s, hi = s;
  auto contains = [&](int v) {
    return std::find(t.begin(), t.end(), v) != t.end();
  };
  while (contains(lo - 1)) --lo;
  while (contains(hi + 1)) ++hi;
  int r = hi - lo + 1;
  int j = s - lo;
  return gaussian_binomial_minus1(r + 1, j + 1);
}

}  // namespace

ChainComplex braid_chain_complex(int m) {
  if (m < 1 || m > 16) throw std::invalid_argument("chain complex supported for 1 <= m <= 16");
  const int n = m - 1;  // generators
  ChainComplex complex;
  complex.cell_counts.assign(n + 1, 0);

  // index cells of each dimension
  std::vector<std::map<unsigned, int>> index(n + 1);
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    int k = __builtin_popcount(mask);
    index[k].emplace(mask, complex.cell_counts[k]++);
  }

  for (int k = 1; k <= n; ++k) {
    IntMatrix bnd(complex.cell_counts[k - 1], complex.cell_counts[k]);
    for (const auto& [mask, col] : index[k]) {
      std::vector<int> t = bits_of(mask, n);
      for (size_t pos = 0; pos < t.size(); ++pos) {
        int s = t[pos];
        long long coeff = removal_coefficient(t, s);
        if (coeff == 0) continue;
        if (pos % 2 == 1) coeff = -coeff;
        unsigned smaller = mask & ~(1u << (s - 1));
        bnd.at(index[k - 1].at(smaller), col) += coeff;
      }
    }
    complex.boundaries.push_back(std::move(bnd));
  }
  return complex;
}

int rank_over_q(const IntMatrix& mat) {
  const int rows = mat.rows(), cols = mat.cols();
  std::vector<std::vector<cpp_int>> a(rows, std::vector<cpp_int>(cols));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) a[i][j] = mat.at(i, j);

  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (a[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[rank], a[pivot]);
    for (int r = rank + 1; r < rows; ++r) {
      if (a[r][col] == 0) continue;
      cpp_int f1 = a[rank][col], f2 = a[r][col];
      cpp_int g = gcd(f1, f2);
      f1 /= g;
      f2 /= g;
      for (int c = col; c < cols; ++c) a[r][c] = a[r][c] * f1 - a[rank][c] * f2;
    }
    ++rank;
  }
  return rank;
}

int rank_mod_p(const IntMatrix& mat, int p) {
  if (p < 2) throw std::invalid_argument("rank_mod_p needs a prime modulus");
  const int rows = mat.rows(), cols = mat.cols();
  std::vector<std::vector<long long>> a(rows, std::vector<long long>(cols));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) a[i][j] = ((mat.at(i, j) % p) + p) % p;

  auto inv_mod = [&](long long v) {
    long long r = 1, b = v % p, e = p - 2;  // Fermat
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  };

  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (a[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[rank], a[pivot]);
    long long scale = inv_mod(a[rank][col]);
    for (int c = col; c < cols; ++c) a[rank][c] = a[rank][c] * scale % p;
    for (int r = 0; r < rows; ++r) {
      if (r == rank || a[r][col] == 0) continue;
      long long f = a[r][col];
      for (int c = col; c < cols; ++c) a[r][c] = ((a[r][c] - f * a[rank][c]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

GradedDims oracle_homology(int m, int p, int max_deg) {
  if (m < 1 || m > 8) throw std::invalid_argument("oracle supports 1 <= m <= 8");
  if (max_deg < 0 || max_deg > 8) throw std::invalid_argument("oracle supports max_deg <= 8");
  if (p != 0 && p != 2 && p != 3 && p != 5 && p != 7)
    throw std::invalid_argument("oracle supports p in {0 (Q), 2, 3, 5, 7}");

  ChainComplex complex = braid_chain_complex(m);
  const int top = m - 1;
  auto rank_of = [&](int k) {  // rank of boundary C_k -> C_{k-1}
    if (k < 1 || k > top) return 0;
    const IntMatrix& b = complex.boundaries[k - 1];
    return p == 0 ? rank_over_q(b) : rank_mod_p(b, p);
  };

  GradedDims gd;
  gd.dims.assign(max_deg + 1, 0);
  for (int k = 0; k <= max_deg; ++k) {
    if (k > top) break;
    gd.dims[k] = complex.cell_counts[k] - rank_of(k) - rank_of(k + 1);
  }
  return gd;
}

}  // namespace braidhom
