#include "braidhom/intmatrix.hpp"

#include <limits>
#include <stdexcept>

namespace braidhom {

namespace {

long long checked_narrow(__int128 v) {
  if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
    throw std::overflow_error("integer matrix arithmetic overflow");
  return static_cast<long long>(v);
}

}  // namespace

IntMatrix::IntMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, 0) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimensions");
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("matrix dimension mismatch");
  IntMatrix out(rows_, rhs.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      long long a = at(i, k);
      if (a == 0) continue;
      for (int j = 0; j < rhs.cols_; ++j) {
        __int128 v = static_cast<__int128>(out.at(i, j)) + static_cast<__int128>(a) * rhs.at(k, j);
        out.at(i, j) = checked_narrow(v);
      }
    }
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix out(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

bool IntMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

long long IntMatrix::det() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
  int n = rows_;
  if (n == 0) return 1;
  std::vector<__int128> a(data_.begin(), data_.end());
  auto e = [&](int r, int c) -> __int128& { return a[static_cast<size_t>(r) * n + c]; };
  int sign = 1;
  __int128 prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (e(k, k) == 0) {
      int pivot = -1;
      for (int r = k + 1; r < n; ++r)
        if (e(r, k) != 0) {
          pivot = r;
          break;
        }
      if (pivot < 0) return 0;
      for (int c = 0; c < n; ++c) std::swap(e(k, c), e(pivot, c));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        __int128 v = e(i, j) * e(k, k) - e(i, k) * e(k, j);
        e(i, j) = v / prev;  // Bareiss: division is exact
      }
    prev = e(k, k);
  }
  return checked_narrow(sign * e(n - 1, n - 1));
}

std::string IntMatrix::str() const {
  std::string s;
  for (int i = 0; i < rows_; ++i) {
    s += '[';
    for (int j = 0; j < cols_; ++j) {
      if (j) s += ' ';
      s += std::to_string(at(i, j));
    }
    s += ']';
    if (i + 1 < rows_) s += '\n';
  }
  return s;
}

}  // namespace braidhom
