#pragma once

#include <string>
#include <vector>

namespace braidhom {

// Dense integer matrix, just big enough for transvection representations and
// abelianized actions. Row-major, int64 entries.
class IntMatrix {
 public:
  IntMatrix(int rows, int cols);
  static IntMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  long long& at(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
  long long at(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }

  IntMatrix operator*(const IntMatrix& rhs) const;
  IntMatrix transpose() const;
  bool is_identity() const;
  bool operator==(const IntMatrix& rhs) const = default;

  // Exact determinant (Bareiss elimination); throws on int64 overflow.
  long long det() const;

  std::string str() const;

 private:
  int rows_, cols_;
  std::vector<long long> data_;
};

}  // namespace braidhom
