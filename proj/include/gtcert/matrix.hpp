#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <vector>

namespace gtcert {

using Int = boost::multiprecision::cpp_int;

// Dense matrix of exact integers; abelianization data and Smith normal form
// run on these, never on floating point.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(check_dims(rows, cols)) {}

  static IntegerMatrix eye(int n) {
    IntegerMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Int& at(int i, int j) { return data_[index(i, j)]; }
  const Int& at(int i, int j) const { return data_[index(i, j)]; }

  IntegerMatrix transposed() const {
    IntegerMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  bool operator==(const IntegerMatrix& other) const = default;

 private:
  static std::size_t check_dims(int rows, int cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("matrix dimensions must be nonnegative");
    return static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols);
  }
  std::size_t index(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
      throw std::out_of_range("matrix index out of range");
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(j);
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<Int> data_;
};

std::vector<Int> multiply(const IntegerMatrix& m, const std::vector<Int>& v);

}  // namespace gtcert
