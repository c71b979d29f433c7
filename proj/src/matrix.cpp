#include "gtcert/matrix.hpp"

namespace gtcert {

std::vector<Int> multiply(const IntegerMatrix& m, const std::vector<Int>& v) {
  if (static_cast<int>(v.size()) != m.cols())
    throw std::invalid_argument("matrix/vector size mismatch");
  std::vector<Int> out(static_cast<std::size_t>(m.rows()));
  for (int i = 0; i < m.rows(); ++i) {
    Int acc = 0;
    for (int j = 0; j < m.cols(); ++j) acc += m.at(i, j) * v[static_cast<std::size_t>(j)];
    out[static_cast<std::size_t>(i)] = acc;
  }
  return out;
}

}  // namespace gtcert
