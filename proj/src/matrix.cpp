#include "threshold/matrix.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace threshold {

SymmetricMatrix::SymmetricMatrix(int order) : order_(order) {
  if (order < 1 || order > kMaxOrder)
    throw std::invalid_argument("matrix order must be in [1, " + std::to_string(kMaxOrder) + "]");
  data_.assign(static_cast<std::size_t>(order) * order, 0.0);
}

SymmetricMatrix SymmetricMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
  const int n = static_cast<int>(rows.size());
  SymmetricMatrix m(n);
  for (int i = 0; i < n; ++i)
    if (static_cast<int>(rows[i].size()) != n)
      throw std::invalid_argument("ragged row data");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (rows[i][j] != rows[j][i]) throw std::invalid_argument("matrix is not symmetric");
      m.data_[static_cast<std::size_t>(i) * n + j] = rows[i][j];
    }
  return m;
}

void SymmetricMatrix::set(int i, int j, double v) {
  data_[static_cast<std::size_t>(i) * order_ + j] = v;
  data_[static_cast<std::size_t>(j) * order_ + i] = v;
}

SymmetricMatrix SymmetricMatrix::submatrix(std::span<const int> vertices) const {
  const int m = static_cast<int>(vertices.size());
  SymmetricMatrix sub(m);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      const int i = vertices[a] - 1;
      const int j = vertices[b] - 1;
      if (i < 0 || i >= order_ || j < 0 || j >= order_)
        throw std::out_of_range("submatrix vertex index out of range");
      sub.data_[static_cast<std::size_t>(a) * m + b] = (*this)(i, j);
    }
  }
  return sub;
}

double SymmetricMatrix::max_abs() const {
  double r = 0.0;
  for (double v : data_) r = std::max(r, std::fabs(v));
  return r;
}

}  // namespace threshold
