#pragma once

#include <span>
#include <vector>

namespace threshold {

// Largest order accepted for dense storage and eigensolves.
inline constexpr int kMaxOrder = 4096;

// Dense real symmetric matrix.  Symmetry is enforced by construction:
// set(i, j, v) writes both (i, j) and (j, i).  Entry indices are 0-based;
// vertex-index lists passed to submatrix() are 1-based like everywhere else
// in this library.
class SymmetricMatrix {
 public:
  explicit SymmetricMatrix(int order);

  // Builds from full row data; throws std::invalid_argument when the rows
  // are ragged or not symmetric.
  static SymmetricMatrix from_rows(const std::vector<std::vector<double>>& rows);

  int order() const { return order_; }
  double operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * order_ + j]; }
  void set(int i, int j, double v);

  // Principal submatrix on the given 1-based vertex indices (strictly
  // increasing).
  SymmetricMatrix submatrix(std::span<const int> vertices) const;

  const std::vector<double>& data() const { return data_; }
  double max_abs() const;

  friend bool operator==(const SymmetricMatrix&, const SymmetricMatrix&) = default;

 private:
  int order_ = 0;
  std::vector<double> data_;  // row-major, order_ x order_
};

}  // namespace threshold
