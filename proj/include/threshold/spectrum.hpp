#pragma once

#include <optional>
#include <vector>

#include "threshold/matrix.hpp"

namespace threshold {

// Absolute tolerance used to classify eigenvalues as -1, 0, negative or
// positive.  Safe for threshold graphs: every non-trivial eigenvalue is at
// distance >= (sqrt(2) - 1) / 2 ~ 0.207 from both -1 and 0.
inline constexpr double kClassifyTol = 1e-6;

// Eigenvalues of a symmetric matrix in ascending order, plus the tolerance
// that classification queries on this spectrum use.
struct Spectrum {
  std::vector<double> values;
  double tol = kClassifyTol;

  int size() const { return static_cast<int>(values.size()); }
  double min() const { return values.front(); }
  double max() const { return values.back(); }
};

struct Inertia {
  int negatives = 0;
  int zeros = 0;
  int positives = 0;
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

// All eigenvalues of m, ascending.  Householder reduction to tridiagonal
// form followed by implicit-shift QL iteration; each value is accurate to
// within a small multiple of n * eps * ||m||.  Deterministic: identical
// input yields bit-identical output.
Spectrum eigenvalues(const SymmetricMatrix& m, double tol = kClassifyTol);

// Counts with threshold tol: lambda < -tol negative, |lambda| <= tol zero.
Inertia inertia_numeric(const Spectrum& s);

// Largest eigenvalue below -1 (outside the tol ball), when one exists.
std::optional<double> mu_minus(const Spectrum& s);

// Smallest positive eigenvalue; throws std::domain_error when the spectrum
// has none (cannot happen for a connected graph on n >= 2 vertices).
double mu_plus(const Spectrum& s);

// Number of eigenvalues within tol of target (cluster count).
int multiplicity(const Spectrum& s, double target);

}  // namespace threshold
