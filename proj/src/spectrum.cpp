#include "threshold/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "threshold/kernels.hpp"

namespace threshold {

namespace {

// Householder reduction of a (full-storage) symmetric matrix to tridiagonal
// form; only the eigenvalue data d (diagonal) and e (subdiagonal, e[i]
// couples rows i-1 and i, e[0] = 0) are produced.  The matrix is processed
// from the last row up; symmetry of the active leading block is maintained
// so the heavy inner loops are contiguous dot/axpy kernels.
void tridiagonalize(std::vector<double>& a, int n, std::vector<double>& d,
                    std::vector<double>& e) {
  std::vector<double> p(static_cast<std::size_t>(n));
  std::vector<double> q(static_cast<std::size_t>(n));
  for (int i = n - 1; i >= 1; --i) {
    double* row = a.data() + static_cast<std::size_t>(i) * n;
    if (i > 1) {
      double scale = 0.0;
      for (int k = 0; k < i; ++k) scale += std::fabs(row[k]);
      if (scale == 0.0) {
        e[static_cast<std::size_t>(i)] = row[i - 1];
      } else {
        for (int k = 0; k < i; ++k) row[k] /= scale;
        double h = kernels::dot(row, row, static_cast<std::size_t>(i));
        const double f = row[i - 1];
        const double g = f >= 0.0 ? -std::sqrt(h) : std::sqrt(h);
        e[static_cast<std::size_t>(i)] = scale * g;
        h -= f * g;
        row[i - 1] = f - g;  // row now holds the Householder vector u

        for (int j = 0; j < i; ++j)
          p[static_cast<std::size_t>(j)] =
              kernels::dot(a.data() + static_cast<std::size_t>(j) * n, row,
                           static_cast<std::size_t>(i)) /
              h;
        const double kappa =
            kernels::dot(p.data(), row, static_cast<std::size_t>(i)) / (2.0 * h);
        for (int j = 0; j < i; ++j)
          q[static_cast<std::size_t>(j)] = p[static_cast<std::size_t>(j)] - kappa * row[j];

        // A <- A - u q^T - q u^T on the active block, both triangles.
        for (int j = 0; j < i; ++j) {
          double* aj = a.data() + static_cast<std::size_t>(j) * n;
          kernels::axpy(-row[j], q.data(), aj, static_cast<std::size_t>(i));
          kernels::axpy(-q[static_cast<std::size_t>(j)], row, aj, static_cast<std::size_t>(i));
        }
      }
    } else {
      e[1] = row[0];
    }
    d[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(i) * n + i];
  }
  d[0] = a[0];
  e[0] = 0.0;
}

// Implicit-shift QL iteration on a symmetric tridiagonal matrix given by
// diagonal d and subdiagonal e (e[i] couples d[i] and d[i+1]); d is
// overwritten with the eigenvalues in no particular order.
void ql_implicit(std::vector<double>& d, std::vector<double>& e, int n) {
  constexpr double eps = std::numeric_limits<double>::epsilon();
  e[static_cast<std::size_t>(n) - 1] = 0.0;
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    while (true) {
      int m = l;
      for (; m < n - 1; ++m) {
        const double dd = std::fabs(d[static_cast<std::size_t>(m)]) +
                          std::fabs(d[static_cast<std::size_t>(m) + 1]);
        if (std::fabs(e[static_cast<std::size_t>(m)]) <= eps * dd) break;
      }
      if (m == l) break;
      if (iter++ == 50) throw std::runtime_error("eigenvalue iteration did not converge");
      double g = (d[static_cast<std::size_t>(l) + 1] - d[static_cast<std::size_t>(l)]) /
                 (2.0 * e[static_cast<std::size_t>(l)]);
      double r = std::hypot(g, 1.0);
      g = d[static_cast<std::size_t>(m)] - d[static_cast<std::size_t>(l)] +
          e[static_cast<std::size_t>(l)] / (g + std::copysign(r, g));
      double s = 1.0;
      double c = 1.0;
      double pshift = 0.0;
      bool underflow = false;
      for (int i = m - 1; i >= l; --i) {
        double f = s * e[static_cast<std::size_t>(i)];
        const double b = c * e[static_cast<std::size_t>(i)];
        r = std::hypot(f, g);
        e[static_cast<std::size_t>(i) + 1] = r;
        if (r == 0.0) {
          d[static_cast<std::size_t>(i) + 1] -= pshift;
          e[static_cast<std::size_t>(m)] = 0.0;
          underflow = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[static_cast<std::size_t>(i) + 1] - pshift;
        r = (d[static_cast<std::size_t>(i)] - g) * s + 2.0 * c * b;
        pshift = s * r;
        d[static_cast<std::size_t>(i) + 1] = g + pshift;
        g = c * r - b;
      }
      if (underflow) continue;
      d[static_cast<std::size_t>(l)] -= pshift;
      e[static_cast<std::size_t>(l)] = g;
      e[static_cast<std::size_t>(m)] = 0.0;
    }
  }
}

}  // namespace

Spectrum eigenvalues(const SymmetricMatrix& m, double tol) {
  const int n = m.order();
  Spectrum s;
  s.tol = tol;
  if (n == 1) {
    s.values = {m(0, 0)};
    return s;
  }
  std::vector<double> a = m.data();
  std::vector<double> d(static_cast<std::size_t>(n));
  std::vector<double> e(static_cast<std::size_t>(n));
  tridiagonalize(a, n, d, e);
  // Shift e so e[i] couples d[i] and d[i+1].
  for (int i = 1; i < n; ++i) e[static_cast<std::size_t>(i) - 1] = e[static_cast<std::size_t>(i)];
  ql_implicit(d, e, n);
  std::sort(d.begin(), d.end());
  s.values = std::move(d);
  return s;
}

Inertia inertia_numeric(const Spectrum& s) {
  Inertia i;
  for (double v : s.values) {
    if (v < -s.tol)
      ++i.negatives;
    else if (v > s.tol)
      ++i.positives;
    else
      ++i.zeros;
  }
  return i;
}

std::optional<double> mu_minus(const Spectrum& s) {
  std::optional<double> best;
  for (double v : s.values) {
    if (v < -1.0 - s.tol) best = v;  // ascending order: last hit is the largest
  }
  return best;
}

double mu_plus(const Spectrum& s) {
  for (double v : s.values)
    if (v > s.tol) return v;
  throw std::domain_error("spectrum has no positive eigenvalue");
}

int multiplicity(const Spectrum& s, double target) {
  int count = 0;
  for (double v : s.values)
    if (std::fabs(v - target) <= s.tol) ++count;
  return count;
}

}  // namespace threshold
