#pragma once

#include <cstddef>

namespace threshold::kernels {

// Vector kernels behind the eigensolver's O(n^3) inner loops.  A backend is
// picked once at startup from CPU features (override with the environment
// variable TGSPECTRA_KERNELS=scalar|avx2|neon); all variants of a kernel
// compute the same quantity and are equivalence-tested against the scalar
// reference.  Selection is stable for the lifetime of the process, so
// repeated computations stay bit-identical.
enum class Backend { scalar, avx2, neon };

Backend active();
bool supported(Backend b);
const char* name(Backend b);

// Forces a specific backend (primarily for tests and benchmarks); throws
// std::invalid_argument when the backend is not available on this machine.
void force(Backend b);

// sum_i x[i] * y[i]
double dot(const double* x, const double* y, std::size_t n);

// y[i] += a * x[i]
void axpy(double a, const double* x, double* y, std::size_t n);

}  // namespace threshold::kernels
