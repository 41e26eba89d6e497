#include "threshold/kernels.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string_view>

namespace threshold::kernels {

namespace detail {

double dot_scalar(const double* x, const double* y, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += x[i] * y[i];
  return acc;
}

void axpy_scalar(double a, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

#if defined(TGS_HAVE_AVX2_SOURCES)
double dot_avx2(const double* x, const double* y, std::size_t n);
void axpy_avx2(double a, const double* x, double* y, std::size_t n);
#endif
#if defined(TGS_HAVE_NEON_SOURCES)
double dot_neon(const double* x, const double* y, std::size_t n);
void axpy_neon(double a, const double* x, double* y, std::size_t n);
#endif

}  // namespace detail

namespace {

struct Dispatch {
  Backend backend = Backend::scalar;
  double (*dot)(const double*, const double*, std::size_t) = detail::dot_scalar;
  void (*axpy)(double, const double*, double*, std::size_t) = detail::axpy_scalar;
};

bool cpu_supports(Backend b) {
  switch (b) {
    case Backend::scalar:
      return true;
    case Backend::avx2:
#if defined(TGS_HAVE_AVX2_SOURCES) && (defined(__GNUC__) || defined(__clang__))
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
    case Backend::neon:
#if defined(TGS_HAVE_NEON_SOURCES)
      return true;  // baseline on aarch64
#else
      return false;
#endif
  }
  return false;
}

Dispatch make_dispatch(Backend b) {
  Dispatch d;
  d.backend = b;
  switch (b) {
    case Backend::scalar:
      break;
#if defined(TGS_HAVE_AVX2_SOURCES)
    case Backend::avx2:
      d.dot = detail::dot_avx2;
      d.axpy = detail::axpy_avx2;
      break;
#endif
#if defined(TGS_HAVE_NEON_SOURCES)
    case Backend::neon:
      d.dot = detail::dot_neon;
      d.axpy = detail::axpy_neon;
      break;
#endif
    default:
      break;
  }
  return d;
}

Backend detect() {
  if (const char* env = std::getenv("TGSPECTRA_KERNELS")) {
    const std::string_view v(env);
    if (v == "scalar") return Backend::scalar;
    if (v == "avx2" && cpu_supports(Backend::avx2)) return Backend::avx2;
    if (v == "neon" && cpu_supports(Backend::neon)) return Backend::neon;
  }
  if (cpu_supports(Backend::avx2)) return Backend::avx2;
  if (cpu_supports(Backend::neon)) return Backend::neon;
  return Backend::scalar;
}

Dispatch& dispatch() {
  static Dispatch d = make_dispatch(detect());
  return d;
}

}  // namespace

Backend active() { return dispatch().backend; }

bool supported(Backend b) { return cpu_supports(b); }

const char* name(Backend b) {
  switch (b) {
    case Backend::scalar:
      return "scalar";
    case Backend::avx2:
      return "avx2";
    case Backend::neon:
      return "neon";
  }
  return "?";
}

void force(Backend b) {
  if (!cpu_supports(b))
    throw std::invalid_argument(std::string("kernel backend not available: ") + name(b));
  dispatch() = make_dispatch(b);
}

double dot(const double* x, const double* y, std::size_t n) { return dispatch().dot(x, y, n); }

void axpy(double a, const double* x, double* y, std::size_t n) { dispatch().axpy(a, x, y, n); }

}  // namespace threshold::kernels
