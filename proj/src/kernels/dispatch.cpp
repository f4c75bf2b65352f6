#include <atomic>
#include <cstdlib>
#include <string>

#include "polyknot/errors.hpp"
#include "polyknot/kernels.hpp"

namespace polyknot::kernels {

namespace {

bool cpu_has_avx2() {
#if defined(POLYKNOT_HAVE_AVX2_KERNELS) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Isa initial_isa() {
  Isa isa = best_supported_isa();
  if (const char* env = std::getenv("POLYKNOT_KERNELS")) {
    const std::string want(env);
    if (want == "scalar") isa = Isa::scalar;
    else if (want == "avx2" && is_supported(Isa::avx2)) isa = Isa::avx2;
  }
  return isa;
}

std::atomic<Isa>& active() {
  static std::atomic<Isa> isa{initial_isa()};
  return isa;
}

}  // namespace

std::string_view to_string(Isa isa) {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
  }
  return "unknown";
}

bool is_supported(Isa isa) {
  if (isa == Isa::scalar) return true;
  static const bool avx2 = cpu_has_avx2();
  return avx2;
}

Isa best_supported_isa() { return is_supported(Isa::avx2) ? Isa::avx2 : Isa::scalar; }

Isa active_isa() { return active().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) {
  if (!is_supported(isa)) fail(ErrorKind::DomainError, "kernel variant not supported on this machine: " + std::string(to_string(isa)));
  active().store(isa, std::memory_order_relaxed);
}

#if defined(POLYKNOT_HAVE_AVX2_KERNELS)
#define POLYKNOT_DISPATCH(name, ...)                        \
  do {                                                      \
    if (active_isa() == Isa::avx2) return avx2::name(__VA_ARGS__); \
    return scalar::name(__VA_ARGS__);                       \
  } while (false)
#else
#define POLYKNOT_DISPATCH(name, ...) return scalar::name(__VA_ARGS__)
#endif

void horner(std::span<const double> coeffs, std::span<const double> xs, std::span<double> out) {
  POLYKNOT_DISPATCH(horner, coeffs, xs, out);
}

void horner_compensated(std::span<const double> coeffs, std::span<const double> xs, std::span<double> out) {
  POLYKNOT_DISPATCH(horner_compensated, coeffs, xs, out);
}

void clenshaw_t(std::span<const double> c, std::span<const double> xs, std::span<double> out) {
  POLYKNOT_DISPATCH(clenshaw_t, c, xs, out);
}

void clenshaw_v(std::span<const double> c, std::span<const double> xs, std::span<double> out) {
  POLYKNOT_DISPATCH(clenshaw_v, c, xs, out);
}

void divided_difference_row(std::span<const double> values, std::span<const double> grid, double pivot_value,
                            double pivot, std::span<double> out) {
  POLYKNOT_DISPATCH(divided_difference_row, values, grid, pivot_value, pivot, out);
}

}  // namespace polyknot::kernels
