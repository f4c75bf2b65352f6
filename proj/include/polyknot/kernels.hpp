#pragma once

// Batch evaluation kernels. Every kernel has a scalar reference
// implementation and, on x86-64, an AVX2 variant chosen at runtime. The
// vector variants perform the same IEEE operations in the same order as the
// scalar code (no contraction into fma unless the scalar code uses fma too),
// so both paths produce bit-identical output.

#include <span>
#include <string_view>

namespace polyknot::kernels {

enum class Isa { scalar, avx2 };

std::string_view to_string(Isa isa);

/// Widest instruction set usable on this machine by this build.
Isa best_supported_isa();

/// The variant the dispatching entry points use. Initialized from
/// best_supported_isa(), overridable through POLYKNOT_KERNELS=scalar|avx2.
Isa active_isa();

/// Throws DomainError if `isa` is not supported here.
void set_active_isa(Isa isa);

bool is_supported(Isa isa);

// out[i] = sum_k coeffs[k] * xs[i]^k, plain Horner.
void horner(std::span<const double> coeffs, std::span<const double> xs, std::span<double> out);

// Same as horner with the compensated (doubled-precision) scheme.
void horner_compensated(std::span<const double> coeffs, std::span<const double> xs, std::span<double> out);

// out[i] = sum_k c[k] T_k(xs[i]) in the monic basis T_0 = 2, T_1 = t.
void clenshaw_t(std::span<const double> c, std::span<const double> xs, std::span<double> out);

// out[i] = sum_k c[k] V_k(xs[i]) with V_0 = 1, V_1 = t.
void clenshaw_v(std::span<const double> c, std::span<const double> xs, std::span<double> out);

// out[j] = (values[j] - pivot_value) / (grid[j] - pivot); callers keep
// grid[j] != pivot.
void divided_difference_row(std::span<const double> values, std::span<const double> grid, double pivot_value,
                            double pivot, std::span<double> out);

namespace scalar {
void horner(std::span<const double> coeffs, std::span<const double> xs, std::span<double> out);
void horner_compensated(std::span<const double> coeffs, std::span<const double> xs, std::span<double> out);
void clenshaw_t(std::span<const double> c, std::span<const double> xs, std::span<double> out);
void clenshaw_v(std::span<const double> c, std::span<const double> xs, std::span<double> out);
void divided_difference_row(std::span<const double> values, std::span<const double> grid, double pivot_value,
                            double pivot, std::span<double> out);
}  // namespace scalar

#if defined(POLYKNOT_HAVE_AVX2_KERNELS)
namespace avx2 {
void horner(std::span<const double> coeffs, std::span<const double> xs, std::span<double> out);
void horner_compensated(std::span<const double> coeffs, std::span<const double> xs, std::span<double> out);
void clenshaw_t(std::span<const double> c, std::span<const double> xs, std::span<double> out);
void clenshaw_v(std::span<const double> c, std::span<const double> xs, std::span<double> out);
void divided_difference_row(std::span<const double> values, std::span<const double> grid, double pivot_value,
                            double pivot, std::span<double> out);
}  // namespace avx2
#endif

}  // namespace polyknot::kernels
