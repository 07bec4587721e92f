#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

// Data-parallel inner loops used across the pipeline. Each kernel has a
// scalar reference implementation and an AVX2 variant; the active backend is
// picked once at startup from CPUID and can be forced for equivalence tests.
//
// Elementwise kernels (fuse_masked_add, mask_rgb, count_nonzero) are
// bit-identical across backends. Reductions (flow_magnitude_sum) may differ
// by accumulation order; callers treat them as approximate.

namespace epic::kernels {

enum class Backend { scalar, avx2 };

Backend active_backend();
std::string backend_name(Backend b);

// Test hook: force a backend (nullopt restores auto-detection). Forcing avx2
// on a CPU without it is rejected.
void force_backend(std::optional<Backend> b);

bool cpu_has_avx2();

// dst[i] = base[i]                     if mask[i] == 0 or ctrl[i] == 0
//          base[i] + mask[i] * ctrl[i] otherwise
// The zero cases copy base bits untouched (keeps signed zeros and NaNs of
// the base payload intact).
void fuse_masked_add(float* dst, const float* base, const float* ctrl,
                     const float* mask, size_t n);

// Zeroes the 3-byte RGB pixel wherever mask is 0; mask holds one byte per pixel.
void mask_rgb(uint8_t* rgb, const uint8_t* mask, size_t npx);

// Sum of sqrt(u[i]^2 + v[i]^2); per-element math in float, accumulation in double.
double flow_magnitude_sum(const float* u, const float* v, size_t n);

size_t count_nonzero(const uint8_t* v, size_t n);

namespace scalar {
void fuse_masked_add(float* dst, const float* base, const float* ctrl,
                     const float* mask, size_t n);
void mask_rgb(uint8_t* rgb, const uint8_t* mask, size_t npx);
double flow_magnitude_sum(const float* u, const float* v, size_t n);
size_t count_nonzero(const uint8_t* v, size_t n);
}  // namespace scalar

namespace avx2 {
// Defined only in x86-64 builds; guarded by cpu_has_avx2() at dispatch time.
void fuse_masked_add(float* dst, const float* base, const float* ctrl,
                     const float* mask, size_t n);
void mask_rgb(uint8_t* rgb, const uint8_t* mask, size_t npx);
double flow_magnitude_sum(const float* u, const float* v, size_t n);
size_t count_nonzero(const uint8_t* v, size_t n);
}  // namespace avx2

}  // namespace epic::kernels
