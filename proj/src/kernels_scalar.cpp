#include <cmath>

#include "epic/kernels.hpp"

namespace epic::kernels::scalar {

void fuse_masked_add(float* dst, const float* base, const float* ctrl,
                     const float* mask, size_t n) {
    for (size_t i = 0; i < n; ++i) {
        const float m = mask[i];
        const float c = ctrl[i];
        dst[i] = (m == 0.0f || c == 0.0f) ? base[i] : base[i] + m * c;
    }
}

void mask_rgb(uint8_t* rgb, const uint8_t* mask, size_t npx) {
    for (size_t i = 0; i < npx; ++i) {
        if (mask[i] == 0) {
            rgb[3 * i + 0] = 0;
            rgb[3 * i + 1] = 0;
            rgb[3 * i + 2] = 0;
        }
    }
}

double flow_magnitude_sum(const float* u, const float* v, size_t n) {
    double acc = 0.0;
    for (size_t i = 0; i < n; ++i)
        acc += (double)std::sqrt(u[i] * u[i] + v[i] * v[i]);
    return acc;
}

size_t count_nonzero(const uint8_t* v, size_t n) {
    size_t c = 0;
    for (size_t i = 0; i < n; ++i) c += (v[i] != 0);
    return c;
}

}  // namespace epic::kernels::scalar
