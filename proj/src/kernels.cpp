#include "epic/kernels.hpp"

#include <atomic>
#include <stdexcept>

namespace epic::kernels {

bool cpu_has_avx2() {
#if defined(EPIC_HAVE_AVX2_BUILD) && (defined(__x86_64__) || defined(_M_X64))
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

namespace {

Backend detect() {
    return cpu_has_avx2() ? Backend::avx2 : Backend::scalar;
}

std::atomic<Backend>& backend_slot() {
    static std::atomic<Backend> slot{detect()};
    return slot;
}

}  // namespace

Backend active_backend() { return backend_slot().load(std::memory_order_relaxed); }

std::string backend_name(Backend b) {
    return b == Backend::avx2 ? "avx2" : "scalar";
}

void force_backend(std::optional<Backend> b) {
    if (!b) {
        backend_slot().store(detect(), std::memory_order_relaxed);
        return;
    }
    if (*b == Backend::avx2 && !cpu_has_avx2())
        throw std::runtime_error("cannot force avx2 backend: CPU lacks AVX2");
    backend_slot().store(*b, std::memory_order_relaxed);
}

void fuse_masked_add(float* dst, const float* base, const float* ctrl,
                     const float* mask, size_t n) {
    if (active_backend() == Backend::avx2)
        avx2::fuse_masked_add(dst, base, ctrl, mask, n);
    else
        scalar::fuse_masked_add(dst, base, ctrl, mask, n);
}

void mask_rgb(uint8_t* rgb, const uint8_t* mask, size_t npx) {
    if (active_backend() == Backend::avx2)
        avx2::mask_rgb(rgb, mask, npx);
    else
        scalar::mask_rgb(rgb, mask, npx);
}

double flow_magnitude_sum(const float* u, const float* v, size_t n) {
    return active_backend() == Backend::avx2 ? avx2::flow_magnitude_sum(u, v, n)
                                             : scalar::flow_magnitude_sum(u, v, n);
}

size_t count_nonzero(const uint8_t* v, size_t n) {
    return active_backend() == Backend::avx2 ? avx2::count_nonzero(v, n)
                                             : scalar::count_nonzero(v, n);
}

}  // namespace epic::kernels
