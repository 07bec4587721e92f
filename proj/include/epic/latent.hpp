#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "epic/types.hpp"

namespace epic {

// Dense (frames, channels, height, width) float grid, the latent-space stand-in.
struct LatentGrid {
    int frames = 0, channels = 0, height = 0, width = 0;
    std::vector<float> data;

    LatentGrid() = default;
    LatentGrid(int l, int c, int h, int w)
        : frames(l), channels(c), height(h), width(w),
          data(size_t(l) * c * h * w, 0.0f) {}

    float& at(int l, int c, int y, int x) {
        return data[((size_t(l) * channels + c) * height + y) * width + x];
    }
    float at(int l, int c, int y, int x) const {
        return data[((size_t(l) * channels + c) * height + y) * width + x];
    }
    float* plane(int l, int c) {
        return data.data() + (size_t(l) * channels + c) * height * width;
    }
    const float* plane(int l, int c) const {
        return data.data() + (size_t(l) * channels + c) * height * width;
    }
    bool same_shape(const LatentGrid& o) const {
        return frames == o.frames && channels == o.channels &&
               height == o.height && width == o.width;
    }
    void validate() const;  // dims >= 1, data finite
};

enum class PoolMode { train, inference };

// (frames, height, width) mask in [0,1]; soft after avg pooling, hard after max.
struct LatentMask {
    int frames = 0, height = 0, width = 0;
    std::vector<float> values;
    PoolMode mode = PoolMode::inference;

    LatentMask() = default;
    LatentMask(int l, int h, int w, PoolMode m)
        : frames(l), height(h), width(w), values(size_t(l) * h * w, 0.0f), mode(m) {}

    float& at(int l, int y, int x) { return values[(size_t(l) * height + y) * width + x]; }
    float at(int l, int y, int x) const { return values[(size_t(l) * height + y) * width + x]; }
    const float* plane(int l) const { return values.data() + size_t(l) * height * width; }

    void validate() const;  // values in [0,1], dims >= 1
};

struct LatentShape {
    int frames = 0, height = 0, width = 0;
};

// Explicit control-block weights; row-major matrices.
struct ControlLayerWeights {
    std::vector<float> wq, bq, wk, bk, wv, bv, wo, bo;  // hidden x hidden (+bias)
    std::vector<float> w1, b1, w2, b2;                  // mlp: 4h x h, h x 4h
};

struct ControlWeights {
    std::vector<float> embed_w;  // hidden x token_dim
    std::vector<float> embed_b;  // hidden
    std::vector<ControlLayerWeights> layers;
};

struct ControlBlockParams {
    int hidden_dim = 256;
    int n_layers = 8;
    int patch_size = 2;
    int backbone_dim = 64;
    uint64_t seed = 0;

    // backbone_dim x hidden_dim, row-major. All-zero at initialization, so a
    // freshly made block contributes nothing until trained weights are loaded.
    std::vector<float> projection;

    // When unset, internal weights are derived deterministically from seed.
    std::optional<ControlWeights> weights;

    static ControlBlockParams make(int hidden, int layers, int patch, int backbone,
                                   uint64_t seed);
    void validate() const;
};

// Derives the seeded internal weights for a given token dimension (what
// control_forward uses when params.weights is unset).
ControlWeights derive_control_weights(const ControlBlockParams& params, int token_dim);

// Pools raw visibility masks down to latent resolution: mean per cell in
// train mode, max in inference mode. The first raw frame maps to its own
// temporal window; remaining frames split evenly with any remainder folded
// into the last window.
LatentMask downsample_mask(const std::vector<VisibilityMask>& raw, LatentShape target,
                           PoolMode mode);

// Channel-concat of (z_t, z_anchor) -> spatial patchify -> n_layers of a
// single-head attention+MLP block at hidden_dim -> broadcast unpatchify ->
// linear projection to backbone_dim channels.
LatentGrid control_forward(const LatentGrid& z_t, const LatentGrid& z_anchor,
                           const ControlBlockParams& params);

// out[l,c,y,x] = base + mask[l,y,x] * control, with zero mask (or zero
// control) positions copied from base bit-for-bit.
LatentGrid fuse(const LatentGrid& base_out, const LatentGrid& control_out,
                const LatentMask& mask);

// True for the first ceil(fraction * total_steps) steps.
bool injection_gate(int step_index, int total_steps, double fraction);

struct DenoiseSchedule {
    int total_steps = 10;
    double fraction = 0.4;
};

// Iterates a seeded per-position channel-mixing stub in place of the real
// backbone: z_{t+1} = fuse(stub(z_t), control_forward(z_t, z_anchor), mask)
// on gated steps, stub(z_t) otherwise. Returns the full trace including z_0.
std::vector<LatentGrid> simulate_denoise_trace(const LatentGrid& z_anchor,
                                               const LatentMask& mask,
                                               const ControlBlockParams& params,
                                               DenoiseSchedule schedule, uint64_t seed);

// Weight count of one control block: token embed + n_layers attention/MLP
// stacks + output projection.
size_t control_parameter_count(int hidden_dim, int n_layers, int token_dim, int out_dim);

}  // namespace epic
