#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "epic/error.hpp"

namespace epic {

using json = nlohmann::json;

template <typename T>
struct Grid {
    int width = 0;
    int height = 0;
    std::vector<T> data;

    Grid() = default;
    Grid(int w, int h, T fill = T{})
        : width(w), height(h), data(size_t(w) * size_t(h), fill) {}

    T& at(int x, int y) { return data[size_t(y) * width + x]; }
    const T& at(int x, int y) const { return data[size_t(y) * width + x]; }

    size_t size() const { return data.size(); }
    bool same_shape(const Grid& o) const { return width == o.width && height == o.height; }
};

// Height x width grid of {0,1}.
struct BinaryMask : Grid<uint8_t> {
    using Grid<uint8_t>::Grid;

    size_t count_set() const;
    bool is_binary() const {
        for (uint8_t v : data)
            if (v > 1) return false;
        return true;
    }
};

// Interleaved 8-bit RGB, row-major.
struct Image {
    int width = 0;
    int height = 0;
    std::vector<uint8_t> rgb;

    Image() = default;
    Image(int w, int h) : width(w), height(h), rgb(size_t(w) * size_t(h) * 3, 0) {}

    uint8_t* px(int x, int y) { return rgb.data() + (size_t(y) * width + x) * 3; }
    const uint8_t* px(int x, int y) const { return rgb.data() + (size_t(y) * width + x) * 3; }

    bool same_shape(const Image& o) const { return width == o.width && height == o.height; }
};

// Metric depth per pixel; validity marks pixels with usable depth.
struct DepthMap {
    Grid<float> values;
    Grid<uint8_t> validity;

    DepthMap() = default;
    DepthMap(int w, int h) : values(w, h, 0.0f), validity(w, h, 0) {}

    int width() const { return values.width; }
    int height() const { return values.height; }

    // valid depth must be finite and strictly positive
    void validate() const;
};

// Dense per-pixel displacement between two frames.
struct FlowField {
    Grid<float> u;
    Grid<float> v;
    int source_frame = 0;
    int target_frame = 0;

    FlowField() = default;
    FlowField(int w, int h, int src = 0, int tgt = 0)
        : u(w, h, 0.0f), v(w, h, 0.0f), source_frame(src), target_frame(tgt) {}

    int width() const { return u.width; }
    int height() const { return u.height; }
};

// Per-frame binary map of pixels traceable to the first frame.
struct VisibilityMask {
    Grid<uint8_t> values;
    int frame_index = 0;
    bool frozen = false;

    VisibilityMask() = default;
    VisibilityMask(int w, int h, int frame, uint8_t fill = 0)
        : values(w, h, fill), frame_index(frame) {}

    double visible_fraction() const;
};

// Frames plus their visibility masks; invisible pixels are exactly black.
struct AnchorVideo {
    std::vector<Image> frames;
    std::vector<VisibilityMask> masks;
    json metadata = json::object();

    size_t size() const { return frames.size(); }
};

}  // namespace epic
