#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "epic/geometry.hpp"
#include "epic/latent.hpp"
#include "epic/types.hpp"

namespace epic::io {

namespace fs = std::filesystem;

// ---- PNG ----------------------------------------------------------------
// Frames are 8-bit RGB; masks are 8-bit grayscale where >=128 reads as 1.

Image read_png_rgb(const fs::path& path);
void write_png_rgb(const fs::path& path, const Image& img);

BinaryMask read_mask_png(const fs::path& path);
void write_mask_png(const fs::path& path, const BinaryMask& mask);

// ---- depth ---------------------------------------------------------------
// PFM: "Pf", little-endian (scale -1.0), rows stored bottom-up.
// Raw: 8-byte header (u32 width, u32 height, little-endian) + float32 values.
// Pixels with non-finite or non-positive depth are marked invalid.

Grid<float> read_pfm(const fs::path& path);
void write_pfm(const fs::path& path, const Grid<float>& values);

Grid<float> read_depth_raw(const fs::path& path);
void write_depth_raw(const fs::path& path, const Grid<float>& values);

// Dispatches on extension: .pfm -> PFM, anything else -> raw.
DepthMap read_depth(const fs::path& path);

// ---- optical flow (Middlebury .flo) ---------------------------------------
// Magic float 202021.25, then i32 width, i32 height, then row-major
// interleaved float32 (u, v). Components with |value| > 1e9 are unknown.

FlowField read_flo(const fs::path& path);
void write_flo(const fs::path& path, const FlowField& flow);

// ---- camera trajectories ---------------------------------------------------
// JSON: {"fx","fy","cx","cy","width","height","frames":[{"w2c":[12 row-major 3x4]}]}

enum class PoseConvention { w2c, c2w };

Trajectory load_trajectory(const fs::path& path,
                           PoseConvention convention = PoseConvention::w2c);
void save_trajectory(const fs::path& path, const Trajectory& traj,
                     PoseConvention convention = PoseConvention::w2c);

// ---- latent grids ----------------------------------------------------------
// Header: magic "EPLG", u32 frames, channels, height, width (little-endian);
// masks use channels == 1 plus one mode byte (0 train, 1 inference) before the
// float32 payload.

LatentGrid read_latent_grid(const fs::path& path);
void write_latent_grid(const fs::path& path, const LatentGrid& grid);

LatentMask read_latent_mask(const fs::path& path);
void write_latent_mask(const fs::path& path, const LatentMask& mask);

// ---- json ------------------------------------------------------------------

json read_json(const fs::path& path);
void write_json(const fs::path& path, const json& j);

// ---- anchor directories -----------------------------------------------------
// Layout shared by all anchor producers: anchor_%05d.png, mask_%05d.png, meta.json.

void write_anchor_dir(const fs::path& dir, const AnchorVideo& anchor);
AnchorVideo read_anchor_dir(const fs::path& dir);

std::string frame_name(const std::string& prefix, int index);  // prefix_%05d

}  // namespace epic::io
