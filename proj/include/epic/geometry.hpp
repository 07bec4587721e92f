#pragma once

#include <array>
#include <vector>

#include <Eigen/Dense>

#include "epic/types.hpp"

namespace epic {

// Points with camera-space depth at or below this are clipped.
inline constexpr double kNearPlane = 1e-4;

// Rotations read from pose files are projected to the nearest rotation when
// their orthonormality residual is at most this; larger residuals are rejected.
inline constexpr double kRotationIngestTol = 1e-3;

struct CameraIntrinsics {
    double fx = 0, fy = 0, cx = 0, cy = 0;
    int width = 0, height = 0;

    void validate() const;
};

// World-to-camera rigid transform: x_cam = rotation * x_world + translation.
struct CameraPose {
    Eigen::Matrix3d rotation = Eigen::Matrix3d::Identity();
    Eigen::Vector3d translation = Eigen::Vector3d::Zero();

    static CameraPose identity() { return {}; }

    CameraPose inverse() const;
    Eigen::Vector3d to_camera(const Eigen::Vector3d& world) const {
        return rotation * world + translation;
    }
    Eigen::Vector3d to_world(const Eigen::Vector3d& cam) const {
        return rotation.transpose() * (cam - translation);
    }
    Eigen::Vector3d center() const { return -(rotation.transpose() * translation); }

    void validate(double tol = 1e-6) const;
};

struct Trajectory {
    CameraIntrinsics intrinsics;
    std::vector<CameraPose> poses;

    size_t size() const { return poses.size(); }
    void validate() const;
};

// Colored world-space points; excluded points are carried but never rendered.
struct PointCloud {
    std::vector<Eigen::Vector3d> positions;
    std::vector<std::array<float, 3>> colors;
    std::vector<uint8_t> excluded;

    size_t size() const { return positions.size(); }
    void validate() const;
};

struct ProjectedPoint {
    double u = 0, v = 0;   // continuous pixel coords; pixel (i,j) center is (i+0.5, j+0.5)
    double depth = 0;      // camera-space z
    std::array<float, 3> color{};
    bool excluded = false;
    size_t point_index = 0;
};

// max |R^T R - I|
double orthonormality_residual(const Eigen::Matrix3d& r);

// Closest rotation in Frobenius norm (polar factor, det forced to +1).
Eigen::Matrix3d nearest_rotation(const Eigen::Matrix3d& m);

// One point per valid depth pixel, lifted through the pinhole model at pixel
// centers (u+0.5, v+0.5) and mapped to world space.
PointCloud unproject(const Image& image, const DepthMap& depth,
                     const CameraIntrinsics& intrinsics, const CameraPose& pose);

// Perspective projection of every point in front of the near plane and inside
// the frame; everything else is dropped.
std::vector<ProjectedPoint> project(const PointCloud& cloud,
                                    const CameraIntrinsics& intrinsics,
                                    const CameraPose& pose);

// Morphological dilation with a disc structuring element (Euclidean radius).
BinaryMask dilate(const BinaryMask& mask, double radius);

// compose(a, b): apply b first, then a. compose(a, identity) == a.
CameraPose compose_poses(const CameraPose& a, const CameraPose& b);

}  // namespace epic
