#include "epic/geometry.hpp"

#include <cmath>

#include "epic/kernels.hpp"

namespace epic {

size_t BinaryMask::count_set() const {
    return kernels::count_nonzero(data.data(), data.size());
}

void DepthMap::validate() const {
    if (!values.same_shape(validity))
        throw InvariantError("depth map: values/validity shape mismatch");
    for (size_t i = 0; i < values.data.size(); ++i) {
        if (validity.data[i] && !(std::isfinite(values.data[i]) && values.data[i] > 0.0f))
            throw InvariantError("depth map: valid depth must be finite and > 0");
    }
}

double VisibilityMask::visible_fraction() const {
    if (values.data.empty()) return 0.0;
    return double(kernels::count_nonzero(values.data.data(), values.data.size())) /
           double(values.data.size());
}

void CameraIntrinsics::validate() const {
    if (!(fx > 0 && fy > 0))
        throw InvariantError("intrinsics: focal lengths must be positive");
    if (width <= 0 || height <= 0)
        throw InvariantError("intrinsics: frame size must be positive");
    if (!(cx >= 0 && cx < width && cy >= 0 && cy < height))
        throw InvariantError("intrinsics: principal point outside frame");
}

double orthonormality_residual(const Eigen::Matrix3d& r) {
    return (r.transpose() * r - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff();
}

Eigen::Matrix3d nearest_rotation(const Eigen::Matrix3d& m) {
    Eigen::JacobiSVD<Eigen::Matrix3d> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    Eigen::Matrix3d r = svd.matrixU() * svd.matrixV().transpose();
    if (r.determinant() < 0) {
        Eigen::Matrix3d flip = Eigen::Matrix3d::Identity();
        flip(2, 2) = -1;
        r = svd.matrixU() * flip * svd.matrixV().transpose();
    }
    return r;
}

CameraPose CameraPose::inverse() const {
    CameraPose out;
    out.rotation = rotation.transpose();
    out.translation = -(rotation.transpose() * translation);
    return out;
}

void CameraPose::validate(double tol) const {
    if (orthonormality_residual(rotation) > tol)
        throw InvariantError("pose: rotation is not orthonormal");
    if (std::abs(rotation.determinant() - 1.0) > tol)
        throw InvariantError("pose: rotation determinant is not +1");
    if (!translation.allFinite())
        throw InvariantError("pose: translation is not finite");
}

void Trajectory::validate() const {
    intrinsics.validate();
    if (poses.empty()) throw InvariantError("trajectory: no poses");
    for (const auto& p : poses) p.validate();
}

void PointCloud::validate() const {
    if (colors.size() != positions.size() || excluded.size() != positions.size())
        throw InvariantError("point cloud: parallel lists differ in length");
    for (const auto& p : positions)
        if (!p.allFinite()) throw InvariantError("point cloud: non-finite position");
}

PointCloud unproject(const Image& image, const DepthMap& depth,
                     const CameraIntrinsics& intrinsics, const CameraPose& pose) {
    intrinsics.validate();
    if (image.width != intrinsics.width || image.height != intrinsics.height ||
        depth.width() != intrinsics.width || depth.height() != intrinsics.height)
        throw InvariantError("unproject: image/depth dimensions do not match intrinsics");

    const CameraPose inv = pose.inverse();
    PointCloud cloud;
    cloud.positions.reserve(size_t(image.width) * image.height);
    cloud.colors.reserve(cloud.positions.capacity());
    cloud.excluded.reserve(cloud.positions.capacity());

    for (int y = 0; y < image.height; ++y) {
        for (int x = 0; x < image.width; ++x) {
            if (!depth.validity.at(x, y)) continue;
            const double d = depth.values.at(x, y);
            const Eigen::Vector3d cam((x + 0.5 - intrinsics.cx) * d / intrinsics.fx,
                                      (y + 0.5 - intrinsics.cy) * d / intrinsics.fy,
                                      d);
            cloud.positions.push_back(inv.rotation * cam + inv.translation);
            const uint8_t* px = image.px(x, y);
            cloud.colors.push_back({px[0] / 255.0f, px[1] / 255.0f, px[2] / 255.0f});
            cloud.excluded.push_back(0);
        }
    }
    return cloud;
}

std::vector<ProjectedPoint> project(const PointCloud& cloud,
                                    const CameraIntrinsics& intrinsics,
                                    const CameraPose& pose) {
    intrinsics.validate();
    if (cloud.size() == 0) throw InvariantError("project: empty point cloud");

    std::vector<ProjectedPoint> out;
    out.reserve(cloud.size());
    for (size_t i = 0; i < cloud.size(); ++i) {
        const Eigen::Vector3d cam = pose.to_camera(cloud.positions[i]);
        if (cam.z() <= kNearPlane) continue;
        const double u = intrinsics.fx * cam.x() / cam.z() + intrinsics.cx;
        const double v = intrinsics.fy * cam.y() / cam.z() + intrinsics.cy;
        const int px = (int)std::floor(u);
        const int py = (int)std::floor(v);
        if (px < 0 || px >= intrinsics.width || py < 0 || py >= intrinsics.height) continue;
        out.push_back({u, v, cam.z(), cloud.colors[i], cloud.excluded[i] != 0, i});
    }
    return out;
}

BinaryMask dilate(const BinaryMask& mask, double radius) {
    if (radius < 0) throw InvariantError("dilate: negative radius");
    if (radius == 0) return mask;

    const int r = (int)std::floor(radius);
    std::vector<std::pair<int, int>> offsets;
    for (int dy = -r; dy <= r; ++dy)
        for (int dx = -r; dx <= r; ++dx)
            if (double(dx) * dx + double(dy) * dy <= radius * radius)
                offsets.emplace_back(dx, dy);

    BinaryMask out(mask.width, mask.height, 0);
    for (int y = 0; y < mask.height; ++y) {
        for (int x = 0; x < mask.width; ++x) {
            if (!mask.at(x, y)) continue;
            for (const auto& [dx, dy] : offsets) {
                const int nx = x + dx, ny = y + dy;
                if (nx >= 0 && nx < mask.width && ny >= 0 && ny < mask.height)
                    out.at(nx, ny) = 1;
            }
        }
    }
    return out;
}

CameraPose compose_poses(const CameraPose& a, const CameraPose& b) {
    CameraPose out;
    out.rotation = a.rotation * b.rotation;
    out.translation = a.rotation * b.translation + a.translation;
    return out;
}

}  // namespace epic
