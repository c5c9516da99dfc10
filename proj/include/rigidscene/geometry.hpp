#pragma once

#include <Eigen/Core>
#include <Eigen/Dense>

#include "rigidscene/errors.hpp"

namespace rigidscene {

using Point3 = Eigen::Vector3d;
using Pixel = Eigen::Vector2d;

// Pinhole model. Camera frame: X right, Y down, Z forward.
struct CameraIntrinsics {
    double fx = 0.0;      // focal length [px]
    double fy = 0.0;      // focal length [px]
    double cx = 0.0;      // principal point x [px]
    double cy = 0.0;      // principal point y [px]
    double baseline = 0.0; // stereo baseline [m]

    void validate() const;

    // Intrinsics of pyramid level `level` (level 0 = this). Accounts for
    // the half-pixel shift of 2x2 box downsampling.
    CameraIntrinsics at_level(int level) const;
};

// 6-dof motion: translations in meters, rotations in degrees about the
// camera X (omega), Y (phi), Z (kappa) axes.
struct EulerPose {
    double tx = 0.0, ty = 0.0, tz = 0.0;
    double omega = 0.0, phi = 0.0, kappa = 0.0;

    void validate() const;
};

// SE(3) element as a 4x4 homogeneous matrix.
struct RigidTransform {
    Eigen::Matrix4d m = Eigen::Matrix4d::Identity();

    static RigidTransform identity() { return RigidTransform{}; }
    static RigidTransform from_matrix(const Eigen::Matrix4d& m);

    Eigen::Matrix3d rotation() const { return m.topLeftCorner<3, 3>(); }
    Eigen::Vector3d translation() const { return m.topRightCorner<3, 1>(); }

    Point3 apply(const Point3& p) const {
        return rotation() * p + translation();
    }

    // RtR = I and det(R) = +1 within 1e-9; last row [0,0,0,1].
    void validate() const;
};

// R = Rz(kappa) * Ry(phi) * Rx(omega), angles converted to radians
// internally; translation column (tx, ty, tz).
RigidTransform euler_to_matrix(const EulerPose& pose);

// Inverse of euler_to_matrix; phi returned in (-90, 90) degrees.
// Throws DataError near gimbal lock (|phi| = 90 deg).
EulerPose matrix_to_euler(const RigidTransform& t);

// X = ((px-cx)*d/fx, (py-cy)*d/fy, d). Throws DataError for d <= 0.
Point3 backproject(const Pixel& p, double depth, const CameraIntrinsics& k);

// (fx*x/z + cx, fy*y/z + cy). Throws DataError when z <= kBehindCameraEps.
Pixel project(const Point3& x, const CameraIntrinsics& k);

inline constexpr double kBehindCameraEps = 1e-6;

// Non-throwing projection for per-pixel kernels. Returns false when the
// point is behind the camera.
inline bool project_to(const Point3& x, const CameraIntrinsics& k, Pixel& out) noexcept {
    if (!(x.z() > kBehindCameraEps)) return false;
    out.x() = k.fx * x.x() / x.z() + k.cx;
    out.y() = k.fy * x.y() / x.z() + k.cy;
    return true;
}

// Static-scene correspondence: project(T_ego * backproject(p, depth)).
Pixel correspondence_static(const Pixel& p, double depth, const CameraIntrinsics& k,
                            const RigidTransform& t_ego);

// Dynamic correspondence: the backprojected point is moved by the object
// transform first, then by the ego-motion, and reprojected.
Pixel correspondence_dynamic(const Pixel& p, double depth, const CameraIntrinsics& k,
                             const RigidTransform& t_ego, const RigidTransform& t_obj);

RigidTransform compose(const RigidTransform& a, const RigidTransform& b);
RigidTransform invert(const RigidTransform& t);

// Recovers the actual object motion from a pseudo motion predicted under
// a static-camera assumption: T_obj = T_ego^-1 * T_pseudo.
RigidTransform decompose_pseudo_motion(const RigidTransform& t_pseudo,
                                       const RigidTransform& t_ego);

} // namespace rigidscene
