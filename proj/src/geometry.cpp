#include "rigidscene/geometry.hpp"

#include <cmath>

namespace rigidscene {

namespace {
constexpr double kDegToRad = M_PI / 180.0;
constexpr double kRadToDeg = 180.0 / M_PI;
constexpr double kOrthoTol = 1e-9;
} // namespace

void CameraIntrinsics::validate() const {
    if (!(fx > 0.0) || !(fy > 0.0))
        throw ConfigError("intrinsics: focal lengths must be positive");
    if (!(baseline > 0.0))
        throw ConfigError("intrinsics: baseline must be positive");
    if (!std::isfinite(cx) || !std::isfinite(cy))
        throw ConfigError("intrinsics: principal point must be finite");
}

CameraIntrinsics CameraIntrinsics::at_level(int level) const {
    CameraIntrinsics k = *this;
    for (int i = 0; i < level; ++i) {
        // Level-(l+1) pixel j samples level-l position 2j + 0.5.
        k.fx *= 0.5;
        k.fy *= 0.5;
        k.cx = (k.cx - 0.5) * 0.5;
        k.cy = (k.cy - 0.5) * 0.5;
    }
    return k;
}

void EulerPose::validate() const {
    for (double v : {tx, ty, tz, omega, phi, kappa})
        if (!std::isfinite(v)) throw DataError("pose: non-finite component");
}

RigidTransform RigidTransform::from_matrix(const Eigen::Matrix4d& m) {
    RigidTransform t;
    t.m = m;
    t.validate();
    return t;
}

void RigidTransform::validate() const {
    const Eigen::Matrix3d r = rotation();
    if (((r.transpose() * r) - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff() > kOrthoTol)
        throw DataError("transform: rotation block is not orthonormal");
    if (std::abs(r.determinant() - 1.0) > kOrthoTol)
        throw DataError("transform: rotation determinant is not +1");
    if (m(3, 0) != 0.0 || m(3, 1) != 0.0 || m(3, 2) != 0.0 || m(3, 3) != 1.0)
        throw DataError("transform: last row must be [0,0,0,1]");
    if (!m.allFinite())
        throw DataError("transform: non-finite entry");
}

RigidTransform euler_to_matrix(const EulerPose& pose) {
    pose.validate();
    const double o = pose.omega * kDegToRad;
    const double p = pose.phi * kDegToRad;
    const double q = pose.kappa * kDegToRad;
    const double co = std::cos(o), so = std::sin(o);
    const double cp = std::cos(p), sp = std::sin(p);
    const double cq = std::cos(q), sq = std::sin(q);

    Eigen::Matrix3d r;
    r << cq * cp, cq * sp * so - sq * co, cq * sp * co + sq * so,
         sq * cp, sq * sp * so + cq * co, sq * sp * co - cq * so,
         -sp,     cp * so,                cp * co;

    RigidTransform t;
    t.m.setIdentity();
    t.m.topLeftCorner<3, 3>() = r;
    t.m.topRightCorner<3, 1>() = Eigen::Vector3d(pose.tx, pose.ty, pose.tz);
    return t;
}

EulerPose matrix_to_euler(const RigidTransform& t) {
    t.validate();
    const Eigen::Matrix3d r = t.rotation();
    if (std::abs(r(2, 0)) >= 1.0 - 1e-9)
        throw DataError("matrix_to_euler: gimbal lock (|phi| = 90 deg)");

    EulerPose pose;
    pose.phi = std::asin(-r(2, 0)) * kRadToDeg;
    pose.omega = std::atan2(r(2, 1), r(2, 2)) * kRadToDeg;
    pose.kappa = std::atan2(r(1, 0), r(0, 0)) * kRadToDeg;
    const Eigen::Vector3d tr = t.translation();
    pose.tx = tr.x();
    pose.ty = tr.y();
    pose.tz = tr.z();
    return pose;
}

Point3 backproject(const Pixel& p, double depth, const CameraIntrinsics& k) {
    if (!(depth > 0.0)) throw DataError("backproject: depth must be positive");
    return {(p.x() - k.cx) * depth / k.fx, (p.y() - k.cy) * depth / k.fy, depth};
}

Pixel project(const Point3& x, const CameraIntrinsics& k) {
    Pixel out;
    if (!project_to(x, k, out))
        throw DataError("project: point behind camera");
    return out;
}

Pixel correspondence_static(const Pixel& p, double depth, const CameraIntrinsics& k,
                            const RigidTransform& t_ego) {
    return project(t_ego.apply(backproject(p, depth, k)), k);
}

Pixel correspondence_dynamic(const Pixel& p, double depth, const CameraIntrinsics& k,
                             const RigidTransform& t_ego, const RigidTransform& t_obj) {
    // Object motion acts first, in the target camera frame.
    return project(t_ego.apply(t_obj.apply(backproject(p, depth, k))), k);
}

RigidTransform compose(const RigidTransform& a, const RigidTransform& b) {
    RigidTransform t;
    t.m = a.m * b.m;
    t.validate();
    return t;
}

RigidTransform invert(const RigidTransform& t) {
    RigidTransform inv;
    const Eigen::Matrix3d rt = t.rotation().transpose();
    inv.m.setIdentity();
    inv.m.topLeftCorner<3, 3>() = rt;
    inv.m.topRightCorner<3, 1>() = -(rt * t.translation());
    inv.validate();
    return inv;
}

RigidTransform decompose_pseudo_motion(const RigidTransform& t_pseudo,
                                       const RigidTransform& t_ego) {
    return compose(invert(t_ego), t_pseudo);
}

} // namespace rigidscene
