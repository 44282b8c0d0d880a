#include "mergeplan/idm.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mergeplan {

IdmAccel idm_acceleration(double v, const std::optional<IdmLeader>& leader, const IdmParams& p) {
    const double free_term = std::pow(v / p.v0, 4.0);
    if (!leader) {
        return {p.a_max * (1.0 - free_term), false};
    }
    if (leader->gap <= 0.0) {
        return {-p.b_hard, true};
    }
    const double dv = v - leader->speed;
    const double s_star = p.s0 + v * p.T + v * dv / (2.0 * std::sqrt(p.a_max * p.b_comfort));
    const double ratio = s_star / leader->gap;
    double accel = p.a_max * (1.0 - free_term - ratio * ratio);
    accel = std::max(accel, -p.b_hard);
    return {accel, false};
}

namespace {

VehicleState advance_on_path(const VehicleState& s, const LanePath& path, double accel,
                             double dt) {
    const double s0 = path.centerline.project(s.position());
    const double v1 = std::max(0.0, s.v + accel * dt);
    double advance = s.v * dt + 0.5 * accel * dt * dt;
    advance = std::max(advance, 0.0);
    const double s1 = s0 + advance;

    VehicleState out;
    const Vec2 pos = path.centerline.point_at(s1);
    out.x = pos.x;
    out.y = pos.y;
    out.theta = path.centerline.heading_at(s1);
    out.v = v1;
    return out;
}

}  // namespace

IdmStepResult step_idm(const VehicleState& s, const std::optional<IdmLeader>& leader,
                       const IdmParams& p, const LanePath& path, double dt) {
    if (dt <= 0.0) {
        throw std::invalid_argument("step_idm: dt must be > 0");
    }
    const IdmAccel a = idm_acceleration(s.v, leader, p);
    return {advance_on_path(s, path, a.accel, dt), a.hard_brake};
}

VehicleState step_constant_velocity(const VehicleState& s, const LanePath& path, double dt) {
    if (dt < 0.0) {
        throw std::invalid_argument("step_constant_velocity: dt must be >= 0");
    }
    if (dt == 0.0) {
        return s;
    }
    return advance_on_path(s, path, 0.0, dt);
}

}  // namespace mergeplan
