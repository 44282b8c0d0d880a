#ifndef MERGEPLAN_IDM_HPP
#define MERGEPLAN_IDM_HPP

#include <optional>

#include "mergeplan/lane_path.hpp"
#include "mergeplan/vehicle_model.hpp"

namespace mergeplan {

struct IdmParams {
    double v0{5.0};        // desired speed [m/s]
    double T{1.5};         // desired time headway [s]
    double s0{2.0};        // minimum gap [m]
    double a_max{1.0};     // maximum acceleration [m/s^2]
    double b_comfort{1.5}; // comfortable braking [m/s^2]
    double b_hard{4.0};    // clamp when the gap is non-positive [m/s^2]
};

// Leader data as seen by a follower: bumper-to-bumper gap along the path and
// the leader's speed.
struct IdmLeader {
    double gap{0.0};
    double speed{0.0};
};

struct IdmAccel {
    double accel{0.0};
    bool hard_brake{false};  // gap <= 0, clamped to -b_hard
};

// Intelligent Driver Model acceleration
//   a = a_max [1 - (v/v0)^4 - (s*/gap)^2],  s* = s0 + vT + v dv / (2 sqrt(a_max b))
// Free road when no leader is present.
IdmAccel idm_acceleration(double v, const std::optional<IdmLeader>& leader, const IdmParams& p);

struct IdmStepResult {
    VehicleState state;
    bool hard_brake{false};
};

// Advances a vehicle along its reference path with IDM longitudinal control;
// heading follows the local path tangent.
IdmStepResult step_idm(const VehicleState& s, const std::optional<IdmLeader>& leader,
                       const IdmParams& p, const LanePath& path, double dt);

// Constant-velocity behavior: advance v*dt along the centerline, speed and
// intent unchanged. Past the path end the vehicle continues along the last
// segment direction.
VehicleState step_constant_velocity(const VehicleState& s, const LanePath& path, double dt);

}  // namespace mergeplan

#endif  // MERGEPLAN_IDM_HPP
