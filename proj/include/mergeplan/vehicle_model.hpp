#ifndef MERGEPLAN_VEHICLE_MODEL_HPP
#define MERGEPLAN_VEHICLE_MODEL_HPP

#include "mergeplan/geometry.hpp"

namespace mergeplan {

// Pose and speed of one vehicle at one time step. theta is kept in (-pi, pi],
// v never goes negative (no reverse driving).
struct VehicleState {
    double x{0.0};      // east [m]
    double y{0.0};      // north [m]
    double theta{0.0};  // heading [rad]
    double v{0.0};      // speed [m/s]

    Vec2 position() const { return {x, y}; }
};

// Ego control input: front steering angle and longitudinal acceleration.
struct Action {
    double delta{0.0};  // [rad]
    double a{0.0};      // [m/s^2]
};

struct ActionLimits {
    double delta_min{-0.2};
    double delta_max{0.2};
    double a_min{-1.0};
    double a_max{1.0};

    Action clamp(const Action& u) const;
};

inline constexpr double kDefaultWheelbase = 2.7;  // [m]

// Kinematic single-track model
//   x' = v cos(theta), y' = v sin(theta), theta' = (v/L) tan(delta), v' = a
// integrated with one RK4 step. When the speed would cross zero within the
// step, the step is split at the exact stopping time and the vehicle stays
// at rest for the remainder.
VehicleState step_single_track(const VehicleState& s, const Action& u, double dt,
                               double wheelbase = kDefaultWheelbase);

}  // namespace mergeplan

#endif  // MERGEPLAN_VEHICLE_MODEL_HPP
